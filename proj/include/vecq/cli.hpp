#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string_view>

#include "vecq/scalar.hpp"

namespace vecq::cli {

enum class Output { Text, Json };

struct CliConfig {
  Mode mode = Mode::Exact;
  Output output = Output::Text;
  int precision = 12;  ///< fractional digits for Approx values, 1..17
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
};

enum ExitCode : int {
  kOk = 0,
  kLawMismatch = 1,
  kSyntaxError = 2,  ///< lex or parse error, also bad command-line usage
  kTypeError = 3,
  kMathError = 4,
};

/// Evaluates one expression. The value goes to `out`; on failure a three-line
/// diagnostic (message, source, caret) goes to `err`.
int eval_command(std::string_view expr, const CliConfig& config, std::ostream& out, std::ostream& err);

/// One expression per line until EOF. Prints "vecq> " before each line when
/// `interactive`. Always returns kOk.
int repl_command(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err,
                 bool interactive);

/// Runs every registered law and prints one report per law plus a summary.
int laws_command(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Entry point: `vecq eval|repl|laws [flags]`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err,
        bool interactive = false);

}  // namespace vecq::cli
