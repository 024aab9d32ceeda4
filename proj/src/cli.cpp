#include "vecq/cli.hpp"

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vecq/expr/evaluator.hpp"
#include "vecq/oracle.hpp"

namespace vecq::cli {

namespace {

const char* category_name(expr::ErrorCategory c) {
  switch (c) {
    case expr::ErrorCategory::Lex: return "lex";
    case expr::ErrorCategory::Parse: return "parse";
    case expr::ErrorCategory::Type: return "type";
    case expr::ErrorCategory::Math: return "math";
  }
  return "unknown";
}

int exit_code(expr::ErrorCategory c) {
  switch (c) {
    case expr::ErrorCategory::Lex:
    case expr::ErrorCategory::Parse: return kSyntaxError;
    case expr::ErrorCategory::Type: return kTypeError;
    case expr::ErrorCategory::Math: return kMathError;
  }
  return kSyntaxError;
}

// Column of a byte offset, counted in code points so the caret lines up
// under non-ASCII input.
std::size_t column_of(std::string_view source, std::size_t offset) {
  std::size_t col = 0;
  for (std::size_t i = 0; i < offset && i < source.size(); ++i)
    if ((static_cast<unsigned char>(source[i]) & 0xC0) != 0x80) ++col;
  return col;
}

void print_diagnostic(std::string_view source, const expr::SourceError& e, std::ostream& err) {
  err << category_name(e.category()) << " error: " << e.what() << '\n';
  err << "  " << source << '\n';
  err << "  " << std::string(column_of(source, e.position()), ' ') << "^\n";
}

}  // namespace

int eval_command(std::string_view source, const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    expr::Value v = expr::evaluate(source, config.mode);
    out << (config.output == Output::Json ? expr::to_json(v, config.precision) : expr::to_text(v, config.precision))
        << '\n';
    return kOk;
  } catch (const expr::SourceError& e) {
    print_diagnostic(source, e, err);
    return exit_code(e.category());
  }
}

int repl_command(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err,
                 bool interactive) {
  std::string line;
  for (;;) {
    if (interactive) out << "vecq> " << std::flush;
    if (!std::getline(in, line)) break;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    eval_command(line, config, out, err);
    out << std::flush;
  }
  if (interactive) out << '\n';
  return kOk;
}

int laws_command(const CliConfig& config, std::ostream& out, std::ostream& /*err*/) {
  std::size_t as_expected = 0;
  std::size_t mismatched = 0;
  for (const auto& law : oracle::registered_laws()) {
    auto report = oracle::brute_force_law_check(law.name, config.seed, config.trials);
    out << oracle::to_text(report);
    bool ok = oracle::status_as_expected(report, law.expectation);
    if (law.expectation == oracle::Expectation::ExpectedToFail) out << "  expected to fail\n";
    if (!ok) out << "  MISMATCH\n";
    ++(ok ? as_expected : mismatched);
  }
  out << "SUMMARY laws=" << (as_expected + mismatched) << " as-expected=" << as_expected
      << " mismatched=" << mismatched << '\n';
  return mismatched == 0 ? kOk : kLawMismatch;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err,
        bool interactive) {
  CLI::App app{"Vector division and products over exact rationals", "vecq"};
  app.require_subcommand(1);

  CliConfig config;
  std::string mode = "exact";
  bool json = false;
  std::string source;

  auto add_eval_flags = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "Arithmetic mode")->check(CLI::IsMember({"exact", "float"}));
    sub->add_flag("--json", json, "Print the result as JSON");
    sub->add_option("--precision", config.precision, "Fractional digits for float output")
        ->check(CLI::Range(1, 17));
  };

  auto* eval = app.add_subcommand("eval", "Evaluate one expression");
  eval->add_option("expr", source, "Expression")->required();
  add_eval_flags(eval);

  auto* repl = app.add_subcommand("repl", "Read and evaluate expressions line by line");
  add_eval_flags(repl);

  auto* laws = app.add_subcommand("laws", "Check the algebraic laws on seeded random inputs");
  laws->add_option("--seed", config.seed, "Generator seed");
  laws->add_option("--trials", config.trials, "Trials per law")->check(CLI::PositiveNumber);

  // An expression such as "-[1,2]" looks like a short option to the parser;
  // -h is the only real one.
  // Shield it with a leading space and strip that again afterwards.
  std::vector<std::string> args;
  bool shielded = false;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg.size() > 1 && arg[0] == '-' && arg[1] != '-' && arg != "-h") {
      arg.insert(0, 1, ' ');
      shielded = true;
    }
    args.push_back(std::move(arg));
  }
  std::reverse(args.begin(), args.end());

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kSyntaxError;
  }
  if (shielded && source.starts_with(" -")) source.erase(0, 1);

  config.mode = mode == "float" ? Mode::Approx : Mode::Exact;
  config.output = json ? Output::Json : Output::Text;

  if (*eval) return eval_command(source, config, out, err);
  if (*repl) return repl_command(config, in, out, err, interactive);
  return laws_command(config, out, err);
}

}  // namespace vecq::cli
