#include "vecq/expr/value.hpp"

#include <json.hpp>

namespace vecq::expr {

namespace {

using json = nlohmann::ordered_json;

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};

}  // namespace

std::string_view type_name(const Value& v) {
  static constexpr std::string_view names[] = {"scalar", "vector2", "vector3", "matrix2", "matrix3"};
  return names[v.index()];
}

Mode mode_of(const Value& v) {
  return std::visit([](const auto& x) { return x.mode(); }, v);
}

std::string to_text(const Value& v, int precision) {
  return std::visit([&](const auto& x) { return to_string(x, precision); }, v);
}

std::string to_json(const Value& v, int precision) {
  auto str = [&](const Scalar& s) { return to_string(s, precision); };
  json out;
  std::visit(overloaded{
                 [&](const Scalar& s) {
                   out["type"] = "scalar";
                   out["mode"] = s.is_exact() ? "exact" : "float";
                   out["value"] = str(s);
                 },
                 [&]<std::size_t N>(const Vec<N>& vec) {
                   out["type"] = "vector";
                   out["dim"] = N;
                   out["mode"] = vec.mode() == Mode::Exact ? "exact" : "float";
                   json comps = json::array();
                   for (std::size_t i = 0; i < N; ++i) comps.push_back(str(vec[i]));
                   out["components"] = std::move(comps);
                 },
                 [&]<std::size_t N>(const Mat<N>& m) {
                   out["type"] = "matrix";
                   out["dim"] = N;
                   out["mode"] = m.mode() == Mode::Exact ? "exact" : "float";
                   json rows = json::array();
                   for (std::size_t r = 0; r < N; ++r) {
                     json row = json::array();
                     for (std::size_t c = 0; c < N; ++c) row.push_back(str(m(r, c)));
                     rows.push_back(std::move(row));
                   }
                   out["entries"] = std::move(rows);
                 },
             },
             v);
  return out.dump();
}

}  // namespace vecq::expr
