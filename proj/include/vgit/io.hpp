#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vgit/cm_ledger.hpp"
#include "vgit/cyclotomic.hpp"
#include "vgit/hm_git.hpp"
#include "vgit/sarkisov.hpp"

namespace vgit::io {

using nlohmann::json;

inline constexpr int kSchema = 1;

/// Exit codes for input problems (ParseError::code()).
enum ParseCode : int {
  kMalformedFraction = 3,
  kBadMonomialKey = 4,
  kDependentPoints = 5,
  kMalformedInput = 6,
  kUnreadableFile = 7,
};

using CPencil = Pencil<Cyclotomic5>;
using CMatrix = Matrix<Cyclotomic5>;

struct PairInput {
  std::string field = "rational";
  std::optional<RPencil> pencil;        // rational field
  std::optional<CPencil> cyclo_pencil;  // cyclotomic5 field
  std::optional<ProjLine> line;
  std::optional<RMatrix> transform;
  std::optional<CMatrix> cyclo_transform;
};

PairInput parse_input(const json& j);
PairInput parse_input_file(const std::string& path);
json read_json_file(const std::string& path);

Rational parse_rational(const json& j);
Cyclotomic5 parse_cyclotomic(const json& j);
/// "2,2,-1,-1,-1,-1" -> OnePS; weights must be six integers summing to zero.
OnePS parse_lambda(const std::string& text);
std::vector<Rational> parse_rational_list(const std::string& text);

json to_json(const Rational& r);
json to_json(const Cyclotomic5& c);
template <Field F>
json to_json(const Vec<F>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}
template <Field F>
json to_json(const Matrix<F>& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    a.push_back(to_json(Vec<F>(r.begin(), r.end())));
  }
  return a;
}
template <Field F>
json quadric_to_json(const QuadraticForm<F>& q) {
  json o = json::object();
  for (auto [i, j] : quadratic_monomials()) {
    const F c = q.coefficient(i, j);
    if (!c.is_zero()) o["x" + std::to_string(i) + "*x" + std::to_string(j)] = to_json(c);
  }
  return o;
}
template <Field F>
json pencil_to_json(const Pencil<F>& p) {
  return json::array({quadric_to_json(p.gen_a()), quadric_to_json(p.gen_b())});
}

json to_json(const RForm& f);
json to_json(const OnePS& l);
json to_json(const ProjLine& l);
json to_json(const SegreSymbol& s);
json to_json(const PencilClass& c);
json to_json(const Certificate& c);
json to_json(const Verdict& v);
json to_json(const std::vector<ScanRow>& rows);
json to_json(const CMCoefficients& c);
json to_json(const CurveIdeal& c);
json to_json(const LineSingularities& s);

Verdict verdict_from_json(const json& j);

/// Stable pretty-printed form with a trailing newline.
std::string dump(const json& j);

}  // namespace vgit::io
