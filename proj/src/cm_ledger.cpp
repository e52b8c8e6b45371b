#include "vgit/cm_ledger.hpp"

#include <algorithm>

namespace vgit {

namespace {

bool deglex_less(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& deg) {
  int da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    da += a[i] * deg[i];
    db += b[i] * deg[i];
  }
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Enumerates exponent vectors of the given weighted degree.
void monomials_of_degree(const std::vector<int>& deg, int target, std::size_t i, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (i == deg.size()) {
    if (target == 0) out.push_back(cur);
    return;
  }
  for (int e = 0; e * deg[i] <= target; ++e) {
    cur[i] = e;
    monomials_of_degree(deg, target - e * deg[i], i + 1, cur, out);
  }
  cur[i] = 0;
}

}  // namespace

IntersectionModel::IntersectionModel(std::vector<std::string> classes, std::vector<int> degrees, int dimension)
    : classes_(std::move(classes)), degrees_(std::move(degrees)), dim_(dimension) {
  if (classes_.size() != degrees_.size()) throw Error("class/degree length mismatch");
}

ClassPoly IntersectionModel::cls(const std::string& name) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i] == name) return ClassPoly::variable(classes_, i);
  throw Error("unknown class " + name);
}

ClassPoly IntersectionModel::constant(const Rational& c) const { return ClassPoly::constant(classes_, c); }

std::vector<int> IntersectionModel::exponent_of(const std::vector<std::pair<std::string, int>>& monomial) const {
  std::vector<int> e(classes_.size(), 0);
  for (const auto& [name, k] : monomial) {
    const auto it = std::find(classes_.begin(), classes_.end(), name);
    if (it == classes_.end()) throw Error("unknown class " + name);
    e[static_cast<std::size_t>(it - classes_.begin())] += k;
  }
  return e;
}

int IntersectionModel::weighted_degree(const std::vector<int>& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * degrees_[i];
  return d;
}

std::string IntersectionModel::monomial_name(const std::vector<int>& e) const {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += classes_[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

void IntersectionModel::declare(const std::vector<std::pair<std::string, int>>& monomial, const Rational& value) {
  declare(exponent_of(monomial), value);
}

void IntersectionModel::declare(const std::vector<int>& e, const Rational& value) {
  if (weighted_degree(e) != dim_) throw Error("declared monomial " + monomial_name(e) + " is not of top degree");
  top_[e] = value;
}

void IntersectionModel::add_rule(const std::vector<std::pair<std::string, int>>& lhs, const ClassPoly& rhs) {
  const auto e = exponent_of(lhs);
  for (const auto& [term, c] : rhs.terms()) {
    if (weighted_degree(term) != weighted_degree(e)) throw Error("rewrite rule is not homogeneous");
    if (!deglex_less(term, e, degrees_)) throw Error("rewrite rule does not decrease " + monomial_name(e));
  }
  rules_.emplace_back(e, rhs);
}

Rational IntersectionModel::reduce(const std::vector<int>& e, int depth) const {
  for (const auto& [lhs, rhs] : rules_) {
    bool divisible = true;
    for (std::size_t i = 0; i < e.size(); ++i) divisible = divisible && e[i] >= lhs[i];
    if (!divisible) continue;
    Rational acc(0);
    for (const auto& [term, c] : rhs.terms()) {
      std::vector<int> next(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) next[i] = e[i] - lhs[i] + term[i];
      acc += c * reduce(next, depth + 1);
    }
    return acc;
  }
  const auto it = top_.find(e);
  if (it == top_.end()) throw Error("no declared value for monomial " + monomial_name(e));
  return it->second;
}

Rational IntersectionModel::evaluate_top(const ClassPoly& expr) const {
  Rational acc(0);
  for (const auto& [e, c] : expr.terms()) {
    if (weighted_degree(e) != dim_) throw Error("expression is not of top degree: " + monomial_name(e));
    acc += c * reduce(e, 0);
  }
  return acc;
}

IntersectionModel p1xp1_model() {
  IntersectionModel m({"h1", "h2"}, {1, 1}, 2);
  m.declare({{"h1", 1}, {"h2", 1}}, Rational(1));
  m.declare({{"h1", 2}}, Rational(0));
  m.declare({{"h2", 2}}, Rational(0));
  return m;
}

IntersectionModel curve_one_model(const CurveOneInputs& in) {
  // Products of classes on P^1 x P^1: (a, b).(c, d) = a d + b c.
  auto pair = [](const std::array<Rational, 2>& x, const std::array<Rational, 2>& y) {
    return x[0] * y[1] + x[1] * y[0];
  };
  IntersectionModel m({"K", "E"}, {1, 1}, 4);
  m.declare({{"E", 4}}, pair(in.c1_normal, in.c1_normal) - in.c2_normal);
  m.declare({{"E", 3}, {"K", 1}}, -pair(in.k_restricted, in.c1_normal));
  m.declare({{"E", 2}, {"K", 2}}, pair(in.k_restricted, in.k_restricted));
  m.declare({{"E", 1}, {"K", 3}}, in.e_k3);
  m.declare({{"K", 4}}, in.k4);
  return m;
}

Rational testing_curve_one(const CurveOneInputs& in) {
  const auto m = curve_one_model(in);
  const ClassPoly s = m.cls("K") + m.cls("E");
  const ClassPoly s4 = s * s * s * s;
  return -m.evaluate_top(s4) + Rational(8) * in.volume;
}

IntersectionModel curve_two_model() {
  IntersectionModel m({"Z", "H", "T", "C2S"}, {1, 1, 1, 2}, 4);
  const ClassPoly H = m.cls("H"), T = m.cls("T"), C2S = m.cls("C2S"), Z = m.cls("Z");
  const ClassPoly c1 = Rational(4) * T;
  const ClassPoly c2 = Rational(3) * H * H + Rational(16) * T * T - Rational(8) * H * T;
  m.add_rule({{"Z", 2}}, -(c1 * Z) - c2);
  m.add_rule({{"H", 2}}, Rational(4) * H * T - C2S);
  m.declare({{"Z", 1}, {"H", 1}, {"T", 2}}, Rational(2));
  m.declare({{"Z", 1}, {"T", 3}}, Rational(0));
  m.declare({{"Z", 1}, {"T", 1}, {"C2S", 1}}, Rational(0));
  // Classes pulled back from the threefold base have no top intersection.
  std::vector<std::vector<int>> base;
  std::vector<int> cur(3, 0);
  monomials_of_degree({1, 1, 2}, 4, 0, cur, base);
  for (const auto& e : base) m.declare(std::vector<int>{0, e[0], e[1], e[2]}, Rational(0));
  return m;
}

CurveTwoNumbers testing_curve_two_numbers() {
  const auto m = curve_two_model();
  const ClassPoly H = m.cls("H"), T = m.cls("T"), Z = m.cls("Z");
  CurveTwoNumbers n;
  n.first = -m.evaluate_top(Z * H * H * T);
  n.second = -m.evaluate_top(H * Z * Z * T);
  n.third = -m.evaluate_top(Z * Z * Z * T);
  n.degree = -(Rational(24) * n.first + Rational(8) * n.second + n.third);
  return n;
}

Rational testing_curve_two() { return testing_curve_two_numbers().degree; }

CMCoefficients cm_coefficients() {
  // The second curve has degree 8 against the first class.
  const Rational a = testing_curve_two() / Rational(8);
  const Rational b = testing_curve_one();
  return {a, b, a / b};
}

}  // namespace vgit
