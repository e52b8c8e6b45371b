#include "vgit/sarkisov.hpp"

#include <algorithm>
#include <map>

namespace vgit {

namespace {

RPoly linear_y(const RVec& c) { return RPoly::linear(y_variables(), c); }

RPoly quadric_y(const RMatrix& g) {
  RPoly p(y_variables());
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      std::vector<int> e(4, 0);
      e[i] += 1;
      e[j] += 1;
      p.add_term(e, i == j ? g(i, i) : Rational(2) * g(i, j));
    }
  return p;
}

std::vector<std::vector<int>> monomials(int d) {
  std::vector<std::vector<int>> out;
  if (d < 0) return out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b)
      for (int c = d - a - b; c >= 0; --c) out.push_back({a, b, c, d - a - b - c});
  return out;
}

long binom(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

using SparseVec = std::vector<std::pair<int, mpz_class>>;

// b0 * a - a0 * b with a0, b0 the leading entries, divided by its content.
SparseVec cross_reduce(const SparseVec& a, const SparseVec& b) {
  const mpz_class a0 = a.front().second, b0 = b.front().second;
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 1, j = 1;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.emplace_back(a[i].first, b0 * a[i].second);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -a0 * b[j].second);
      ++j;
    } else {
      mpz_class v = b0 * a[i].second - a0 * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  mpz_class g = 0;
  for (const auto& [k, x] : out) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (g > 1)
    for (auto& [k, x] : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

// Incremental exact rank over primitive integer rows, pivots keyed by leading index.
class SparseRank {
 public:
  explicit SparseRank(std::size_t n) : pivots_(n) {}
  void add(SparseVec v) {
    while (!v.empty()) {
      auto& p = pivots_[static_cast<std::size_t>(v.front().first)];
      if (p.empty()) {
        p = std::move(v);
        ++rank_;
        return;
      }
      if (v.size() < p.size()) std::swap(v, p);  // keep the sparser row as pivot
      v = cross_reduce(v, p);
    }
  }
  long rank() const { return rank_; }

 private:
  std::vector<SparseVec> pivots_;
  long rank_ = 0;
};

}  // namespace

MatrixRows rows_of(const StandardPair& sp) { return {sp.l0, sp.l1, sp.q, sp.l0p, sp.l1p, sp.qp}; }

CurveIdeal curve_from_rows(const MatrixRows& r) {
  const RPoly L0 = linear_y(r.l0), L1 = linear_y(r.l1), Q = quadric_y(r.q);
  const RPoly L0p = linear_y(r.l0p), L1p = linear_y(r.l1p), Qp = quadric_y(r.qp);
  return {L0 * L1p - L1 * L0p, L0 * Qp - Q * L0p, L1 * Qp - Q * L1p};
}

CurveIdeal curve_from_pair(const StandardPair& sp) { return curve_from_rows(rows_of(sp)); }

RPencil pair_from_matrix(const MatrixRows& r) {
  auto build = [](const RVec& l0, const RVec& l1, const RMatrix& q) {
    if (l0.size() != 4 || l1.size() != 4 || q.rows() != 4 || q.cols() != 4) throw Error("matrix entries must live in x2..x5");
    RMatrix g(kDim, kDim);
    for (std::size_t k = 0; k < 4; ++k) {
      g(0, k + 2) = g(k + 2, 0) = l0[k] / Rational(2);
      g(1, k + 2) = g(k + 2, 1) = l1[k] / Rational(2);
      for (std::size_t m = 0; m < 4; ++m) g(k + 2, m + 2) = q(k, m);
    }
    return RQuadric(g);
  };
  return RPencil(build(r.l0, r.l1, r.q), build(r.l0p, r.l1p, r.qp));
}

long hilbert_function(const CurveIdeal& ideal, int d) {
  if (d < 0) throw Error("degree must be non-negative");
  const auto target = monomials(d);
  const long total = static_cast<long>(target.size());
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < target.size(); ++i) index.emplace(target[i], static_cast<int>(i));
  SparseRank r(target.size());
  for (const auto& gen : ideal.generators()) {
    if (gen.is_zero()) continue;
    const int gd = gen.degree();
    mpz_class den = 1;
    for (const auto& [e, c] : gen.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
    const RPoly scaled = Rational(den) * gen;
    for (const auto& mu : monomials(d - gd)) {
      SparseVec v;
      for (const auto& [e, c] : scaled.terms()) {
        std::vector<int> s(4);
        for (std::size_t i = 0; i < 4; ++i) s[i] = e[i] + mu[i];
        v.emplace_back(index.at(s), c.numerator());
      }
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      r.add(std::move(v));
    }
  }
  return total - r.rank();
}

long resolution_ideal_dimension(int d) {
  return binom(d + 1, 3) + 2 * binom(d, 3) - 2 * binom(d - 1, 3);
}

CurveInvariants hilbert_polynomial_check(const CurveIdeal& ideal) {
  std::vector<long> hf;
  for (int d = 5; d <= 10; ++d) hf.push_back(hilbert_function(ideal, d));
  const long a = hf[1] - hf[0];
  for (std::size_t i = 1; i < hf.size(); ++i)
    if (hf[i] - hf[i - 1] != a) throw Error("not a curve: Hilbert function is not linear on [5, 10]");
  if (a <= 0) throw Error("not a curve: Hilbert polynomial has degree 0");
  const long b = hf[0] - 5 * a;
  return {a, 1 - b};
}

std::string to_string(QuadricType q) {
  switch (q) {
    case QuadricType::Rank4Smooth: return "rank4_smooth";
    case QuadricType::Rank3Cone: return "rank3_cone";
    case QuadricType::Abnormal: return "abnormal";
  }
  return "?";
}

QuadricType quadric_normality(const RPoly& m12) {
  if (m12.is_zero()) throw Error("the quadric generator vanishes");
  if (m12.variables().size() != 4 || m12.degree() != 2 || !m12.is_homogeneous())
    throw Error("expected a quadric in four variables");
  RMatrix g(4, 4);
  for (const auto& [e, c] : m12.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 4; ++i)
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      g(idx[0], idx[0]) = c;
    } else {
      g(idx[0], idx[1]) = c / Rational(2);
      g(idx[1], idx[0]) = c / Rational(2);
    }
  }
  const auto r = rank(g);
  if (r == 4) return QuadricType::Rank4Smooth;
  if (r == 3) return QuadricType::Rank3Cone;
  return QuadricType::Abnormal;
}

QuadricType quadric_normality(const CurveIdeal& ideal) { return quadric_normality(ideal.m12); }

}  // namespace vgit
