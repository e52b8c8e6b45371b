#include "vgit/lp.hpp"

#include <algorithm>
#include <limits>

namespace vgit {

namespace {

using RVec = Vec<Rational>;

struct Tableau {
  std::vector<RVec> a;  // each row: coefficients then rhs
  std::vector<std::size_t> basis;
  RVec cost;            // reduced costs (maximization: enter on positive)
  std::size_t n = 0;    // number of columns excluding rhs

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = Rational(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j <= n; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    if (!cost[c].is_zero()) {
      const Rational f = cost[c];
      for (std::size_t j = 0; j <= n; ++j)
        if (!a[r][j].is_zero()) cost[j] -= f * a[r][j];
    }
    basis[r] = c;
  }

  // Returns false when unbounded.
  bool run(const std::vector<bool>& allowed) {
    while (true) {
      std::size_t enter = n;
      for (std::size_t j = 0; j < n; ++j)
        if (allowed[j] && cost[j].sign() > 0) {
          enter = j;
          break;
        }
      if (enter == n) return true;
      std::size_t leave = a.size();
      Rational best;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i][enter].sign() <= 0) continue;
        const Rational ratio = a[i][n] / a[i][enter];
        if (leave == a.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == a.size()) return false;
      pivot(leave, enter);
    }
  }

  RVec values() const {
    RVec x(n, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) x[basis[i]] = a[i][n];
    return x;
  }
};

}  // namespace

LPResult solve_lp(const LinearProgram& lp) {
  const std::size_t m = lp.rows.size();
  const std::size_t nv = lp.num_vars;
  if (lp.rel.size() != m || lp.rhs.size() != m) throw Error("malformed linear program");
  if (lp.objective.size() != nv) throw Error("objective length mismatch");

  // Column layout: structural, then one slack/surplus per inequality, then artificials.
  std::vector<RVec> rows = lp.rows;
  std::vector<Relation> rel = lp.rel;
  RVec rhs = lp.rhs;
  std::size_t n_slack = 0, n_art = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != nv) throw Error("constraint length mismatch");
    if (rhs[i].sign() < 0) {
      for (auto& c : rows[i]) c = -c;
      rhs[i] = -rhs[i];
      if (rel[i] == Relation::LessEq) rel[i] = Relation::GreaterEq;
      else if (rel[i] == Relation::GreaterEq) rel[i] = Relation::LessEq;
    }
    if (rel[i] != Relation::Equal) ++n_slack;
    if (rel[i] != Relation::LessEq) ++n_art;
  }
  Tableau t;
  t.n = nv + n_slack + n_art;
  t.a.assign(m, RVec(t.n + 1, Rational(0)));
  t.basis.assign(m, 0);
  std::vector<bool> is_art(t.n, false);
  std::size_t s = nv, art = nv + n_slack;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nv; ++j) t.a[i][j] = rows[i][j];
    t.a[i][t.n] = rhs[i];
    if (rel[i] == Relation::LessEq) {
      t.a[i][s] = 1;
      t.basis[i] = s++;
    } else {
      if (rel[i] == Relation::GreaterEq) t.a[i][s++] = -1;
      t.a[i][art] = 1;
      is_art[art] = true;
      t.basis[i] = art++;
    }
  }

  // Phase 1: maximize -(sum of artificials).
  t.cost.assign(t.n + 1, Rational(0));
  for (std::size_t j = 0; j < t.n; ++j)
    if (is_art[j]) t.cost[j] = -1;
  for (std::size_t i = 0; i < m; ++i)
    if (is_art[t.basis[i]])
      for (std::size_t j = 0; j <= t.n; ++j) t.cost[j] += t.a[i][j];
  std::vector<bool> all(t.n, true);
  t.run(all);
  for (std::size_t i = 0; i < t.a.size(); ++i)
    if (is_art[t.basis[i]] && !t.a[i][t.n].is_zero()) return {LPResult::Status::Infeasible, {}, {}};

  // Drive zero-valued artificials out of the basis; rows where that fails are redundant.
  for (std::size_t i = 0; i < t.a.size();) {
    if (!is_art[t.basis[i]]) {
      ++i;
      continue;
    }
    std::size_t col = t.n;
    for (std::size_t j = 0; j < t.n; ++j)
      if (!is_art[j] && !t.a[i][j].is_zero()) {
        col = j;
        break;
      }
    if (col < t.n) {
      t.pivot(i, col);
      ++i;
    } else {
      t.a.erase(t.a.begin() + static_cast<long>(i));
      t.basis.erase(t.basis.begin() + static_cast<long>(i));
    }
  }

  // Phase 2.
  t.cost.assign(t.n + 1, Rational(0));
  for (std::size_t j = 0; j < nv; ++j) t.cost[j] = lp.objective[j];
  for (std::size_t i = 0; i < t.a.size(); ++i) {
    const Rational cb = t.basis[i] < nv ? lp.objective[t.basis[i]] : Rational(0);
    if (cb.is_zero()) continue;
    for (std::size_t j = 0; j <= t.n; ++j) t.cost[j] -= cb * t.a[i][j];
  }
  std::vector<bool> allowed(t.n);
  for (std::size_t j = 0; j < t.n; ++j) allowed[j] = !is_art[j];
  if (!t.run(allowed)) return {LPResult::Status::Unbounded, {}, {}};

  RVec x = t.values();
  x.resize(nv);
  return {LPResult::Status::Optimal, x, dot(lp.objective, x)};
}

MinNormPoint min_norm_point(const std::vector<RVec>& points) {
  if (points.empty()) throw Error("min-norm point of an empty set");
  auto norm2 = [](const RVec& v) { return dot(v, v); };
  std::size_t start = 0;
  for (std::size_t i = 1; i < points.size(); ++i)
    if (norm2(points[i]) < norm2(points[start])) start = i;

  std::vector<std::size_t> active{start};
  RVec lambda{Rational(1)};
  RVec x = points[start];

  auto combine = [&](const RVec& w) {
    RVec y(x.size(), Rational(0));
    for (std::size_t k = 0; k < active.size(); ++k)
      for (std::size_t c = 0; c < y.size(); ++c) y[c] += w[k] * points[active[k]][c];
    return y;
  };

  while (true) {
    const Rational xx = norm2(x);
    std::size_t j = 0;
    Rational best = dot(x, points[0]);
    for (std::size_t i = 1; i < points.size(); ++i) {
      const Rational d = dot(x, points[i]);
      if (d < best) {
        best = d;
        j = i;
      }
    }
    if (best >= xx || std::find(active.begin(), active.end(), j) != active.end()) break;
    active.push_back(j);
    lambda.push_back(Rational(0));

    while (true) {
      // Affine minimizer of the active set: [G 1; 1^T 0] [alpha; mu] = [0; 1].
      const std::size_t k = active.size();
      Matrix<Rational> sys(k + 1, k + 1);
      RVec b(k + 1, Rational(0));
      for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t q = 0; q < k; ++q) sys(p, q) = dot(points[active[p]], points[active[q]]);
        sys(p, k) = 1;
        sys(k, p) = 1;
      }
      b[k] = 1;
      const auto sol = solve(sys, b);
      if (!sol) throw Error("affinely dependent active set");
      RVec alpha(sol->begin(), sol->begin() + static_cast<long>(k));
      if (std::all_of(alpha.begin(), alpha.end(), [](const Rational& a) { return a.sign() > 0; })) {
        lambda = alpha;
        x = combine(lambda);
        break;
      }
      Rational theta(1);
      for (std::size_t p = 0; p < k; ++p)
        if (alpha[p].sign() <= 0) theta = std::min(theta, lambda[p] / (lambda[p] - alpha[p]));
      for (std::size_t p = 0; p < k; ++p) lambda[p] = lambda[p] + theta * (alpha[p] - lambda[p]);
      std::vector<std::size_t> keep_idx;
      RVec keep_lambda;
      for (std::size_t p = 0; p < k; ++p)
        if (lambda[p].sign() > 0) {
          keep_idx.push_back(active[p]);
          keep_lambda.push_back(lambda[p]);
        }
      active = std::move(keep_idx);
      lambda = std::move(keep_lambda);
      x = combine(lambda);
    }
  }
  MinNormPoint out{x, {}};
  for (std::size_t k = 0; k < active.size(); ++k) out.weights.emplace_back(active[k], lambda[k]);
  return out;
}

std::vector<long> primitive_integer_vector(const RVec& v) {
  mpz_class l = 1, g = 0;
  for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : v) {
    z.push_back(c.numerator() * (l / c.denominator()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  if (g == 0) throw Error("zero vector has no primitive integer direction");
  std::vector<long> out;
  for (auto& x : z) {
    x /= g;
    if (!x.fits_slong_p()) throw Error("integer direction out of range");
    out.push_back(x.get_si());
  }
  return out;
}

}  // namespace vgit
