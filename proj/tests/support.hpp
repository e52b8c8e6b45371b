#pragma once

// Seeded generators shared by the unit tests and the acceptance runner.

#include <algorithm>
#include <random>
#include <set>

#include "vgit/hm_git.hpp"
#include "vgit/sarkisov.hpp"

namespace vgit::testing {

using Rng = std::mt19937;

inline long small_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational small_rational(Rng& rng, long bound = 5) {
  long den = small_int(rng, 1, 3);
  return Rational(small_int(rng, -bound, bound), den);
}

inline RVec random_vec(Rng& rng, std::size_t n, long bound = 3) {
  RVec v(n);
  for (auto& x : v) x = Rational(small_int(rng, -bound, bound));
  return v;
}

inline RMatrix random_symmetric(Rng& rng, std::size_t n, long bound = 3) {
  RMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = Rational(small_int(rng, -bound, bound));
  return g;
}

inline RMatrix random_invertible(Rng& rng, std::size_t n = kDim, long bound = 2) {
  for (;;) {
    RMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = Rational(small_int(rng, -bound, bound));
    if (!determinant(g).is_zero()) return g;
  }
}

inline RQuadric diagonal(const std::vector<Rational>& d) {
  RMatrix g(kDim, kDim);
  for (std::size_t i = 0; i < kDim; ++i) g(i, i) = d.at(i);
  return RQuadric(g);
}

/// (sum x_i^2, sum p_i x_i^2)
inline RPencil diagonal_pencil(const std::vector<Rational>& p) {
  return RPencil(diagonal(std::vector<Rational>(kDim, Rational(1))), diagonal(p));
}

inline std::vector<Rational> distinct_rationals(Rng& rng, std::size_t n, long bound = 20) {
  std::set<Rational> s;
  while (s.size() < n) s.insert(Rational(small_int(rng, -bound, bound), small_int(rng, 1, 4)));
  std::vector<Rational> v(s.begin(), s.end());
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

inline ProjLine standard_line() { return line_from_points({1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}); }

inline RPencil half_pair() {
  return RPencil(RQuadric::from_monomials({{{0, 2}, 1}, {{1, 3}, 1}}), RQuadric::from_monomials({{{0, 4}, 1}, {{1, 5}, 1}}));
}

/// Q = x0x2 + x1x3 + q, Q' = x1x4 + q': singular at e0 on span(e0, e1).
inline RPencil singular_on_line_pair() {
  return RPencil(RQuadric::from_monomials({{{0, 2}, 1}, {{1, 3}, 1}, {{4, 5}, 1}, {{2, 2}, 1}}),
                 RQuadric::from_monomials({{{1, 4}, 1}, {{2, 3}, 1}, {{5, 5}, 1}}));
}

/// Q = x0 x2, Q' = x0 x3.
inline RPencil shared_hyperplane_pair() {
  return RPencil(RQuadric::from_monomials({{{0, 2}, 1}}), RQuadric::from_monomials({{{0, 3}, 1}}));
}

/// Six distinct roots; contains the line through (1,1,1,0,0,0) and (0,0,0,1,1,1).
inline RPencil smooth_diagonal_pair() {
  return RPencil(diagonal({1, 1, -2, 1, 1, -2}), diagonal({1, 2, -3, 3, 4, -7}));
}
inline ProjLine smooth_diagonal_line() { return line_from_points({1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}); }

inline MatrixRows random_rows(Rng& rng, long bound = 3) {
  return {random_vec(rng, 4, bound), random_vec(rng, 4, bound), random_symmetric(rng, 4, bound),
          random_vec(rng, 4, bound), random_vec(rng, 4, bound), random_symmetric(rng, 4, bound)};
}

/// A random standard-form pair whose pencil has six distinct discriminant roots.
inline RPencil random_smooth_standard_pair(Rng& rng) {
  for (;;) {
    try {
      const RPencil p = pair_from_matrix(random_rows(rng));
      if (classify_pencil(p).verdict == PencilVerdict::Stable) return p;
    } catch (const Error&) {
    }
  }
}

/// Coordinate-aligned pairs whose torus behaviour is interesting: sparse
/// standard-form pencils, with sizes picked so smooth, singular and
/// degenerate shapes all occur.
inline RPencil random_sparse_pair(Rng& rng) {
  for (;;) {
    auto sparse_row = [&](int kind) {
      std::map<std::pair<int, int>, Rational> m;
      const int lin = static_cast<int>(small_int(rng, 0, 2));
      for (int k = 0; k < lin; ++k) {
        const int a = static_cast<int>(small_int(rng, 0, 1)), b = static_cast<int>(small_int(rng, 2, 5));
        m[{a, b}] = m[{a, b}] + Rational(small_int(rng, 1, 2));
      }
      const int quad = kind == 0 ? 0 : static_cast<int>(small_int(rng, 1, 3));
      for (int k = 0; k < quad; ++k) {
        int a = static_cast<int>(small_int(rng, 2, 5)), b = static_cast<int>(small_int(rng, 2, 5));
        if (a > b) std::swap(a, b);
        m[{a, b}] = m[{a, b}] + Rational(small_int(rng, 1, 2));
      }
      return RQuadric::from_monomials(m);
    };
    const int kind = static_cast<int>(small_int(rng, 0, 3));
    try {
      return RPencil(sparse_row(kind), sparse_row(kind));
    } catch (const Error&) {
    }
  }
}

/// Rotates through smooth, singular-on-line and sparse degenerate shapes,
/// all with the line span(e0, e1) and coordinate-aligned supports.
inline RPencil random_mixed_pair(Rng& rng, int i) {
  auto thin = [&](MatrixRows r) {
    for (auto* v : {&r.l0, &r.l1, &r.l0p, &r.l1p})
      for (auto& x : *v)
        if (small_int(rng, 0, 2) == 0) x = 0;
    for (auto* g : {&r.q, &r.qp})
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a; b < 4; ++b)
          if (small_int(rng, 0, 2) != 0) (*g)(a, b) = (*g)(b, a) = 0;
    return r;
  };
  for (;;) {
    try {
      switch (i % 3) {
        case 0: return pair_from_matrix(thin(random_rows(rng, 2)));
        case 1: {
          MatrixRows r = thin(random_rows(rng, 2));
          r.l0p = r.l0;  // dependent x0 columns: singular at e0
          return pair_from_matrix(r);
        }
        default: return random_sparse_pair(rng);
      }
    } catch (const Error&) {
    }
  }
}

/// All integer r with |r_i| <= bound and sum zero, excluding r = 0.
inline std::vector<OnePS> box_1ps(long bound) {
  std::vector<OnePS> out;
  OnePS::Weights r{};
  auto rec = [&](auto&& self, std::size_t i, long sum) -> void {
    if (i == 5) {
      const long last = -sum;
      if (last < -bound || last > bound) return;
      r[5] = last;
      if (std::any_of(r.begin(), r.end(), [](long x) { return x != 0; })) out.emplace_back(r);
      return;
    }
    for (long x = -bound; x <= bound; ++x) {
      r[i] = x;
      self(self, i + 1, sum + x);
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline Rational brute_force_min(const StateSet& s, const std::vector<OnePS>& lambdas, const Rational& t) {
  Rational best = 0;
  for (const auto& l : lambdas) best = std::min(best, mu_t(s, l, t));
  return best;
}

}  // namespace vgit::testing
