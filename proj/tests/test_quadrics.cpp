#include <doctest.h>

#include "support.hpp"
#include "vgit/cyclotomic.hpp"
#include "vgit/factor.hpp"

using namespace vgit;
using namespace vgit::testing;

namespace {

RForm lin(const Rational& a, const Rational& b) { return RForm::linear(a, b); }

RForm product_of_roots(const std::vector<Rational>& p) {
  RForm f = RForm::constant(1);
  for (const auto& x : p) f = f * lin(1, x);
  return f;
}

RPencil three_three() {
  return RPencil(diagonal({1, 1, 1, 0, 0, 0}), diagonal({0, 0, 0, 1, 1, 1}));
}

// Anti-diagonal 4x4 block paired with its shifted companion (one Jordan block
// of size 4 at u = 0), then diag(1, 1) against diag(1, 2).
RPencil jordan_four_pencil() {
  RMatrix a(kDim, kDim), b(kDim, kDim);
  for (int i = 0; i < 4; ++i) a(i, 3 - i) = 1;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      if (i + k == 4) b(i, k) = 1;
  a(4, 4) = 1;
  a(5, 5) = 1;
  b(4, 4) = 1;
  b(5, 5) = 2;
  return RPencil(RQuadric(a), RQuadric(b));
}

RPencil regenerate(const RPencil& p, const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return RPencil(p.member(a, b), p.member(c, d));
}

using CQuadric = QuadraticForm<Cyclotomic5>;
using CPencil = Pencil<Cyclotomic5>;
using CMatrix = Matrix<Cyclotomic5>;

CPencil appendix_pencil() {
  CMatrix a(kDim, kDim), b(kDim, kDim);
  for (std::size_t i = 0; i < kDim; ++i) a(i, i) = 1;
  for (std::size_t i = 0; i < 5; ++i) b(i, i) = Cyclotomic5::zeta_power(static_cast<long>(i));
  return CPencil(CQuadric(a), CQuadric(b));
}

// x_i -> z^3 x_{i+1} for i <= 4 (indices mod 5), x5 -> s * x5.
CMatrix appendix_map(const Cyclotomic5& s) {
  CMatrix g(kDim, kDim);
  for (std::size_t i = 0; i < 5; ++i) g(i, (i + 1) % 5) = Cyclotomic5::zeta_power(3);
  g(5, 5) = s;
  return g;
}

}  // namespace

TEST_CASE("discriminant examples") {
  const std::vector<Rational> p = {1, 2, -3, 5, Rational(1, 2), 7};
  CHECK(discriminant(diagonal_pencil(p)) == product_of_roots(p));
  const RForm u = RForm::u(), v = RForm::v();
  CHECK(discriminant(three_three()) == power(u, 3) * power(v, 3));
  CHECK(discriminant(half_pair()).is_zero());
}

TEST_CASE("classification examples") {
  Rng rng(10);
  const auto stable = classify_pencil(diagonal_pencil(distinct_rationals(rng, 6)));
  CHECK(stable.verdict == PencilVerdict::Stable);
  CHECK(stable.root_profile == std::vector<int>(6, 1));
  CHECK(stable.semistable());

  const auto poly = classify_pencil(three_three());
  CHECK(poly.verdict == PencilVerdict::Polystable);
  CHECK(poly.root_profile == std::vector<int>{3, 3});

  const auto four = classify_pencil(diagonal_pencil({2, 2, 2, 2, 5, -1}));
  CHECK(four.verdict == PencilVerdict::Unstable);
  CHECK(four.root_profile == std::vector<int>{4, 1, 1});

  const auto two = classify_pencil(diagonal_pencil({2, 2, 3, 4, 5, -1}));
  CHECK(two.verdict == PencilVerdict::Polystable);

  const auto jordan = classify_pencil(jordan_four_pencil());
  CHECK(jordan.verdict == PencilVerdict::Unstable);

  const auto degenerate = classify_pencil(half_pair());
  CHECK(degenerate.verdict == PencilVerdict::DegenerateDiscriminant);
  CHECK(degenerate.unstable());

  const auto nci = classify_pencil(shared_hyperplane_pair());
  CHECK(nci.verdict == PencilVerdict::NotCompleteIntersection);
  CHECK(nci.unstable());
}

TEST_CASE("a non-diagonalizable double root is semistable but not polystable") {
  // 2x2 Jordan block at u = 0 plus four simple roots.
  RMatrix a(kDim, kDim), b(kDim, kDim);
  a(0, 1) = a(1, 0) = 1;
  b(1, 1) = 1;
  for (std::size_t i = 2; i < 6; ++i) {
    a(i, i) = 1;
    b(i, i) = Rational(static_cast<long>(i));
  }
  const RPencil p{RQuadric(a), RQuadric(b)};
  const auto c = classify_pencil(p);
  CHECK(c.verdict == PencilVerdict::SemistableNotStable);
  REQUIRE(c.segre);
  std::vector<int> sizes;
  for (const auto& g : c.segre->groups) sizes.insert(sizes.end(), g.blocks.begin(), g.blocks.end());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(c.semistable());
}

TEST_CASE("Segre symbols") {
  Rng rng(11);
  const auto six = segre_symbol(diagonal_pencil(distinct_rationals(rng, 6)));
  CHECK(six.groups.size() == 6);
  CHECK(six.all_blocks_one());

  const auto tt = segre_symbol(three_three());
  REQUIRE(tt.groups.size() == 2);
  CHECK(tt.groups[0].blocks == std::vector<int>{1, 1, 1});
  CHECK(tt.groups[1].blocks == std::vector<int>{1, 1, 1});
  CHECK(tt.str() == "[(1,1,1),(1,1,1)]");

  const auto j = segre_symbol(jordan_four_pencil());
  REQUIRE(j.groups.size() == 3);
  std::vector<std::vector<int>> blocks;
  for (const auto& g : j.groups) blocks.push_back(g.blocks);
  std::sort(blocks.begin(), blocks.end());
  CHECK(blocks == std::vector<std::vector<int>>{{1}, {1}, {4}});
  for (const auto& g : j.groups)
    if (g.blocks == std::vector<int>{4}) CHECK(g.factor == RForm::u());

  CHECK_THROWS_WITH(segre_symbol(half_pair()), "degenerate pencil: identically zero discriminant");
}

TEST_CASE("Segre groups follow irreducible factors") {
  // the conjugate roots of 2u^2 + v^2 share one group
  RMatrix a(kDim, kDim), b(kDim, kDim);
  a(0, 0) = 1;
  a(1, 1) = -2;
  b(0, 1) = b(1, 0) = 1;
  for (std::size_t i = 2; i < 6; ++i) {
    a(i, i) = 1;
    b(i, i) = Rational(static_cast<long>(i));
  }
  const auto s = segre_symbol(RPencil(RQuadric(a), RQuadric(b)));
  int weight = 0;
  for (const auto& g : s.groups)
    for (int blk : g.blocks) weight += blk * g.factor.degree();
  CHECK(weight == 6);
  CHECK(s.groups.size() == 5);
}

TEST_CASE("Segre symbol of conjugated diagonal pencils is all ones") {
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    const RMatrix g = random_invertible(rng);
    const RPencil p = apply_transform(diagonal_pencil(distinct_rationals(rng, 6)), g);
    const auto s = segre_symbol(p);
    CHECK(s.all_blocks_one());
    int weight = 0;
    for (const auto& grp : s.groups)
      for (int blk : grp.blocks) weight += blk * grp.factor.degree();
    CHECK(weight == 6);
  }
}

TEST_CASE("complete intersection test") {
  const RPencil p(RQuadric::from_monomials({{{0, 1}, 1}}), RQuadric::from_monomials({{{0, 2}, 1}}));
  const auto ci = is_complete_intersection(p);
  CHECK_FALSE(ci.is_ci);
  REQUIRE(ci.common_linear_form);
  CHECK(normalize_projective(*ci.common_linear_form) == RVec{1, 0, 0, 0, 0, 0});

  Rng rng(13);
  CHECK(is_complete_intersection(diagonal_pencil(distinct_rationals(rng, 6))).is_ci);
  CHECK(is_complete_intersection(half_pair()).is_ci);
  // rank <= 2 everywhere yet a complete intersection
  CHECK(is_complete_intersection(RPencil(diagonal({1, 0, 0, 0, 0, 0}), diagonal({0, 1, 0, 0, 0, 0}))).is_ci);
  // common factor x0 hidden by a coordinate change
  const RMatrix g = random_invertible(rng);
  const auto hidden = is_complete_intersection(apply_transform(shared_hyperplane_pair(), g));
  CHECK_FALSE(hidden.is_ci);
  REQUIRE(hidden.common_linear_form);
  const RVec expected = normalize_projective(g.transpose() * RVec{1, 0, 0, 0, 0, 0});
  CHECK(normalize_projective(*hidden.common_linear_form) == expected);
}

TEST_CASE("transforms and span equality") {
  Rng rng(14);
  const RPencil p = diagonal_pencil(distinct_rationals(rng, 6));
  CHECK(pencils_equal_as_spans(apply_transform(p, RMatrix::identity(6)), p));
  RMatrix sigma = RMatrix::identity(6);
  sigma(0, 0) = -1;
  CHECK(pencils_equal_as_spans(apply_transform(p, sigma), p));
  CHECK_FALSE(pencils_equal_as_spans(p, three_three()));
  CHECK_THROWS_WITH(apply_transform(p, RMatrix(6, 6)), "singular transform");
}

TEST_CASE("appendix automorphism over the cyclotomic field") {
  const CPencil p = appendix_pencil();
  // The map as printed fixes x5; it sends the first generator to z(x0^2+..+x4^2) + x5^2.
  const CPencil printed = apply_transform(p, appendix_map(Cyclotomic5(1)));
  CHECK_FALSE(pencils_equal_as_spans(p, printed));
  // Scaling x5 by z^3 as well gives the cyclic permutation projectively.
  const CPencil cyclic = apply_transform(p, appendix_map(Cyclotomic5::zeta_power(3)));
  CHECK(pencils_equal_as_spans(p, cyclic));
  // sign flips preserve the span
  for (std::size_t i = 0; i < kDim; ++i) {
    CMatrix s = CMatrix::identity(kDim);
    s(i, i) = Cyclotomic5(-1);
    CHECK(pencils_equal_as_spans(p, apply_transform(p, s)));
  }
}

TEST_CASE("discriminant transforms by det(g)^2") {
  Rng rng(15);
  for (int i = 0; i < 20; ++i) {
    const RPencil p(RQuadric(random_symmetric(rng, 6)), RQuadric(random_symmetric(rng, 6)));
    const RMatrix g = random_invertible(rng);
    const Rational d = determinant(g);
    CHECK(discriminant(apply_transform(p, g)) == (d * d) * discriminant(p));
  }
}

TEST_CASE("classification is invariant under coordinates and generators") {
  Rng rng(16);
  std::vector<RPencil> samples = {three_three(), half_pair(), shared_hyperplane_pair(), jordan_four_pencil(),
                                  diagonal_pencil({2, 2, 3, 3, 5, -1}), diagonal_pencil({1, 1, 1, 2, 3, 4})};
  for (int i = 0; i < 4; ++i) samples.push_back(diagonal_pencil(distinct_rationals(rng, 6)));
  for (const auto& p : samples) {
    const auto base = classify_pencil(p);
    CHECK((base.verdict == PencilVerdict::Stable) + (base.verdict == PencilVerdict::SemistableNotStable) <= 1);
    if (base.verdict == PencilVerdict::Polystable) CHECK(base.semistable());
    for (int k = 0; k < 3; ++k) {
      const auto moved = classify_pencil(apply_transform(p, random_invertible(rng)));
      CHECK(moved.verdict == base.verdict);
      CHECK(moved.root_profile == base.root_profile);
      Rational a, b, c, d;
      do {
        a = small_rational(rng), b = small_rational(rng), c = small_rational(rng), d = small_rational(rng);
      } while ((a * d - b * c).is_zero());
      CHECK(classify_pencil(regenerate(p, a, b, c, d)).verdict == base.verdict);
    }
  }
}

TEST_CASE("pencil generators must be independent") {
  const RQuadric q = RQuadric::from_monomials({{{0, 0}, 1}});
  CHECK_THROWS_AS(RPencil(q, Rational(3) * q), Error);
}

TEST_CASE("quadric evaluation agrees with its polynomial") {
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    const RQuadric q(random_symmetric(rng, 6));
    const RVec x = random_vec(rng, 6);
    CHECK(q(x) == q.polynomial().evaluate(x));
  }
}
