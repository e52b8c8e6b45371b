#include <doctest.h>

#include "support.hpp"
#include "vgit/cm_ledger.hpp"
#include "vgit/lp.hpp"

using namespace vgit;
using namespace vgit::testing;

namespace {

const OnePS kHalfDir{2, 2, -1, -1, -1, -1};
const OnePS kSingDir{1, 0, -1, 0, 0, 0};
const OnePS kHyperDir{-5, 1, 1, 1, 1, 1};

// x -> g x with new x_i = old x_{image[i]}.
RMatrix permutation(const std::array<int, 6>& image) {
  RMatrix m(kDim, kDim);
  for (std::size_t i = 0; i < kDim; ++i) m(i, static_cast<std::size_t>(image[i])) = 1;
  return m;
}

OnePS pulled_back(const OnePS& l, const std::array<int, 6>& image) {
  std::array<std::size_t, 6> inv{};
  for (std::size_t i = 0; i < 6; ++i) inv[static_cast<std::size_t>(image[i])] = i;
  OnePS::Weights r{};
  for (std::size_t i = 0; i < 6; ++i) r[i] = l[inv[i]];
  return OnePS(r);
}

void check_sound(const RPencil& p, const ProjLine& l, const Verdict& v) {
  CHECK(verify_certificate(p, l, v));
  const auto& c = v.certificate;
  if (v.status == Status::Unstable && c.kind == Certificate::Kind::OneParameterSubgroup) {
    REQUIRE(c.lambda);
    const Rational w = mu_t(apply_transform(p, c.frame), apply_transform(l, c.frame), *c.lambda, v.t);
    CHECK(w == c.weight);
    CHECK(w < 0);
  }
  if (c.kind == Certificate::Kind::ConvexWitness) {
    std::array<Rational, 6> sum{};
    Rational total = 0;
    for (const auto& term : c.witness) {
      CHECK(term.weight > 0);
      total += term.weight;
      for (std::size_t i = 0; i < 6; ++i) sum[i] += term.weight * (Rational(term.pencil[i]) + v.t * Rational(term.line[i]));
    }
    CHECK(total == 1);
    for (std::size_t i = 1; i < 6; ++i) CHECK(sum[i] == sum[0]);
  }
}

}  // namespace

TEST_CASE("one-parameter subgroups") {
  CHECK_THROWS_AS(OnePS({1, 1, 1, 1, 1, 1}), Error);
  CHECK(OnePS::trivial().is_trivial());
  CHECK(kHalfDir.scaled(3) == OnePS{6, 6, -3, -3, -3, -3});
  CHECK(kSingDir.permuted({1, 0, 2, 3, 4, 5}) == OnePS{0, 1, -1, 0, 0, 0});
  CHECK(kHalfDir.str() == "(2,2,-1,-1,-1,-1)");
}

TEST_CASE("line weights") {
  CHECK(mu_line(standard_line(), kHalfDir) == -4);
  CHECK(mu_line(standard_line(), OnePS::trivial()) == 0);
  CHECK(mu_line(line_from_points({1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}), OnePS::trivial()) == 0);
  CHECK(mu_line(standard_line(), kSingDir) == -1);
}

TEST_CASE("pencil weights") {
  Rng rng(30);
  CHECK(mu_pencil(random_smooth_standard_pair(rng), kHalfDir) == 2);
  CHECK(mu_pencil(half_pair(), kHalfDir) == 2);
  CHECK(mu_pencil(shared_hyperplane_pair(), kHyperDir) == -8);
  CHECK(mu_pencil(singular_on_line_pair(), kSingDir) == 0);
}

TEST_CASE("affine weights in t") {
  const ProjLine l = standard_line();
  Rng rng(31);
  const RPencil standard = random_smooth_standard_pair(rng);
  for (const Rational t : {Rational(0), Rational(1, 10), Rational(15, 194), Rational(1, 2)}) {
    CHECK(mu_t(standard, l, kHalfDir, t) == Rational(2) - Rational(4) * t);
    CHECK(mu_t(shared_hyperplane_pair(), l, kHyperDir, t) == Rational(-8) + Rational(4) * t);
    CHECK(mu_t(singular_on_line_pair(), l, kSingDir, t) == -t);
  }
}

TEST_CASE("weights are positively homogeneous, affine in t and permutation equivariant") {
  Rng rng(32);
  const std::vector<OnePS> catalog = {kHalfDir, kSingDir, kHyperDir, OnePS{2, -2, 1, -1, 0, 0},
                                      OnePS{1, -3, 3, -5, 5, -1}};
  const std::vector<RPencil> pairs = {half_pair(), singular_on_line_pair(), shared_hyperplane_pair(),
                                      random_smooth_standard_pair(rng), random_sparse_pair(rng)};
  const ProjLine l = standard_line();
  for (const auto& p : pairs)
    for (const auto& lam : catalog) {
      for (long k = 1; k <= 4; ++k) {
        CHECK(mu_line(l, lam.scaled(k)) == k * mu_line(l, lam));
        CHECK(mu_pencil(p, lam.scaled(k)) == k * mu_pencil(p, lam));
      }
      for (const Rational t : {Rational(0), Rational(1, 3), Rational(7, 5)})
        CHECK(mu_t(p, l, lam, t) == Rational(mu_pencil(p, lam)) + t * Rational(mu_line(l, lam)));
      for (int s = 0; s < 4; ++s) {
        std::array<int, 6> image{0, 1, 2, 3, 4, 5};
        std::shuffle(image.begin(), image.end(), rng);
        const RMatrix g = permutation(image);
        const Rational t(1, 7);
        CHECK(mu_t(apply_transform(p, g), apply_transform(l, g), pulled_back(lam, image), t) == mu_t(p, l, lam, t));
      }
    }
}

TEST_CASE("state sets") {
  const StateSet s = state_set(half_pair(), standard_line());
  CHECK(s.line_states == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(s.pencil_states.size() == 4);
  CHECK(s.line_characters() == std::vector<Character>{{-1, -1, 0, 0, 0, 0}});
}

TEST_CASE("torus verdicts on the named pairs") {
  const ProjLine l = standard_line();
  const Verdict half = torus_verdict(half_pair(), l, Rational(1, 2));
  CHECK(half.status == Status::Semistable);
  CHECK(half.certificate.kind == Certificate::Kind::ConvexWitness);
  CHECK(mu_t(half_pair(), l, kHalfDir, Rational(1, 2)) == 0);
  check_sound(half_pair(), l, half);

  const Verdict above = torus_verdict(half_pair(), l, Rational(3, 4));
  CHECK(above.status == Status::Unstable);
  REQUIRE(above.certificate.lambda);
  CHECK(*above.certificate.lambda == kHalfDir);
  check_sound(half_pair(), l, above);

  for (const Rational t : {Rational(1, 100), Rational(1, 10), Rational(1, 2), Rational(9, 10)}) {
    const Verdict v = torus_verdict(singular_on_line_pair(), l, t);
    CHECK(v.status == Status::Unstable);
    check_sound(singular_on_line_pair(), l, v);
  }
  // the bare singular shape has exactly the cataloged witness
  const RPencil bare(RQuadric::from_monomials({{{0, 2}, 1}, {{1, 3}, 1}}), RQuadric::from_monomials({{{1, 4}, 1}}));
  const Verdict v = torus_verdict(bare, l, Rational(1, 10));
  CHECK(v.status == Status::Unstable);
  REQUIRE(v.certificate.lambda);
  CHECK(mu_t(bare, l, *v.certificate.lambda, Rational(1, 10)) < 0);
}

TEST_CASE("torus stability uses the interior") {
  Rng rng(33);
  const RPencil p = random_smooth_standard_pair(rng);
  const Verdict v = torus_verdict(p, standard_line(), Rational(1, 10));
  CHECK(v.status == Status::Stable);
  check_sound(p, standard_line(), v);
}

TEST_CASE("worst diagonal 1-PS in the box") {
  const ProjLine l = standard_line();
  CHECK(worst_torus_1ps(half_pair(), l, Rational(1, 2)).value == 0);

  Rng rng(34);
  const RPencil p = random_smooth_standard_pair(rng);
  const Rational t(51, 100);
  const WorstOnePS w = worst_torus_1ps(p, l, t);
  CHECK(w.value < 0);
  // (2,2,-1,-1,-1,-1)/2 lies in the box and attains the optimum
  CHECK(w.value == (Rational(2) - Rational(4) * t) / Rational(2));
  CHECK(mu_t(p, l, w.lambda, t) < 0);

  const WorstOnePS s = worst_torus_1ps(singular_on_line_pair(), l, Rational(1, 10));
  CHECK(s.value <= Rational(-1, 10));
  CHECK(mu_t(singular_on_line_pair(), l, s.lambda, Rational(1, 10)) < 0);
  CHECK(worst_torus_1ps(singular_on_line_pair(), l, Rational(1, 10)).lambda == s.lambda);
}

TEST_CASE("destabilizer catalog") {
  const ProjLine l = standard_line();
  const auto sing = catalog_destabilize(singular_on_line_pair(), l, Rational(1, 100));
  REQUIRE(sing);
  CHECK(sing->lambda == kSingDir);
  CHECK(sing->weight == Rational(-1, 100));

  const auto hyper = catalog_destabilize(shared_hyperplane_pair(), l, Rational(1, 10));
  REQUIRE(hyper);
  CHECK(hyper->lambda == kHyperDir);
  CHECK(hyper->weight == Rational(-8) + Rational(4, 10));

  CHECK_FALSE(catalog_destabilize(smooth_diagonal_pair(), smooth_diagonal_line(), Rational(1, 10)));
  CHECK(torus_verdict(smooth_diagonal_pair(), smooth_diagonal_line(), Rational(1, 10)).status != Status::Unstable);

  const auto above = catalog_destabilize(half_pair(), l, Rational(3, 5));
  REQUIRE(above);
  CHECK(above->lambda == kHalfDir);
  CHECK(above->weight == Rational(2) - Rational(12, 5));

  // identically zero discriminant below 1/10
  const auto degenerate = catalog_destabilize(half_pair(), l, Rational(1, 20));
  REQUIRE(degenerate);
  CHECK(degenerate->weight < 0);
  CHECK(mu_t(apply_transform(half_pair(), degenerate->frame), apply_transform(l, degenerate->frame), degenerate->lambda,
             Rational(1, 20)) == degenerate->weight);
}

TEST_CASE("pair verdicts") {
  const ProjLine l = standard_line();
  const Verdict smooth = pair_verdict(smooth_diagonal_pair(), smooth_diagonal_line(), Rational(15, 194));
  CHECK(smooth.status == Status::Stable);
  CHECK(smooth.certificate.rule.starts_with("smooth-below-threshold"));

  for (const Rational t : {Rational(1, 100), Rational(15, 194), Rational(1, 4), Rational(1, 2)}) {
    const Verdict v = pair_verdict(singular_on_line_pair(), l, t);
    CHECK(v.status == Status::Unstable);
    REQUIRE(v.certificate.lambda);
    CHECK(*v.certificate.lambda == kSingDir);
    CHECK(v.certificate.weight == -t);
    check_sound(singular_on_line_pair(), l, v);
  }

  const Verdict nci = pair_verdict(shared_hyperplane_pair(), l, Rational(1, 10));
  CHECK(nci.status == Status::Unstable);
  check_sound(shared_hyperplane_pair(), l, nci);

  // r = (-1,-1,0,0,1,1) gives -1 + 2t < 0 below 1/2
  const Verdict quarter = pair_verdict(half_pair(), l, Rational(1, 4));
  CHECK(quarter.status == Status::Unstable);
  CHECK(mu_t(half_pair(), l, OnePS{-1, -1, 0, 0, 1, 1}, Rational(1, 4)) == Rational(-1, 2));
  check_sound(half_pair(), l, quarter);

  const Verdict half = pair_verdict(half_pair(), l, Rational(1, 2));
  CHECK(half.status == Status::Polystable);
  check_sound(half_pair(), l, half);

  CHECK_THROWS_AS(pair_verdict(half_pair(), l, Rational(3, 4)), Error);
  CHECK_THROWS_AS(pair_verdict(half_pair(), l, Rational(0)), Error);
}

TEST_CASE("pair verdicts are stable under coordinate changes of the pair") {
  Rng rng(35);
  const RMatrix g = random_invertible(rng);
  const Verdict v = pair_verdict(apply_transform(singular_on_line_pair(), g), apply_transform(standard_line(), g),
                                 Rational(1, 10));
  CHECK(v.status == Status::Unstable);
  check_sound(apply_transform(singular_on_line_pair(), g), apply_transform(standard_line(), g), v);
  const Verdict s = pair_verdict(apply_transform(smooth_diagonal_pair(), g), apply_transform(smooth_diagonal_line(), g),
                                 Rational(1, 20));
  CHECK(s.status == Status::Stable);
}

TEST_CASE("K-stability verdict") {
  const Verdict smooth = k_stability_verdict(smooth_diagonal_pair(), smooth_diagonal_line());
  CHECK(smooth.status == Status::Stable);
  CHECK(smooth.t == cm_coefficients().t0);
  const Verdict sing = k_stability_verdict(singular_on_line_pair(), standard_line());
  CHECK(sing.status == Status::Unstable);
  check_sound(singular_on_line_pair(), standard_line(), sing);
  CHECK(k_stability_verdict(shared_hyperplane_pair(), standard_line()).status == Status::Unstable);
  bool cites = false;
  for (const auto& line : smooth.trail) cites = cites || line.find("15/194") != std::string::npos;
  CHECK(cites);
}

TEST_CASE("the verdict path needs the ledger threshold") {
  const ThresholdSource missing = [] { return std::optional<Rational>(); };
  CHECK_THROWS_AS(k_stability_verdict(smooth_diagonal_pair(), smooth_diagonal_line(), missing), Error);
  CHECK_THROWS_AS(pair_verdict(smooth_diagonal_pair(), smooth_diagonal_line(), Rational(1, 20), missing), Error);
  // a different source moves the verdict with it
  const ThresholdSource tiny = [] { return std::optional<Rational>(Rational(1, 1000)); };
  const Verdict v = k_stability_verdict(smooth_diagonal_pair(), smooth_diagonal_line(), tiny);
  CHECK(v.t == Rational(1, 1000));
  CHECK(ledger_threshold()() == std::optional<Rational>(Rational(15, 194)));
}

TEST_CASE("wall scans") {
  const std::vector<Rational> grid = {Rational(1, 100), Rational(1, 50), Rational(15, 194), Rational(1, 10)};
  const auto smooth = wall_scan(smooth_diagonal_pair(), smooth_diagonal_line(), grid);
  REQUIRE(smooth.size() == 4);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(smooth[i].verdict.status == Status::Stable);
    CHECK_FALSE(smooth[i].changed);
  }
  // past t0 the no-wall rule no longer applies
  CHECK(smooth[3].verdict.status == Status::Undetermined);

  const auto sing = wall_scan(singular_on_line_pair(), standard_line(), grid);
  for (const auto& row : sing) {
    CHECK(row.verdict.status == Status::Unstable);
    CHECK_FALSE(row.changed);
  }

  const auto half = wall_scan(half_pair(), standard_line(), {Rational(1, 4), Rational(1, 2)});
  CHECK(half[0].verdict.status == Status::Unstable);
  CHECK(half[1].verdict.status == Status::Polystable);
  CHECK(half[1].changed);
  CHECK_THROWS_AS(wall_scan(half_pair(), standard_line(), {Rational(1, 4), Rational(3, 4)}), Error);

  // order of evaluation does not leak into the result
  const auto again = wall_scan(smooth_diagonal_pair(), smooth_diagonal_line(), grid);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(again[i].verdict.trail == smooth[i].verdict.trail);
}

TEST_CASE("torus verdict agrees with brute force over |r_i| <= 3") {
  Rng rng(36);
  const auto box = box_1ps(3);
  int unstable = 0, semistable = 0;
  for (int i = 0; i < 30; ++i) {
    const RPencil p = random_mixed_pair(rng, i);
    const StateSet s = state_set(p, standard_line());
    for (const Rational t : {Rational(1, 10), Rational(15, 194)}) {
      const Verdict v = torus_verdict(p, standard_line(), t);
      const Rational brute = brute_force_min(s, box, t);
      CAPTURE(p.gen_a().str());
      CAPTURE(p.gen_b().str());
      CAPTURE(t);
      CHECK((v.status == Status::Unstable) == (brute < 0));
      (v.status == Status::Unstable ? unstable : semistable)++;
      check_sound(p, standard_line(), v);
    }
  }
  CHECK(unstable > 0);
  CHECK(semistable > 0);
}

TEST_CASE("zero set of the weight on the half pair is the stabilizer subspace") {
  const StateSet s = state_set(half_pair(), standard_line());
  const Rational t(1, 2);
  int zeros = 0;
  for (const auto& lam : box_1ps(4)) {
    const Rational w = mu_t(s, lam, t);
    CHECK(w >= 0);
    const bool fixes = lam[0] + lam[2] == lam[1] + lam[3] && lam[0] + lam[4] == lam[1] + lam[5];
    CHECK((w == 0) == fixes);
    zeros += w == 0;
  }
  CHECK(zeros > 0);
  CHECK(mu_t(s, kHalfDir, t) == 0);
  CHECK(mu_t(s, OnePS{1, 1, -1, -1, 0, 0}, t) == 0);
}

TEST_CASE("exact simplex") {
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {1, 1};
  lp.add({1, 2}, Relation::LessEq, 4);
  lp.add({3, 1}, Relation::LessEq, 6);
  const auto r = solve_lp(lp);
  REQUIRE(r.status == LPResult::Status::Optimal);
  CHECK(r.value == Rational(14, 5));
  CHECK(r.x == RVec{Rational(8, 5), Rational(6, 5)});

  LinearProgram bad;
  bad.num_vars = 1;
  bad.objective = {1};
  bad.add({1}, Relation::GreaterEq, 2);
  bad.add({1}, Relation::LessEq, 1);
  CHECK(solve_lp(bad).status == LPResult::Status::Infeasible);

  LinearProgram open;
  open.num_vars = 2;
  open.objective = {1, 0};
  open.add({0, 1}, Relation::Equal, 1);
  CHECK(solve_lp(open).status == LPResult::Status::Unbounded);
}

TEST_CASE("minimum-norm point of a hull") {
  const auto a = min_norm_point({{1, 0}, {0, 1}});
  CHECK(a.point == RVec{Rational(1, 2), Rational(1, 2)});
  Rational total = 0;
  for (const auto& [i, w] : a.weights) total += w;
  CHECK(total == 1);
  const auto b = min_norm_point({{1, 1}, {-1, -1}, {2, 0}});
  CHECK(b.point == RVec{0, 0});
  const auto c = min_norm_point({{3, 4}});
  CHECK(c.point == RVec{3, 4});
  CHECK(primitive_integer_vector({Rational(2, 3), Rational(-4, 3), 0}) == std::vector<long>{1, -2, 0});
}
