#include "vgit/hm_git.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

#include "vgit/cm_ledger.hpp"
#include "vgit/lp.hpp"

namespace vgit {

// ---------------------------------------------------------------- OnePS

OnePS::OnePS(Weights r) : r_(r) {
  long s = 0;
  for (long x : r_) s += x;
  if (s != 0) throw Error("1-PS weights must sum to zero");
}

OnePS::OnePS(std::initializer_list<long> r) {
  if (r.size() != 6) throw Error("1-PS needs 6 weights");
  std::copy(r.begin(), r.end(), r_.begin());
  *this = OnePS(r_);
}

bool OnePS::is_trivial() const {
  return std::all_of(r_.begin(), r_.end(), [](long x) { return x == 0; });
}

OnePS OnePS::scaled(long k) const {
  Weights w = r_;
  for (auto& x : w) x *= k;
  return OnePS(w);
}

OnePS OnePS::permuted(const std::array<int, 6>& sigma) const {
  Weights w{};
  for (std::size_t i = 0; i < 6; ++i) w[static_cast<std::size_t>(sigma[i])] = r_[i];
  return OnePS(w);
}

std::string OnePS::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < 6; ++i) s += (i ? "," : "") + std::to_string(r_[i]);
  return s + ")";
}

// ---------------------------------------------------------------- states

std::vector<Character> StateSet::pencil_characters() const {
  std::set<Character> out;
  for (const auto& s : pencil_states) {
    Character c{};
    for (int i : s) ++c[static_cast<std::size_t>(i)];
    out.insert(c);
  }
  return {out.begin(), out.end()};
}

std::vector<Character> StateSet::line_characters() const {
  std::set<Character> out;
  for (auto [i, j] : line_states) {
    Character c{};
    --c[static_cast<std::size_t>(i)];
    --c[static_cast<std::size_t>(j)];
    out.insert(c);
  }
  return {out.begin(), out.end()};
}

StateSet line_state_set(const ProjLine& l) {
  StateSet s;
  const auto& pairs = pluecker_pairs();
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (!l.pluecker()[k].is_zero()) s.line_states.push_back(pairs[k]);
  return s;
}

StateSet pencil_state_set(const RPencil& p) {
  StateSet s;
  const auto a = p.gen_a().coefficient_vector();
  const auto b = p.gen_b().coefficient_vector();
  const auto& mono = quadratic_monomials();
  for (std::size_t m1 = 0; m1 < mono.size(); ++m1)
    for (std::size_t m2 = m1 + 1; m2 < mono.size(); ++m2)
      if (!(a[m1] * b[m2] - a[m2] * b[m1]).is_zero())
        s.pencil_states.push_back({mono[m1].first, mono[m1].second, mono[m2].first, mono[m2].second});
  return s;
}

StateSet state_set(const RPencil& p, const ProjLine& l) {
  StateSet s = pencil_state_set(p);
  s.line_states = line_state_set(l).line_states;
  return s;
}

namespace {

long pairing(const Character& c, const OnePS& lambda) {
  long s = 0;
  for (std::size_t i = 0; i < 6; ++i) s += c[i] * lambda[i];
  return s;
}

long max_pairing(const std::vector<Character>& cs, const OnePS& lambda) {
  if (cs.empty()) throw Error("empty state set");
  long best = pairing(cs.front(), lambda);
  for (const auto& c : cs) best = std::max(best, pairing(c, lambda));
  return best;
}

}  // namespace

long mu_line(const ProjLine& l, const OnePS& lambda) {
  return max_pairing(line_state_set(l).line_characters(), lambda);
}

long mu_pencil(const RPencil& p, const OnePS& lambda) {
  return max_pairing(pencil_state_set(p).pencil_characters(), lambda);
}

Rational mu_t(const StateSet& s, const OnePS& lambda, const Rational& t) {
  return Rational(max_pairing(s.pencil_characters(), lambda)) + t * Rational(max_pairing(s.line_characters(), lambda));
}

Rational mu_t(const RPencil& p, const ProjLine& l, const OnePS& lambda, const Rational& t) {
  return Rational(mu_pencil(p, lambda)) + t * Rational(mu_line(l, lambda));
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Stable: return "Stable";
    case Status::Semistable: return "Semistable";
    case Status::Polystable: return "Polystable";
    case Status::Unstable: return "Unstable";
    case Status::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string to_string(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::None: return "none";
    case Certificate::Kind::OneParameterSubgroup: return "one_parameter_subgroup";
    case Certificate::Kind::ConvexWitness: return "convex_witness";
    case Certificate::Kind::RuleCitation: return "rule_citation";
  }
  return "?";
}

// ---------------------------------------------------------------- torus check

namespace {

struct WeightPolytope {
  std::vector<RVec> points;                        // projected to sum zero
  std::vector<std::pair<Character, Character>> source;  // (pencil, line) per point
};

WeightPolytope weight_polytope(const StateSet& s, const Rational& t) {
  const auto pc = s.pencil_characters();
  const auto lc = s.line_characters();
  std::map<RVec, std::pair<Character, Character>> seen;
  for (const auto& v : pc)
    for (const auto& w : lc) {
      RVec p(6);
      Rational mean(0);
      for (std::size_t i = 0; i < 6; ++i) {
        p[i] = Rational(v[i]) + t * Rational(w[i]);
        mean += p[i];
      }
      mean /= Rational(6);
      for (auto& x : p) x -= mean;
      seen.emplace(std::move(p), std::pair{v, w});
    }
  WeightPolytope out;
  for (auto& [p, src] : seen) {
    out.points.push_back(p);
    out.source.push_back(src);
  }
  return out;
}

// Largest eps with eps * (e_i - mean) in the hull; positive for every i iff 0 is interior.
bool origin_interior(const std::vector<RVec>& pts) {
  const std::size_t n = pts.size();
  for (std::size_t dir = 0; dir < 6; ++dir) {
    LinearProgram lp;
    lp.num_vars = n + 1;
    lp.objective.assign(n + 1, Rational(0));
    lp.objective[n] = 1;
    for (std::size_t c = 0; c < 6; ++c) {
      RVec row(n + 1, Rational(0));
      for (std::size_t k = 0; k < n; ++k) row[k] = pts[k][c];
      row[n] = -(Rational(c == dir ? 1 : 0) - Rational(1, 6));
      lp.add(std::move(row), Relation::Equal, Rational(0));
    }
    RVec ones(n + 1, Rational(1));
    ones[n] = 0;
    lp.add(std::move(ones), Relation::Equal, Rational(1));
    const auto res = solve_lp(lp);
    if (res.status == LPResult::Status::Unbounded) continue;
    if (res.status != LPResult::Status::Optimal || res.value.sign() <= 0) return false;
  }
  return true;
}

}  // namespace

Verdict torus_verdict(const RPencil& p, const ProjLine& l, const Rational& t) {
  if (t.sign() < 0) throw Error("t must be non-negative");
  const StateSet s = state_set(p, l);
  const auto poly = weight_polytope(s, t);
  const auto mnp = min_norm_point(poly.points);
  Verdict v;
  v.t = t;
  const bool zero = std::all_of(mnp.point.begin(), mnp.point.end(), [](const Rational& x) { return x.is_zero(); });
  if (!zero) {
    RVec neg = mnp.point;
    for (auto& x : neg) x = -x;
    const auto r = primitive_integer_vector(neg);
    const OnePS lambda(OnePS::Weights{r[0], r[1], r[2], r[3], r[4], r[5]});
    v.status = Status::Unstable;
    v.certificate.kind = Certificate::Kind::OneParameterSubgroup;
    v.certificate.lambda = lambda;
    v.certificate.weight = mu_t(s, lambda, t);
    v.trail.push_back("torus: weight polytope misses the diagonal; most destabilizing direction " + lambda.str());
    return v;
  }
  v.certificate.kind = Certificate::Kind::ConvexWitness;
  for (const auto& [idx, w] : mnp.weights)
    v.certificate.witness.push_back({poly.source[idx].first, poly.source[idx].second, w});
  if (origin_interior(poly.points)) {
    v.status = Status::Stable;
    v.trail.push_back("torus: diagonal meets the interior of the weight polytope");
  } else {
    v.status = Status::Semistable;
    v.trail.push_back("torus: diagonal meets the weight polytope on its boundary");
  }
  return v;
}

WorstOnePS worst_torus_1ps(const RPencil& p, const ProjLine& l, const Rational& t) {
  const StateSet s = state_set(p, l);
  const auto pc = s.pencil_characters();
  const auto lc = s.line_characters();
  // Variables: s0..s5 with r = s - 1, then z1+, z1-, z2+, z2-.
  LinearProgram lp;
  lp.num_vars = 10;
  auto character_row = [](const Character& c, std::size_t zp, std::size_t zn) {
    RVec row(10, Rational(0));
    long total = 0;
    for (std::size_t i = 0; i < 6; ++i) {
      row[i] = c[i];
      total += c[i];
    }
    row[zp] = -1;
    row[zn] = 1;
    return std::pair{row, Rational(total)};
  };
  for (const auto& c : pc) {
    auto [row, b] = character_row(c, 6, 7);
    lp.add(row, Relation::LessEq, b);
  }
  for (const auto& c : lc) {
    auto [row, b] = character_row(c, 8, 9);
    lp.add(row, Relation::LessEq, b);
  }
  for (std::size_t i = 0; i < 6; ++i) {
    RVec row(10, Rational(0));
    row[i] = 1;
    lp.add(row, Relation::LessEq, Rational(2));
  }
  {
    RVec row(10, Rational(0));
    for (std::size_t i = 0; i < 6; ++i) row[i] = 1;
    lp.add(row, Relation::Equal, Rational(6));
  }
  const RVec obj{0, 0, 0, 0, 0, 0, Rational(-1), Rational(1), -t, t};
  lp.objective = obj;
  const auto best = solve_lp(lp);
  if (best.status != LPResult::Status::Optimal) throw Error("worst 1-PS program has no optimum");
  lp.add(obj, Relation::GreaterEq, best.value);

  // Lexicographically smallest optimal s.
  RVec sol = best.x;
  for (std::size_t k = 0; k < 6; ++k) {
    lp.objective.assign(10, Rational(0));
    lp.objective[k] = -1;
    const auto res = solve_lp(lp);
    if (res.status != LPResult::Status::Optimal) throw Error("tie-break program failed");
    RVec row(10, Rational(0));
    row[k] = 1;
    lp.add(row, Relation::Equal, res.x[k]);
    sol = res.x;
  }
  RVec r(6);
  bool trivial = true;
  for (std::size_t i = 0; i < 6; ++i) {
    r[i] = sol[i] - Rational(1);
    trivial = trivial && r[i].is_zero();
  }
  if (trivial) return {OnePS::trivial(), -best.value};
  const auto z = primitive_integer_vector(r);
  return {OnePS(OnePS::Weights{z[0], z[1], z[2], z[3], z[4], z[5]}), -best.value};
}

// ---------------------------------------------------------------- catalog

namespace {

std::vector<OnePS> distinct_permutations(OnePS::Weights w) {
  std::sort(w.begin(), w.end());
  std::vector<OnePS> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::optional<CatalogHit> try_frame(const RPencil& p, const ProjLine& l, const Rational& t, const RMatrix& frame,
                                    const std::vector<OnePS>& lambdas, const std::string& reason) {
  const RPencil pf = apply_transform(p, frame);
  const ProjLine lf = apply_transform(l, frame);
  const StateSet s = state_set(pf, lf);
  for (const auto& lambda : lambdas) {
    const Rational w = mu_t(s, lambda, t);
    if (w.sign() < 0) return CatalogHit{lambda, frame, w, reason};
  }
  return std::nullopt;
}

std::optional<CatalogHit> try_torus(const RPencil& p, const ProjLine& l, const Rational& t, const RMatrix& frame,
                                    const std::string& reason) {
  const Verdict v = torus_verdict(apply_transform(p, frame), apply_transform(l, frame), t);
  if (v.status != Status::Unstable) return std::nullopt;
  return CatalogHit{*v.certificate.lambda, frame, v.certificate.weight, reason + " (torus search)"};
}

// Rows h, then standard vectors: as a point map it sends h to the first coordinate.
RMatrix hyperplane_frame(const RVec& h) {
  const RMatrix m = RMatrix::from_rows(extend_to_basis<Rational>({h}, kDim));
  return inverse(m);
}

// Frame in which the rational singular point x of the line is e0, the line is
// span(e0, e1), and the surviving linear term l0 is x2.
RMatrix singular_point_frame(const RPencil& p, const ProjLine& l, const RVec& x) {
  const RVec& other = rank(RMatrix::from_rows({x, l.p()})) == 2 ? l.p() : l.q();
  const RMatrix s = RMatrix::from_columns(extend_to_basis<Rational>({x, other}, kDim));
  const StandardPair sp = read_standard(apply_transform(p, s), s);
  const bool a_zero = std::all_of(sp.l0.begin(), sp.l0.end(), [](const Rational& c) { return c.is_zero(); });
  const RVec& lin = a_zero ? sp.l0p : sp.l0;
  if (std::all_of(lin.begin(), lin.end(), [](const Rational& c) { return c.is_zero(); })) return s;
  const auto block = extend_to_basis<Rational>({lin}, 4);
  RMatrix n = RMatrix::identity(kDim);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) n(i + 2, j + 2) = block[i][j];
  return s * inverse(n);
}

// Adapted to the nilpotent part of A'^-1 R at a root: kernel flag of T, then the image of T^m.
std::vector<RMatrix> jordan_frames(const RPencil& p) {
  std::vector<RMatrix> frames;
  const RForm disc = discriminant(p);
  if (disc.is_zero()) return frames;
  std::optional<RMatrix> regular;
  const std::vector<std::pair<long, long>> probes{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 1}, {1, -1}, {1, 3}, {3, 1}};
  for (auto [u, v] : probes)
    if (!disc(Rational(u), Rational(v)).is_zero()) {
      regular = p.member(Rational(u), Rational(v)).gram();
      break;
    }
  if (!regular) return frames;
  const RMatrix ainv = inverse(*regular);
  for (const auto& [g, m] : factor_rational(disc)) {
    if (g.degree() != 1 || m < 4) continue;
    const RMatrix r = p.member(g.coefficient(0), -g.coefficient(1)).gram();
    const RMatrix t = ainv * r;
    std::vector<RVec> basis;
    RMatrix power = t;
    std::size_t last = 0;
    for (int k = 0; k < 6; ++k) {
      for (const auto& v : kernel(power)) {
        auto trial = basis;
        trial.push_back(v);
        if (rank(RMatrix::from_rows(trial)) == trial.size()) basis = std::move(trial);
      }
      if (basis.size() == last && k > 0) break;
      last = basis.size();
      power = power * t;
    }
    const auto ech = row_reduce(power.transpose());
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      const auto row = ech.reduced.row(i);
      auto trial = basis;
      trial.emplace_back(row.begin(), row.end());
      if (rank(RMatrix::from_rows(trial)) == trial.size()) basis = std::move(trial);
    }
    basis = extend_to_basis(basis, kDim);
    frames.push_back(RMatrix::from_columns(basis));
    std::reverse(basis.begin(), basis.end());
    frames.push_back(RMatrix::from_columns(basis));
  }
  return frames;
}

}  // namespace

std::optional<CatalogHit> catalog_destabilize(const RPencil& p, const ProjLine& l, const Rational& t) {
  const auto ci = is_complete_intersection(p);
  if (!ci.is_ci) {
    if (auto hit = try_frame(p, l, t, hyperplane_frame(*ci.common_linear_form), {OnePS{-5, 1, 1, 1, 1, 1}},
                             "members share the hyperplane x0 = 0"))
      return hit;
  }
  if (!line_in_pencil(l, p)) return std::nullopt;

  const auto sing = singularities_on_line(p, l);
  std::optional<RVec> point;
  if (sing.kind == LineSingularities::Kind::WholeLine) point = l.p();
  else if (!sing.rational_points.empty()) point = sing.rational_points.front();
  if (point) {
    if (auto hit = try_frame(p, l, t, singular_point_frame(p, l, *point), {OnePS{1, 0, -1, 0, 0, 0}},
                             "singular point of the base locus on the line"))
      return hit;
  }

  const RMatrix standard = standardize_pair(p, l).frame;
  if (t > Rational(1, 2)) {
    if (auto hit = try_frame(p, l, t, standard, {OnePS{2, 2, -1, -1, -1, -1}}, "t above 1/2"))
      return hit;
  }

  if (!ci.is_ci) return std::nullopt;
  const auto cls = classify_pencil(p);
  if (!cls.unstable()) return std::nullopt;

  std::vector<OnePS> lambdas;
  for (const auto& base : {OnePS::Weights{2, -2, 1, -1, 0, 0}, OnePS::Weights{1, -3, 3, -5, 5, -1},
                           OnePS::Weights{1, 1, 1, 1, -2, -2}, OnePS::Weights{-8, -2, 4, 10, -2, -2}})
    for (auto& x : distinct_permutations(base)) lambdas.push_back(x);
  std::vector<std::pair<RMatrix, std::string>> frames{{standard, "standard frame"}};
  for (auto& f : jordan_frames(p)) frames.emplace_back(f, "frame adapted to a multiple discriminant root");
  for (const auto& [f, name] : frames)
    if (auto hit = try_frame(p, l, t, f, lambdas, "unstable discriminant, " + name)) return hit;
  for (const auto& [f, name] : frames)
    if (auto hit = try_torus(p, l, t, f, "unstable discriminant, " + name)) return hit;
  return std::nullopt;
}

// ---------------------------------------------------------------- verdicts

ThresholdSource ledger_threshold() {
  return []() -> std::optional<Rational> { return cm_coefficients().t0; };
}

namespace {

struct HalfRule {
  bool semistable = false;
  bool polystable = false;
};

// At t = 1/2: semistable iff l0, l1, l0', l1' are independent; polystable iff
// moreover q, q' are absorbed by x0 -> x0 + a, x1 -> x1 + b.
HalfRule half_rule(const RPencil& p, const ProjLine& l) {
  const StandardPair sp = standardize_pair(p, l);
  HalfRule out;
  out.semistable = rank(RMatrix::from_rows({sp.l0, sp.l1, sp.l0p, sp.l1p})) == 4;
  if (!out.semistable) return out;
  // Unknowns a_0..a_3, b_0..b_3. Gram of a*l is (a l^T + l a^T) / 2.
  RMatrix sys(20, 8);
  RVec rhs(20);
  std::size_t row = 0;
  const std::array<std::tuple<const RVec*, const RVec*, const RMatrix*>, 2> gens{
      std::tuple{&sp.l0, &sp.l1, &sp.q}, std::tuple{&sp.l0p, &sp.l1p, &sp.qp}};
  for (const auto& [la, lb, q] : gens)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) {
        for (std::size_t k = 0; k < 4; ++k) {
          const Rational da = (i == k ? (*la)[j] : Rational(0)) + (j == k ? (*la)[i] : Rational(0));
          const Rational db = (i == k ? (*lb)[j] : Rational(0)) + (j == k ? (*lb)[i] : Rational(0));
          sys(row, k) = da / Rational(2);
          sys(row, k + 4) = db / Rational(2);
        }
        rhs[row] = -(*q)(i, j);
        ++row;
      }
  out.polystable = solve(sys, rhs).has_value();
  return out;
}

Certificate citation(const std::string& rule) {
  Certificate c;
  c.kind = Certificate::Kind::RuleCitation;
  c.rule = rule;
  return c;
}

Certificate from_hit(const CatalogHit& hit) {
  Certificate c;
  c.kind = Certificate::Kind::OneParameterSubgroup;
  c.frame = hit.frame;
  c.lambda = hit.lambda;
  c.weight = hit.weight;
  c.rule = hit.reason;
  return c;
}

bool has_unstable_discriminant(const RPencil& p) {
  const RForm d = discriminant(p);
  if (d.is_zero()) return true;
  return root_profile(d).front() >= 4;
}

}  // namespace

Verdict pair_verdict(const RPencil& p, const ProjLine& l, const Rational& t, const ThresholdSource& threshold) {
  if (t.sign() <= 0 || t > Rational(1, 2)) throw Error("t must lie in (0, 1/2]");
  if (!line_in_pencil(l, p)) throw Error("line not in base locus");
  Verdict v;
  v.t = t;
  auto unstable = [&](const std::string& rule, const std::string& text) {
    v.status = Status::Unstable;
    v.trail.push_back(text);
    if (auto hit = catalog_destabilize(p, l, t)) {
      v.certificate = from_hit(*hit);
      v.trail.push_back("destabilizing 1-PS " + hit->lambda.str() + " with weight " + hit->weight.str());
    } else {
      v.certificate = citation(rule + ": " + text);
    }
    return v;
  };

  const auto ci = is_complete_intersection(p);
  if (!ci.is_ci) return unstable("not-complete-intersection", "rule 1: every member shares a linear factor");

  const auto sing = singularities_on_line(p, l);
  if (sing.kind != LineSingularities::Kind::None)
    return unstable("singular-point-on-line", "rule 2: the base locus is singular at a point of the line");

  if (has_unstable_discriminant(p) && t < Rational(1, 10))
    return unstable("unstable-discriminant",
                    "rule 3: discriminant vanishes or has a root of multiplicity >= 4, and t < 1/10");

  const auto t0 = threshold();
  if (!t0) throw Error("threshold t0 unavailable");
  const auto cls = classify_pencil(p);
  if (cls.verdict == PencilVerdict::Stable && t <= *t0) {
    v.status = Status::Stable;
    v.trail.push_back("rule 4: discriminant squarefree, line in the smooth locus, t <= t0 = " + t0->str());
    v.certificate = citation("smooth-below-threshold: t0 = " + t0->str());
    return v;
  }

  if (t == Rational(1, 2)) {
    const HalfRule h = half_rule(p, l);
    if (!h.semistable) {
      return unstable("half-rule", "rule 4b: at t = 1/2 the linear forms l0, l1, l0', l1' are dependent");
    }
    v.status = h.polystable ? Status::Polystable : Status::Semistable;
    v.trail.push_back(h.polystable ? "rule 4b: at t = 1/2 the pair is in the orbit of (x0x2+x1x3, x0x4+x1x5)"
                                   : "rule 4b: at t = 1/2 the linear forms are independent");
    v.certificate = citation(std::string("half-rule: ") + (h.polystable ? "polystable" : "semistable"));
    return v;
  }

  if (auto hit = catalog_destabilize(p, l, t)) {
    v.status = Status::Unstable;
    v.certificate = from_hit(*hit);
    v.trail.push_back("rule 5: catalog 1-PS " + hit->lambda.str() + " has weight " + hit->weight.str());
    return v;
  }
  const RMatrix standard = standardize_pair(p, l).frame;
  Verdict tv = torus_verdict(apply_transform(p, standard), apply_transform(l, standard), t);
  tv.certificate.frame = standard;
  if (tv.status == Status::Unstable) {
    v.status = Status::Unstable;
    v.certificate = tv.certificate;
    v.trail.push_back("rule 5: torus check in the standard frame finds a negative weight");
    return v;
  }
  v.status = Status::Undetermined;
  v.certificate = tv.certificate;
  v.trail.push_back("rule 5: torus " + to_string(tv.status) +
                    " in the standard frame; necessary but not sufficient for the full group");
  return v;
}

Verdict k_stability_verdict(const RPencil& p, const ProjLine& l, const ThresholdSource& threshold) {
  const auto t0 = threshold ? threshold() : std::nullopt;
  if (!t0) throw Error("threshold t0 unavailable from the CM ledger");
  const ThresholdSource fixed = [t0]() -> std::optional<Rational> { return t0; };
  Verdict v = pair_verdict(p, l, *t0, fixed);
  v.trail.insert(v.trail.begin(), "K-stability read as t0-GIT stability, t0 = " + t0->str() + " from the CM ledger");
  return v;
}

std::vector<ScanRow> wall_scan(const RPencil& p, const ProjLine& l, const std::vector<Rational>& ts) {
  for (const auto& t : ts)
    if (t.sign() <= 0 || t > Rational(1, 2)) throw Error("t must lie in (0, 1/2]: " + t.str());
  std::vector<std::future<Verdict>> jobs;
  for (const auto& t : ts) jobs.push_back(std::async(std::launch::async, [&p, &l, t] { return pair_verdict(p, l, t); }));
  std::vector<ScanRow> rows;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    ScanRow row{ts[i], jobs[i].get(), false};
    row.changed = i > 0 && row.verdict.status != rows.back().verdict.status;
    rows.push_back(std::move(row));
  }
  return rows;
}

bool verify_certificate(const RPencil& p, const ProjLine& l, const Verdict& v) {
  const Certificate& c = v.certificate;
  switch (c.kind) {
    case Certificate::Kind::None:
      return v.status == Status::Undetermined;
    case Certificate::Kind::OneParameterSubgroup: {
      if (!c.lambda) return false;
      const Rational w = mu_t(apply_transform(p, c.frame), apply_transform(l, c.frame), *c.lambda, v.t);
      return v.status == Status::Unstable && w == c.weight && w.sign() < 0;
    }
    case Certificate::Kind::ConvexWitness: {
      if (v.status == Status::Unstable || c.witness.empty()) return false;
      const StateSet s = state_set(apply_transform(p, c.frame), apply_transform(l, c.frame));
      const auto pc = s.pencil_characters();
      const auto lc = s.line_characters();
      RVec sum(6, Rational(0));
      Rational total(0);
      for (const auto& term : c.witness) {
        if (term.weight.sign() < 0) return false;
        if (std::find(pc.begin(), pc.end(), term.pencil) == pc.end()) return false;
        if (std::find(lc.begin(), lc.end(), term.line) == lc.end()) return false;
        total += term.weight;
        for (std::size_t i = 0; i < 6; ++i) sum[i] += term.weight * (Rational(term.pencil[i]) + v.t * Rational(term.line[i]));
      }
      return total == Rational(1) && std::all_of(sum.begin(), sum.end(), [&](const Rational& x) { return x == sum[0]; });
    }
    case Certificate::Kind::RuleCitation: {
      const std::string id = c.rule.substr(0, c.rule.find(':'));
      if (id == "not-complete-intersection") return v.status == Status::Unstable && !is_complete_intersection(p).is_ci;
      if (id == "singular-point-on-line")
        return v.status == Status::Unstable && singularities_on_line(p, l).kind != LineSingularities::Kind::None;
      if (id == "unstable-discriminant")
        return v.status == Status::Unstable && has_unstable_discriminant(p) && v.t < Rational(1, 10);
      if (id == "smooth-below-threshold")
        return v.status == Status::Stable && classify_pencil(p).verdict == PencilVerdict::Stable &&
               singularities_on_line(p, l).kind == LineSingularities::Kind::None && v.t <= cm_coefficients().t0;
      if (id == "half-rule") {
        if (v.t != Rational(1, 2)) return false;
        const HalfRule h = half_rule(p, l);
        if (v.status == Status::Unstable) return !h.semistable;
        if (v.status == Status::Polystable) return h.polystable;
        if (v.status == Status::Semistable) return h.semistable && !h.polystable;
        return false;
      }
      return false;
    }
  }
  return false;
}

}  // namespace vgit
