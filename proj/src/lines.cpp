#include "vgit/lines.hpp"

namespace vgit {

const std::vector<std::pair<int, int>>& pluecker_pairs() {
  static const std::vector<std::pair<int, int>> pairs = [] {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) out.emplace_back(i, j);
    return out;
  }();
  return pairs;
}

ProjLine::ProjLine(RVec p, RVec q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_.size() != kDim || q_.size() != kDim) throw Error("line points must have 6 coordinates");
  for (auto [i, j] : pluecker_pairs()) pl_.push_back(p_[i] * q_[j] - p_[j] * q_[i]);
  bool nonzero = false;
  for (const auto& c : pl_) nonzero = nonzero || !c.is_zero();
  if (!nonzero) throw Error("dependent points");
  pl_ = normalize_projective(pl_);
}

Rational ProjLine::pluecker(int i, int j) const {
  if (i == j) return Rational(0);
  const bool swap = i > j;
  if (swap) std::swap(i, j);
  const auto& pairs = pluecker_pairs();
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (pairs[k] == std::pair{i, j}) return swap ? -pl_[k] : pl_[k];
  throw Error("bad Plücker index");
}

bool ProjLine::contains(const RVec& x) const {
  return rank(RMatrix::from_rows({p_, q_, x})) == 2;
}

ProjLine line_from_points(const RVec& p, const RVec& q) { return ProjLine(p, q); }

ProjLine line_from_equations(const std::vector<RVec>& eqs) {
  const auto ker = kernel(RMatrix::from_rows(eqs));
  if (ker.size() != 2) throw Error("equations do not cut out a line");
  return ProjLine(ker[0], ker[1]);
}

bool satisfies_pluecker_relations(const std::vector<Rational>& pl) {
  if (pl.size() != 15) return false;
  auto at = [&](int i, int j) {
    const auto& pairs = pluecker_pairs();
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (pairs[k] == std::pair{i, j}) return pl[k];
    return Rational(0);
  };
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k)
        for (int l = k + 1; l < 6; ++l)
          if (!(at(i, j) * at(k, l) - at(i, k) * at(j, l) + at(i, l) * at(j, k)).is_zero()) return false;
  return true;
}

ProjLine apply_transform(const ProjLine& l, const RMatrix& g) {
  const RMatrix gi = inverse(g);
  return ProjLine(gi * l.p(), gi * l.q());
}

bool line_in_pencil(const ProjLine& l, const RPencil& pencil) {
  for (const auto* q : {&pencil.gen_a(), &pencil.gen_b()})
    if (!(*q)(l.p()).is_zero() || !(*q)(l.q()).is_zero() || !q->bilinear(l.p(), l.q()).is_zero()) return false;
  return true;
}

std::string to_string(LineSingularities::Kind k) {
  switch (k) {
    case LineSingularities::Kind::None: return "none";
    case LineSingularities::Kind::Finite: return "finite";
    case LineSingularities::Kind::WholeLine: return "whole_line";
  }
  return "?";
}

LineSingularities singularities_on_line(const RPencil& pencil, const ProjLine& l) {
  if (!line_in_pencil(l, pencil)) throw Error("line not in base locus");
  // Gradient rows along s*p + t*q; the factor 2 is dropped.
  std::array<std::vector<RForm>, 2> grad;
  int r = 0;
  for (const auto* q : {&pencil.gen_a(), &pencil.gen_b()}) {
    const RVec gp = q->gram() * l.p();
    const RVec gq = q->gram() * l.q();
    for (std::size_t i = 0; i < kDim; ++i) grad[r].push_back(RForm::linear(gp[i], gq[i]));
    ++r;
  }
  RForm g;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = i + 1; j < kDim; ++j) {
      const RForm m = grad[0][i] * grad[1][j] - grad[0][j] * grad[1][i];
      if (m.is_zero()) continue;
      g = g.is_zero() ? m.monic() : gcd(g, m);
    }
  LineSingularities out;
  if (g.is_zero()) {
    out.kind = LineSingularities::Kind::WholeLine;
    return out;
  }
  out.locus = g;
  if (g.is_constant()) return out;
  out.kind = LineSingularities::Kind::Finite;
  for (const auto& [f, m] : factor_rational(g)) {
    if (f.degree() != 1) continue;
    // alpha*s + beta*t = 0 at [s:t] = [beta:-alpha].
    const Rational s = f.coefficient(0), t = -f.coefficient(1);
    out.rational_parameters.emplace_back(s, t);
    RVec x(kDim);
    for (std::size_t i = 0; i < kDim; ++i) x[i] = s * l.p()[i] + t * l.q()[i];
    out.rational_points.push_back(std::move(x));
  }
  return out;
}

MultiPoly<Rational> StandardPair::linear_poly(const RVec& c) const {
  return MultiPoly<Rational>::linear({"x2", "x3", "x4", "x5"}, c);
}

MultiPoly<Rational> StandardPair::quadric_poly(const RMatrix& g) const {
  MultiPoly<Rational> p({"x2", "x3", "x4", "x5"});
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      std::vector<int> e(4, 0);
      e[i] += 1;
      e[j] += 1;
      p.add_term(e, i == j ? g(i, i) : Rational(2) * g(i, j));
    }
  return p;
}

StandardPair read_standard(const RPencil& pencil, const RMatrix& frame) {
  auto split = [](const RMatrix& g, RVec& l0, RVec& l1, RMatrix& q) {
    if (!g(0, 0).is_zero() || !g(0, 1).is_zero() || !g(1, 1).is_zero())
      throw Error("line not in base locus");
    l0.assign(4, Rational(0));
    l1.assign(4, Rational(0));
    q = RMatrix(4, 4);
    for (std::size_t k = 0; k < 4; ++k) {
      l0[k] = Rational(2) * g(0, k + 2);
      l1[k] = Rational(2) * g(1, k + 2);
      for (std::size_t m = 0; m < 4; ++m) q(k, m) = g(k + 2, m + 2);
    }
  };
  StandardPair sp{frame, pencil, {}, {}, {}, {}, {}, {}};
  split(pencil.gen_a().gram(), sp.l0, sp.l1, sp.q);
  split(pencil.gen_b().gram(), sp.l0p, sp.l1p, sp.qp);
  return sp;
}

StandardPair standardize_pair(const RPencil& pencil, const ProjLine& l) {
  if (!line_in_pencil(l, pencil)) throw Error("line not in base locus");
  const auto basis = extend_to_basis<Rational>({l.p(), l.q()}, kDim);
  const RMatrix frame = RMatrix::from_columns(basis);
  return read_standard(apply_transform(pencil, frame), frame);
}

}  // namespace vgit
