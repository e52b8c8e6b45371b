#include "vgit/quadrics.hpp"

#include <algorithm>
#include <functional>

namespace vgit {

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// gcd of all k x k minors; the zero form when they all vanish.
RForm minors_gcd(const FormMatrix<Rational>& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> subsets;
  for_each_subset(m.size(), k, [&](const auto& s) { subsets.push_back(s); });
  RForm g;
  // The matrix is symmetric, so the (C, R) minor equals the (R, C) one.
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a; b < subsets.size(); ++b) {
      const RForm d = minor_determinant(m, subsets[a], subsets[b]);
      if (d.is_zero()) continue;
      g = g.is_zero() ? d.monic() : gcd(g, d);
      if (g.is_constant()) return g;
    }
  return g;
}

int multiplicity_in(const RForm& p, RForm f) {
  int m = 0;
  while (!f.is_constant() && divides(p, f)) {
    f = divide_exact(f, p);
    ++m;
  }
  return m;
}

// Basis of the row space (= column space for symmetric input).
std::vector<RVec> row_space(const RMatrix& a) {
  const auto ech = row_reduce(a);
  std::vector<RVec> out;
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    const auto r = ech.reduced.row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

std::vector<RVec> intersect(const std::vector<RVec>& u, const std::vector<RVec>& w) {
  if (u.empty() || w.empty()) return {};
  // Solve sum x_i u_i - sum y_j w_j = 0.
  std::vector<RVec> cols = u;
  for (const auto& v : w) {
    RVec neg = v;
    for (auto& c : neg) c = -c;
    cols.push_back(std::move(neg));
  }
  const auto ker = kernel(RMatrix::from_columns(cols));
  std::vector<RVec> vecs;
  for (const auto& k : ker) {
    RVec v(kDim, Rational(0));
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t c = 0; c < kDim; ++c) v[c] += k[i] * u[i][c];
    vecs.push_back(std::move(v));
  }
  return row_space(RMatrix::from_rows(vecs));
}

// h divides Q iff Q vanishes on the hyperplane h = 0.
bool linear_form_divides(const RVec& h, const RMatrix& gram) {
  const auto hyper = kernel(RMatrix::from_rows({h}));
  const RMatrix k = RMatrix::from_columns(hyper);
  return (k.transpose() * gram * k).is_zero();
}

// The binary quadric c with gram = W^T c W, W the 2x6 matrix with rows w0, w1.
RForm restrict_to_plane(const RMatrix& gram, const RVec& w0, const RVec& w1) {
  const RMatrix w = RMatrix::from_rows({w0, w1});
  std::size_t s0 = 0, s1 = 0;
  bool found = false;
  for (std::size_t i = 0; i < kDim && !found; ++i)
    for (std::size_t j = i + 1; j < kDim && !found; ++j)
      if (!(w(0, i) * w(1, j) - w(0, j) * w(1, i)).is_zero()) {
        s0 = i;
        s1 = j;
        found = true;
      }
  if (!found) throw Error("plane basis is degenerate");
  const RMatrix ws{{w(0, s0), w(0, s1)}, {w(1, s0), w(1, s1)}};
  const RMatrix gs{{gram(s0, s0), gram(s0, s1)}, {gram(s1, s0), gram(s1, s1)}};
  const RMatrix wi = inverse(ws);
  const RMatrix c = wi.transpose() * gs * wi;
  // u <-> w0 coordinate, v <-> w1 coordinate.
  return RForm(2, {c(1, 1), Rational(2) * c(0, 1), c(0, 0)});
}

}  // namespace

std::string SegreSymbol::str() const {
  std::string out = "[";
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (g) out += ",";
    const auto& b = groups[g].blocks;
    const bool paren = b.size() > 1;
    if (paren) out += "(";
    for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
    if (paren) out += ")";
  }
  return out + "]";
}

bool SegreSymbol::all_blocks_one() const {
  for (const auto& g : groups)
    for (int b : g.blocks)
      if (b != 1) return false;
  return true;
}

SegreSymbol segre_symbol(const RPencil& p) {
  const auto m = p.matrix();
  const RForm disc = det_pencil_matrix(m);
  if (disc.is_zero()) throw Error("degenerate pencil: identically zero discriminant");
  // d[k] for k = 0..6; once some d_k is a unit every lower one is too.
  std::vector<RForm> d(kDim + 1, RForm::constant(Rational(1)));
  d[kDim] = disc.monic();
  for (std::size_t k = kDim - 1; k >= 1; --k) {
    d[k] = minors_gcd(m, k);
    if (d[k].is_constant()) break;
  }
  std::vector<RForm> e(kDim + 1);
  for (std::size_t k = 1; k <= kDim; ++k) e[k] = divide_exact(d[k], d[k - 1]);

  SegreSymbol sym;
  for (const auto& [factor, mult] : factor_rational(disc)) {
    SegreGroup g{factor, {}};
    for (std::size_t k = kDim; k >= 1; --k) {
      const int b = multiplicity_in(factor, e[k]);
      if (b > 0) g.blocks.push_back(b);
    }
    std::sort(g.blocks.rbegin(), g.blocks.rend());
    sym.groups.push_back(std::move(g));
  }
  return sym;
}

RVec normalize_projective(RVec v) {
  for (const auto& c : v)
    if (!c.is_zero()) {
      const Rational inv = Rational(1) / c;
      for (auto& x : v) x *= inv;
      return v;
    }
  throw Error("zero vector has no projective normalization");
}

CompleteIntersection is_complete_intersection(const RPencil& p) {
  const RMatrix& a = p.gen_a().gram();
  const RMatrix& b = p.gen_b().gram();
  const auto ua = row_space(a);
  const auto ub = row_space(b);
  // A quadric with a linear factor has rank at most 2, and the factor lies in its column space.
  if (ua.size() > 2 || ub.size() > 2) return {};
  const auto common = intersect(ua, ub);
  if (common.size() == 1) {
    const RVec& h = common.front();
    if (linear_form_divides(h, a) && linear_form_divides(h, b)) return {false, normalize_projective(h)};
    return {};
  }
  if (common.size() == 2) {
    const RForm fa = restrict_to_plane(a, common[0], common[1]);
    const RForm fb = restrict_to_plane(b, common[0], common[1]);
    const RForm g = gcd(fa, fb);
    if (g.is_zero() || g.degree() == 0) return {};
    // g = alpha*u + beta*v, i.e. the linear form alpha*w0 + beta*w1.
    if (g.degree() != 1) throw Error("dependent pencil generators");
    RVec h(kDim, Rational(0));
    for (std::size_t c = 0; c < kDim; ++c) h[c] = g.coefficient(1) * common[0][c] + g.coefficient(0) * common[1][c];
    return {false, normalize_projective(h)};
  }
  return {};
}

std::vector<int> root_profile(const RForm& f) {
  std::vector<int> prof;
  for (const auto& [g, m] : squarefree_decompose(f))
    for (int i = 0; i < g.degree(); ++i) prof.push_back(m);
  std::sort(prof.rbegin(), prof.rend());
  return prof;
}

std::string to_string(PencilVerdict v) {
  switch (v) {
    case PencilVerdict::Stable: return "Stable";
    case PencilVerdict::SemistableNotStable: return "SemistableNotStable";
    case PencilVerdict::Polystable: return "Polystable";
    case PencilVerdict::Unstable: return "Unstable";
    case PencilVerdict::NotCompleteIntersection: return "NotCompleteIntersection";
    case PencilVerdict::DegenerateDiscriminant: return "DegenerateDiscriminant";
  }
  return "?";
}

PencilClass classify_pencil(const RPencil& p) {
  PencilClass out{PencilVerdict::Unstable, {}, discriminant(p), std::nullopt, std::nullopt, {}};
  const auto ci = is_complete_intersection(p);
  if (!ci.is_ci) {
    out.verdict = PencilVerdict::NotCompleteIntersection;
    out.common_linear_form = ci.common_linear_form;
    out.reason = "every member shares a linear factor";
    return out;
  }
  if (out.discriminant.is_zero()) {
    out.verdict = PencilVerdict::DegenerateDiscriminant;
    out.reason = "discriminant vanishes identically";
    return out;
  }
  out.root_profile = root_profile(out.discriminant);
  const int top = out.root_profile.front();
  if (top == 1) {
    out.verdict = PencilVerdict::Stable;
    out.reason = "discriminant has six distinct roots";
    return out;
  }
  if (top >= 4) {
    out.verdict = PencilVerdict::Unstable;
    out.reason = "discriminant root of multiplicity " + std::to_string(top);
    return out;
  }
  out.segre = segre_symbol(p);
  out.verdict = PencilVerdict::SemistableNotStable;
  out.reason = "maximal root multiplicity " + std::to_string(top);
  if (!out.segre->all_blocks_one()) {
    out.reason += ", not simultaneously diagonalizable";
    return out;
  }
  if (top == 2) {
    out.verdict = PencilVerdict::Polystable;
    out.reason += ", simultaneously diagonalizable";
    return out;
  }
  if (out.root_profile != std::vector<int>{3, 3}) {
    out.reason += ", diagonalizable but root profile is not (3,3)";
    return out;
  }
  // Two rational triple roots: their kernels must be complementary 3-spaces.
  std::vector<RVec> kernels;
  for (const auto& [g, m] : squarefree_decompose(out.discriminant)) {
    if (g.degree() != 1) continue;
    // g = alpha*u + beta*v vanishes at (u, v) = (beta, -alpha).
    const Rational alpha = g.coefficient(1), beta = g.coefficient(0);
    const RMatrix mem = p.member(beta, -alpha).gram();
    for (auto& k : kernel(mem)) kernels.push_back(std::move(k));
  }
  if (!kernels.empty() && (kernels.size() != kDim || rank(RMatrix::from_rows(kernels)) != kDim)) {
    out.reason += ", triple-root kernels are not complementary";
    return out;
  }
  out.verdict = PencilVerdict::Polystable;
  out.reason += ", equivalent to two complementary rank-3 blocks";
  return out;
}

}  // namespace vgit
