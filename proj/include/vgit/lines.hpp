#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vgit/quadrics.hpp"

namespace vgit {

/// The 15 index pairs (i, j), i < j, in lexicographic order.
const std::vector<std::pair<int, int>>& pluecker_pairs();

/// A line in P^5, held as a 2-dimensional subspace of Q^6.
class ProjLine {
 public:
  ProjLine(RVec p, RVec q);

  const RVec& p() const noexcept { return p_; }
  const RVec& q() const noexcept { return q_; }
  /// Canonical Plücker vector: first nonzero entry is 1.
  const std::vector<Rational>& pluecker() const noexcept { return pl_; }
  Rational pluecker(int i, int j) const;

  bool contains(const RVec& x) const;

  friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.pl_ == b.pl_; }

 private:
  RVec p_, q_;
  std::vector<Rational> pl_;
};

/// Throws Error("dependent points") if p and q are proportional.
ProjLine line_from_points(const RVec& p, const RVec& q);
/// Common zero set of four linear forms (given as coefficient vectors).
ProjLine line_from_equations(const std::vector<RVec>& eqs);

bool satisfies_pluecker_relations(const std::vector<Rational>& pl);

/// Image of the line under the substitution x -> g x, i.e. the points g^-1 x.
ProjLine apply_transform(const ProjLine& l, const RMatrix& g);

bool line_in_pencil(const ProjLine& l, const RPencil& p);

struct LineSingularities {
  enum class Kind { None, Finite, WholeLine };
  Kind kind = Kind::None;
  /// gcd of the 2x2 minors of the Jacobian along s*p + t*q (u = s, v = t).
  RForm locus;
  /// Singular points with rational parameters [s:t].
  std::vector<std::pair<Rational, Rational>> rational_parameters;
  std::vector<RVec> rational_points;
  bool generically_smooth() const { return kind != Kind::WholeLine; }
};

std::string to_string(LineSingularities::Kind k);

/// Throws Error("line not in base locus") when the line is not contained.
LineSingularities singularities_on_line(const RPencil& pencil, const ProjLine& l);

/// A pair rewritten so the line is V(x2, ..., x5):
///   generator = x0*l0 + x1*l1 + q  with l0, l1, q in x2..x5.
struct StandardPair {
  RMatrix frame;      // substitution x -> frame * x taking the original pair to this one
  RPencil pencil;     // apply_transform(original, frame)
  // Coefficients on x2..x5 (length 4) and 4x4 grams for q.
  RVec l0, l1, l0p, l1p;
  RMatrix q, qp;

  /// Point map sending the original line to span(e0, e1).
  RMatrix transform() const { return inverse(frame); }

  MultiPoly<Rational> linear_poly(const RVec& c) const;
  MultiPoly<Rational> quadric_poly(const RMatrix& g) const;
};

/// Uses the line's stored basis order (p first).
StandardPair standardize_pair(const RPencil& pencil, const ProjLine& l);

/// Reads the standard-form components of a pencil that already contains span(e0, e1).
StandardPair read_standard(const RPencil& pencil, const RMatrix& frame);

}  // namespace vgit
