#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vgit/lines.hpp"
#include "vgit/multipoly.hpp"

namespace vgit {

using RPoly = MultiPoly<Rational>;

inline std::vector<std::string> y_variables() { return {"y0", "y1", "y2", "y3"}; }

/// The 2x2 minors of [[L0, L1, Q], [L0', L1', Q']] on P^3.
struct CurveIdeal {
  RPoly m12, m13, m23;
  std::vector<RPoly> generators() const { return {m12, m13, m23}; }
};

/// Rows of the 2x3 matrix; linear forms as coefficient 4-vectors, quadrics as 4x4 grams.
struct MatrixRows {
  RVec l0, l1;
  RMatrix q;
  RVec l0p, l1p;
  RMatrix qp;
};

MatrixRows rows_of(const StandardPair& sp);

CurveIdeal curve_from_pair(const StandardPair& sp);
CurveIdeal curve_from_rows(const MatrixRows& rows);

/// The pencil generated by x0*L0 + x1*L1 + Q and x0*L0' + x1*L1' + Q'.
RPencil pair_from_matrix(const MatrixRows& rows);

/// dim of the degree-d part of Q[y0..y3] / I.
long hilbert_function(const CurveIdeal& ideal, int d);

struct CurveInvariants {
  long degree;
  long genus;
};
/// Fits HF(d) = a d + b on d in [5, 10]; throws "not a curve" when the tail is not linear.
CurveInvariants hilbert_polynomial_check(const CurveIdeal& ideal);

/// dim I_d predicted by the resolution 0 -> O(-4)^2 -> O(-3)^2 + O(-2) -> I -> 0.
long resolution_ideal_dimension(int d);

enum class QuadricType { Rank4Smooth, Rank3Cone, Abnormal };
std::string to_string(QuadricType q);

/// Rank of the 4x4 symmetric matrix of m12.
QuadricType quadric_normality(const CurveIdeal& ideal);
QuadricType quadric_normality(const RPoly& m12);

}  // namespace vgit
