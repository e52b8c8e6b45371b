#pragma once

#include <vector>

#include "vgit/matrix.hpp"
#include "vgit/rational.hpp"

namespace vgit {

enum class Relation { LessEq, Equal, GreaterEq };

/// maximize objective . x  subject to  rows[i] . x (rel[i]) rhs[i],  x >= 0.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<Vec<Rational>> rows;
  std::vector<Relation> rel;
  Vec<Rational> rhs;
  Vec<Rational> objective;

  void add(Vec<Rational> row, Relation r, Rational b) {
    rows.push_back(std::move(row));
    rel.push_back(r);
    rhs.push_back(std::move(b));
  }
};

struct LPResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Vec<Rational> x;
  Rational value;
};

/// Dense two-phase simplex over exact rationals, Bland's rule throughout.
LPResult solve_lp(const LinearProgram& lp);

struct MinNormPoint {
  Vec<Rational> point;
  /// Convex weights on the input points reproducing `point`.
  std::vector<std::pair<std::size_t, Rational>> weights;
};

/// Point of least Euclidean norm in the convex hull (Wolfe's algorithm, exact).
MinNormPoint min_norm_point(const std::vector<Vec<Rational>>& points);

/// Scales a nonzero rational vector to coprime integers, same direction.
std::vector<long> primitive_integer_vector(const Vec<Rational>& v);

}  // namespace vgit
