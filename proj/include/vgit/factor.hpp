#pragma once

#include <utility>
#include <vector>

#include "vgit/binary_form.hpp"
#include "vgit/rational.hpp"

namespace vgit {

using RForm = BinaryForm<Rational>;

struct FactorPower {
  RForm factor;  // monic
  int multiplicity;
  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// Pairwise coprime monic squarefree factors, one per multiplicity, with the
/// power of v reported as its own entry. Sorted by multiplicity.
/// Throws "identically zero discriminant" on the zero form.
std::vector<FactorPower> squarefree_decompose(const RForm& f);

/// Complete factorization into monic irreducibles over Q.
/// Limited to degree <= 12.
std::vector<FactorPower> factor_rational(const RForm& f);

/// True when f (nonzero, rational) has no nontrivial factorization over Q.
bool is_irreducible(const RForm& f);

/// Product of factor^multiplicity.
RForm expand(const std::vector<FactorPower>& factors);

}  // namespace vgit
