#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vgit/binary_form.hpp"
#include "vgit/factor.hpp"
#include "vgit/matrix.hpp"
#include "vgit/multipoly.hpp"
#include "vgit/rational.hpp"

namespace vgit {

inline constexpr std::size_t kDim = 6;

/// Index pairs (i, j), i <= j, in lexicographic order: the 21 monomials x_i x_j.
inline const std::vector<std::pair<int, int>>& quadratic_monomials() {
  static const std::vector<std::pair<int, int>> m = [] {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < 6; ++i)
      for (int j = i; j < 6; ++j) out.emplace_back(i, j);
    return out;
  }();
  return m;
}

inline std::vector<std::string> x_variables() { return {"x0", "x1", "x2", "x3", "x4", "x5"}; }

/// Q(x) = x^T gram x on a 6-dimensional space.
template <Field F>
class QuadraticForm {
 public:
  QuadraticForm() : gram_(kDim, kDim) {}
  explicit QuadraticForm(Matrix<F> gram) : gram_(std::move(gram)) {
    if (gram_.rows() != kDim || gram_.cols() != kDim) throw Error("quadratic form must be 6x6");
    if (!gram_.is_symmetric()) throw Error("gram matrix is not symmetric");
  }

  /// From coefficients of the monomials x_i x_j (keys with i <= j).
  static QuadraticForm from_monomials(const std::map<std::pair<int, int>, F>& coeffs) {
    Matrix<F> g(kDim, kDim);
    const F half = F(1) / F(2);
    for (const auto& [ij, c] : coeffs) {
      auto [i, j] = ij;
      if (i > j || i < 0 || j >= 6) throw Error("monomial key out of range");
      if (i == j) {
        g(i, i) = g(i, i) + c;
      } else {
        g(i, j) = g(i, j) + c * half;
        g(j, i) = g(i, j);
      }
    }
    return QuadraticForm(std::move(g));
  }

  const Matrix<F>& gram() const noexcept { return gram_; }

  /// Coefficient of x_i x_j in the polynomial.
  F coefficient(int i, int j) const {
    if (i > j) std::swap(i, j);
    return i == j ? gram_(i, i) : F(2) * gram_(i, j);
  }
  /// The 21 monomial coefficients in quadratic_monomials() order.
  std::vector<F> coefficient_vector() const {
    std::vector<F> out;
    for (auto [i, j] : quadratic_monomials()) out.push_back(coefficient(i, j));
    return out;
  }

  F bilinear(const Vec<F>& x, const Vec<F>& y) const { return dot(x, gram_ * y); }
  F operator()(const Vec<F>& x) const { return bilinear(x, x); }

  MultiPoly<F> polynomial() const {
    MultiPoly<F> p(x_variables());
    for (auto [i, j] : quadratic_monomials()) {
      std::vector<int> e(kDim, 0);
      e[i] += 1;
      e[j] += 1;
      p.add_term(e, coefficient(i, j));
    }
    return p;
  }

  std::string str() const { return polynomial().str(); }

  friend QuadraticForm operator+(const QuadraticForm& a, const QuadraticForm& b) {
    return QuadraticForm(a.gram_ + b.gram_);
  }
  friend QuadraticForm operator-(const QuadraticForm& a, const QuadraticForm& b) {
    return QuadraticForm(a.gram_ - b.gram_);
  }
  friend QuadraticForm operator*(const F& s, const QuadraticForm& a) { return QuadraticForm(s * a.gram_); }
  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) { return a.gram_ == b.gram_; }

 private:
  Matrix<F> gram_;
};

/// Two linearly independent quadratic forms.
template <Field F>
class Pencil {
 public:
  Pencil(QuadraticForm<F> a, QuadraticForm<F> b) : a_(std::move(a)), b_(std::move(b)) {
    if (rank(Matrix<F>::from_rows({a_.coefficient_vector(), b_.coefficient_vector()})) != 2)
      throw Error("pencil generators are linearly dependent");
  }
  const QuadraticForm<F>& gen_a() const noexcept { return a_; }
  const QuadraticForm<F>& gen_b() const noexcept { return b_; }

  /// s * gen_a + t * gen_b
  QuadraticForm<F> member(const F& s, const F& t) const { return s * a_ + t * b_; }

  /// The symmetric matrix u*A + v*B with binary-form entries.
  FormMatrix<F> matrix() const {
    FormMatrix<F> m(kDim, std::vector<BinaryForm<F>>(kDim));
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j) m[i][j] = BinaryForm<F>::linear(a_.gram()(i, j), b_.gram()(i, j));
    return m;
  }

 private:
  QuadraticForm<F> a_, b_;
};

template <Field F>
BinaryForm<F> discriminant(const Pencil<F>& p) {
  return det_pencil_matrix(p.matrix());
}

/// Substitution x -> g x: gram -> g^T gram g.
template <Field F>
QuadraticForm<F> apply_transform(const QuadraticForm<F>& q, const Matrix<F>& g) {
  return QuadraticForm<F>(g.transpose() * q.gram() * g);
}

template <Field F>
Pencil<F> apply_transform(const Pencil<F>& p, const Matrix<F>& g) {
  if (g.rows() != kDim || g.cols() != kDim || determinant(g).is_zero()) throw Error("singular transform");
  return Pencil<F>(apply_transform(p.gen_a(), g), apply_transform(p.gen_b(), g));
}

template <Field F>
bool pencils_equal_as_spans(const Pencil<F>& p, const Pencil<F>& q) {
  const auto m = Matrix<F>::from_rows({p.gen_a().coefficient_vector(), p.gen_b().coefficient_vector(),
                                       q.gen_a().coefficient_vector(), q.gen_b().coefficient_vector()});
  return rank(m) == 2;
}

using RQuadric = QuadraticForm<Rational>;
using RPencil = Pencil<Rational>;
using RMatrix = Matrix<Rational>;
using RVec = Vec<Rational>;

struct SegreGroup {
  RForm factor;             // monic irreducible factor of the discriminant
  std::vector<int> blocks;  // weakly decreasing
};

struct SegreSymbol {
  std::vector<SegreGroup> groups;
  /// e.g. "[(1,1,1),(1,1,1)]" style, one parenthesised group per factor.
  std::string str() const;
  bool all_blocks_one() const;
};

/// Elementary divisors of u*A + v*B via gcds of minors.
/// Throws "degenerate pencil" when the discriminant vanishes identically.
SegreSymbol segre_symbol(const RPencil& p);

struct CompleteIntersection {
  bool is_ci = true;
  std::optional<RVec> common_linear_form;  // set when is_ci is false
};

/// False exactly when every member is divisible by one common linear form.
CompleteIntersection is_complete_intersection(const RPencil& p);

enum class PencilVerdict { Stable, SemistableNotStable, Polystable, Unstable, NotCompleteIntersection, DegenerateDiscriminant };

std::string to_string(PencilVerdict v);

struct PencilClass {
  PencilVerdict verdict;
  std::vector<int> root_profile;  // root multiplicities over the algebraic closure, descending
  RForm discriminant;
  std::optional<SegreSymbol> segre;
  std::optional<RVec> common_linear_form;
  std::string reason;

  bool unstable() const {
    return verdict == PencilVerdict::Unstable || verdict == PencilVerdict::NotCompleteIntersection ||
           verdict == PencilVerdict::DegenerateDiscriminant;
  }
  bool semistable() const { return !unstable(); }
};

PencilClass classify_pencil(const RPencil& p);

/// Multiplicities of the distinct roots of f over the algebraic closure, descending.
std::vector<int> root_profile(const RForm& f);

/// First nonzero coordinate scaled to 1.
RVec normalize_projective(RVec v);

}  // namespace vgit
