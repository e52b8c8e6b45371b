#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vgit/multipoly.hpp"
#include "vgit/rational.hpp"

namespace vgit {

using ClassPoly = MultiPoly<Rational>;

/// Top intersection numbers on a variety of fixed dimension, with optional
/// rewrite rules applied before lookup.
class IntersectionModel {
 public:
  IntersectionModel(std::vector<std::string> classes, std::vector<int> degrees, int dimension);

  const std::vector<std::string>& classes() const noexcept { return classes_; }
  int dimension() const noexcept { return dim_; }

  /// The class with the given name as a polynomial.
  ClassPoly cls(const std::string& name) const;
  ClassPoly constant(const Rational& c) const;

  /// Declares the top value of a monomial, e.g. {{"E", 4}}.
  void declare(const std::vector<std::pair<std::string, int>>& monomial, const Rational& value);
  void declare(const std::vector<int>& exponent, const Rational& value);
  /// Every occurrence of `lhs` is replaced by `rhs` before lookup. Each rule
  /// must lower lhs in degree-lexicographic order of the declared classes.
  void add_rule(const std::vector<std::pair<std::string, int>>& lhs, const ClassPoly& rhs);

  int weighted_degree(const std::vector<int>& exponent) const;
  std::string monomial_name(const std::vector<int>& exponent) const;

  /// Throws naming the first monomial that has no declared value.
  Rational evaluate_top(const ClassPoly& expr) const;

 private:
  Rational reduce(const std::vector<int>& exponent, int depth) const;
  std::vector<int> exponent_of(const std::vector<std::pair<std::string, int>>& monomial) const;

  std::vector<std::string> classes_;
  std::vector<int> degrees_;
  int dim_;
  std::map<std::vector<int>, Rational> top_;
  std::vector<std::pair<std::vector<int>, ClassPoly>> rules_;
};

/// Two rulings h1, h2 on P^1 x P^1.
IntersectionModel p1xp1_model();

/// Chern data feeding the first testing curve. Classes on P^1 x P^1 are (a, b) = a*h1 + b*h2.
struct CurveOneInputs {
  std::array<Rational, 2> c1_normal{Rational(0), Rational(-1)};
  Rational c2_normal{2};
  std::array<Rational, 2> k_restricted{Rational(-2), Rational(-1)};
  Rational volume{26};
  Rational e_k3{0};
  Rational k4{0};
};

/// Classes K (pullback of the canonical class) and E (exceptional divisor).
IntersectionModel curve_one_model(const CurveOneInputs& in = {});
Rational testing_curve_one(const CurveOneInputs& in = {});

/// Classes H, T (pullback of theta), C2S (pullback of c2, degree 2), Z (tautological).
IntersectionModel curve_two_model();

struct CurveTwoNumbers {
  Rational first, second, third;  // -(Z H^2 T), -(H Z^2 T), -(Z^3 T)
  Rational degree;                // -(24 first + 8 second + third)
};
CurveTwoNumbers testing_curve_two_numbers();
Rational testing_curve_two();

struct CMCoefficients {
  Rational a, b, t0;
};
CMCoefficients cm_coefficients();

}  // namespace vgit
