#pragma once

#include <array>
#include <concepts>
#include <ostream>
#include <string>

#include "vgit/rational.hpp"

namespace vgit {

/// Element of Q(z), z a primitive 5th root of unity, stored as the reduced
/// representative c0 + c1 z + c2 z^2 + c3 z^3 (z^4 = -1 - z - z^2 - z^3).
class Cyclotomic5 {
 public:
  using Coefficients = std::array<Rational, 4>;

  Cyclotomic5() = default;
  template <std::integral I>
  Cyclotomic5(I n) : c_{Rational(n), 0, 0, 0} {}
  Cyclotomic5(const Rational& r) : c_{r, 0, 0, 0} {}
  explicit Cyclotomic5(const Coefficients& c) : c_(c) {}

  /// z^k for any integer k.
  static Cyclotomic5 zeta_power(long k);

  const Coefficients& coefficients() const noexcept { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  std::string str() const;

  Cyclotomic5& operator+=(const Cyclotomic5& o);
  Cyclotomic5& operator-=(const Cyclotomic5& o);
  Cyclotomic5& operator*=(const Cyclotomic5& o);
  Cyclotomic5& operator/=(const Cyclotomic5& o);
  Cyclotomic5 inverse() const;

  friend Cyclotomic5 operator+(Cyclotomic5 a, const Cyclotomic5& b) { return a += b; }
  friend Cyclotomic5 operator-(Cyclotomic5 a, const Cyclotomic5& b) { return a -= b; }
  friend Cyclotomic5 operator*(Cyclotomic5 a, const Cyclotomic5& b) { return a *= b; }
  friend Cyclotomic5 operator/(Cyclotomic5 a, const Cyclotomic5& b) { return a /= b; }
  Cyclotomic5 operator-() const;

  friend bool operator==(const Cyclotomic5& a, const Cyclotomic5& b) = default;
  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic5& x) { return os << x.str(); }

 private:
  Coefficients c_{0, 0, 0, 0};
};

}  // namespace vgit
