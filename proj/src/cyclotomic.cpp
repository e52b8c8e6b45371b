#include "vgit/cyclotomic.hpp"

#include "vgit/matrix.hpp"

namespace vgit {

namespace {

// Reduces a coefficient vector of length <= 7 modulo 1 + z + z^2 + z^3 + z^4.
Cyclotomic5::Coefficients reduce(std::array<Rational, 7> p) {
  // z^5 = 1 folds degrees 5, 6 onto 0, 1.
  p[0] += p[5];
  p[1] += p[6];
  // z^4 = -(1 + z + z^2 + z^3).
  for (int i = 0; i < 4; ++i) p[i] -= p[4];
  return {p[0], p[1], p[2], p[3]};
}

}  // namespace

Cyclotomic5 Cyclotomic5::zeta_power(long k) {
  long e = ((k % 5) + 5) % 5;
  std::array<Rational, 7> p{};
  p[e] = 1;
  return Cyclotomic5(reduce(p));
}

bool Cyclotomic5::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Cyclotomic5::is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

std::string Cyclotomic5::str() const {
  if (is_rational()) return c_[0].str();
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (c_[i].is_zero()) continue;
    std::string term = c_[i].str();
    if (i > 0) {
      const std::string z = i == 1 ? "z" : "z^" + std::to_string(i);
      if (term == "1") term = z;
      else if (term == "-1") term = "-" + z;
      else term += "*" + z;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

Cyclotomic5& Cyclotomic5::operator+=(const Cyclotomic5& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic5& Cyclotomic5::operator-=(const Cyclotomic5& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic5& Cyclotomic5::operator*=(const Cyclotomic5& o) {
  std::array<Rational, 7> p{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) p[i + j] += c_[i] * o.c_[j];
  c_ = reduce(p);
  return *this;
}

Cyclotomic5 Cyclotomic5::inverse() const {
  if (is_zero()) throw Error("division by zero");
  // Column j of the multiplication-by-this matrix is this * z^j.
  Matrix<Rational> mul(4, 4);
  for (int j = 0; j < 4; ++j) {
    const Cyclotomic5 col = *this * zeta_power(j);
    for (int i = 0; i < 4; ++i) mul(i, j) = col.c_[i];
  }
  const auto x = solve(mul, Vec<Rational>{1, 0, 0, 0});
  if (!x) throw Error("cyclotomic element is not invertible");
  return Cyclotomic5(Coefficients{(*x)[0], (*x)[1], (*x)[2], (*x)[3]});
}

Cyclotomic5& Cyclotomic5::operator/=(const Cyclotomic5& o) { return *this *= o.inverse(); }

Cyclotomic5 Cyclotomic5::operator-() const {
  Cyclotomic5 r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

}  // namespace vgit
