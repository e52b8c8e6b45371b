#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "vgit/field.hpp"
#include "vgit/rational.hpp"

namespace vgit {

namespace upoly {

// Dense univariate polynomials, coefficient i belongs to t^i. The empty vector
// is the zero polynomial; results are always trimmed.

template <Field F>
void trim(std::vector<F>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <Field F>
int degree(const std::vector<F>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <Field F>
std::vector<F> mul(const std::vector<F>& a, const std::vector<F>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<F> c(a.size() + b.size() - 1, F(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
  }
  trim(c);
  return c;
}

template <Field F>
std::vector<F> sub(std::vector<F> a, const std::vector<F>& b) {
  if (a.size() < b.size()) a.resize(b.size(), F(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
  trim(a);
  return a;
}

/// (quotient, remainder) of a by nonzero b.
template <Field F>
std::pair<std::vector<F>, std::vector<F>> divmod(std::vector<F> a, const std::vector<F>& b) {
  if (b.empty()) throw Error("polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  std::vector<F> q(a.size() - b.size() + 1, F(0));
  const F lead_inv = F(1) / b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    const F c = a[k] * lead_inv;
    q[k - b.size() + 1] = c;
    if (!c.is_zero())
      for (std::size_t j = 0; j < b.size(); ++j) a[k - b.size() + 1 + j] = a[k - b.size() + 1 + j] - c * b[j];
    if (k == 0) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

template <Field F>
std::vector<F> monic(std::vector<F> p) {
  trim(p);
  if (p.empty()) return p;
  const F inv = F(1) / p.back();
  for (auto& c : p) c = c * inv;
  return p;
}

template <Field F>
std::vector<F> gcd(std::vector<F> a, std::vector<F> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <Field F>
std::vector<F> derivative(const std::vector<F>& p) {
  if (p.size() <= 1) return {};
  std::vector<F> d(p.size() - 1, F(0));
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = F(static_cast<long>(i)) * p[i];
  trim(d);
  return d;
}

template <Field F>
F evaluate(const std::vector<F>& p, const F& x) {
  F acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

}  // namespace upoly

/// Homogeneous polynomial in (u, v). Coefficient i multiplies u^i v^(d-i).
/// The zero form carries no degree: `is_zero()` must be checked before
/// `degree()`, which throws on it.
template <Field F>
class BinaryForm {
 public:
  BinaryForm() = default;  // the zero form
  BinaryForm(int degree, std::vector<F> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(degree) + 1)
      throw Error("binary form needs degree+1 coefficients");
    if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const F& c) { return c.is_zero(); })) {
      zero_ = true;
      coeffs_.clear();
      degree_ = 0;
    } else {
      zero_ = false;
    }
  }

  static BinaryForm zero() { return {}; }
  static BinaryForm constant(const F& c) { return BinaryForm(0, {c}); }
  /// cu * u + cv * v
  static BinaryForm linear(const F& cu, const F& cv) { return BinaryForm(1, {cv, cu}); }
  static BinaryForm u() { return linear(F(1), F(0)); }
  static BinaryForm v() { return linear(F(0), F(1)); }

  /// v^extra * p(u) homogenized, p given low-to-high in u.
  static BinaryForm homogenize(std::vector<F> p, int extra_v) {
    upoly::trim(p);
    if (p.empty()) return zero();
    const int d = upoly::degree(p) + extra_v;
    p.resize(static_cast<std::size_t>(d) + 1, F(0));
    return BinaryForm(d, std::move(p));
  }

  bool is_zero() const noexcept { return zero_; }
  int degree() const {
    if (zero_) throw Error("the zero binary form has no degree");
    return degree_;
  }
  const std::vector<F>& coefficients() const noexcept { return coeffs_; }
  F coefficient(int i) const { return zero_ ? F(0) : coeffs_.at(static_cast<std::size_t>(i)); }

  /// f(t, 1) low-to-high; its degree falls short of degree() by the
  /// multiplicity of v.
  std::vector<F> dehomogenized() const {
    auto p = coeffs_;
    upoly::trim(p);
    return p;
  }
  int v_multiplicity() const { return degree() - upoly::degree(dehomogenized()); }

  F operator()(const F& u, const F& v) const {
    if (zero_) return F(0);
    F acc(0), upow(1);
    std::vector<F> vpow(coeffs_.size(), F(1));
    for (std::size_t k = 1; k < vpow.size(); ++k) vpow[k] = vpow[k - 1] * v;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      acc = acc + coeffs_[i] * upow * vpow[coeffs_.size() - 1 - i];
      upow = upow * u;
    }
    return acc;
  }

  /// Scaled so the nonzero coefficient with the highest power of u is 1.
  BinaryForm monic() const {
    if (zero_) return *this;
    const auto p = dehomogenized();
    const F inv = F(1) / p.back();
    auto c = coeffs_;
    for (auto& x : c) x = x * inv;
    return BinaryForm(degree_, std::move(c));
  }

  bool is_constant() const { return !zero_ && degree_ == 0; }

  std::string str() const {
    if (zero_) return "0";
    std::string out;
    for (int i = degree_; i >= 0; --i) {
      const F& c = coeffs_[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      std::string mono;
      const int j = degree_ - i;
      if (i > 0) mono += i == 1 ? "u" : "u^" + std::to_string(i);
      if (j > 0) mono += (mono.empty() ? "" : "*") + (j == 1 ? std::string("v") : "v^" + std::to_string(j));
      std::string cs = c.str();
      std::string term;
      if (mono.empty()) {
        term = cs;
      } else if (cs == "1") {
        term = mono;
      } else if (cs == "-1") {
        term = "-" + mono;
      } else {
        term = (cs.find_first_of("+-", 1) != std::string::npos ? "(" + cs + ")" : cs) + "*" + mono;
      }
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out;
  }

  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.zero_) return b;
    if (b.zero_) return a;
    if (a.degree_ != b.degree_) throw Error("adding binary forms of different degrees");
    auto c = a.coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] + b.coeffs_[i];
    return BinaryForm(a.degree_, std::move(c));
  }
  BinaryForm operator-() const {
    if (zero_) return *this;
    auto c = coeffs_;
    for (auto& x : c) x = -x;
    return BinaryForm(degree_, std::move(c));
  }
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    if (a.zero_ || b.zero_) return zero();
    std::vector<F> c(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return BinaryForm(a.degree_ + b.degree_, std::move(c));
  }
  friend BinaryForm operator*(const F& s, const BinaryForm& a) { return constant(s) * a; }

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.zero_ == b.zero_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  bool zero_ = true;
  int degree_ = 0;
  std::vector<F> coeffs_;
};

template <Field F>
BinaryForm<F> power(const BinaryForm<F>& f, int e) {
  BinaryForm<F> r = BinaryForm<F>::constant(F(1));
  for (int i = 0; i < e; ++i) r = r * f;
  return r;
}

/// Exact quotient f / g; throws when g does not divide f.
template <Field F>
BinaryForm<F> divide_exact(const BinaryForm<F>& f, const BinaryForm<F>& g) {
  if (g.is_zero()) throw Error("division by the zero binary form");
  if (f.is_zero()) return f;
  if (g.degree() > f.degree()) throw Error("binary form division is not exact");
  auto [q, r] = upoly::divmod(f.dehomogenized(), g.dehomogenized());
  if (!r.empty()) throw Error("binary form division is not exact");
  const int extra = f.degree() - g.degree() - upoly::degree(q);
  if (extra < 0) throw Error("binary form division is not exact");
  return BinaryForm<F>::homogenize(std::move(q), extra);
}

template <Field F>
bool divides(const BinaryForm<F>& g, const BinaryForm<F>& f) {
  if (f.is_zero()) return true;
  if (g.is_zero()) return false;
  if (g.degree() > f.degree()) return false;
  if (g.v_multiplicity() > f.v_multiplicity()) return false;
  return upoly::divmod(f.dehomogenized(), g.dehomogenized()).second.empty();
}

/// Monic greatest common divisor.
template <Field F>
BinaryForm<F> gcd(const BinaryForm<F>& f, const BinaryForm<F>& g) {
  if (f.is_zero() && g.is_zero()) throw Error("undefined gcd");
  if (g.is_zero()) return f.monic();
  if (f.is_zero()) return g.monic();
  const int vm = std::min(f.v_multiplicity(), g.v_multiplicity());
  return BinaryForm<F>::homogenize(upoly::gcd(f.dehomogenized(), g.dehomogenized()), vm);
}

/// Square matrix whose entries are binary forms.
template <Field F>
using FormMatrix = std::vector<std::vector<BinaryForm<F>>>;

/// Determinant of the submatrix on the given rows and columns, by Laplace
/// expansion over column subsets (2^k partial minors, exact).
template <Field F>
BinaryForm<F> minor_determinant(const FormMatrix<F>& m, const std::vector<std::size_t>& rows,
                                const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (cols.size() != k) throw Error("minor must be square");
  if (k == 0) return BinaryForm<F>::constant(F(1));
  // partial[S] = determinant of rows[0..|S|) against the columns in S.
  std::vector<BinaryForm<F>> partial(std::size_t{1} << k);
  partial[0] = BinaryForm<F>::constant(F(1));
  for (std::size_t mask = 1; mask < partial.size(); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    const std::size_t r = rows[size - 1];
    BinaryForm<F> acc;
    std::size_t above = 0;  // set columns to the right of j
    for (std::size_t jj = k; jj-- > 0;) {
      if (!(mask & (std::size_t{1} << jj))) continue;
      const auto& entry = m[r][cols[jj]];
      const auto& rest = partial[mask ^ (std::size_t{1} << jj)];
      if (!entry.is_zero() && !rest.is_zero()) {
        auto term = entry * rest;
        acc = (above % 2 == 0) ? acc + term : acc - term;
      }
      ++above;
    }
    partial[mask] = acc;
  }
  return partial.back();
}

/// Exact determinant of a square matrix of binary forms.
template <Field F>
BinaryForm<F> det_pencil_matrix(const FormMatrix<F>& m) {
  std::vector<std::size_t> idx(m.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (const auto& row : m)
    if (row.size() != m.size()) throw Error("determinant of a non-square form matrix");
  return minor_determinant(m, idx, idx);
}

}  // namespace vgit
