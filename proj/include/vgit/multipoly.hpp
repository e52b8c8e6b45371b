#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vgit/field.hpp"
#include "vgit/rational.hpp"

namespace vgit {

/// Sparse polynomial over named variables. Zero coefficients are never stored.
template <Field F>
class MultiPoly {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, F>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const F& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponent(p.vars_.size(), 0), c);
    return p;
  }
  static MultiPoly variable(std::vector<std::string> vars, std::size_t i) {
    MultiPoly p(std::move(vars));
    Exponent e(p.vars_.size(), 0);
    e.at(i) = 1;
    p.add_term(e, F(1));
    return p;
  }
  /// Sum of c[i] * var_i.
  static MultiPoly linear(std::vector<std::string> vars, const std::vector<F>& c) {
    MultiPoly p(std::move(vars));
    if (c.size() != p.vars_.size()) throw Error("linear form length mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) {
      Exponent e(c.size(), 0);
      e[i] = 1;
      p.add_term(e, c[i]);
    }
    return p;
  }

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  F coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? F(0) : it->second;
  }

  void add_term(const Exponent& e, const F& c) {
    if (e.size() != vars_.size()) throw Error("exponent length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
  }
  bool is_homogeneous() const {
    const int d = degree();
    for (const auto& [e, c] : terms_)
      if (total(e) != d) return false;
    return true;
  }

  F evaluate(const std::vector<F>& x) const {
    if (x.size() != vars_.size()) throw Error("evaluation point has wrong length");
    F acc(0);
    for (const auto& [e, c] : terms_) {
      F m = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) m = m * x[i];
      acc = acc + m;
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      std::string cs = c.str();
      std::string term;
      if (mono.empty()) term = cs;
      else if (cs == "1") term = mono;
      else if (cs == "-1") term = "-" + mono;
      else term = cs + "*" + mono;
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
    a.check_compatible(b);
    if (a.vars_.empty()) a.vars_ = b.vars_;
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  MultiPoly operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.vars_.empty() ? b.vars_ : a.vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend MultiPoly operator*(const F& s, const MultiPoly& a) {
    MultiPoly r(a.vars_);
    for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Same terms over a different variable list of equal length.
  MultiPoly renamed(std::vector<std::string> vars) const {
    if (vars.size() != vars_.size()) throw Error("rename changes the number of variables");
    MultiPoly r(std::move(vars));
    r.terms_ = terms_;
    return r;
  }

  static int total(const Exponent& e) {
    int s = 0;
    for (int k : e) s += k;
    return s;
  }

 private:
  void check_compatible(const MultiPoly& o) const {
    // A default-constructed zero adopts the other side's variables.
    if (!vars_.empty() && !o.vars_.empty() && vars_ != o.vars_)
      throw Error("polynomials over different variables");
  }

  std::vector<std::string> vars_;
  Terms terms_;
};

}  // namespace vgit
