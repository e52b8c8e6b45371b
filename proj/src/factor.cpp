#include "vgit/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

namespace vgit {

namespace {

using UPoly = std::vector<Rational>;

UPoly ddx(const UPoly& p) { return upoly::derivative(p); }

// Yun's algorithm on a univariate polynomial of positive degree.
std::vector<std::pair<UPoly, int>> yun(const UPoly& f) {
  std::vector<std::pair<UPoly, int>> out;
  const UPoly a0 = upoly::gcd(f, ddx(f));
  UPoly b = upoly::divmod(f, a0).first;
  UPoly c = upoly::divmod(ddx(f), a0).first;
  UPoly d = upoly::sub(c, ddx(b));
  for (int i = 1; upoly::degree(b) > 0; ++i) {
    const UPoly a = upoly::gcd(b, d);
    if (upoly::degree(a) > 0) out.emplace_back(upoly::monic(a), i);
    b = upoly::divmod(b, a).first;
    c = upoly::divmod(d, a).first;
    d = upoly::sub(c, ddx(b));
  }
  return out;
}

// Scaled to integer coefficients with content 1.
std::vector<mpz_class> primitive(const UPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (const auto& c : p) {
    z.push_back(c.numerator() * (l / c.denominator()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  for (auto& x : z) x /= g;
  return z;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

UPoly to_rational(const std::vector<mpz_class>& z) {
  UPoly p;
  for (const auto& x : z) p.emplace_back(x);
  return p;
}

// Newton interpolation through (xs[i], ys[i]), returned low-to-high.
UPoly interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UPoly p{ys[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    p = upoly::mul(p, UPoly{-xs[k], Rational(1)});
    if (p.empty()) p = UPoly{Rational(0)};
    p[0] += ys[k];
  }
  upoly::trim(p);
  return p;
}

// Some factor of f of degree exactly k, if one exists (f primitive integral).
std::optional<UPoly> kronecker_factor(const UPoly& f, int k) {
  const auto z = primitive(f);
  const UPoly fi = to_rational(z);
  // Evaluation points with small nonzero values keep the divisor lists short.
  std::vector<std::pair<Rational, Rational>> pts;
  for (long m = 0; pts.size() < static_cast<std::size_t>(4 * upoly::degree(f) + 4); ++m) {
    for (long x : {m, -m - 1}) {
      Rational val = upoly::evaluate(fi, Rational(x));
      if (!val.is_zero()) pts.emplace_back(Rational(x), val);
    }
  }
  std::stable_sort(pts.begin(), pts.end(),
                   [](const auto& a, const auto& b) { return abs(a.second) < abs(b.second); });
  pts.resize(static_cast<std::size_t>(k) + 1);

  std::vector<Rational> xs;
  std::vector<std::vector<Rational>> choices;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    xs.push_back(pts[i].first);
    std::vector<Rational> opts;
    for (const auto& d : positive_divisors(pts[i].second.numerator())) {
      opts.emplace_back(d);
      if (i > 0) opts.emplace_back(mpz_class(-d));  // overall sign fixed by the first point
    }
    choices.push_back(std::move(opts));
  }

  std::vector<std::size_t> idx(choices.size(), 0);
  std::vector<Rational> ys(choices.size());
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) ys[i] = choices[i][idx[i]];
    const UPoly g = interpolate(xs, ys);
    if (upoly::degree(g) == k &&
        std::all_of(g.begin(), g.end(), [](const Rational& c) { return c.is_integer(); }) &&
        upoly::divmod(fi, g).second.empty())
      return upoly::monic(g);
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
    if (pos == idx.size()) return std::nullopt;
  }
}

// Irreducible monic factors of a squarefree univariate polynomial.
void factor_squarefree(UPoly f, std::vector<UPoly>& out) {
  f = upoly::monic(f);
  if (upoly::degree(f) <= 0) return;
  // Rational roots first.
  const auto z = primitive(f);
  if (z.front() == 0) {
    out.push_back(UPoly{Rational(0), Rational(1)});
    f = upoly::divmod(f, UPoly{Rational(0), Rational(1)}).first;
    return factor_squarefree(f, out);
  }
  for (const auto& p : positive_divisors(z.front()))
    for (const auto& q : positive_divisors(z.back()))
      for (int s : {1, -1}) {
        const Rational root(mpz_class(s * p), q);
        if (upoly::degree(f) > 0 && upoly::evaluate(f, root).is_zero()) {
          out.push_back(UPoly{-root, Rational(1)});
          f = upoly::divmod(f, UPoly{-root, Rational(1)}).first;
        }
      }
  const int n = upoly::degree(f);
  if (n <= 0) return;
  if (n <= 3) {
    out.push_back(upoly::monic(f));
    return;
  }
  for (int k = 2; k <= n / 2; ++k) {
    if (auto g = kronecker_factor(f, k)) {
      factor_squarefree(*g, out);
      factor_squarefree(upoly::divmod(f, *g).first, out);
      return;
    }
  }
  out.push_back(upoly::monic(f));
}

bool form_less(const RForm& a, const RForm& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

}  // namespace

std::vector<FactorPower> squarefree_decompose(const RForm& f) {
  if (f.is_zero()) throw Error("identically zero discriminant");
  std::vector<FactorPower> out;
  const auto p = f.dehomogenized();
  if (upoly::degree(p) > 0)
    for (auto& [g, m] : yun(p)) out.push_back({RForm::homogenize(g, 0), m});
  const int vm = f.v_multiplicity();
  if (vm > 0) out.push_back({RForm::v(), vm});
  std::stable_sort(out.begin(), out.end(),
                   [](const FactorPower& a, const FactorPower& b) { return a.multiplicity < b.multiplicity; });
  return out;
}

std::vector<FactorPower> factor_rational(const RForm& f) {
  if (f.is_zero()) throw Error("cannot factor the zero form");
  if (f.degree() > 12) throw Error("factor_rational supports degree <= 12");
  std::vector<FactorPower> out;
  for (const auto& [part, m] : squarefree_decompose(f)) {
    if (part == RForm::v()) {
      out.push_back({part, m});
      continue;
    }
    std::vector<UPoly> irr;
    factor_squarefree(part.dehomogenized(), irr);
    for (auto& g : irr) out.push_back({RForm::homogenize(g, 0), m});
  }
  std::sort(out.begin(), out.end(), [](const FactorPower& a, const FactorPower& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
    return form_less(a.factor, b.factor);
  });
  return out;
}

bool is_irreducible(const RForm& f) {
  if (f.is_zero() || f.degree() == 0) return false;
  const auto fs = factor_rational(f);
  return fs.size() == 1 && fs.front().multiplicity == 1;
}

RForm expand(const std::vector<FactorPower>& factors) {
  RForm r = RForm::constant(Rational(1));
  for (const auto& [g, m] : factors) r = r * power(g, m);
  return r;
}

}  // namespace vgit
