#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <type_traits>
#include <vector>

#include "trigonal/arith/number_field.hpp"
#include "trigonal/arith/rational.hpp"
#include "trigonal/error.hpp"
#include "trigonal/poly/resultant.hpp"
#include "trigonal/poly/unipoly.hpp"

namespace trigonal {

namespace detail {

// Polynomials over Z/p with p small enough for 64-bit products.
using ModPoly = std::vector<std::int64_t>;

inline void mod_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline ModPoly mod_rem(ModPoly a, const ModPoly& b, std::int64_t p) {
  std::int64_t inv = mod_pow(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    std::int64_t t = a.back() * inv % p;
    std::size_t k = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + k] = ((a[i + k] - t * b[i]) % p + p) % p;
    mod_trim(a);
    if (a.empty()) break;
  }
  return a;
}

inline int mod_gcd_degree(ModPoly a, ModPoly b, std::int64_t p) {
  mod_trim(a);
  mod_trim(b);
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}

inline bool small_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline mpz_class horner(const std::vector<mpz_class>& P, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t i = P.size(); i-- > 0;) acc = acc * x + P[i];
  return acc;
}

}  // namespace detail

// Distinct rational roots, found by Hensel lifting simple roots modulo a prime
// through the monic transform; no factoring of the coefficients is needed.
inline std::vector<Rational> rational_roots(const UniPoly<Rational>& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<Rational> out;
  if (f.degree() <= 0) return out;
  UniPoly<Rational> g = f.monic();
  UniPoly<Rational> sq = gcd(g, g.derivative());
  if (sq.degree() > 0) g = g.divrem(sq).first;

  // Integer primitive coefficients.
  mpz_class l = 1;
  for (const auto& c : g.coeffs()) l = lcm(l, c.den());
  std::vector<mpz_class> a;
  for (const auto& c : g.coeffs()) a.push_back((c * Rational(l)).num());
  if (a[0] == 0) {
    out.push_back(Rational(0));
    a.erase(a.begin());
  }
  const int n = static_cast<int>(a.size()) - 1;
  if (n <= 0) return out;
  if (n == 1) {
    out.push_back(Rational(-a[0], a[1]));
    return out;
  }
  const mpz_class an = a.back();
  // P(y) = an^(n-1) g(y / an) is monic with integer roots y = an * x.
  std::vector<mpz_class> P(static_cast<std::size_t>(n) + 1);
  mpz_class pw = 1;
  for (int i = n - 1; i >= 0; --i) {
    P[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] * pw;
    pw *= an;
  }
  P[static_cast<std::size_t>(n)] = 1;
  mpz_class bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, mpz_class(abs(P[static_cast<std::size_t>(i)])));
  bound += 1;

  std::vector<mpz_class> dP;
  for (int i = 1; i <= n; ++i) dP.push_back(P[static_cast<std::size_t>(i)] * i);

  for (std::int64_t p = 3;; p += 2) {
    if (!detail::small_prime(p)) continue;
    detail::ModPoly Pm, dPm;
    for (const auto& c : P) Pm.push_back(mpz_class(((c % p) + p) % p).get_si());
    for (const auto& c : dP) dPm.push_back(mpz_class(((c % p) + p) % p).get_si());
    detail::mod_trim(dPm);
    if (dPm.empty() || detail::mod_gcd_degree(Pm, dPm, p) != 0) continue;

    mpz_class M = p;
    std::vector<mpz_class> lifts;
    for (std::int64_t r = 0; r < p; ++r) {
      std::int64_t v = 0;
      for (std::size_t i = Pm.size(); i-- > 0;) v = (v * r + Pm[i]) % p;
      if (v == 0) lifts.push_back(r);
    }
    if (lifts.empty()) return out;
    mpz_class need = 2 * bound + 1;
    while (M < need) {
      mpz_class M2 = M * M;
      for (auto& r : lifts) {
        mpz_class fv = detail::horner(P, r) % M2;
        mpz_class dv = detail::horner(dP, r) % M;
        mpz_class inv;
        if (dv < 0) dv += M;
        mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), M.get_mpz_t());
        r = (r - fv * inv) % M2;
        if (r < 0) r += M2;
      }
      M = M2;
    }
    for (auto& r : lifts) {
      mpz_class y = r;
      if (y > M / 2) y -= M;
      if (detail::horner(P, y) == 0) out.push_back(Rational(y, an));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
}

inline bool is_square(const Rational& x) { return x.sqrt().has_value(); }

namespace detail {

// Quadratic field Q(θ), θ² + pθ + q = 0; δ = θ + p/2 satisfies δ² = d.
struct QuadraticData {
  Rational p, q, d;
};

inline QuadraticData quadratic_data(const NumberField<Rational>& K) {
  if (K.degree() != 2) throw Error(Errc::UnsupportedDegree, "root finding implemented over Q and quadratic fields only");
  Rational p = K.minpoly()[1], q = K.minpoly()[0];
  return {p, q, p * p / Rational(4) - q};
}

// Coordinates (A, B) with x = A + Bδ.
inline std::pair<Rational, Rational> delta_coords(const NFElement<Rational>& x, const QuadraticData& Q) {
  Rational a = x.coeff(0), b = x.coeff(1);
  return {a - b * Q.p / Rational(2), b};
}

template <class K>
typename NFElement<Rational>::FieldPtr field_of(const UniPoly<K>& f) {
  for (const auto& c : f.coeffs())
    if (c.field()) return c.field();
  return nullptr;
}

}  // namespace detail

inline bool is_square(const NFElement<Rational>& x) {
  if (!x.field() || x.in_base()) {
    Rational a = x.base_value();
    if (is_square(a)) return true;
    if (!x.field()) return false;
  }
  auto Q = detail::quadratic_data(*x.field());
  auto [A, B] = detail::delta_coords(x, Q);
  if (B.is_zero()) return is_square(A) || is_square(A / Q.d);
  auto n = (A * A - Q.d * B * B).sqrt();
  if (!n) return false;
  for (const Rational& s : {A + *n, A - *n}) {
    auto x0 = (s / Rational(2)).sqrt();
    if (x0 && !x0->is_zero()) {
      Rational y0 = B / (Rational(2) * *x0);
      if (*x0 * *x0 + Q.d * y0 * y0 == A) return true;
    }
  }
  return false;
}

inline std::vector<Rational> roots_in_base(const UniPoly<Rational>& f) { return rational_roots(f); }

// Roots in a quadratic field K. For a root α, y = (α+ᾱ)/2 is a rational root of
// Res_x(f(x), f̄(2y − x)), and α = y + tδ with t rational.
inline std::vector<NFElement<Rational>> roots_in_base(const UniPoly<NFElement<Rational>>& f) {
  using K = NFElement<Rational>;
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<K> out;
  if (f.degree() <= 0) return out;
  auto F = detail::field_of(f);
  if (!F) {
    std::vector<Rational> rc;
    for (const auto& c : f.coeffs()) rc.push_back(c.base_value());
    for (const auto& r : rational_roots(UniPoly<Rational>(rc))) out.push_back(K(r));
    return out;
  }
  auto Q = detail::quadratic_data(*F);
  const int n = f.degree();
  std::vector<K> fbc;
  for (const auto& c : f.coeffs()) fbc.push_back(conjugate(F->element(c.coeffs())));
  UniPoly<K> fbar(fbc, "x");

  // Interpolate R(y) over K from N + 1 = n² + 1 values.
  const int N = n * n;
  std::vector<K> ys, vals;
  UniPoly<K> X({K(0), K(1)}, "x");
  for (int k = 0; k <= N; ++k) {
    K y(F, {Rational(k)});
    UniPoly<K> arg = UniPoly<K>({K(2) * y, K(-1)}, "x");  // 2y - x
    UniPoly<K> g = UniPoly<K>::constant(fbar.coeffs().back(), "x");
    for (int i = n - 1; i >= 0; --i) g = g * arg + UniPoly<K>::constant(fbar.coeffs()[static_cast<std::size_t>(i)], "x");
    ys.push_back(y);
    vals.push_back(resultant(f, g));
  }
  // Newton divided differences.
  std::vector<K> dd = vals;
  for (int j = 1; j <= N; ++j)
    for (int i = N; i >= j; --i)
      dd[static_cast<std::size_t>(i)] = (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)]) /
                                        (ys[static_cast<std::size_t>(i)] - ys[static_cast<std::size_t>(i - j)]);
  UniPoly<K> R = UniPoly<K>::constant(dd[static_cast<std::size_t>(N)], "y");
  for (int i = N - 1; i >= 0; --i)
    R = R * UniPoly<K>({-ys[static_cast<std::size_t>(i)], K(1)}, "y") +
        UniPoly<K>::constant(dd[static_cast<std::size_t>(i)], "y");

  auto split = [&](const UniPoly<K>& P) {
    std::vector<Rational> c0, c1;
    for (const auto& c : P.coeffs()) {
      auto [A, B] = detail::delta_coords(K(F, c.coeffs()), Q);
      c0.push_back(A);
      c1.push_back(B);
    }
    return std::pair{UniPoly<Rational>(c0), UniPoly<Rational>(c1)};
  };
  auto [R0, R1] = split(R);
  UniPoly<Rational> h = R1.is_zero() ? R0 : (R0.is_zero() ? R1 : gcd(R0, R1));
  if (h.degree() <= 0) return out;
  K delta = F->gen() + K(F, {Q.p / Rational(2)});
  for (const Rational& y : rational_roots(h)) {
    // g(t) = f(y + tδ)
    UniPoly<K> arg({K(F, {y}), delta}, "t");
    UniPoly<K> g = UniPoly<K>::constant(f.coeffs().back(), "t");
    for (int i = n - 1; i >= 0; --i) g = g * arg + UniPoly<K>::constant(f.coeffs()[static_cast<std::size_t>(i)], "t");
    auto [A, B] = split(g);
    UniPoly<Rational> c = A.is_zero() ? B : (B.is_zero() ? A : gcd(A, B));
    if (c.is_zero() || c.degree() <= 0) continue;
    for (const Rational& t : rational_roots(c)) {
      K alpha = K(F, {y}) + K(F, {t}) * delta;
      if (!f(alpha).is_zero()) continue;
      if (std::find(out.begin(), out.end(), alpha) == out.end()) out.push_back(alpha);
    }
  }
  return out;
}

namespace detail {

template <class K>
bool has_quadratic_factor(const UniPoly<K>& monic_quartic) {
  const auto& c = monic_quartic.coeffs();
  // Depress: x = y - a3/4.
  K shift = -(c[3] / K(4));
  UniPoly<K> arg({shift, K(1)}, "y");
  UniPoly<K> g = UniPoly<K>::constant(c[4], "y");
  for (int i = 3; i >= 0; --i) g = g * arg + UniPoly<K>::constant(c[static_cast<std::size_t>(i)], "y");
  K p = g.coeff(2), q = g.coeff(1), r = g.coeff(0);
  if (q.is_zero() && is_square(p * p - K(4) * r)) return true;
  UniPoly<K> res({-(q * q), p * p - K(4) * r, K(2) * p, K(1)}, "z");
  for (const auto& z : roots_in_base(res))
    if (!z.is_zero() && is_square(z)) return true;
  return false;
}

}  // namespace detail

// Irreducibility over the coefficient field, for degree <= 4 over Q or Q(√d).
template <class Base>
bool is_irreducible(const UniPoly<Base>& m) {
  if (m.degree() < 1) return false;
  if (m.degree() == 1) return true;
  if (m.degree() > 4) throw Error(Errc::UnsupportedDegree, "irreducibility is checked only up to degree 4");
  if constexpr (std::is_same_v<Base, Rational> || std::is_same_v<Base, NFElement<Rational>>) {
    UniPoly<Base> f = m.monic();
    if (!roots_in_base(f).empty()) return false;
    if (f.degree() == 4 && detail::has_quadratic_factor(f)) return false;
    return true;
  } else {
    throw Error(Errc::UnsupportedDegree, "irreducibility checks are implemented over Q and Q(√d)");
  }
}

// √d inside the field that `context` lives in, or nullopt when the field does not
// contain one. In a quadratic field the root taken is c·δ with c > 0 (δ as in
// QuadraticData), so in Q[s]/(s² − 6) it is s. Membership is decided for Q,
// quadratic fields, odd-degree fields and towers whose base contains the root;
// other even-degree fields raise UnsupportedDegree.
inline std::optional<Rational> rational_sqrt_in(const Rational& d, const Rational&) { return d.sqrt(); }

inline std::optional<NFElement<Rational>> rational_sqrt_in(const Rational& d, const NFElement<Rational>& context) {
  using K = NFElement<Rational>;
  const auto& F = context.field();
  if (auto r = d.sqrt()) return F ? F->element({*r}) : K(*r);
  if (!F || F->degree() % 2 == 1) return std::nullopt;
  if (F->degree() != 2) throw Error(Errc::UnsupportedDegree, "cannot decide whether the field contains this square root");
  auto Q = detail::quadratic_data(*F);
  auto c = (d / Q.d).sqrt();
  if (!c) return std::nullopt;
  Rational cc = c->sign() < 0 ? -*c : *c;
  return (F->gen() + F->element({Q.p / Rational(2)})) * F->element({cc});
}

inline std::optional<NFElement<NFElement<Rational>>> rational_sqrt_in(const Rational& d,
                                                                      const NFElement<NFElement<Rational>>& context) {
  using T = NFElement<NFElement<Rational>>;
  const auto& F = context.field();
  NFElement<Rational> base_context = context.base_value();
  if (F)
    for (const auto& c : F->minpoly())
      if (c.field()) base_context = c;
  if (auto r = rational_sqrt_in(d, base_context)) return F ? F->element({*r}) : T(*r);
  if (!F || F->degree() % 2 == 1) return std::nullopt;
  throw Error(Errc::UnsupportedDegree, "cannot decide whether the field contains this square root");
}

// Base[x]/(modulus). A non-monic modulus is scaled to be monic.
template <class Base>
typename NumberField<Base>::Ptr quotient_ring(const UniPoly<Base>& modulus, std::string gen = "x",
                                              bool check_irreducible = true) {
  if (modulus.degree() < 1) throw Error(Errc::DegreeTooSmall, "modulus must have degree >= 1");
  UniPoly<Base> m = modulus.monic();
  if (check_irreducible && !is_irreducible(m))
    throw Error(Errc::ReducibleModulus, "modulus " + m.str() + " has a nontrivial factor");
  return std::make_shared<const NumberField<Base>>(m.coeffs(), std::move(gen));
}

// Q(√d) as Q[s]/(s² − d).
inline NumberField<Rational>::Ptr quadratic_field(const Rational& d, std::string gen = "s") {
  return quotient_ring(UniPoly<Rational>({-d, Rational(0), Rational(1)}), std::move(gen));
}

}  // namespace trigonal
