#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "trigonal/arith/rational.hpp"
#include "trigonal/error.hpp"
#include "trigonal/poly/fraction.hpp"
#include "trigonal/poly/mpoly.hpp"
#include "trigonal/poly/unipoly.hpp"

namespace trigonal {

// f(X) = a6 X^6 + ... + a0, read as a binary sextic f(X, Z). Leading zeros mean
// roots at infinity.
template <class S>
struct SexticForm {
  std::array<S, 7> a;

  SexticForm() : a{S(0), S(0), S(0), S(0), S(0), S(0), S(0)} {}
  explicit SexticForm(const std::vector<S>& coeffs) : SexticForm() {
    if (coeffs.size() > 7) throw Error(Errc::PreconditionViolated, "a sextic has at most 7 coefficients");
    for (std::size_t i = 0; i < coeffs.size(); ++i) a[i] = coeffs[i];
  }
  explicit SexticForm(const UniPoly<S>& f) : SexticForm(f.coeffs()) {}

  bool is_zero() const {
    for (const auto& c : a)
      if (!c.is_zero()) return false;
    return true;
  }
  UniPoly<S> poly(std::string var = "X") const { return UniPoly<S>(std::vector<S>(a.begin(), a.end()), var); }
  friend bool operator==(const SexticForm& x, const SexticForm& y) { return x.a == y.a; }
};

template <class S>
struct IgusaTuple {
  S J2, J4, J6, J10;
  friend bool operator==(const IgusaTuple& x, const IgusaTuple& y) {
    return x.J2 == y.J2 && x.J4 == y.J4 && x.J6 == y.J6 && x.J10 == y.J10;
  }
};

template <class S>
struct AbsoluteTriple {
  S i1, i2, i3;
  friend bool operator==(const AbsoluteTriple& x, const AbsoluteTriple& y) {
    return x.i1 == y.i1 && x.i2 == y.i2 && x.i3 == y.i3;
  }
};

template <class S>
struct A1A2Pair {
  S a1, a2;
  friend bool operator==(const A1A2Pair& x, const A1A2Pair& y) { return x.a1 == y.a1 && x.a2 == y.a2; }
};

namespace detail {

// Binary form of degree n as coefficients c[i] of x^i y^(n-i).
template <class S>
using Form = std::vector<S>;

inline Rational falling(long n, long k) {
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= Rational(n - i);
  return r;
}

inline Rational factorial(long n) { return falling(n, n); }

inline Rational binomial(long n, long k) { return falling(n, k) / factorial(k); }

// d^p/dx^p d^q/dy^q
template <class S>
Form<S> form_derivative(const Form<S>& f, long p, long q) {
  const long n = static_cast<long>(f.size()) - 1;
  S zero = f[0] * S(0);
  if (p + q > n) return Form<S>{zero};
  Form<S> r(static_cast<std::size_t>(n - p - q + 1), zero);
  for (long i = p; i <= n - q; ++i) {
    if (f[static_cast<std::size_t>(i)].is_zero()) continue;
    r[static_cast<std::size_t>(i - p)] = f[static_cast<std::size_t>(i)] * S(falling(i, p) * falling(n - i, q));
  }
  return r;
}

template <class S>
Form<S> form_mul(const Form<S>& f, const Form<S>& g) {
  Form<S> r(f.size() + g.size() - 1, f[0] * S(0));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
  }
  return r;
}

// k-th transvectant (f, g)_k with the normalizing factor (n-k)!(m-k)!/(n! m!).
template <class S>
Form<S> transvectant(const Form<S>& f, const Form<S>& g, long k) {
  const long n = static_cast<long>(f.size()) - 1, m = static_cast<long>(g.size()) - 1;
  Form<S> acc(static_cast<std::size_t>(n + m - 2 * k + 1), f[0] * S(0));
  for (long j = 0; j <= k; ++j) {
    Form<S> t = form_mul(form_derivative(f, k - j, j), form_derivative(g, j, k - j));
    Rational c = binomial(k, j);
    if (j & 1) c = -c;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += t[i] * S(c);
  }
  Rational scale = factorial(n - k) * factorial(m - k) / (factorial(n) * factorial(m));
  for (auto& x : acc) x = x * S(scale);
  return acc;
}

// Igusa-Clebsch invariants from the transvectant invariants A, B, C, D.
template <class S>
IgusaTuple<S> igusa_clebsch_raw(const SexticForm<S>& f) {
  Form<S> F(f.a.begin(), f.a.end());
  Form<S> i = transvectant(F, F, 4);
  Form<S> delta = transvectant(i, i, 2);
  Form<S> y1 = transvectant(F, i, 4);
  Form<S> y2 = transvectant(i, y1, 2);
  Form<S> y3 = transvectant(i, y2, 2);
  S A = transvectant(F, F, 6)[0];
  S B = transvectant(i, i, 4)[0];
  S C = transvectant(i, delta, 4)[0];
  S D = transvectant(y3, y1, 2)[0];
  auto k = [](long x) { return S(Rational(x)); };
  S A2 = A * A, A3 = A2 * A;
  return {
      k(-120) * A,
      k(-720) * A2 + k(6750) * B,
      k(8640) * A3 - k(108000) * A * B + k(202500) * C,
      k(-62208) * A3 * A2 + k(972000) * A3 * B + k(1620000) * A2 * C - k(3037500) * A * B * B -
          k(6075000) * B * C - k(4556250) * D,
  };
}

// Normalization gate: on (3X²+4)(X³+X+c) the invariants must equal
// J2 = 774, J4 = 36(268+837w), J6 = 36(76760+290574w−729w²), J10 = 432(27w+4)³, w = c².
inline bool calibration_holds() {
  using P = MPoly<Rational>;
  PolyRing<Rational> R({"c"});
  P c = R["c"], w = c * c;
  SexticForm<P> f({P(Rational(4)) * c, P(Rational(4)), P(Rational(3)) * c, P(Rational(7)), P(Rational(0)),
                   P(Rational(3)), P(Rational(0))});
  IgusaTuple<P> J = igusa_clebsch_raw(f);
  P k27w4 = P(Rational(27)) * w + P(Rational(4));
  return J.J2 == P(Rational(774)) && J.J4 == P(Rational(36)) * (P(Rational(268)) + P(Rational(837)) * w) &&
         J.J6 == P(Rational(36)) * (P(Rational(76760)) + P(Rational(290574)) * w - P(Rational(729)) * w * w) &&
         J.J10 == P(Rational(432)) * k27w4 * k27w4 * k27w4;
}

inline void ensure_calibrated() {
  static const bool ok = calibration_holds();
  if (!ok) throw Error(Errc::CalibrationFailed, "invariant normalization failed its calibration check");
}

}  // namespace detail

// J2, J4, J6, J10 of the binary sextic; J_d is homogeneous of degree d and J10
// is a constant multiple of the discriminant.
template <class S>
IgusaTuple<S> igusa_invariants(const SexticForm<S>& f) {
  if (f.is_zero()) throw Error(Errc::ZeroForm, "the zero form has no invariants");
  detail::ensure_calibrated();
  return detail::igusa_clebsch_raw(f);
}

template <class S>
std::array<Fraction<S>, 3> absolute_invariant_parts(const IgusaTuple<S>& J) {
  const std::string g = "J2=0";
  auto k = [](long x) { return S(Rational(x)); };
  return {Fraction<S>(k(144) * J.J4, {{J.J2, 2, g}}),
          Fraction<S>(k(-1728) * (J.J2 * J.J4 - k(3) * J.J6), {{J.J2, 3, g}}),
          Fraction<S>(k(486) * J.J10, {{J.J2, 5, g}})};
}

template <class S>
AbsoluteTriple<S> absolute_invariants(const IgusaTuple<S>& J) {
  if (J.J2.is_zero()) throw Error(Errc::JTwoZero, "absolute invariants need J2 != 0; use a-invariants", "J2=0");
  auto p = absolute_invariant_parts(J);
  return {p[0].value(), p[1].value(), p[2].value()};
}

template <class S>
A1A2Pair<S> a_invariants(const IgusaTuple<S>& J) {
  if (!J.J2.is_zero()) throw Error(Errc::PreconditionViolated, "a-invariants need J2 = 0", "J2!=0");
  if (J.J4.is_zero()) throw Error(Errc::PreconditionViolated, "a-invariants need J4 != 0", "J4=0");
  if (J.J6.is_zero()) throw Error(Errc::PreconditionViolated, "a-invariants need J6 != 0", "J6=0");
  if (J.J10.is_zero()) throw Error(Errc::PreconditionViolated, "a-invariants need J10 != 0", "J10=0");
  S J4_2 = J.J4 * J.J4;
  return {J.J4 * J.J6 / J.J10, J.J6 * J.J10 / (J4_2 * J4_2)};
}

// Isomorphism over the algebraic closure, decided by absolute invariants
// (J2 != 0) or by (a1, a2) (J2 = 0, J4 J6 != 0).
template <class S>
bool isomorphic(const SexticForm<S>& f, const SexticForm<S>& g) {
  IgusaTuple<S> Jf = igusa_invariants(f), Jg = igusa_invariants(g);
  if (Jf.J10.is_zero() || Jg.J10.is_zero()) throw Error(Errc::NotGenusTwo, "a form has a repeated root", "J10=0");
  bool zf = Jf.J2.is_zero(), zg = Jg.J2.is_zero();
  if (zf != zg) return false;
  if (!zf) return absolute_invariants(Jf) == absolute_invariants(Jg);
  for (const auto* J : {&Jf, &Jg})
    if (J->J4.is_zero() || J->J6.is_zero())
      throw Error(Errc::UnsupportedSubcase, "J2 = 0 with J4 = 0 or J6 = 0 is not classified",
                  J->J4.is_zero() ? "J4=0" : "J6=0");
  return a_invariants(Jf) == a_invariants(Jg);
}

}  // namespace trigonal
