#pragma once

#include <array>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "trigonal/arith/rational.hpp"
#include "trigonal/error.hpp"
#include "trigonal/igusa/invariants.hpp"
#include "trigonal/normal/formulas.hpp"
#include "trigonal/poly/fraction.hpp"
#include "trigonal/poly/mpoly.hpp"
#include "trigonal/poly/resultant.hpp"
#include "trigonal/poly/unipoly.hpp"

namespace trigonal {

template <class S>
struct ABPoint {
  S a, b;
};

template <class S>
struct UVPoint {
  S u, v;
  friend bool operator==(const UVPoint& x, const UVPoint& y) { return x.u == y.u && x.v == y.v; }
};

template <class S>
struct RPoint {
  S r1, r2;
  friend bool operator==(const RPoint& x, const RPoint& y) { return x.r1 == y.r1 && x.r2 == y.r2; }
};

// V² = U³ + c2 U² + c1 U + c0
template <class S>
struct EllipticCubic {
  S c2, c1, c0;
  friend bool operator==(const EllipticCubic& x, const EllipticCubic& y) {
    return x.c2 == y.c2 && x.c1 == y.c1 && x.c0 == y.c0;
  }
};

template <class S>
struct JPair {
  S j1, j2;
};

template <class S>
struct CubicPairInvariants {
  S H, R, DF, DG, r1, r2;
  std::optional<S> r3;
};

template <class S>
struct DegenerateCurve {
  SexticForm<S> sextic;
  EllipticCubic<S> cubic;  // U(27U² − 54cU + 4 + 27c²) divided by `scale`
  S scale;
};

namespace detail {

template <class S>
S k(long x) {
  return S(Rational(x));
}

template <class S>
S at(const MPoly<Rational>& p, const S& x, const S& y) {
  return p.eval<S>({x, y});
}

// Field scalars are checked eagerly; symbolic ones are not.
template <class S>
constexpr bool checks_guards = !is_mpoly<S>::value;

template <class S>
UniPoly<S> upoly(std::vector<S> c, const char* var = "X") {
  return UniPoly<S>(std::move(c), var);
}

}  // namespace detail

// Δ(a, b) = q(a, b)² (b³ − 27)
template <class S>
S delta_ab(const ABPoint<S>& p) {
  S q = detail::at(formulas::q_ab(), p.a, p.b);
  return q * q * (p.b * p.b * p.b - detail::k<S>(27));
}

// (X³ + aX² + bX + 1)(4X³ + b²X² + 2bX + 1)
template <class S>
SexticForm<S> sextic_from_ab(const ABPoint<S>& p) {
  if constexpr (detail::checks_guards<S>)
    if (delta_ab(p).is_zero()) throw Error(Errc::DegenerateParameters, "the sextic has a repeated root", "Delta=0");
  using detail::k;
  auto F = detail::upoly<S>({k<S>(1), p.b, p.a, k<S>(1)});
  auto G = detail::upoly<S>({k<S>(1), k<S>(2) * p.b, p.b * p.b, k<S>(4)});
  return SexticForm<S>(F * G);
}

// (X³ + uX² + vX + v)(4X³ + vX² + 2vX + v): the normal form after X -> X/b,
// divided by b³. Defined over k(u, v) without a cube root of v.
template <class S>
SexticForm<S> sextic_from_uv(const UVPoint<S>& p) {
  using detail::k;
  if constexpr (detail::checks_guards<S>) {
    if (p.v.is_zero()) throw Error(Errc::DegenerateParameters, "v = 0", "v=0");
    if ((p.v - k<S>(27)).is_zero()) throw Error(Errc::DegenerateParameters, "v = 27", "v=27");
    if (detail::at(formulas::den_uv(), p.u, p.v).is_zero())
      throw Error(Errc::DegenerateParameters, "the sextic has a repeated root", "Delta=0");
  }
  auto F = detail::upoly<S>({p.v, p.v, p.u, k<S>(1)});
  auto G = detail::upoly<S>({p.v, k<S>(2) * p.v, p.v, k<S>(4)});
  return SexticForm<S>(F * G);
}

template <class S>
UVPoint<S> uv_from_ab(const ABPoint<S>& p) {
  return {p.a * p.b, p.b * p.b * p.b};
}

// The elliptic subfield k(U, V) with U = X²/(X³ + aX² + bX + 1):
// coefficients 2(ab² − 6a² + 9b)/q, (12a − b²)/q, −4/q with q = q(a, b).
template <class S>
std::array<Fraction<S>, 3> subfield_cubic_parts(const ABPoint<S>& p) {
  using detail::k;
  S q = detail::at(formulas::q_ab(), p.a, p.b);
  const std::string g = "Delta=0";
  return {Fraction<S>(k<S>(2) * (p.a * p.b * p.b - k<S>(6) * p.a * p.a + k<S>(9) * p.b), {{q, 1, g}}),
          Fraction<S>(k<S>(12) * p.a - p.b * p.b, {{q, 1, g}}), Fraction<S>(k<S>(-4), {{q, 1, g}})};
}

template <class S>
EllipticCubic<S> subfield_cubic(const ABPoint<S>& p) {
  if (delta_ab(p).is_zero()) throw Error(Errc::DegenerateParameters, "Delta(a, b) = 0", "Delta=0");
  auto c = subfield_cubic_parts(p);
  return {c[0].value(), c[1].value(), c[2].value()};
}

// Discriminant of U³ + c2U² + c1U + c0.
template <class S>
S cubic_discriminant(const EllipticCubic<S>& e) {
  using detail::k;
  const S &a = e.c2, &b = e.c1, &c = e.c0;
  return a * a * b * b - k<S>(4) * b * b * b - k<S>(4) * a * a * a * c - k<S>(27) * c * c + k<S>(18) * a * b * c;
}

// j = 256 (c2² − 3c1)³ / disc
template <class S>
Fraction<S> elliptic_j_parts(const EllipticCubic<S>& e) {
  S t = e.c2 * e.c2 - detail::k<S>(3) * e.c1;
  return Fraction<S>(detail::k<S>(256) * t * t * t, {{cubic_discriminant(e), 1, "disc=0"}});
}

template <class S>
S elliptic_j(const EllipticCubic<S>& e) {
  auto f = elliptic_j_parts(e);
  if (!f.pole().empty()) throw Error(Errc::SingularCubic, "the cubic has a repeated root", "disc=0");
  return f.value();
}

// Y² = (3X² + 4)(X³ + X + c) and its subfield V² = U(27U² − 54cU + 4 + 27c²).
template <class S>
DegenerateCurve<S> degenerate_curve(const S& c) {
  using detail::k;
  S t = k<S>(4) + k<S>(27) * c * c;
  if constexpr (detail::checks_guards<S>)
    if (t.is_zero()) throw Error(Errc::DegenerateParameters, "27c² + 4 = 0", "27c^2+4=0");
  auto f = detail::upoly<S>({k<S>(4), k<S>(0), k<S>(3)}) * detail::upoly<S>({c, k<S>(1), k<S>(0), k<S>(1)});
  S z = c * k<S>(0);
  EllipticCubic<S> e{k<S>(-2) * c, t * S(Rational(1, 27)), z};
  return {SexticForm<S>(f), e, k<S>(27)};
}

// H(F, G) = a0b3 − a1b2/3 + a2b1/3 − a3b0 (a_i, b_i coefficients of X^i).
template <class S>
S cubic_pairing(const UniPoly<S>& F, const UniPoly<S>& G) {
  S third(Rational(1, 3));
  return F.coeff(0) * G.coeff(3) - third * F.coeff(1) * G.coeff(2) + third * F.coeff(2) * G.coeff(1) -
         F.coeff(3) * G.coeff(0);
}

template <class S>
CubicPairInvariants<S> cubic_pair_invariants(const UniPoly<S>& F, const UniPoly<S>& G, bool include_r3 = false) {
  if (F.degree() != 3 || G.degree() != 3)
    throw Error(Errc::PreconditionViolated, "both polynomials must be cubics", "deg=3");
  S H = cubic_pairing(F, G);
  S R = resultant(F, G);
  if (R.is_zero()) throw Error(Errc::CommonRoot, "the cubics share a root", "R=0");
  S DF = discriminant(F), DG = discriminant(G);
  if ((DF * DG).is_zero()) throw Error(Errc::RepeatedRoot, "a cubic has a repeated root", "D(F)D(G)=0");
  S H2 = H * H;
  CubicPairInvariants<S> out{H, R, DF, DG, H2 * H / R, H2 * H2 / (DF * DG), std::nullopt};
  if (include_r3) {
    S J2 = igusa_invariants(SexticForm<S>(F * G)).J2;
    if (J2.is_zero()) throw Error(Errc::JTwoZero, "J2 of the product vanishes", "J2=0");
    out.r3 = H2 / J2;
  }
  return out;
}

template <class S>
std::array<Fraction<S>, 2> r_from_uv_parts(const UVPoint<S>& p) {
  using namespace formulas;
  S den = detail::at(den_uv(), p.u, p.v), v27 = p.v - detail::k<S>(27);
  return {Fraction<S>(detail::at(r1_num(), p.u, p.v), {{den, 1, "Delta=0"}}),
          Fraction<S>(detail::at(r2_num(), p.u, p.v), {{v27, 1, "v=27"}, {den, 1, "Delta=0"}})};
}

template <class S>
RPoint<S> r_from_uv(const UVPoint<S>& p) {
  auto f = r_from_uv_parts(p);
  return {f[0].value(), f[1].value()};
}

template <class S>
std::array<Fraction<S>, 3> i_from_uv_parts(const UVPoint<S>& p) {
  using namespace formulas;
  S j = detail::at(j2_uv(), p.u, p.v);
  return {Fraction<S>(detail::at(i1_num(), p.u, p.v), {{p.v, 1, "v=0"}, {j, 2, "J2=0"}}),
          Fraction<S>(detail::at(i2_num(), p.u, p.v), {{p.v, 2, "v=0"}, {j, 3, "J2=0"}}),
          Fraction<S>(detail::at(i3_num(), p.u, p.v), {{p.v, 3, "v=0"}, {j, 5, "J2=0"}})};
}

template <class S>
AbsoluteTriple<S> i_from_uv(const UVPoint<S>& p) {
  auto f = i_from_uv_parts(p);
  return {f[0].value(), f[1].value(), f[2].value()};
}

template <class S>
std::array<Fraction<S>, 3> i_from_r_parts(const RPoint<S>& p) {
  using namespace formulas;
  S q = detail::at(r_quad(), p.r1, p.r2);
  const std::string gq = "r1^2+96r1r2-1152r2^2=0";
  return {Fraction<S>(detail::at(i1_r_num(), p.r1, p.r2), {{p.r1, 1, "r1=0"}, {q, 2, gq}}),
          Fraction<S>(detail::at(i2_r_num(), p.r1, p.r2), {{p.r1, 2, "r1=0"}, {q, 3, gq}}),
          Fraction<S>(detail::at(i3_r_num(), p.r1, p.r2), {{p.r1, 2, "r1=0"}, {q, 5, gq}})};
}

template <class S>
AbsoluteTriple<S> i_from_r(const RPoint<S>& p) {
  auto f = i_from_r_parts(p);
  return {f[0].value(), f[1].value(), f[2].value()};
}

// The involution of k(u, v) over k(r1, r2) exchanging the two subfields.
template <class S>
std::array<Fraction<S>, 2> beta_parts(const UVPoint<S>& p) {
  using namespace formulas;
  S den = detail::at(den_uv(), p.u, p.v), v27 = p.v - detail::k<S>(27);
  return {Fraction<S>(detail::at(beta_u_num(), p.u, p.v), {{v27, 1, "v=27"}, {den, 1, "Delta=0"}}),
          Fraction<S>(detail::at(beta_v_num(), p.u, p.v), {{den, 1, "Delta=0"}})};
}

template <class S>
UVPoint<S> beta(const UVPoint<S>& p) {
  auto f = beta_parts(p);
  return {f[0].value(), f[1].value()};
}

// Quadratics in u and in v over k(r1, r2); their roots are {u, β(u)}, {v, β(v)}.
template <class S>
std::pair<UniPoly<S>, UniPoly<S>> uv_quadratics(const RPoint<S>& p) {
  using namespace formulas;
  if constexpr (detail::checks_guards<S>) {
    if (p.r1.is_zero()) throw Error(Errc::PoleAtPoint, "r1 = 0", "r1=0");
    if (p.r2.is_zero()) throw Error(Errc::PoleAtPoint, "r2 = 0", "r2=0");
  }
  auto e = [&](const MPoly<Rational>& f) { return detail::at(f, p.r1, p.r2); };
  return {UniPoly<S>({e(u_quad_0()), e(u_quad_1()), e(u_quad_2())}, "u"),
          UniPoly<S>({e(v_quad_0()), e(v_quad_1()), e(v_quad_2())}, "v")};
}

// j-invariants of the two elliptic subfields.
template <class S>
std::array<Fraction<S>, 2> j_invariant_parts(const UVPoint<S>& p) {
  using namespace formulas;
  S den = detail::at(den_uv(), p.u, p.v), v27 = p.v - detail::k<S>(27);
  return {Fraction<S>(detail::at(j1_num(), p.u, p.v), {{v27, 3, "v=27"}, {den, 2, "Delta=0"}}),
          Fraction<S>(detail::at(j2_num(), p.u, p.v), {{p.v, 1, "v=0"}, {den, 1, "Delta=0"}})};
}

template <class S>
JPair<S> j_invariants(const UVPoint<S>& p) {
  auto f = j_invariant_parts(p);
  return {f[0].value(), f[1].value()};
}

// ∂i_k/∂u = du / (v^v_exp · J^j_exp), likewise ∂i_k/∂v, with J = j2_uv.
struct ThetaPartial {
  MPoly<Rational> du, dv;
  int v_exp, j_exp;
};

// The partials of θ: (u, v) -> (i1, i2, i3). With i = N/(v^a J^b),
// ∂i = (N'·vJ − N·(a·v'·J + b·v·J')) / (v^(a+1) J^(b+1)).
inline const std::array<ThetaPartial, 3>& theta_partials() {
  static const std::array<ThetaPartial, 3> d = [] {
    using P = MPoly<Rational>;
    const auto& V = formulas::uv_vars();
    const P v = P::parse("v", V), J = formulas::j2_uv();
    const std::array<const P*, 3> N{&formulas::i1_num(), &formulas::i2_num(), &formulas::i3_num()};
    const int a[3] = {1, 2, 3}, b[3] = {2, 3, 5};
    std::array<ThetaPartial, 3> out;
    for (int k = 0; k < 3; ++k) {
      const P& n = *N[static_cast<std::size_t>(k)];
      auto d = [&](int x) {
        P vx = v.derivative(x);
        return n.derivative(x) * v * J - n * (vx * J * P(Rational(a[k])) + v * J.derivative(x) * P(Rational(b[k])));
      };
      out[static_cast<std::size_t>(k)] = {d(0), d(1), a[k] + 1, b[k] + 1};
    }
    return out;
  }();
  return d;
}

// Numerators of the 2×2 minors (i1,i2), (i1,i3), (i2,i3) of the Jacobian of θ;
// each minor is its numerator over a product of powers of v and J.
inline const std::array<MPoly<Rational>, 3>& jacobian_minor_numerators() {
  static const std::array<MPoly<Rational>, 3> m = [] {
    const auto& d = theta_partials();
    auto minor = [&](int x, int y) {
      const auto &p = d[static_cast<std::size_t>(x)], &q = d[static_cast<std::size_t>(y)];
      return p.du * q.dv - p.dv * q.du;
    };
    return std::array<MPoly<Rational>, 3>{minor(0, 1), minor(0, 2), minor(1, 2)};
  }();
  return m;
}

// The minors at a point.
template <class S>
std::array<S, 3> jacobian_minors_at(const UVPoint<S>& p) {
  const auto& d = theta_partials();
  S v = p.v, J = detail::at(formulas::j2_uv(), p.u, p.v);
  if constexpr (detail::checks_guards<S>) {
    if (v.is_zero()) throw Error(Errc::PoleAtPoint, "v = 0", "v=0");
    if (J.is_zero()) throw Error(Errc::PoleAtPoint, "J2 = 0", "J2=0");
  }
  std::array<S, 6> x;
  for (std::size_t k = 0; k < 3; ++k) {
    S den = pow(v, static_cast<unsigned>(d[k].v_exp)) * pow(J, static_cast<unsigned>(d[k].j_exp));
    x[2 * k] = detail::at(d[k].du, p.u, p.v) / den;
    x[2 * k + 1] = detail::at(d[k].dv, p.u, p.v) / den;
  }
  return {x[0] * x[3] - x[1] * x[2], x[0] * x[5] - x[1] * x[4], x[2] * x[5] - x[3] * x[4]};
}

}  // namespace trigonal
