#pragma once

// The closed-form polynomials of the normal-form moduli, kept as literals and
// parsed once. Evaluate with MPoly::eval at Rational, NFElement or MPoly points.

#include <string_view>

#include "trigonal/arith/rational.hpp"
#include "trigonal/poly/mpoly.hpp"

namespace trigonal::formulas {

using P = MPoly<Rational>;

inline const VarList& uv_vars() {
  static const VarList v = make_vars({"u", "v"});
  return v;
}
inline const VarList& ab_vars() {
  static const VarList v = make_vars({"a", "b"});
  return v;
}
inline const VarList& r_vars() {
  static const VarList v = make_vars({"r1", "r2"});
  return v;
}
inline const VarList& a_vars() {
  static const VarList v = make_vars({"a1", "a2"});
  return v;
}
inline const VarList& i_vars() {
  static const VarList v = make_vars({"i1", "i2", "i3"});
  return v;
}

#define TRIGONAL_LITERAL(name, vars, text)          \
  inline const P& name() {                          \
    static const P p = P::parse(text, vars());      \
    return p;                                       \
  }

// 4a³ + 27 − 18ab − a²b² + 4b³; the discriminant of the sextic is this squared
// times b³ − 27.
TRIGONAL_LITERAL(q_ab, ab_vars, "4*a^3 + 27 - 18*a*b - a^2*b^2 + 4*b^3")

// b³ · q_ab in terms of u = ab, v = b³.
TRIGONAL_LITERAL(den_uv, uv_vars, "4*u^3 + 27*v - 18*u*v - u^2*v + 4*v^2")

// J2 of the normal form is 2 times this.
TRIGONAL_LITERAL(j2_uv, uv_vars, "-405 + 252*u + 4*u^2 - 54*v - 12*u*v + 3*v^2")

TRIGONAL_LITERAL(i1_num, uv_vars,
                 "144*(1188*u^3-8424*u*v+u^4*v-24*u^4+14580*v-66*u^3*v+138*u*v^2+297*u^2*v+945*v^2-36*v^3"
                 "+9*u^2*v^2)")
TRIGONAL_LITERAL(i2_num, uv_vars,
                 "-864*(-81*v^3*u^4+2*u^6*v^2+234*u^5*v^2+3162402*u*v^2-21384*v^3*u+26676*v^4-473121*v^3"
                 "-72*u^6*v-5832*v^4*u+14850*v^3*u^2-72*v^3*u^3+324*v^4*u^2-650268*u^3*v-5940*u^3*v^2"
                 "-3346110*v^2+432*u^6-1350*u^4*v^2+136080*u^4*v-7020*u^5*v-307638*u^2*v^2)")
TRIGONAL_LITERAL(i3_num, uv_vars, "-243*(v - 27)*(4*u^3 - u^2*v - 18*u*v + 4*v^2 + 27*v)^3")

TRIGONAL_LITERAL(beta_u_num, uv_vars,
                 "(v - 3*u)*(324*u^2 + 15*u^2*v - 378*u*v - 4*u*v^2 + 243*v + 72*v^2)")
TRIGONAL_LITERAL(beta_v_num, uv_vars, "-4*(v - 3*u)^3")

// r1 = H³/R and r2 = H⁴/(D(F)D(G)) for the cubic pair of the normal form.
TRIGONAL_LITERAL(r1_num, uv_vars, "1/27*v*(v - 9 - 2*u)^3")
TRIGONAL_LITERAL(r2_num, uv_vars, "-1/1296*v*(v - 9 - 2*u)^4")

TRIGONAL_LITERAL(j1_num, uv_vars, "16*v*(v*u^2 + 216*u^2 - 126*v*u - 972*u + 12*v^2 + 405*v)^3")
TRIGONAL_LITERAL(j2_num, uv_vars, "-256*(u^2 - 3*v)^3")

// Ramification curve of (u, v) -> (i1, i2, i3).
TRIGONAL_LITERAL(ramification, uv_vars,
                 "8*v^3 + 27*v^2 - 54*u*v^2 - u^2*v^2 + 108*u^2*v + 4*u^3*v - 108*u^3")
// Locus where the two elliptic subfields are isomorphic (besides the above).
TRIGONAL_LITERAL(iso_subfield, uv_vars,
                 "324*v^4*u^2-5832*v^4*u+37908*v^4-314928*v^3*u-81*v^3*u^4+255879*v^3+30618*v^3*u^2"
                 "-864*v^3*u^3-6377292*u*v^2+8503056*v^2-324*u^5*v^2+2125764*u^2*v^2-215784*u^3*v^2"
                 "+14580*u^4*v^2+16*u^6*v^2+78732*u^3*v+8748*u^5*v-864*u^6*v-157464*u^4*v+11664*u^6")
// The normal form is isomorphic to a degenerate-family curve on this line.
TRIGONAL_LITERAL(degenerate_line, uv_vars, "2*v - 9*u + 27")

// i1, i2, i3 in terms of r1, r2.
TRIGONAL_LITERAL(r_quad, r_vars, "-1152*r2^2 + 96*r2*r1 + r1^2")
TRIGONAL_LITERAL(i1_r_num, r_vars,
                 "9/4*(13824*r1^3*r2^2+442368*r1^2*r2^3+5308416*r1*r2^4+192*r1^4*r2+r1^5+786432*r1*r2^3"
                 "+9437184*r2^4)")
TRIGONAL_LITERAL(i2_r_num, r_vars,
                 "27/8*(79626240*r1^4*r2^4-4076863488*r1^2*r2^5+34560*r1^6*r2^2+12230590464*r1^2*r2^6"
                 "+32614907904*r1*r2^6+14495514624*r2^6+288*r1^7*r2+2211840*r1^5*r2^3+r1^8"
                 "-212336640*r1^3*r2^4+1528823808*r1^3*r2^5-2359296*r1^4*r2^3)")
TRIGONAL_LITERAL(i3_r_num, r_vars, "-521838526464*r2^9")

// Quadratics over k(r1, r2) with roots {u, β(u)} and {v, β(v)}: coefficients of
// x², x, 1.
TRIGONAL_LITERAL(u_quad_2, r_vars, "65536*r1*r2^3")
TRIGONAL_LITERAL(u_quad_1, r_vars,
                 "42467328*r2^4+21233664*r2^4*r1+480*r2*r1^4+2*r1^5+41472*r2^2*r1^3+1548288*r2^3*r1^2"
                 "-294912*r2^3*r1")
TRIGONAL_LITERAL(u_quad_0, r_vars,
                 "-382205952*r2^4+238878720*r2^4*r1-2654208*r2^3*r1+13934592*r2^3*r1^2+285696*r2^2*r1^3"
                 "+2400*r2*r1^4+7*r1^5")
TRIGONAL_LITERAL(v_quad_2, r_vars, "16384*r2^3")
TRIGONAL_LITERAL(v_quad_1, r_vars, "221184*r2^3*r1+r1^4+11520*r2^2*r1^2-442368*r2^3+192*r2*r1^3")
TRIGONAL_LITERAL(v_quad_0, r_vars, "-5971968*r2^3*r1-864*r2*r1^3-124416*r2^2*r1^2-2*r1^4")

// The two equations of the degenerate-pair locus in i1, i2, i3.
TRIGONAL_LITERAL(degenerate_1, i_vars, "3418801*i1^2 - 2550732480*i1 + 4023336960 + 611249816*i2")
TRIGONAL_LITERAL(degenerate_2, i_vars,
                 "161446939560824832*i3 + 23630752512*i1^2 - 6321363049*i1^3 - 29445783552*i1 + 12230590464")

// The first J2 = 0 component is C = A + √6·B in a1, a2; the second is A − √6·B.
TRIGONAL_LITERAL(j2zero_rational_part, a_vars,
                 "46656*a1^5*a2^3 + 7558272*a1^4*a2^3 - 15552*a1^4*a2^2 - 12427478784*a1^3*a2^2 + 1728*a1^3*a2"
                 " - 656217531654480*a1^2*a2^2 - 1844125056*a1^2*a2 - 64*a1^2 - 6334497449472117312*a1*a2^2"
                 " + 230833239838992*a1*a2 - 601244429975805030777*a2^2")
TRIGONAL_LITERAL(j2zero_sqrt6_part, a_vars,
                 "1259712*a1^4*a2^3 + 4917635712*a1^3*a2^2 + 267571209034080*a1^2*a2^2 + 743525568*a1^2*a2"
                 " + 2585860435265558832*a1*a2^2 - 94237227087840*a1*a2 + 245429539257764380572*a2^2")

#undef TRIGONAL_LITERAL

}  // namespace trigonal::formulas
