#pragma once

// Exact residuals of the locus equations. A point is on a locus iff every
// component of the residual is zero.

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "trigonal/arith/roots.hpp"
#include "trigonal/igusa/invariants.hpp"
#include "trigonal/loci/data.hpp"
#include "trigonal/normal/formulas.hpp"
#include "trigonal/normal/normal_form.hpp"

namespace trigonal {

enum class LocusId {
  L3,                   // curves with a degree-3 elliptic subfield, in J2..J10
  Branch,               // G(i1, i2)
  Ramification,         // ramification curve of θ in (u, v)
  IsoSubfield,          // the two subfields are isomorphic
  Degenerate,           // part of a degenerate pair, two equations in i1, i2, i3
  DegeneratePartner,    // 2v − 9u + 27
  J2ZeroFirst,          // A + √6·B in a1, a2
  J2ZeroSecond,         // A − √6·B
};

inline std::string_view locus_name(LocusId id) {
  switch (id) {
    case LocusId::L3: return "l3";
    case LocusId::Branch: return "branch";
    case LocusId::Ramification: return "ramification";
    case LocusId::IsoSubfield: return "iso_subfield";
    case LocusId::Degenerate: return "degenerate";
    case LocusId::DegeneratePartner: return "degenerate_partner";
    case LocusId::J2ZeroFirst: return "j2zero_first";
    case LocusId::J2ZeroSecond: return "j2zero_second";
  }
  return "unknown";
}

template <class S>
struct LocusResidual {
  LocusId id;
  std::vector<S> value;
  // Set when √6 is not in the field: value = {A, B} for A ± √6·B, zero iff both are.
  bool sqrt6_split = false;

  bool on_locus() const {
    for (const auto& x : value)
      if (!x.is_zero()) return false;
    return true;
  }
};

namespace detail {

inline const MPoly<Rational>& branch_d1() {
  static const MPoly<Rational> p = data::branch_polynomial().derivative(0);
  return p;
}
inline const MPoly<Rational>& branch_d2() {
  static const MPoly<Rational> p = data::branch_polynomial().derivative(1);
  return p;
}

// The J2 = 0 components as (A, B) pairs of polynomials, C = A + sign·√6·B.
struct SqrtSixPoly {
  MPoly<Rational> A, B;
};

inline const std::vector<SqrtSixPoly>& j2zero_gradient() {
  static const std::vector<SqrtSixPoly> g = [] {
    const auto& A = formulas::j2zero_rational_part();
    const auto& B = formulas::j2zero_sqrt6_part();
    return std::vector<SqrtSixPoly>{{A, B}, {A.derivative(0), B.derivative(0)}, {A.derivative(1), B.derivative(1)}};
  }();
  return g;
}

template <class S>
LocusResidual<S> sqrt6_value(LocusId id, const SqrtSixPoly& P, int sign, const A1A2Pair<S>& a) {
  std::vector<S> pt{a.a1, a.a2};
  S A = P.A.eval<S>(pt), B = P.B.eval<S>(pt);
  std::optional<S> s6 = rational_sqrt_in(Rational(6), a.a1);
  if (!s6) s6 = rational_sqrt_in(Rational(6), a.a2);
  if (!s6) return {id, {A, B}, true};
  return {id, {sign > 0 ? A + *s6 * B : A - *s6 * B}, false};
}

}  // namespace detail

// The L3 equation at (J2, J4, J6, J10).
template <class S>
LocusResidual<S> l3_residual(const IgusaTuple<S>& J) {
  return {LocusId::L3, {data::l3_polynomial().eval<S>({J.J2, J.J4, J.J6, J.J10})}};
}

// G(i1, i2); i3 is not used.
template <class S>
LocusResidual<S> branch_residual(const AbsoluteTriple<S>& i) {
  return {LocusId::Branch, {data::branch_polynomial().eval<S>({i.i1, i.i2})}};
}

// (i1, i2) is a singular point of G: G and both partials vanish.
template <class S>
bool branch_singular(const AbsoluteTriple<S>& i) {
  std::vector<S> pt{i.i1, i.i2};
  return data::branch_polynomial().eval<S>(pt).is_zero() && detail::branch_d1().eval<S>(pt).is_zero() &&
         detail::branch_d2().eval<S>(pt).is_zero();
}

template <class S>
LocusResidual<S> ramification_residual(const UVPoint<S>& p) {
  return {LocusId::Ramification, {detail::at(formulas::ramification(), p.u, p.v)}};
}

template <class S>
LocusResidual<S> iso_subfield_residual(const UVPoint<S>& p) {
  return {LocusId::IsoSubfield, {detail::at(formulas::iso_subfield(), p.u, p.v)}};
}

template <class S>
LocusResidual<S> degenerate_residual(const AbsoluteTriple<S>& i) {
  std::vector<S> pt{i.i1, i.i2, i.i3};
  return {LocusId::Degenerate, {formulas::degenerate_1().eval<S>(pt), formulas::degenerate_2().eval<S>(pt)}};
}

// True iff 2v − 9u + 27 = 0.
template <class S>
bool degenerate_partner(const UVPoint<S>& p) {
  return detail::at(formulas::degenerate_line(), p.u, p.v).is_zero();
}

template <class S>
LocusResidual<S> degenerate_partner_residual(const UVPoint<S>& p) {
  return {LocusId::DegeneratePartner, {detail::at(formulas::degenerate_line(), p.u, p.v)}};
}

// Both J2 = 0 components at (a1, a2). When √6 is in the field of a1, a2 the
// values are exact scalars; otherwise each is reported as its (A, B) split.
template <class S>
std::pair<LocusResidual<S>, LocusResidual<S>> j2zero_residuals(const A1A2Pair<S>& a) {
  const auto& C = detail::j2zero_gradient()[0];
  return {detail::sqrt6_value(LocusId::J2ZeroFirst, C, +1, a), detail::sqrt6_value(LocusId::J2ZeroSecond, C, -1, a)};
}

// (a1, a2) is a singular point of the given component (1 or 2).
template <class S>
bool j2zero_singular(const A1A2Pair<S>& a, int component) {
  const int sign = component == 1 ? 1 : -1;
  const LocusId id = component == 1 ? LocusId::J2ZeroFirst : LocusId::J2ZeroSecond;
  for (const auto& P : detail::j2zero_gradient())
    if (!detail::sqrt6_value(id, P, sign, a).on_locus()) return false;
  return true;
}

}  // namespace trigonal
