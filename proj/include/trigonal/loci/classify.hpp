#pragma once

// e3(K): the number of Aut(K)-classes of degree-3 elliptic subfields of a genus
// 2 field, which is 0, 1, 2 or 4.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigonal/igusa/invariants.hpp"
#include "trigonal/loci/registry.hpp"
#include "trigonal/loci/residuals.hpp"

namespace trigonal {

enum class BranchCase {
  OffLocus,
  GenericTwo,
  BranchOne,
  BranchSingular,
  Exceptional,  // a registry point where the Jacobian of θ drops rank
  J2ZeroGeneric,
  J2ZeroSingTwo,
  J2ZeroSingFour,
  DegeneratePresent,
  UnsupportedSubcase,
};

inline std::string_view branch_case_name(BranchCase c) {
  switch (c) {
    case BranchCase::OffLocus: return "OFF_LOCUS";
    case BranchCase::GenericTwo: return "GENERIC_TWO";
    case BranchCase::BranchOne: return "BRANCH_ONE";
    case BranchCase::BranchSingular: return "BRANCH_SINGULAR";
    case BranchCase::Exceptional: return "EXCEPTIONAL";
    case BranchCase::J2ZeroGeneric: return "J2ZERO_GENERIC";
    case BranchCase::J2ZeroSingTwo: return "J2ZERO_SING_TWO";
    case BranchCase::J2ZeroSingFour: return "J2ZERO_SING_FOUR";
    case BranchCase::DegeneratePresent: return "DEGENERATE_PRESENT";
    case BranchCase::UnsupportedSubcase: return "UNSUPPORTED_SUBCASE";
  }
  return "UNKNOWN";
}

struct Classification {
  std::optional<int> e3;  // empty means Indeterminate
  BranchCase branch_case = BranchCase::OffLocus;
  std::vector<std::string> notes;
  std::vector<std::string> aut;
  std::optional<std::string> special_point;

  bool indeterminate() const { return !e3; }
};

namespace detail {

template <class S>
bool registry_equal(const NF& stored, const S& x) {
  auto e = embed_scalar(stored, x);
  return e && *e == x;
}

template <class S>
const SpecialPoint* match_triple(const AbsoluteTriple<S>& i) {
  for (const auto& p : special_points())
    if (p.i && registry_equal(p.i->i1, i.i1) && registry_equal(p.i->i2, i.i2) && registry_equal(p.i->i3, i.i3))
      return &p;
  return nullptr;
}

template <class S>
const SpecialPoint* match_a12(const A1A2Pair<S>& a) {
  for (const auto& p : special_points())
    if (p.a12 && registry_equal(p.a12->a1, a.a1) && registry_equal(p.a12->a2, a.a2)) return &p;
  return nullptr;
}

}  // namespace detail

// Decision tree on the Igusa invariants of a genus 2 curve.
template <class S>
Classification classify_invariants(const IgusaTuple<S>& J) {
  if (J.J10.is_zero()) throw Error(Errc::NotGenusTwo, "J10 = 0: the sextic has a repeated root", "J10=0");
  Classification c;
  if (!J.J2.is_zero()) {
    if (!l3_residual(J).on_locus()) return {0, BranchCase::OffLocus, {}, {}, {}};
    AbsoluteTriple<S> i = absolute_invariants(J);
    if (const SpecialPoint* p = detail::match_triple(i)) {
      c = {p->e3, BranchCase::Exceptional, {"exceptional point of theta"}, p->aut, p->id};
      return c;
    }
    if (branch_residual(i).on_locus()) {
      if (branch_singular(i))
        return {std::nullopt, BranchCase::BranchSingular, {"1 or 2: singular point of multiplicity 2 on the branch curve"},
                {}, {}};
      return {1, BranchCase::BranchOne, {}, {}, {}};
    }
    if (degenerate_residual(i).on_locus())
      return {2, BranchCase::DegeneratePresent, {"one of the two classes forms a degenerate pair"}, {}, {}};
    return {2, BranchCase::GenericTwo, {}, {}, {}};
  }
  if (J.J4.is_zero() || J.J6.is_zero())
    return {std::nullopt,
            BranchCase::UnsupportedSubcase,
            {J.J4.is_zero() ? "J2 = J4 = 0 is not classified" : "J2 = J6 = 0 is not classified"},
            {},
            {}};
  A1A2Pair<S> a = a_invariants(J);
  auto [first, second] = j2zero_residuals(a);
  if (!first.on_locus() && !second.on_locus()) return {0, BranchCase::OffLocus, {}, {}, {}};
  if (first.sqrt6_split || second.sqrt6_split) c.notes.push_back("sqrt(6) is not in the field; residuals split as A, B");
  if (const SpecialPoint* p = detail::match_a12(a)) {
    c.e3 = p->e3;
    c.branch_case = BranchCase::J2ZeroSingFour;
    c.special_point = p->id;
    return c;
  }
  if (j2zero_singular(a, first.on_locus() ? 1 : 2)) {
    c.e3 = 2;
    c.branch_case = BranchCase::J2ZeroSingTwo;
    c.notes.push_back("singular point of a J2 = 0 component outside the registry");
    return c;
  }
  c.e3 = 2;
  c.branch_case = BranchCase::J2ZeroGeneric;
  return c;
}

template <class S>
Classification classify_e3(const SexticForm<S>& f) {
  return classify_invariants(igusa_invariants(f));
}

// The J-tuple (1, i1/144, (i1/144 + i2/1728)/3, i3/486) has the given absolute
// invariants; the L3 equation is isobaric, so its residual vanishes for this
// tuple iff it does for every tuple with these i's.
template <class S>
IgusaTuple<S> igusa_from_absolute(const AbsoluteTriple<S>& i) {
  S J4 = i.i1 / S(Rational(144));
  return {S(Rational(1)), J4, (J4 + i.i2 / S(Rational(1728))) / S(Rational(3)), i.i3 / S(Rational(486))};
}

template <class S>
Classification classify_absolute(const AbsoluteTriple<S>& i) {
  return classify_invariants(igusa_from_absolute(i));
}

}  // namespace trigonal
