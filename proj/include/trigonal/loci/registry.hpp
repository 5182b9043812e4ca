#pragma once

// Special points: the exceptional points where the Jacobian of
// θ: (u, v) -> (i1, i2, i3) drops rank, and the singular points of the J2 = 0
// components with e3 = 4 together with the quartics that give their (u, v).

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trigonal/arith/number_field.hpp"
#include "trigonal/arith/roots.hpp"
#include "trigonal/igusa/invariants.hpp"
#include "trigonal/loci/data.hpp"
#include "trigonal/normal/normal_form.hpp"

namespace trigonal {

using NF = NFElement<Rational>;
using Tower = NFElement<NF>;

// v is a root of `quartic` (over the point's field) and u = u_of_v(v).
struct QuarticPreimage {
  UniPoly<NF> quartic;
  UniPoly<NF> u_of_v;
};

struct SpecialPoint {
  std::string id;
  std::string kind;        // "exceptional" or "j2zero_singular"
  std::string field_name;  // key into the registry's field table
  NumberField<Rational>::Ptr field;  // null for Q
  std::vector<UVPoint<NF>> uv;
  std::optional<AbsoluteTriple<NF>> i;
  std::optional<A1A2Pair<NF>> a12;
  std::optional<int> e3;
  std::vector<std::string> aut;  // dihedral label in both namings, e.g. D4 and D8
  bool genus2 = true;
  std::optional<QuarticPreimage> preimage;
  std::string source;
  std::vector<std::string> notes;
};

namespace detail {

struct RegistryField {
  std::string gen;
  NumberField<Rational>::Ptr ptr;
};

inline NF registry_scalar(const std::string& text, const RegistryField& F) {
  if (!F.ptr) return NF(Rational::parse(text));
  MPoly<Rational> p = MPoly<Rational>::parse(text, make_vars({F.gen}));
  return p.eval<NF>({F.ptr->gen()});
}

// A polynomial in the field generator and `var`, as a UniPoly in `var` over the field.
inline UniPoly<NF> registry_upoly(const std::string& text, const RegistryField& F, const std::string& var) {
  MPoly<Rational> p = MPoly<Rational>::parse(text, make_vars({F.gen, var}));
  std::vector<NF> cs;
  for (const auto& c : p.to_univariate(1).coeffs()) cs.push_back(c.eval<NF>({F.ptr->gen(), NF(Rational(0))}));
  return UniPoly<NF>(std::move(cs), var);
}

inline std::vector<SpecialPoint> parse_registry(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::DataIntegrity, std::string("registry is not valid JSON: ") + e.what());
  }
  std::map<std::string, RegistryField> fields;
  for (auto it = j.at("fields").begin(); it != j.at("fields").end(); ++it) {
    if (it->is_null()) {
      fields[it.key()] = {};
      continue;
    }
    std::string gen = it->at("gen");
    MPoly<Rational> m = MPoly<Rational>::parse(it->at("minpoly").get<std::string>(), make_vars({gen}));
    std::vector<Rational> c;
    for (const auto& x : m.to_univariate(0).coeffs()) c.push_back(x.is_zero() ? Rational(0) : x.constant_value());
    fields[it.key()] = {gen, quotient_ring(UniPoly<Rational>(c, gen), gen)};
  }
  std::vector<SpecialPoint> out;
  for (const auto& e : j.at("points")) {
    SpecialPoint p;
    p.id = e.at("id");
    p.kind = e.at("kind");
    p.field_name = e.at("field");
    const RegistryField& F = fields.at(p.field_name);
    p.field = F.ptr;
    if (e.contains("uv"))
      for (const auto& q : e.at("uv")) p.uv.push_back({registry_scalar(q.at(0), F), registry_scalar(q.at(1), F)});
    if (e.contains("i") && !e.at("i").is_null())
      p.i = AbsoluteTriple<NF>{registry_scalar(e.at("i").at(0), F), registry_scalar(e.at("i").at(1), F),
                               registry_scalar(e.at("i").at(2), F)};
    if (e.contains("a12")) p.a12 = A1A2Pair<NF>{registry_scalar(e.at("a12").at(0), F), registry_scalar(e.at("a12").at(1), F)};
    if (e.contains("e3") && !e.at("e3").is_null()) p.e3 = e.at("e3").get<int>();
    if (e.contains("aut")) p.aut = e.at("aut").get<std::vector<std::string>>();
    if (e.contains("genus2")) p.genus2 = e.at("genus2").get<bool>();
    if (e.contains("preimage")) {
      const auto& pre = e.at("preimage");
      std::string var = pre.at("var");
      p.preimage = QuarticPreimage{registry_upoly(pre.at("quartic"), F, var), registry_upoly(pre.at("u"), F, var)};
    }
    p.source = e.value("source", "");
    if (e.contains("notes")) p.notes = e.at("notes").get<std::vector<std::string>>();
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace detail

// The registry, loaded once from registry.json after checksum verification.
inline const std::vector<SpecialPoint>& special_points() {
  static const std::vector<SpecialPoint> reg = detail::parse_registry(data::read_verified("registry.json"));
  return reg;
}

inline const SpecialPoint& special_point(const std::string& id) {
  for (const auto& p : special_points())
    if (p.id == id) return p;
  throw Error(Errc::UnknownVariable, "no special point '" + id + "'");
}

// The (u, v) point in F[v]/(quartic) over the point's field, v the generator.
inline UVPoint<Tower> preimage_point(const QuarticPreimage& pre) {
  auto T = quotient_ring(pre.quartic, pre.quartic.var());
  Tower v = T->gen();
  Tower u(Rational(0));
  for (std::size_t k = pre.u_of_v.coeffs().size(); k-- > 0;) u = u * v + T->element({pre.u_of_v.coeffs()[k]});
  return {u, v};
}

// A registry scalar of Q(√d) (or Q) in the scalar type S, given an element of
// S that fixes the field. nullopt if √d is not there.
template <class S>
std::optional<S> embed_scalar(const NF& x, const S& context) {
  if (!x.field() || x.in_base()) return S(x.base_value());
  const auto& F = *x.field();
  if (F.degree() != 2) throw Error(Errc::UnsupportedDegree, "registry scalars live in quadratic fields");
  auto Q = detail::quadratic_data(F);
  auto [A, B] = detail::delta_coords(x, Q);
  auto r = rational_sqrt_in(Q.d, context);
  if (!r) return std::nullopt;
  return S(A) + S(B) * *r;
}

}  // namespace trigonal
