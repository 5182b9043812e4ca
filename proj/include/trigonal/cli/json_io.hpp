#pragma once

// JSON encoding of exact scalars. A rational is the string "p/q" (or "p"); a
// number field element is {"field": [minpoly, low to high], "coeffs": [...]}.

#include <json.hpp>

#include <string>
#include <vector>

#include "trigonal/arith/number_field.hpp"
#include "trigonal/arith/rational.hpp"
#include "trigonal/arith/roots.hpp"
#include "trigonal/error.hpp"
#include "trigonal/poly/mpoly.hpp"

namespace trigonal::cli {

using json = nlohmann::ordered_json;
using NF = NFElement<Rational>;
using FieldPtr = NumberField<Rational>::Ptr;

inline json to_json(const Rational& x) { return x.str(); }

inline json field_json(const NumberField<Rational>& F) {
  json m = json::array();
  for (const auto& c : F.minpoly()) m.push_back(c.str());
  return m;
}

inline json to_json(const NF& x) {
  if (!x.field()) return x.base_value().str();
  json c = json::array();
  for (const auto& r : x.coeffs()) c.push_back(r.str());
  return {{"field", field_json(*x.field())}, {"coeffs", c}};
}

template <class S>
json to_json(const std::vector<S>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

namespace detail {

[[noreturn]] inline void bad(const std::string& what) { throw Error(Errc::ParseError, what); }

// "a, b, c" -> {"a", "b", "c"}
inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '\t') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) bad("expected a rational as a string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error&) {
    bad("not a rational: '" + j.get<std::string>() + "'");
  }
}

}  // namespace detail

// A field from its minimal polynomial, coefficients low to high, as a JSON
// array or a comma-separated string. The generator is called x.
inline FieldPtr parse_field(const json& j) {
  std::vector<Rational> m;
  if (j.is_string()) {
    for (const auto& s : detail::split_list(j.get<std::string>())) m.push_back(detail::parse_rational(json(s)));
  } else if (j.is_array()) {
    for (const auto& c : j) m.push_back(detail::parse_rational(c));
  } else {
    detail::bad("a field is given by its minimal polynomial coefficients");
  }
  return quotient_ring(UniPoly<Rational>(m, "x"), "x");
}

// A scalar: "p/q", an integer, a descriptor object, or, when F is set,
// polynomial text in its generator x such as "27 - 77/2*x".
inline NF parse_scalar(const json& j, const FieldPtr& F = nullptr) {
  if (j.is_object()) {
    if (!j.contains("field") || !j.contains("coeffs")) detail::bad("a field element needs 'field' and 'coeffs'");
    FieldPtr G = parse_field(j.at("field"));
    std::vector<Rational> c;
    for (const auto& x : j.at("coeffs")) c.push_back(detail::parse_rational(x));
    if (c.empty()) detail::bad("empty coefficient list");
    return G->element(c);
  }
  if (!F) return NF(detail::parse_rational(j));
  if (j.is_number_integer()) return F->element({detail::parse_rational(j)});
  if (!j.is_string()) detail::bad("expected a scalar");
  const std::string text = j.get<std::string>();
  MPoly<Rational> p;
  try {
    p = MPoly<Rational>::parse(text, make_vars({F->gen_name()}));
  } catch (const Error&) {
    detail::bad("not a field element: '" + text + "'");
  }
  NF x = p.eval<NF>({F->gen()});
  // constants come back without a field
  return x.field() ? x : F->element({x.base_value()});
}

// `n` scalars (any number when n = 0) from an array or a comma-separated string.
inline std::vector<NF> parse_scalars(const json& j, const FieldPtr& F, std::size_t n, const std::string& what) {
  std::vector<NF> out;
  if (j.is_string()) {
    for (const auto& s : detail::split_list(j.get<std::string>())) out.push_back(parse_scalar(json(s), F));
  } else if (j.is_array()) {
    for (const auto& x : j) out.push_back(parse_scalar(x, F));
  } else {
    detail::bad(what + ": expected a list of scalars");
  }
  if (n && out.size() != n) detail::bad(what + ": expected " + std::to_string(n) + " values, got " + std::to_string(out.size()));
  return out;
}

}  // namespace trigonal::cli
