#pragma once

#include <vector>

#include "trigonal/arith/rational.hpp"
#include "trigonal/poly/mpoly.hpp"

namespace trigonal {

namespace detail {

using QPoly = MPoly<Rational>;

inline QPoly normalize_unit(const QPoly& p) { return p.is_zero() ? p : p.monic(); }

QPoly mgcd(const QPoly& a, const QPoly& b);

// gcd of the coefficients of p viewed as a polynomial in variable i.
inline QPoly content_in(const UniPoly<QPoly>& u) {
  QPoly g;
  for (const auto& c : u.coeffs()) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalize_unit(c) : mgcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// gcd of the numerators over lcm of the denominators of every coefficient.
inline Rational rational_content(const UniPoly<QPoly>& u) {
  mpz_class n = 0, d = 1;
  for (const auto& x : u.coeffs())
    for (const auto& t : x.terms()) {
      mpz_gcd(n.get_mpz_t(), n.get_mpz_t(), t.second.num().get_mpz_t());
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), t.second.den().get_mpz_t());
    }
  return n == 0 ? Rational(1) : Rational(n, d);
}

// Primitive in the main variable and over Z, which keeps the remainder
// sequence from swelling.
inline UniPoly<QPoly> primitive_part(const UniPoly<QPoly>& u) {
  QPoly c = content_in(u);
  if (c.is_zero()) return u;
  std::vector<QPoly> cs;
  cs.reserve(u.coeffs().size());
  for (const auto& x : u.coeffs()) cs.push_back(c.is_constant() ? x : exact_divide(x, c));
  UniPoly<QPoly> r(std::move(cs), u.var());
  Rational k = rational_content(r).inverse();
  std::vector<QPoly> ks;
  ks.reserve(r.coeffs().size());
  for (const auto& x : r.coeffs()) ks.push_back(x.scaled(k));
  return UniPoly<QPoly>(std::move(ks), u.var());
}

inline QPoly mgcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return normalize_unit(b);
  if (b.is_zero()) return normalize_unit(a);
  if (a.is_constant() || b.is_constant()) return QPoly::constant(a.vars() ? a.vars() : b.vars(), Rational(1));
  VarList vars = a.vars() ? a.vars() : b.vars();
  // Cheap exits: one divides the other.
  if (a.total_degree() >= b.total_degree()) {
    if (divides(b, a)) return normalize_unit(b);
  } else if (divides(a, b)) {
    return normalize_unit(a);
  }
  // Main variable: present in both, of lowest degree; a variable present in only
  // one operand is eliminated through that operand's content.
  int n = static_cast<int>(vars->size());
  int best = -1, best_deg = 0;
  for (int i = 0; i < n; ++i) {
    int da = a.degree_in(i), db = b.degree_in(i);
    if (da > 0 && db == 0) return mgcd(content_in(a.to_univariate(i)), b);
    if (db > 0 && da == 0) return mgcd(a, content_in(b.to_univariate(i)));
    if (da > 0 && db > 0 && (best < 0 || std::max(da, db) < best_deg)) {
      best = i;
      best_deg = std::max(da, db);
    }
  }
  UniPoly<QPoly> A = a.to_univariate(best), B = b.to_univariate(best);
  QPoly c = mgcd(content_in(A), content_in(B));
  A = primitive_part(A);
  B = primitive_part(B);
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero() && B.degree() > 0) {
    UniPoly<QPoly> r = A.prem(B);
    A = std::move(B);
    B = r.is_zero() ? r : primitive_part(r);
  }
  if (!B.is_zero()) return normalize_unit(c);  // nonzero constant remainder: coprime in this variable
  QPoly g = QPoly::from_univariate(primitive_part(A), vars, best);
  return normalize_unit(c * g);
}

}  // namespace detail

// Greatest common divisor over Q, normalized to leading coefficient 1 in grlex order.
inline MPoly<Rational> gcd(const MPoly<Rational>& a, const MPoly<Rational>& b) { return detail::mgcd(a, b); }

}  // namespace trigonal
