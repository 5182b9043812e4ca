#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "trigonal/error.hpp"
#include "trigonal/poly/unipoly.hpp"

namespace trigonal {

namespace detail {

template <class R>
R ipow(const R& b, int e) {
  R r = b * R(0) + R(1);
  R x = b;
  while (e > 0) {
    if (e & 1) r = r * x;
    e >>= 1;
    if (e) x = x * x;
  }
  return r;
}

}  // namespace detail

// Resultant over an integral domain R by the subresultant PRS. R must provide
// exact_quotient(a, b). Normalized as the Sylvester determinant with the p-block
// above the q-block.
template <class R>
R resultant(UniPoly<R> p, UniPoly<R> q) {
  if (p.is_zero() || q.is_zero()) throw Error(Errc::ZeroPolynomial, "resultant of a zero polynomial");
  int sign = 1;
  if (p.degree() < q.degree()) {
    if ((p.degree() & 1) && (q.degree() & 1)) sign = -1;
    std::swap(p, q);
  }
  if (q.degree() == 0) {
    R r = detail::ipow(q.lc(), p.degree());
    return sign < 0 ? -r : r;
  }
  R g(1), h(1);
  UniPoly<R> A = std::move(p), B = std::move(q);
  for (;;) {
    int delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    UniPoly<R> rem = A.prem(B);
    A = std::move(B);
    if (rem.is_zero()) return R(0);
    R div = g * detail::ipow(h, delta);
    std::vector<R> cs = rem.coeffs();
    for (auto& c : cs) c = exact_quotient(c, div);
    B = UniPoly<R>(std::move(cs), A.var());
    g = A.lc();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_quotient(detail::ipow(g, delta), detail::ipow(h, delta - 1));
    }
    if (B.degree() == 0) {
      int da = A.degree();
      R r = exact_quotient(detail::ipow(B.lc(), da), detail::ipow(h, da - 1));
      return sign < 0 ? -r : r;
    }
  }
}

// Fraction-free determinant (Bareiss) over an integral domain.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> m) {
  const std::size_t n = m.size();
  if (n == 0) return R(1);
  R prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return R(0);
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_quotient(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

template <class R>
std::vector<std::vector<R>> sylvester_matrix(const UniPoly<R>& p, const UniPoly<R>& q) {
  const int m = p.degree(), n = q.degree();
  const std::size_t N = static_cast<std::size_t>(m + n);
  R zero = p.lc() * R(0);
  std::vector<std::vector<R>> s(N, std::vector<R>(N, zero));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[i][i + k] = p.coeff(static_cast<std::size_t>(m - k));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[n + i][i + k] = q.coeff(static_cast<std::size_t>(n - k));
  return s;
}

// Determinant of the Sylvester matrix; kept as an oracle for small degrees.
template <class R>
R sylvester_resultant(const UniPoly<R>& p, const UniPoly<R>& q) {
  if (p.is_zero() || q.is_zero()) throw Error(Errc::ZeroPolynomial, "resultant of a zero polynomial");
  return bareiss_determinant(sylvester_matrix(p, q));
}

// disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p).
template <class R>
R discriminant(const UniPoly<R>& p) {
  const int n = p.degree();
  if (n < 2) throw Error(Errc::DegreeTooSmall, "discriminant needs degree >= 2");
  R r = exact_quotient(resultant(p, p.derivative()), p.lc());
  return ((n * (n - 1) / 2) & 1) ? -r : r;
}

}  // namespace trigonal
