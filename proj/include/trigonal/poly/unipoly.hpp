#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "trigonal/error.hpp"

namespace trigonal {

// Dense univariate polynomial, coefficients low -> high; zero is the empty vector.
template <class S>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<S> c, std::string var = "x") : c_(std::move(c)), var_(std::move(var)) {
    trim();
  }
  static UniPoly constant(const S& s, std::string var = "x") { return UniPoly(std::vector<S>{s}, std::move(var)); }
  static UniPoly monomial(const S& s, std::size_t k, std::string var = "x") {
    std::vector<S> c(k + 1, s * S(0));
    c[k] = s;
    return UniPoly(std::move(c), std::move(var));
  }

  const std::string& var() const { return var_; }
  void set_var(std::string v) { var_ = std::move(v); }
  const std::vector<S>& coeffs() const& { return c_; }
  // By value on temporaries, so `for (x : f(...).coeffs())` cannot dangle.
  std::vector<S> coeffs() && { return std::move(c_); }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const S& lc() const {
    if (c_.empty()) throw Error(Errc::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
  }
  // Coefficient of x^i; `like` supplies the zero when i is out of range.
  S coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_like(); }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  UniPoly& operator+=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), o.zero_like());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    adopt_var(o);
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), o.zero_like());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    adopt_var(o);
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly({}, a.var_);
    std::vector<S> r(a.c_.size() + b.c_.size() - 1, a.c_[0] * S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r), a.var_);
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  friend UniPoly operator*(const S& s, UniPoly a) {
    for (auto& x : a.c_) x = s * x;
    a.trim();
    return a;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly({}, var_);
    std::vector<S> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(S(static_cast<long>(i)) * c_[i]);
    return UniPoly(std::move(r), var_);
  }

  // Horner evaluation in any ring T that accepts S coefficients.
  template <class T>
  T eval(const T& x) const {
    if (c_.empty()) return x * T(0);
    T acc = T(c_.back());
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + T(c_[i]);
    return acc;
  }
  S operator()(const S& x) const { return eval<S>(x); }

  // Field division with remainder.
  std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const {
    if (d.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    UniPoly r = *this;
    if (degree() < d.degree()) return {UniPoly({}, var_), r};
    std::vector<S> q(static_cast<std::size_t>(degree() - d.degree() + 1), d.zero_like());
    S inv = S(1) / d.lc();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      std::size_t k = static_cast<std::size_t>(r.degree() - d.degree());
      S t = r.lc() * inv;
      q[k] = t;
      for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[i + k] -= t * d.c_[i];
      r.trim();
    }
    return {UniPoly(std::move(q), var_), r};
  }
  UniPoly operator%(const UniPoly& d) const { return divrem(d).second; }
  UniPoly operator/(const UniPoly& d) const { return divrem(d).first; }

  // lc(d)^(deg - deg d + 1) * this = q*d + r; needs only ring operations.
  UniPoly prem(const UniPoly& d) const {
    if (d.is_zero()) throw Error(Errc::DivisionByZero, "pseudo-division by zero");
    UniPoly r = *this;
    int delta = degree() - d.degree() + 1;
    if (delta <= 0) return r;
    const S& l = d.lc();
    int steps = 0;
    while (!r.is_zero() && r.degree() >= d.degree()) {
      std::size_t k = static_cast<std::size_t>(r.degree() - d.degree());
      S t = r.lc();
      for (auto& x : r.c_) x = l * x;
      for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[i + k] -= t * d.c_[i];
      r.trim();
      ++steps;
    }
    for (; steps < delta; ++steps)
      for (auto& x : r.c_) x = l * x;
    r.trim();
    return r;
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    S inv = S(1) / lc();
    UniPoly r = *this;
    for (auto& x : r.c_) x = x * inv;
    return r;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + to_text(c_[i]) + ")";
      if (i >= 1) out += "*" + var_;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  S zero_like() const { return c_.empty() ? S(0) : c_[0] * S(0); }
  void adopt_var(const UniPoly& o) {
    if (var_.empty()) var_ = o.var_;
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  template <class T>
  static std::string to_text(const T& t) { return t.str(); }

  std::vector<S> c_;
  std::string var_ = "x";
};

// Monic gcd over a field.
template <class S>
UniPoly<S> gcd(UniPoly<S> a, UniPoly<S> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g, g monic (or zero).
template <class S>
std::tuple<UniPoly<S>, UniPoly<S>, UniPoly<S>> ext_gcd(const UniPoly<S>& a, const UniPoly<S>& b) {
  const std::string& v = a.var();
  UniPoly<S> r0 = a, r1 = b;
  UniPoly<S> s0 = UniPoly<S>::constant(S(1), v), s1({}, v);
  UniPoly<S> t0({}, v), t1 = UniPoly<S>::constant(S(1), v);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divrem(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly<S> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  S inv = S(1) / r0.lc();
  return {inv * r0, inv * s0, inv * t0};
}

}  // namespace trigonal
