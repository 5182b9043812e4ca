#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trigonal/arith/rational.hpp"
#include "trigonal/error.hpp"
#include "trigonal/poly/gcd.hpp"
#include "trigonal/poly/mpoly.hpp"

namespace trigonal {

// Quotient of two polynomials over Q. Arithmetic does not cancel common factors;
// normalize() does (gcd removal, denominator with leading coefficient 1).
class RatFunc {
 public:
  using Poly = MPoly<Rational>;

  RatFunc() : n_(), d_(Rational(1)) {}
  RatFunc(const Rational& c) : n_(c), d_(Rational(1)) {}
  RatFunc(int c) : RatFunc(Rational(c)) {}
  RatFunc(long c) : RatFunc(Rational(c)) {}
  RatFunc(Poly n) : n_(std::move(n)), d_(Rational(1)) {}
  RatFunc(Poly n, Poly d) : n_(std::move(n)), d_(std::move(d)) {
    if (d_.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
  }

  const Poly& num() const { return n_; }
  const Poly& den() const { return d_; }
  bool is_zero() const { return n_.is_zero(); }

  RatFunc normalized() const {
    if (n_.is_zero()) return RatFunc(Poly::constant(vars(), Rational(0)), Poly::constant(vars(), Rational(1)));
    Poly g = gcd(n_, d_);
    Poly n = exact_divide(n_, g), d = exact_divide(d_, g);
    Rational l = d.lc();
    return RatFunc(n.scaled(l.inverse()), d.scaled(l.inverse()));
  }

  RatFunc operator-() const { return RatFunc(-n_, d_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.d_ == b.d_) return RatFunc(a.n_ + b.n_, a.d_);
    return RatFunc(a.n_ * b.d_ + b.n_ * a.d_, a.d_ * b.d_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.n_ * b.n_, a.d_ * b.d_); }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.n_.is_zero()) throw Error(Errc::DivisionByZero, "rational function division by zero");
    return RatFunc(a.n_ * b.d_, a.d_ * b.n_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  // Equality by cross-multiplication.
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.n_ * b.d_ == b.n_ * a.d_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  // Quotient-rule derivative, normalized.
  RatFunc derivative(int i) const {
    Poly n = n_.derivative(i) * d_ - n_ * d_.derivative(i);
    return RatFunc(std::move(n), d_ * d_).normalized();
  }
  RatFunc derivative(std::string_view var) const {
    const VarList& v = vars();
    if (!v) throw Error(Errc::UnknownVariable, "constant rational function has no variable '" + std::string(var) + "'");
    for (std::size_t i = 0; i < v->size(); ++i)
      if ((*v)[i] == var) return derivative(static_cast<int>(i));
    throw Error(Errc::UnknownVariable, "no variable '" + std::string(var) + "'");
  }

  // Exact value at a point; `guard` names the denominator for error reporting.
  template <class T>
  T eval(const std::vector<T>& point, const std::string& guard = "denominator=0") const {
    T dv = d_.eval<T>(point);
    if (dv.is_zero()) throw Error(Errc::PoleAtPoint, "denominator vanishes at the point", guard);
    return n_.eval<T>(point) / dv;
  }

  const VarList& vars() const { return n_.vars() ? n_.vars() : d_.vars(); }

  std::string str() const {
    if (d_.is_constant() && d_.constant_value().is_one()) return n_.str();
    return "(" + n_.str() + ") / (" + d_.str() + ")";
  }

 private:
  Poly n_, d_;
};

// p(x_1, ..., x_n) with x_i = vals[i], over the common denominator prod d_i^deg_i.
inline RatFunc compose(const MPoly<Rational>& p, const std::vector<RatFunc>& vals) {
  using Poly = MPoly<Rational>;
  const int n = p.nvars();
  if (static_cast<int>(vals.size()) < n) throw Error(Errc::UnknownVariable, "not all variables bound");
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<std::vector<Poly>> np(static_cast<std::size_t>(n)), dp(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::size_t k = static_cast<std::size_t>(i);
    deg[k] = std::max(p.degree_in(i), 0);
    np[k] = {Poly(Rational(1))};
    dp[k] = {Poly(Rational(1))};
    for (int e = 1; e <= deg[k]; ++e) {
      np[k].push_back(np[k].back() * vals[k].num());
      dp[k].push_back(dp[k].back() * vals[k].den());
    }
  }
  Poly num(Rational(0)), den(Rational(1));
  for (const auto& [m, c] : p.terms()) {
    Poly t(c);
    for (int i = 0; i < n; ++i) {
      std::size_t k = static_cast<std::size_t>(i);
      int e = m.exp(i);
      t = t * np[k][static_cast<std::size_t>(e)] * dp[k][static_cast<std::size_t>(deg[k] - e)];
    }
    num += t;
  }
  for (int i = 0; i < n; ++i) den = den * dp[static_cast<std::size_t>(i)].back();
  return RatFunc(num, den);
}

}  // namespace trigonal
