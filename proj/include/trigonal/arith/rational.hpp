#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "trigonal/error.hpp"

namespace trigonal {

// Canonical rational number: gcd(num, den) = 1, den > 0, zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  Rational(long long n) : q_(mpz_class(std::to_string(n))) {}
  Rational(unsigned long n) : q_(n) {}
  Rational(const mpz_class& n) : q_(n) {}
  Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  // Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    auto e = s.find_last_not_of(" \t\r\n");
    if (b == std::string_view::npos) throw Error(Errc::ParseError, "empty rational");
    std::string t(s.substr(b, e - b + 1));
    auto slash = t.find('/');
    auto valid_int = [](const std::string& x) {
      std::size_t i = (!x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
      if (i == x.size()) return false;
      for (; i < x.size(); ++i)
        if (x[i] < '0' || x[i] > '9') return false;
      return true;
    };
    auto to_mpz = [](std::string x) {
      if (!x.empty() && x[0] == '+') x.erase(0, 1);
      return mpz_class(x, 10);
    };
    if (slash == std::string::npos) {
      if (!valid_int(t)) throw Error(Errc::ParseError, "bad rational '" + t + "'");
      return Rational(to_mpz(t));
    }
    std::string n = t.substr(0, slash), d = t.substr(slash + 1);
    if (!valid_int(n) || !valid_int(d) || d[0] == '-' || d[0] == '+')
      throw Error(Errc::ParseError, "bad rational '" + t + "'");
    mpz_class dz = to_mpz(d);
    if (dz == 0) throw Error(Errc::ParseError, "zero denominator in '" + t + "'");
    return Rational(to_mpz(n), dz);
  }

  const mpq_class& get() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  std::string str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(Errc::DivisionByZero, "rational division by zero");
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  Rational inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    return Rational(mpq_class(1) / q_);
  }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  // Exact square root when this is the square of a rational.
  std::optional<Rational> sqrt() const {
    if (sign() < 0) return std::nullopt;
    mpz_class n = q_.get_num(), d = q_.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
      return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
  }

  std::size_t hash() const {
    return std::hash<std::string>{}(q_.get_num().get_str(16)) * 31u +
           std::hash<std::string>{}(q_.get_den().get_str(16));
  }

 private:
  mpq_class q_;
};

inline Rational pow(Rational b, unsigned e) {
  Rational r(1);
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

}  // namespace trigonal

template <>
struct std::hash<trigonal::Rational> {
  std::size_t operator()(const trigonal::Rational& r) const { return r.hash(); }
};
