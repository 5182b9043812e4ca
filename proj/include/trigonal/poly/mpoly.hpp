#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trigonal/arith/rational.hpp"
#include "trigonal/error.hpp"
#include "trigonal/poly/unipoly.hpp"

namespace trigonal {

inline constexpr int kMaxVars = 8;
inline constexpr int kMaxExp = 255;

// Exponent vector packed one byte per variable, variable 0 in the top byte, so
// comparing (deg, bits) is graded lexicographic order with var 0 largest.
struct Monomial {
  std::uint64_t bits = 0;
  std::uint32_t deg = 0;

  int exp(int i) const { return static_cast<int>((bits >> (8 * (7 - i))) & 0xffu); }
  void set(int i, int e) {
    int old = exp(i);
    bits &= ~(std::uint64_t{0xff} << (8 * (7 - i)));
    bits |= std::uint64_t(e) << (8 * (7 - i));
    deg = deg - static_cast<std::uint32_t>(old) + static_cast<std::uint32_t>(e);
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exp(i) > o.exp(i)) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) { return {a.bits + b.bits, a.deg + b.deg}; }
  friend Monomial operator/(const Monomial& a, const Monomial& b) { return {a.bits - b.bits, a.deg - b.deg}; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.bits == b.bits; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.bits != b.bits; }
  // Descending grlex: "a before b".
  friend bool operator>(const Monomial& a, const Monomial& b) {
    return a.deg != b.deg ? a.deg > b.deg : a.bits > b.bits;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) { return b > a; }
};

using VarList = std::shared_ptr<const std::vector<std::string>>;

inline VarList make_vars(std::vector<std::string> names) {
  if (names.size() > static_cast<std::size_t>(kMaxVars))
    throw Error(Errc::UnknownVariable, "at most 8 variables are supported");
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

inline bool same_vars(const VarList& a, const VarList& b) { return a == b || (a && b && *a == *b); }

template <class S>
class MPoly;

template <class T>
struct is_mpoly : std::false_type {};
template <class S>
struct is_mpoly<MPoly<S>> : std::true_type {};

// Sparse polynomial, terms sorted in descending grlex order. A polynomial with no
// variable list is a constant and adopts the ring of whatever it is combined with.
template <class S>
class MPoly {
 public:
  using Term = std::pair<Monomial, S>;
  using coeff_type = S;

  MPoly() = default;
  MPoly(const S& c) {
    if (!c.is_zero()) t_.push_back({Monomial{}, c});
  }
  template <class T>
    requires(!std::is_same_v<std::decay_t<T>, MPoly> && !std::is_same_v<std::decay_t<T>, S> &&
             !is_mpoly<std::decay_t<T>>::value && std::is_constructible_v<S, const T&>)
  MPoly(const T& t) : MPoly(S(t)) {}

  static MPoly constant(VarList vars, const S& c) {
    MPoly p(c);
    p.v_ = std::move(vars);
    return p;
  }
  static MPoly var(VarList vars, int i, const S& one = S(1)) {
    MPoly p;
    p.v_ = vars;
    Monomial m;
    m.set(i, 1);
    p.t_.push_back({m, one});
    return p;
  }
  static MPoly var(VarList vars, std::string_view name) {
    for (std::size_t i = 0; i < vars->size(); ++i)
      if ((*vars)[i] == name) return var(vars, static_cast<int>(i));
    throw Error(Errc::UnknownVariable, "no variable '" + std::string(name) + "'");
  }
  static MPoly from_terms(VarList vars, std::vector<Term> terms) {
    MPoly p;
    p.v_ = std::move(vars);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
    for (auto& t : terms) {
      if (!p.t_.empty() && p.t_.back().first == t.first) {
        p.t_.back().second += t.second;
      } else {
        p.t_.push_back(std::move(t));
      }
      if (p.t_.back().second.is_zero()) p.t_.pop_back();
    }
    return p;
  }

  const VarList& vars() const { return v_; }
  int nvars() const { return v_ ? static_cast<int>(v_->size()) : 0; }
  const std::vector<Term>& terms() const& { return t_; }
  std::vector<Term> terms() && { return std::move(t_); }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.deg == 0); }
  S constant_value() const {
    if (t_.empty()) return S(0);
    if (!is_constant()) throw Error(Errc::PreconditionViolated, "polynomial is not constant");
    return t_[0].second;
  }
  // Constant term (coefficient of the unit monomial).
  S constant_term() const {
    if (!t_.empty() && t_.back().first.deg == 0) return t_.back().second;
    return S(0);
  }
  const S& lc() const {
    if (t_.empty()) throw Error(Errc::ZeroPolynomial, "leading coefficient of zero polynomial");
    return t_[0].second;
  }
  const Monomial& lm() const {
    if (t_.empty()) throw Error(Errc::ZeroPolynomial, "leading monomial of zero polynomial");
    return t_[0].first;
  }
  int total_degree() const { return t_.empty() ? -1 : static_cast<int>(t_[0].first.deg); }
  int degree_in(int i) const {
    int d = t_.empty() ? -1 : 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.exp(i));
    return d;
  }
  int var_index(std::string_view name) const {
    if (v_)
      for (std::size_t i = 0; i < v_->size(); ++i)
        if ((*v_)[i] == name) return static_cast<int>(i);
    throw Error(Errc::UnknownVariable, "no variable '" + std::string(name) + "'");
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& t : r.t_) t.second = -t.second;
    return r;
  }
  MPoly& operator+=(const MPoly& o) { return *this = merge(*this, o, false); }
  MPoly& operator-=(const MPoly& o) { return *this = merge(*this, o, true); }
  MPoly& operator*=(const MPoly& o) { return *this = mul(*this, o); }
  friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }
  friend MPoly operator*(const MPoly& a, const MPoly& b) { return mul(a, b); }
  // Division is exact division (by constants or by divisors).
  friend MPoly operator/(const MPoly& a, const MPoly& b) { return exact_divide(a, b); }
  MPoly& operator/=(const MPoly& o) { return *this = exact_divide(*this, o); }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.v_ && b.v_ && !same_vars(a.v_, b.v_)) return false;
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
      if (a.t_[i].first != b.t_[i].first || a.t_[i].second != b.t_[i].second) return false;
    return true;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly scaled(const S& c) const {
    MPoly r;
    r.v_ = v_;
    if (c.is_zero()) return r;
    r.t_.reserve(t_.size());
    for (const auto& [m, x] : t_) {
      S y = x * c;
      if (!y.is_zero()) r.t_.push_back({m, std::move(y)});
    }
    return r;
  }
  MPoly monic() const { return t_.empty() ? *this : scaled(S(1) / lc()); }

  MPoly derivative(int i) const {
    MPoly r;
    r.v_ = v_;
    for (const auto& [m, c] : t_) {
      int e = m.exp(i);
      if (e == 0) continue;
      Monomial n = m;
      n.set(i, e - 1);
      r.t_.push_back({n, c * S(static_cast<long>(e))});
    }
    // Lowering one exponent can reorder terms of equal total degree.
    std::sort(r.t_.begin(), r.t_.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
    return r;
  }
  MPoly derivative(std::string_view name) const { return derivative(var_index(name)); }

  // Evaluate at values[i] for variable i, in any ring T accepting S coefficients.
  template <class T>
  T eval(const std::vector<T>& values) const {
    const int n = nvars();
    if (static_cast<int>(values.size()) < n) throw Error(Errc::UnknownVariable, "not all variables bound");
    T zero = T(S(0));
    if (t_.empty()) return values.empty() ? zero : values[0] * zero;
    std::vector<std::vector<T>> pw(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      int d = degree_in(i);
      auto& p = pw[static_cast<std::size_t>(i)];
      p.reserve(static_cast<std::size_t>(d) + 1);
      p.push_back(T(S(1)));
      for (int k = 1; k <= d; ++k) p.push_back(p.back() * values[static_cast<std::size_t>(i)]);
    }
    T acc = zero;
    for (const auto& [m, c] : t_) {
      T term = T(c);
      for (int i = 0; i < n; ++i) {
        int e = m.exp(i);
        if (e) term = term * pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)];
      }
      acc = acc + term;
    }
    return acc;
  }

  // Replace variable i by `value` (a polynomial in the same ring).
  MPoly substitute(int i, const MPoly& value) const {
    std::vector<MPoly> vals;
    for (int k = 0; k < nvars(); ++k) vals.push_back(k == i ? value : var(v_, k));
    return eval<MPoly>(vals);
  }

  // Coefficients with respect to variable i; they stay in the same ring.
  UniPoly<MPoly> to_univariate(int i) const {
    int d = degree_in(i);
    if (d < 0) return UniPoly<MPoly>({}, name_of(i));
    std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(d) + 1);
    for (const auto& [m, c] : t_) {
      Monomial n = m;
      int e = n.exp(i);
      n.set(i, 0);
      buckets[static_cast<std::size_t>(e)].push_back({n, c});
    }
    std::vector<MPoly> cs;
    cs.reserve(buckets.size());
    for (auto& b : buckets) {
      MPoly p;
      p.v_ = v_;
      p.t_ = std::move(b);  // same exponent of var i removed from each term: order is preserved
      cs.push_back(std::move(p));
    }
    return UniPoly<MPoly>(std::move(cs), name_of(i));
  }
  static MPoly from_univariate(const UniPoly<MPoly>& u, VarList vars, int i) {
    MPoly acc = constant(vars, S(0));
    MPoly x = var(vars, i);
    MPoly pw = constant(vars, S(1));
    for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
      if (!u.coeffs()[k].is_zero()) acc += u.coeffs()[k] * pw;
      if (k + 1 < u.coeffs().size()) pw *= x;
    }
    return acc;
  }

  // Re-express in a larger variable list (every current variable must be present).
  MPoly embed(const VarList& target) const {
    if (!v_ || same_vars(v_, target)) {
      MPoly r = *this;
      r.v_ = target;
      return r;
    }
    std::vector<int> map(static_cast<std::size_t>(nvars()));
    for (int i = 0; i < nvars(); ++i) {
      auto it = std::find(target->begin(), target->end(), (*v_)[static_cast<std::size_t>(i)]);
      if (it == target->end()) throw Error(Errc::UnknownVariable, "cannot embed: missing " + (*v_)[static_cast<std::size_t>(i)]);
      map[static_cast<std::size_t>(i)] = static_cast<int>(it - target->begin());
    }
    std::vector<Term> ts;
    ts.reserve(t_.size());
    for (const auto& [m, c] : t_) {
      Monomial n;
      for (int i = 0; i < nvars(); ++i) n.set(map[static_cast<std::size_t>(i)], m.exp(i));
      ts.push_back({n, c});
    }
    return from_terms(target, std::move(ts));
  }

  // Canonical text: "c * u^i * v^j" terms in descending grlex order.
  std::string str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < t_.size(); ++k) {
      const auto& [m, c] = t_[k];
      std::string cs = coeff_text(c);
      bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+ ", 1) == std::string::npos;
      if (neg) cs.erase(0, 1);
      if (k == 0) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      out += cs;
      for (int i = 0; i < nvars(); ++i) {
        int e = m.exp(i);
        if (e == 0) continue;
        out += " * " + name_of(i);
        if (e > 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

  friend MPoly pow(MPoly b, unsigned e) {
    MPoly r = constant(b.v_, S(1));
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1u;
      if (e) b *= b;
    }
    return r;
  }

  friend MPoly exact_divide(const MPoly& p, const MPoly& q) {
    if (q.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    VarList vars = unify(p.v_, q.v_);
    if (q.is_constant()) {
      MPoly r = p.scaled(S(1) / q.lc());
      r.v_ = vars;
      return r;
    }
    std::map<Monomial, S, std::greater<Monomial>> rem;
    for (const auto& [m, c] : p.t_) rem.emplace(m, c);
    std::vector<Term> quo;
    const Monomial& lq = q.t_[0].first;
    S inv = S(1) / q.t_[0].second;
    while (!rem.empty()) {
      auto it = rem.begin();
      if (!lq.divides(it->first)) {
        MPoly r;
        r.v_ = vars;
        for (auto& [m, c] : rem) r.t_.push_back({m, c});
        throw Error(Errc::NotDivisible, "nonzero remainder: " + r.str());
      }
      Monomial qm = it->first / lq;
      S qc = it->second * inv;
      for (const auto& [m, c] : q.t_) {
        Monomial pm = qm * m;
        auto f = rem.find(pm);
        if (f == rem.end()) {
          rem.emplace(pm, -(qc * c));
        } else {
          f->second -= qc * c;
          if (f->second.is_zero()) rem.erase(f);
        }
      }
      quo.push_back({qm, std::move(qc)});
    }
    MPoly r;
    r.v_ = vars;
    r.t_ = std::move(quo);
    return r;
  }

  // Returns true and sets `out` when q divides p.
  friend bool divides(const MPoly& q, const MPoly& p, MPoly* out = nullptr) {
    try {
      MPoly r = exact_divide(p, q);
      if (out) *out = std::move(r);
      return true;
    } catch (const Error& e) {
      if (e.code() == Errc::NotDivisible) return false;
      throw;
    }
  }

  static MPoly parse(std::string_view text, VarList vars);

 private:
  std::string name_of(int i) const {
    if (!v_ || i >= nvars()) return "x" + std::to_string(i);
    return (*v_)[static_cast<std::size_t>(i)];
  }
  template <class T>
  static std::string coeff_text(const T& c) {
    std::string s = c.str();
    if constexpr (!std::is_same_v<T, Rational>) {
      if (s.find_first_of("+ ", 1) != std::string::npos) return "(" + s + ")";
    }
    return s;
  }

  static VarList unify(const VarList& a, const VarList& b) {
    if (!a) return b;
    if (!b) return a;
    if (!same_vars(a, b)) throw Error(Errc::VariableMismatch, "polynomials live in different rings");
    return a;
  }

  static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
    MPoly r;
    r.v_ = unify(a.v_, b.v_);
    r.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
      if (j == b.t_.size() || (i < a.t_.size() && a.t_[i].first > b.t_[j].first)) {
        r.t_.push_back(a.t_[i++]);
      } else if (i == a.t_.size() || b.t_[j].first > a.t_[i].first) {
        r.t_.push_back({b.t_[j].first, subtract ? -b.t_[j].second : b.t_[j].second});
        ++j;
      } else {
        S c = subtract ? a.t_[i].second - b.t_[j].second : a.t_[i].second + b.t_[j].second;
        if (!c.is_zero()) r.t_.push_back({a.t_[i].first, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  static void check_exponents(const MPoly& a, const MPoly& b) {
    for (int i = 0; i < std::max(a.nvars(), b.nvars()); ++i) {
      if (a.degree_in(i) + b.degree_in(i) > kMaxExp)
        throw Error(Errc::PreconditionViolated, "exponent overflow (max 255 per variable)");
    }
  }

  static MPoly mul(const MPoly& a, const MPoly& b) {
    VarList vars = unify(a.v_, b.v_);
    if (a.is_zero() || b.is_zero()) {
      MPoly r;
      r.v_ = vars;
      return r;
    }
    if (a.is_constant()) {
      MPoly r = b.scaled(a.t_[0].second);
      r.v_ = vars;
      return r;
    }
    if (b.is_constant()) {
      MPoly r = a.scaled(b.t_[0].second);
      r.v_ = vars;
      return r;
    }
    check_exponents(a, b);
    std::unordered_map<std::uint64_t, S> acc;
    acc.reserve(a.t_.size() * b.t_.size() / 2 + 16);
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) {
        auto [it, fresh] = acc.try_emplace(ma.bits + mb.bits, ca * cb);
        if (!fresh) it->second += ca * cb;
      }
    MPoly r;
    r.v_ = vars;
    r.t_.reserve(acc.size());
    for (auto& [bits, c] : acc) {
      if (c.is_zero()) continue;
      Monomial m{bits, 0};
      for (int i = 0; i < kMaxVars; ++i) m.deg += static_cast<std::uint32_t>(m.exp(i));
      r.t_.push_back({m, std::move(c)});
    }
    std::sort(r.t_.begin(), r.t_.end(), [](const Term& x, const Term& y) { return x.first > y.first; });
    return r;
  }

  VarList v_;
  std::vector<Term> t_;
};

template <class S>
MPoly<S> exact_quotient(const MPoly<S>& a, const MPoly<S>& b) {
  return exact_divide(a, b);
}

// Convenience ring: fixed variable list plus generators.
template <class S>
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> names) : v_(make_vars(std::move(names))) {}
  explicit PolyRing(VarList v) : v_(std::move(v)) {}
  const VarList& vars() const { return v_; }
  MPoly<S> operator[](std::string_view name) const { return MPoly<S>::var(v_, name); }
  MPoly<S> gen(int i) const { return MPoly<S>::var(v_, i); }
  MPoly<S> constant(const S& c) const { return MPoly<S>::constant(v_, c); }
  MPoly<S> parse(std::string_view text) const { return MPoly<S>::parse(text, v_); }

 private:
  VarList v_;
};

namespace detail {

// Recursive-descent parser: sums, products, ^ with integer exponents, parentheses,
// integer or p/q literals, variables of the given ring.
template <class S>
class PolyParser {
 public:
  PolyParser(std::string_view s, VarList vars) : s_(s), v_(std::move(vars)) {}

  MPoly<S> run() {
    MPoly<S> p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    if (!p.vars()) p = MPoly<S>::constant(v_, p.is_zero() ? S(0) : p.constant_value());
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::ParseError, msg + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  MPoly<S> expr() {
    MPoly<S> acc;
    bool first = true;
    for (;;) {
      skip();
      bool neg = false;
      if (eat('-')) {
        neg = true;
      } else if (!first && !eat('+')) {
        break;
      } else if (first) {
        eat('+');
      }
      MPoly<S> t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }
  MPoly<S> term() {
    MPoly<S> acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }
  MPoly<S> factor() {
    MPoly<S> base = primary();
    if (eat('^')) {
      skip();
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (b == pos_) fail("exponent expected");
      unsigned long e = std::stoul(std::string(s_.substr(b, pos_ - b)));
      base = pow(base, static_cast<unsigned>(e));
    }
    return base;
  }
  MPoly<S> primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly<S> e = expr();
      if (!eat(')')) fail("')' expected");
      return e;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      return MPoly<S>(S(Rational::parse(s_.substr(b, pos_ - b))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t b = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(b, pos_ - b));
      if (!v_) fail("no variables in scope");
      return MPoly<S>::var(v_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  VarList v_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class S>
MPoly<S> MPoly<S>::parse(std::string_view text, VarList vars) {
  return detail::PolyParser<S>(text, std::move(vars)).run();
}

}  // namespace trigonal
