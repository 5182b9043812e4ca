#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "trigonal/arith/rational.hpp"
#include "trigonal/error.hpp"
#include "trigonal/poly/unipoly.hpp"

namespace trigonal {

template <class Base>
class NFElement;

// Base[x]/(m(x)) with m monic. Base is Rational or another NFElement (towers).
template <class Base>
class NumberField : public std::enable_shared_from_this<NumberField<Base>> {
 public:
  using Ptr = std::shared_ptr<const NumberField>;

  NumberField(std::vector<Base> monic_minpoly, std::string gen)
      : m_(std::move(monic_minpoly)), gen_(std::move(gen)) {}

  int degree() const { return static_cast<int>(m_.size()) - 1; }
  const std::vector<Base>& minpoly() const { return m_; }
  UniPoly<Base> modulus() const { return UniPoly<Base>(m_, gen_); }
  const std::string& gen_name() const { return gen_; }

  NFElement<Base> gen() const;
  NFElement<Base> element(std::vector<Base> coeffs) const;

  bool same_as(const NumberField& o) const { return this == &o || (m_ == o.m_); }

 private:
  std::vector<Base> m_;
  std::string gen_;
};

template <class Base>
class NFElement {
 public:
  using Field = NumberField<Base>;
  using FieldPtr = typename Field::Ptr;
  using base_type = Base;

  NFElement() : c_{Base(0)} {}
  NFElement(const Base& b) : c_{b} {}
  template <class T>
    requires(!std::is_same_v<std::decay_t<T>, NFElement> && !std::is_same_v<std::decay_t<T>, Base> &&
             std::is_constructible_v<Base, const T&>)
  NFElement(const T& t) : c_{Base(t)} {}

  NFElement(FieldPtr f, std::vector<Base> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    if (!f_) {
      if (c_.size() != 1) throw Error(Errc::FieldMismatch, "field-less element must be a constant");
      return;
    }
    reduce();
  }

  const FieldPtr& field() const { return f_; }
  // Power-basis coefficients, padded to the field degree.
  std::vector<Base> coeffs() const {
    if (!f_) return c_;
    std::vector<Base> r = c_;
    r.resize(static_cast<std::size_t>(f_->degree()), Base(0));
    return r;
  }
  Base coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Base(0); }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }
  // True when the value lies in Base (all higher coefficients vanish).
  bool in_base() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  Base base_value() const { return c_.empty() ? Base(0) : c_[0]; }

  NFElement operator-() const {
    NFElement r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  NFElement& operator+=(const NFElement& o) {
    unify(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Base(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  NFElement& operator-=(const NFElement& o) {
    unify(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Base(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  NFElement& operator*=(const NFElement& o) {
    unify(o);
    if (c_.empty() || o.c_.empty()) {
      c_.clear();
      return *this;
    }
    std::vector<Base> r(c_.size() + o.c_.size() - 1, Base(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    reduce();
    return *this;
  }
  NFElement& operator/=(const NFElement& o) {
    unify(o);
    return *this *= o.inverse_in(f_);
  }
  friend NFElement operator+(NFElement a, const NFElement& b) { return a += b; }
  friend NFElement operator-(NFElement a, const NFElement& b) { return a -= b; }
  friend NFElement operator*(NFElement a, const NFElement& b) { return a *= b; }
  friend NFElement operator/(NFElement a, const NFElement& b) { return a /= b; }

  friend bool operator==(const NFElement& a, const NFElement& b) {
    if (a.f_ && b.f_ && !a.f_->same_as(*b.f_)) throw Error(Errc::FieldMismatch, "comparing elements of different fields");
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    for (std::size_t i = 0; i < n; ++i)
      if (a.coeff(i) != b.coeff(i)) return false;
    return true;
  }
  friend bool operator!=(const NFElement& a, const NFElement& b) { return !(a == b); }

  // Extended Euclid on (lift(x), m).
  NFElement inverse() const { return inverse_in(f_); }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    const std::string g = f_ ? f_->gen_name() : "x";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      std::string cs = c_[i].str();
      bool compound = cs.find_first_of("+ ") != std::string::npos;
      if (i == 0) {
        out += cs;
      } else {
        out += (compound ? "(" + cs + ")" : cs) + "*" + g;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  template <class>
  friend class NumberField;

  NFElement inverse_in(const FieldPtr& f) const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero in number field");
    if (!f_ && !f) return NFElement(Base(1) / c_[0]);
    const FieldPtr& F = f_ ? f_ : f;
    if (in_base()) return NFElement(F, {Base(1) / c_[0]});
    UniPoly<Base> a(c_, F->gen_name());
    auto [g, s, t] = ext_gcd(a, F->modulus());
    if (g.degree() != 0) throw Error(Errc::NotInvertible, "modulus is reducible: nontrivial gcd " + g.str());
    return NFElement(F, s.coeffs().empty() ? std::vector<Base>{Base(0)} : s.coeffs());
  }

  void unify(const NFElement& o) {
    if (!f_) {
      f_ = o.f_;
    } else if (o.f_ && f_ != o.f_ && !f_->same_as(*o.f_)) {
      throw Error(Errc::FieldMismatch, "operands live in different number fields");
    }
  }
  void trim() {
    while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
  }
  void reduce() {
    if (!f_) {
      trim();
      return;
    }
    const auto& m = f_->minpoly();
    const std::size_t n = m.size() - 1;
    for (std::size_t k = c_.size(); k-- > n;) {
      if (c_[k].is_zero()) continue;
      Base t = c_[k];
      for (std::size_t i = 0; i <= n; ++i) c_[k - n + i] -= t * m[i];
    }
    if (c_.size() > n) c_.resize(n);
    if (c_.empty()) c_.push_back(Base(0));
    trim();
  }

  FieldPtr f_;
  std::vector<Base> c_;
};

template <class Base>
NFElement<Base> NumberField<Base>::gen() const {
  if (degree() == 1) return NFElement<Base>(this->shared_from_this(), {-m_[0]});
  return NFElement<Base>(this->shared_from_this(), {Base(0), Base(1)});
}

template <class Base>
NFElement<Base> NumberField<Base>::element(std::vector<Base> coeffs) const {
  if (coeffs.empty()) coeffs.push_back(Base(0));
  return NFElement<Base>(this->shared_from_this(), std::move(coeffs));
}

template <class Base>
NFElement<Base> exact_quotient(const NFElement<Base>& a, const NFElement<Base>& b) {
  return a / b;
}
inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

// Galois conjugate in a quadratic field Base(θ), θ² + pθ + q = 0: θ -> -p - θ.
template <class Base>
NFElement<Base> conjugate(const NFElement<Base>& x) {
  if (!x.field()) return x;
  if (x.field()->degree() != 2) throw Error(Errc::UnsupportedDegree, "conjugate needs a quadratic field");
  const Base& p = x.field()->minpoly()[1];
  Base a = x.coeff(0), b = x.coeff(1);
  return NFElement<Base>(x.field(), {a - b * p, -b});
}

template <class Base>
NFElement<Base> pow(NFElement<Base> b, unsigned e) {
  NFElement<Base> r(Base(1));
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

template <class T>
struct is_nf_element : std::false_type {};
template <class B>
struct is_nf_element<NFElement<B>> : std::true_type {};

}  // namespace trigonal
