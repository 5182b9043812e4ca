#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trigonal/error.hpp"
#include "trigonal/poly/ratfunc.hpp"

namespace trigonal {

// num / prod(base_k ^ exp_k). Each denominator factor carries the name of the
// excluded locus it cuts out, so a vanishing factor is reported precisely.
template <class S>
struct Fraction {
  struct Factor {
    S base;
    unsigned exp;
    std::string guard;
  };
  S num;
  std::vector<Factor> den;

  Fraction(S n) : num(std::move(n)) {}
  Fraction(S n, std::vector<Factor> d) : num(std::move(n)), den(std::move(d)) {}

  // First vanishing factor's guard, or empty.
  std::string pole() const {
    for (const auto& f : den)
      if (f.base.is_zero()) return f.guard;
    return {};
  }

  // Exact value in a field; throws PoleAtPoint naming the guard.
  S value() const {
    S d = num * S(0) + S(1);
    for (const auto& f : den) {
      if (f.base.is_zero()) throw Error(Errc::PoleAtPoint, "denominator factor vanishes", f.guard);
      d = d * pow(f.base, f.exp);
    }
    return num / d;
  }

  // Symbolic rational function (S = MPoly<Rational>).
  RatFunc ratfunc() const {
    MPoly<Rational> d(Rational(1));
    for (const auto& f : den) d = d * pow(f.base, f.exp);
    return RatFunc(num, d);
  }
};

}  // namespace trigonal
