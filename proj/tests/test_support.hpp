#pragma once

#include <random>
#include <vector>

#include "trigonal/arith/number_field.hpp"
#include "trigonal/arith/rational.hpp"

namespace trigonal::testing {

inline Rational random_rational(std::mt19937_64& rng, long num_range = 40, long den_max = 9) {
  std::uniform_int_distribution<long> n(-num_range, num_range), d(1, den_max);
  return Rational(mpz_class(n(rng)), mpz_class(d(rng)));
}

inline Rational random_nonzero(std::mt19937_64& rng, long num_range = 40, long den_max = 9) {
  for (;;) {
    Rational r = random_rational(rng, num_range, den_max);
    if (!r.is_zero()) return r;
  }
}

inline NFElement<Rational> random_element(std::mt19937_64& rng, const NumberField<Rational>::Ptr& K) {
  std::vector<Rational> c;
  for (int i = 0; i < K->degree(); ++i) c.push_back(random_rational(rng));
  return K->element(c);
}

}  // namespace trigonal::testing
