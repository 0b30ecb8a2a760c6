#pragma once

#include <span>
#include <stdexcept>

#include "eulerzeta/rational.hpp"

namespace eulerzeta {

inline Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
inline Rational rising_factorial(const Rational& a, unsigned n) {
  Rational out(1);
  Rational factor = a;
  for (unsigned j = 0; j < n; ++j) {
    out *= factor;
    factor += Rational(1);
  }
  return out;
}

/// n-th forward difference of a sequence, taken at its first element:
/// delta^n a_1 = sum_{m=0}^{n} (-1)^m binom(n,m) a_{m+1}.
/// seq[0] is a_1. Requires at least n+1 elements.
inline Rational finite_difference(std::span<const Rational> seq, unsigned n) {
  if (seq.size() < static_cast<size_t>(n) + 1)
    throw std::invalid_argument("finite_difference: sequence shorter than n+1");
  Rational out(0);
  for (unsigned m = 0; m <= n; ++m) {
    Rational term = Rational(binomial(n, m)) * seq[m];
    out += (m % 2 == 0) ? term : -term;
  }
  return out;
}

}  // namespace eulerzeta
