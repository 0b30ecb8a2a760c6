#pragma once

// Shared helpers for the test suites: frozen reference digits and the
// independent naive oracles the accelerated evaluators are checked against.

#include <string>

#include "eulerzeta/big_real.hpp"

namespace testutil {

using eulerzeta::BigReal;

// 40-digit references (standard values).
inline const char* kPiDigits = "3.141592653589793238462643383279502884197";
inline const char* kLn2Digits = "0.6931471805599453094172321214581765680755";
inline const char* kCatalanDigits = "0.9159655941772190150546035149323841107741";
inline const char* kZeta3Digits = "1.202056903159594285399738161511449990765";

inline BigReal literal(const char* digits, unsigned bits = 256) {
  return BigReal::from_string(digits, bits);
}

inline BigReal eps(const char* decimal) { return BigReal::from_string(decimal, 64); }

// Pair-averaged partial sum of the alternating series sum_{j>=1} (-1)^{j-1} j^{-k}:
// (S_N + S_{N+1})/2, whose error is ~ k N^{-k-1}/4, far below the partial sums'
// own N^{-k} error. Independent of every accelerated path.
inline BigReal pair_averaged_eta(long k, unsigned long terms, unsigned bits) {
  BigReal sum(bits);
  BigReal base(bits);
  for (unsigned long j = 1; j <= terms; ++j) {
    mpfr_set_ui(base.raw(), j, MPFR_RNDN);
    const BigReal t = pow_int(base, -k);
    if (j % 2 == 1)
      sum += t;
    else
      sum -= t;
  }
  mpfr_set_ui(base.raw(), terms + 1, MPFR_RNDN);
  const BigReal half_next = ldexp2(pow_int(base, -k), -1);
  return (terms % 2 == 0) ? sum + half_next : sum - half_next;
}

// Same device for Catalan's constant sum_{j>=0} (-1)^j (2j+1)^{-2}.
inline BigReal pair_averaged_catalan(unsigned long terms, unsigned bits) {
  BigReal sum(bits);
  BigReal base(bits);
  for (unsigned long j = 0; j < terms; ++j) {
    mpfr_set_ui(base.raw(), 2 * j + 1, MPFR_RNDN);
    const BigReal t = pow_int(base, -2);
    if (j % 2 == 0)
      sum += t;
    else
      sum -= t;
  }
  mpfr_set_ui(base.raw(), 2 * terms + 1, MPFR_RNDN);
  const BigReal half_next = ldexp2(pow_int(base, -2), -1);
  return (terms % 2 == 0) ? sum + half_next : sum - half_next;
}

}  // namespace testutil
