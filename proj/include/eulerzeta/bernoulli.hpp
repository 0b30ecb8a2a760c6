#pragma once

#include "eulerzeta/rational.hpp"

namespace eulerzeta {

/// Bernoulli number B_n with the B_1 = -1/2 convention, from the recurrence
/// sum_{j=0}^{n} binom(n+1,j) B_j = 0. Only even indices are consumed by the
/// closed forms downstream, so the sign convention at n = 1 is inert there.
Rational bernoulli(unsigned n);

/// Secant Euler number E_n for even n, from sum_{j=0}^{n/2} binom(n,2j) E_2j = 0
/// with E_0 = 1. Odd n is rejected (E_odd = 0 by convention; no caller wants it).
Integer euler_number(unsigned n);

}  // namespace eulerzeta
