#pragma once

#include <string>

#include "eulerzeta/zeta_accel.hpp"

namespace eulerzeta {

/// An exact reference value of the form exact_factor * pi^pi_power,
/// evaluated at working precision.
struct ClosedValue {
  std::string expression_tag;
  BigReal value;
  Rational exact_factor;
  unsigned pi_power = 0;
};

/// zeta(2l) = (-1)^{l+1} B_{2l} (2 pi)^{2l} / (2 (2l)!), l >= 1.
ClosedValue zeta_even_closed(unsigned l, const PrecisionConfig& cfg);

/// Centered odd-order values (Euler):
///   M(2m, m, 2k+1) = pi^{2k+1} (-1)^k E_{2k} / (2 (2m)^{2k+1} (2k)!),
/// together with the two-sided sum S_hat(2k+1, 2m, m) = 2 M(2m, m, 2k+1).
struct OddCenterClosed {
  ClosedValue m_value;
  ClosedValue two_sided;
};

OddCenterClosed m_odd_center_closed(unsigned m, unsigned k, const PrecisionConfig& cfg);

/// S(2k,4,1) = 4^{-2k} (zeta(2k,1/4) + zeta(2k,3/4))
///           = pi^{2k} (2^{2k}-1) (-1)^{k+1} B_{2k} / (2 (2k)!), k >= 1.
ClosedValue s_4_1_closed(unsigned k, const PrecisionConfig& cfg);

/// Verifies 16K = zeta(2,1/4) - zeta(2,3/4) and
/// zeta(2,1/4) + zeta(2,3/4) = 2 pi^2 using catalan() and hurwitz_rational,
/// and solves for zeta(2,1/4) = pi^2 + 8K as a by-product.
struct CatalanHurwitzRelation {
  bool difference_ok = false;
  bool sum_ok = false;
  BigReal zeta2_quarter;
};

CatalanHurwitzRelation catalan_hurwitz_relation(const PrecisionConfig& cfg);

/// pi^{2l} = (-1)^{l+1} (2l)! / ((2^{2l-1}-1) B_{2l}) * sum_{n>=1} H_n^{(2l-1)}/(n 2^n).
SeriesResult pi_power_series(unsigned l, const PrecisionConfig& cfg);

/// M(m,i,k) + (-1)^{k+1} M(m,m-i,k) for 1 <= i <= m-1, evaluated by m_accel.
/// For k odd, m even, i = m/2 this is 2 M(m, m/2, k); in general the value is
/// pi^k times an analytic constant with no constructive recipe, so only the
/// numeric value is returned.
SeriesResult parity_combination(const RationalArgument& arg, const PrecisionConfig& cfg);

}  // namespace eulerzeta
