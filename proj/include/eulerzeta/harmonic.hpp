#pragma once

#include <vector>

#include "eulerzeta/rational.hpp"

namespace eulerzeta {

/// Exact table of generalized harmonic numbers H_n^{(k)}, defined by
/// H_n^{(0)} = 1 and H_n^{(k)} = sum_{j=1}^{n} H_j^{(k-1)} / j.
/// These are not the classical h_n^{(k)} = sum 1/j^k; H_n^{(1)} = h_n^{(1)}
/// is the ordinary harmonic number, and 1 <= H_n^{(k)} <= n for all n, k >= 1.
class HarmonicTable {
 public:
  HarmonicTable(unsigned max_n, unsigned max_k);

  /// H_n^{(k)} for 1 <= n <= max_n, 0 <= k <= max_k.
  const Rational& at(unsigned n, unsigned k) const;

  unsigned max_n() const { return max_n_; }
  unsigned max_k() const { return max_k_; }

 private:
  unsigned max_n_;
  unsigned max_k_;
  std::vector<Rational> values_;  // [k * max_n + (n-1)]
};

/// Classical h_n^{(k)} = sum_{j=1}^{n} 1/j^k; h_n^{(1)} is the ordinary
/// harmonic number.
Rational harmonic_classical(unsigned n, unsigned k);

/// Single H_n^{(k)} by the defining recursion.
Rational harmonic_generalized(unsigned n, unsigned k);

/// H_n^{(k)} is a symmetric function of {1, 1/2, ..., 1/n}; the first three
/// orders decompose over classical power sums:
///   H_n^{(1)} = h_n^{(1)},
///   H_n^{(2)} = H_n^2/2 + h_n^{(2)}/2,
///   H_n^{(3)} = H_n^3/6 + H_n h_n^{(2)}/2 + h_n^{(3)}/3.
struct SymmetricIdentityCheck {
  bool order1 = false;
  bool order2 = false;
  bool order3 = false;
  bool all() const { return order1 && order2 && order3; }
};

SymmetricIdentityCheck symmetric_identity_check(unsigned n);

}  // namespace eulerzeta
