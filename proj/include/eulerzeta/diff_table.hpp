#pragma once

#include <vector>

#include "eulerzeta/rational.hpp"

namespace eulerzeta {

/// Table of normalized finite differences of the power sequence
/// a_j = 1/(m j + i)^k. Writing A(n,k) for the signed binomial sum
/// (see diff_power_direct), the entries are C(n,k) := A(n,k) / A(n,1),
/// generated without any A evaluations by
///   C(0,k) = i^{1-k},
///   C(n,0) = 0 for n >= 1,
///   C(n,k) = C(n-1,k) + C(n,k-1) / (m n + i),  n, k >= 1.
/// Consequences used throughout: C(n,1) = 1, C increases along n, and for
/// m = i = 1, C(n,k) = H_{n+1}^{(k-1)}.
///
/// m and i are arbitrary-precision: the Hurwitz telescope instantiates
/// tables with i ~ 2^t m far beyond 64 bits.
class DiffTable {
 public:
  DiffTable(Integer m, Integer i, unsigned max_n, unsigned max_k);

  const Rational& at(unsigned n, unsigned k) const;

  const Integer& step() const { return m_; }
  const Integer& offset() const { return i_; }
  unsigned max_n() const { return max_n_; }
  unsigned max_k() const { return max_k_; }

 private:
  Integer m_;
  Integer i_;
  unsigned max_n_;
  unsigned max_k_;
  std::vector<Rational> entries_;  // [n * (max_k+1) + k]
};

inline DiffTable build_diff_table(const Integer& m, const Integer& i,
                                  unsigned max_n, unsigned max_k) {
  return DiffTable(m, i, max_n, max_k);
}

/// The raw signed binomial sum
///   A(n,k) = sum_{j=0}^{n} (-1)^j binom(n,j) / (m j + i)^k,
/// exact for any integer k (negative k multiplies by powers instead of
/// dividing). Serves as the oracle for diff_power_closed.
Rational diff_power_direct(const Integer& m, const Integer& i, long k, unsigned n);

/// Closed form of the same quantity for k >= 1:
///   A(n,k) = n! / (m (i/m)_{n+1}) * C(n,k),
/// with C(n,k) taken from a table built for the same (m, i).
Rational diff_power_closed(const Integer& m, const Integer& i, long k, unsigned n,
                           const DiffTable& table);

}  // namespace eulerzeta
