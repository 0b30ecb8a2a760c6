#pragma once

#include <utility>
#include <vector>

#include "eulerzeta/diff_table.hpp"
#include "eulerzeta/harmonic.hpp"
#include "eulerzeta/series.hpp"

namespace eulerzeta {

/// Index triple (m, i, k) of the alternating progression sum
///   M(m,i,k) = sum_{j>=0} (-1)^j / (m j + i)^k.
/// i may equal m (the dyadic Hurwitz telescope needs that case; the
/// recursions support it). m and i are arbitrary-precision because the
/// telescope doubles m per stage.
struct RationalArgument {
  Integer m;
  Integer i;
  long k = 1;

  RationalArgument(Integer m_, Integer i_, long k_)
      : m(std::move(m_)), i(std::move(i_)), k(k_) {}
  RationalArgument(long m_, long i_, long k_) : m(m_), i(i_), k(k_) {}

  /// Throws std::invalid_argument unless m >= 1 and 1 <= i <= m.
  void validate() const;
};

/// Exact n-th term of the Euler-transformed series for M(m,i,k):
///   t_n = n! / (2^{n+1} m (i/m)_{n+1}) * C(n,k).
/// The table must match (m, i) and cover (n, k).
Rational m_series_term(const RationalArgument& arg, unsigned n, const DiffTable& table);

/// M(m,i,k) for k >= 1 by the Euler-transformed series. Every term is
/// positive and the certified term ratio is 1/2, so the tail after t_n is
/// at most t_n.
SeriesResult m_accel(const RationalArgument& arg, const PrecisionConfig& cfg);

/// First N exact partial sums of the defining alternating series
/// sum (-1)^j/(m j+i)^k, the naive baseline for benchmarks.
std::vector<Rational> m_naive(const RationalArgument& arg, unsigned N);

/// Alternating zeta (Dirichlet eta) zetahat(k) = sum_{j>=1} (-1)^{j-1}/j^k,
/// by the transformed series sum_{n>=1} H_n^{(k-1)}/(n 2^n).
/// zetahat(0) = 1/2 is returned as a closed value (terms_used = 0).
SeriesResult zetahat(long k, const PrecisionConfig& cfg);

/// zetahat(k) for k >= 1 evaluated from a caller-supplied harmonic table
/// (must have max_k >= k-1). Lets callers that need many orders share one
/// table; reports non-convergence if the table has too few rows.
SeriesResult zetahat_from_table(long k, const HarmonicTable& table,
                                const PrecisionConfig& cfg);

/// zeta(k) = 2^{k-1}/(2^{k-1}-1) * zetahat(k) for integer k >= 2
/// (k < 2 rejected: pole at 1). Tail bound scaled by the same prefactor.
SeriesResult zeta_int(long k, const PrecisionConfig& cfg);

/// Exact n-th term of the Catalan series
///   K = sum_{n>=0} n! (H_{2n+1} - H_n/2) / (2 (2n+1)!!),  H_0 = 0.
Rational catalan_series_coefficient(unsigned n);

/// Catalan's constant by the series above; agrees with m_accel(2,1,2)
/// term by term.
SeriesResult catalan(const PrecisionConfig& cfg);

/// Checks the two-sided truncation envelope of the zeta(k) series against a
/// higher-precision reference:
///   (ln2 - 1/2)/(2^{m+1}(m+1))
///     <= | zeta(k) - prefactor * sum_{n=0}^{m} H_{n+1}^{(k-1)}/(2^{n+1}(n+1)) |
///     <= 1/2^{m+1}.
/// Returns (lower_ok, upper_ok). The partial sum is exact.
std::pair<bool, bool> partial_sum_envelope(long k, unsigned m_terms,
                                           const PrecisionConfig& cfg);

/// Certified bracket for the Hurwitz value zeta(k, a) = sum_{j>=0} (j+a)^{-k},
/// k >= 2, a in (0,1], by integral comparison:
///   lo = sum_{j<N} (j+a)^{-k} + (N+a)^{1-k}/(k-1),
///   hi = sum_{j<N} (j+a)^{-k} + (N-1+a)^{1-k}/(k-1).
/// The true value lies in [lo, hi]; the returned ends are widened by the
/// accumulated rounding slack so the containment is honest.
std::pair<BigReal, BigReal> hurwitz_naive_bracket(long k, const Rational& a,
                                                  unsigned long N,
                                                  unsigned precision_bits);

/// zeta(k, i/m) for integer k >= 2 and 1 <= i <= m, by the dyadic telescope
///   sum_{j>=0}(m j+i)^{-k} = sum_{t=0}^{T} 2^t M(2^t m, (2^t-1)m+i, k) + 2^{T+1} S_T,
/// each stage evaluated by m_accel and the final S-tail bracketed by
/// integral comparison. tail_bound combines the stage bounds and the
/// bracket half-width.
SeriesResult hurwitz_rational(long k, const Integer& i, const Integer& m,
                              const PrecisionConfig& cfg);

/// Verifies M(m,i,k) = (2m)^{-k} (zeta(k, i/(2m)) - zeta(k, (m+i)/(2m)))
/// within the combined tail bounds (k >= 2).
bool m_hurwitz_identity_check(const RationalArgument& arg, const PrecisionConfig& cfg);

/// M(m,1,k) for k = 1..k_max. The sequence increases strictly in k and
/// tends to 1.
std::vector<BigReal> monotonicity_report(const Integer& m, long k_max,
                                         const PrecisionConfig& cfg);

}  // namespace eulerzeta
