#pragma once

#include <functional>
#include <string>

#include "eulerzeta/big_real.hpp"

namespace eulerzeta {

/// Precision request shared by every analytic evaluator.
/// working_bits() adds 32 guard bits plus ceil(log2(max_terms)) to absorb
/// accumulated rounding: n additions lose at most log2(n) bits.
struct PrecisionConfig {
  unsigned precision_bits = 128;
  BigReal target_eps = BigReal::from_string("1e-30", 64);
  unsigned max_terms = 10000;

  PrecisionConfig() = default;
  PrecisionConfig(unsigned bits, const std::string& eps_decimal, unsigned terms)
      : precision_bits(bits),
        target_eps(BigReal::from_string(eps_decimal, 64)),
        max_terms(terms) {}

  unsigned working_bits() const;

  /// Same request with target_eps divided by 2^shift.
  PrecisionConfig eps_shifted(long shift) const;
  /// Same request with the given epsilon.
  PrecisionConfig with_eps(const BigReal& eps) const;
};

/// A computed series value together with a certified bound on the discarded
/// tail. The bound covers truncation; rounding is absorbed by the guard bits
/// of the working precision (validated empirically against oracles).
struct SeriesResult {
  BigReal value;
  BigReal tail_bound;
  unsigned terms_used = 0;
  bool converged = false;
};

using TermGenerator = std::function<BigReal(unsigned)>;

/// Sums t_0 + t_1 + ... for non-negative terms. ratio_bound(n) must be a
/// certified upper bound on t_{j+1}/t_j for every j >= n; once it falls
/// below 1, the geometric majorant t_n * r/(1-r) bounds the tail and the
/// sum stops as soon as that majorant is <= target_eps.
/// Terms are requested sequentially from index 0.
SeriesResult sum_positive_series(const TermGenerator& term,
                                 const TermGenerator& ratio_bound,
                                 const PrecisionConfig& cfg);

/// Same engine for terms of arbitrary sign: ratio_bound(n) must bound
/// |t_{j+1}|/|t_j| for all j >= n, and the tail majorant uses |t_n|.
SeriesResult sum_ratio_bounded_series(const TermGenerator& term,
                                      const TermGenerator& ratio_bound,
                                      const PrecisionConfig& cfg);

/// Sums a signed alternating series whose term magnitudes decrease from
/// monotone_from on; stops once the next term magnitude is <= target_eps
/// and reports that magnitude as the Leibniz tail bound.
SeriesResult sum_alternating_series(const TermGenerator& term,
                                    unsigned monotone_from,
                                    const PrecisionConfig& cfg);

}  // namespace eulerzeta
