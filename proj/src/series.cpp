#include "eulerzeta/series.hpp"

#include <cmath>

namespace eulerzeta {

unsigned PrecisionConfig::working_bits() const {
  unsigned log_terms = 0;
  while ((1u << log_terms) < max_terms && log_terms < 31) ++log_terms;
  return precision_bits + 32 + log_terms;
}

PrecisionConfig PrecisionConfig::eps_shifted(long shift) const {
  PrecisionConfig out = *this;
  out.target_eps = ldexp2(target_eps, -shift);
  return out;
}

PrecisionConfig PrecisionConfig::with_eps(const BigReal& eps) const {
  PrecisionConfig out = *this;
  out.target_eps = eps;
  return out;
}

SeriesResult sum_ratio_bounded_series(const TermGenerator& term,
                                      const TermGenerator& ratio_bound,
                                      const PrecisionConfig& cfg) {
  const unsigned wp = cfg.working_bits();
  const BigReal one(1, wp);
  BigReal acc(wp);
  BigReal best_bound(wp);
  bool have_bound = false;

  for (unsigned n = 0; n < cfg.max_terms; ++n) {
    const BigReal t = term(n);
    acc += t;
    const BigReal r = ratio_bound(n);
    if (r.is_negative() || r >= one) continue;  // no certificate at this index
    const BigReal bound = abs(t) * r / (one - r);
    best_bound = bound;
    have_bound = true;
    if (bound <= cfg.target_eps)
      return {std::move(acc), bound, n + 1, true};
  }
  if (!have_bound) {
    // Nothing certified: report an infinite bound rather than a fake one.
    BigReal inf(wp);
    mpfr_set_inf(inf.raw(), 1);
    best_bound = std::move(inf);
  }
  return {std::move(acc), std::move(best_bound), cfg.max_terms, false};
}

SeriesResult sum_positive_series(const TermGenerator& term,
                                 const TermGenerator& ratio_bound,
                                 const PrecisionConfig& cfg) {
  return sum_ratio_bounded_series(term, ratio_bound, cfg);
}

SeriesResult sum_alternating_series(const TermGenerator& term,
                                    unsigned monotone_from,
                                    const PrecisionConfig& cfg) {
  const unsigned wp = cfg.working_bits();
  BigReal acc(wp);
  BigReal next = term(0);
  for (unsigned n = 0; n < cfg.max_terms; ++n) {
    acc += next;
    next = term(n + 1);
    if (n + 1 >= monotone_from && abs(next) <= cfg.target_eps)
      return {std::move(acc), abs(next), n + 1, true};
  }
  return {std::move(acc), abs(next), cfg.max_terms, false};
}

}  // namespace eulerzeta
