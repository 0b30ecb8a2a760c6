#include "eulerzeta/closed_forms.hpp"

#include <stdexcept>

#include "eulerzeta/bernoulli.hpp"
#include "eulerzeta/combinatorics.hpp"

namespace eulerzeta {

namespace {

ClosedValue make_closed(std::string tag, Rational factor, unsigned pi_power,
                        const PrecisionConfig& cfg) {
  const unsigned wp = cfg.working_bits();
  ClosedValue out{std::move(tag), BigReal(wp), std::move(factor), pi_power};
  out.value = BigReal::from_rational(out.exact_factor, wp) *
              pow_int(BigReal::pi(wp), static_cast<long>(pi_power));
  return out;
}

}  // namespace

ClosedValue zeta_even_closed(unsigned l, const PrecisionConfig& cfg) {
  if (l < 1) throw std::invalid_argument("zeta_even_closed: need l >= 1");
  // zeta(2l) = (-1)^{l+1} B_{2l} (2 pi)^{2l} / (2 (2l)!).
  Rational factor = bernoulli(2 * l) * Rational(Integer(1) << (2 * l)) /
                    Rational(2 * factorial(2 * l));
  if (l % 2 == 0) factor = -factor;
  return make_closed("zeta_even", factor, 2 * l, cfg);
}

OddCenterClosed m_odd_center_closed(unsigned m, unsigned k, const PrecisionConfig& cfg) {
  if (m < 1) throw std::invalid_argument("m_odd_center_closed: need m >= 1");
  // M(2m, m, 2k+1) = pi^{2k+1} (-1)^k E_{2k} / (2 (2m)^{2k+1} (2k)!).
  Rational factor = Rational(euler_number(2 * k)) /
                    Rational(2 * pow(Integer(2 * m), 2 * k + 1) * factorial(2 * k));
  if (k % 2 == 1) factor = -factor;
  OddCenterClosed out{make_closed("m_odd_center", factor, 2 * k + 1, cfg),
                      make_closed("s_hat_odd_center", factor * Rational(2), 2 * k + 1, cfg)};
  return out;
}

ClosedValue s_4_1_closed(unsigned k, const PrecisionConfig& cfg) {
  if (k < 1) throw std::invalid_argument("s_4_1_closed: need k >= 1");
  // S(2k,4,1) = pi^{2k} (2^{2k}-1) (-1)^{k+1} B_{2k} / (2 (2k)!).
  Rational factor = Rational((Integer(1) << (2 * k)) - 1) * bernoulli(2 * k) /
                    Rational(2 * factorial(2 * k));
  if (k % 2 == 0) factor = -factor;
  return make_closed("s_4_1", factor, 2 * k, cfg);
}

CatalanHurwitzRelation catalan_hurwitz_relation(const PrecisionConfig& cfg) {
  const unsigned wp = cfg.working_bits();
  const BigReal sixteen(16, wp);
  const BigReal eight(8, wp);
  const BigReal two(2, wp);

  const SeriesResult k_val = catalan(cfg);
  const SeriesResult z14 = hurwitz_rational(2, Integer(1), Integer(4), cfg);
  const SeriesResult z34 = hurwitz_rational(2, Integer(3), Integer(4), cfg);
  const BigReal pi_sq = pow_int(BigReal::pi(wp), 2);
  const BigReal slack =
      ldexp2(pi_sq + BigReal(1, wp), 8 - static_cast<long>(cfg.precision_bits));

  CatalanHurwitzRelation out;
  out.difference_ok = abs(sixteen * k_val.value - (z14.value - z34.value)) <=
                      sixteen * k_val.tail_bound + z14.tail_bound + z34.tail_bound + slack;
  out.sum_ok = abs(z14.value + z34.value - two * pi_sq) <=
               z14.tail_bound + z34.tail_bound + slack;
  out.zeta2_quarter = pi_sq + eight * k_val.value;
  return out;
}

SeriesResult pi_power_series(unsigned l, const PrecisionConfig& cfg) {
  if (l < 1) throw std::invalid_argument("pi_power_series: need l >= 1");
  const unsigned wp = cfg.working_bits();
  // pi^{2l} = (-1)^{l+1} (2l)! / ((2^{2l-1}-1) B_{2l}) * sum_{n>=1} H_n^{(2l-1)}/(n 2^n).
  Rational factor = Rational(factorial(2 * l)) /
                    (Rational((Integer(1) << (2 * l - 1)) - 1) * bernoulli(2 * l));
  if (l % 2 == 0) factor = -factor;

  const BigReal factor_real = BigReal::from_rational(factor, wp);
  const BigReal eps_inner = ldexp2(cfg.target_eps / abs(factor_real), -1);
  SeriesResult base = zetahat(2 * l, cfg.with_eps(eps_inner));
  base.value = factor_real * base.value;
  base.tail_bound = abs(factor_real) * base.tail_bound;
  return base;
}

SeriesResult parity_combination(const RationalArgument& arg, const PrecisionConfig& cfg) {
  if (arg.m < 2 || arg.i < 1 || arg.i > arg.m - 1)
    throw std::invalid_argument("parity_combination: need 1 <= i <= m-1");
  if (arg.k < 1) throw std::invalid_argument("parity_combination: need k >= 1");

  const SeriesResult first = m_accel(arg, cfg);
  const SeriesResult second =
      m_accel(RationalArgument(arg.m, arg.m - arg.i, arg.k), cfg);
  SeriesResult out;
  out.value = (arg.k % 2 == 1) ? first.value + second.value : first.value - second.value;
  out.tail_bound = first.tail_bound + second.tail_bound;
  out.terms_used = first.terms_used + second.terms_used;
  out.converged = first.converged && second.converged;
  return out;
}

}  // namespace eulerzeta
