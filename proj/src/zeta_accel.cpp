#include "eulerzeta/zeta_accel.hpp"

#include <algorithm>
#include <stdexcept>

#include "eulerzeta/combinatorics.hpp"

namespace eulerzeta {

namespace {

// Smallest power-of-two exponent covering n.
unsigned ceil_log2(unsigned long n) {
  unsigned lg = 0;
  while ((1ul << lg) < n && lg < 63) ++lg;
  return lg;
}

// Row budget for a series whose n-th term is certified <= t0 * 2^{-n}.
// t0 <= 2^{-1 - k (bits(i)-1)} for the transformed series of M(m,i,k).
unsigned rows_for(const PrecisionConfig& cfg, const Integer& i, long k) {
  const long eps_exp = cfg.target_eps.exponent2();
  const long lead = 1 + k * (static_cast<long>(mpz_sizeinbase(i.get_mpz_t(), 2)) - 1);
  const long need = -eps_exp - lead + 20;
  const unsigned rows = need < 16 ? 16u : static_cast<unsigned>(need);
  return rows < cfg.max_terms ? rows : cfg.max_terms;
}

// The certified future term-ratio bound for the transformed series,
//   (n+1)/(2(n+1+i/m)) * 1/(1 - i/(m(n+1)+i)),
// evaluated exactly (it simplifies to 1/2 for every n, since
// C(n,k-1) <= i C(n,k) by induction on k).
Rational m_term_ratio_bound(const Integer& m, const Integer& i, unsigned n) {
  const Integer mn1 = m * (n + 1);
  const Rational first =
      Rational(Integer(n + 1)) / ((Rational(Integer(n + 1)) + Rational(i, m)) * Rational(2));
  const Rational second = Rational(mn1 + i) / Rational(mn1);
  return first * second;
}

}  // namespace

void RationalArgument::validate() const {
  if (m < 1 || i < 1 || i > m)
    throw std::invalid_argument("RationalArgument: need m >= 1 and 1 <= i <= m");
}

Rational m_series_term(const RationalArgument& arg, unsigned n, const DiffTable& table) {
  arg.validate();
  if (arg.k < 1) throw std::invalid_argument("m_series_term: need k >= 1");
  if (table.step() != arg.m || table.offset() != arg.i)
    throw std::invalid_argument("m_series_term: table built for different (m, i)");
  Rational lead =
      Rational(factorial(n)) / (Rational(arg.m) * rising_factorial(Rational(arg.i, arg.m), n + 1));
  lead /= Rational(Integer(1) << (n + 1));
  return lead * table.at(n, static_cast<unsigned>(arg.k));
}

SeriesResult m_accel(const RationalArgument& arg, const PrecisionConfig& cfg) {
  arg.validate();
  if (arg.k < 1) throw std::invalid_argument("m_accel: need k >= 1");
  const unsigned wp = cfg.working_bits();
  const PrecisionConfig inner = cfg.eps_shifted(2);  // x4 safety on the stopping rule
  const unsigned rows = rows_for(inner, arg.i, arg.k);
  const DiffTable table(arg.m, arg.i, rows, static_cast<unsigned>(arg.k));

  Rational coeff(Integer(1), 2 * arg.i);  // n! / (2^{n+1} m (i/m)_{n+1}) at n = 0
  auto term = [&, n_next = 0u](unsigned n) mutable -> BigReal {
    if (n != n_next++) throw std::logic_error("m_accel: non-sequential term request");
    BigReal t = BigReal::from_rational(coeff * table.at(n, static_cast<unsigned>(arg.k)), wp);
    const Integer mn1 = arg.m * (n + 1);
    coeff *= Rational(mn1, 2 * (mn1 + arg.i));
    return t;
  };
  auto ratio = [&](unsigned n) -> BigReal {
    return BigReal::from_rational(m_term_ratio_bound(arg.m, arg.i, n), wp);
  };

  PrecisionConfig run = inner;
  run.max_terms = rows;
  return sum_positive_series(term, ratio, run);
}

std::vector<Rational> m_naive(const RationalArgument& arg, unsigned N) {
  arg.validate();
  std::vector<Rational> partials;
  partials.reserve(N);
  Rational sum(0);
  for (unsigned j = 0; j < N; ++j) {
    const Integer base = arg.m * j + arg.i;
    Rational term =
        arg.k >= 0 ? Rational(Integer(1), pow(base, static_cast<unsigned long>(arg.k)))
                   : Rational(pow(base, static_cast<unsigned long>(-arg.k)));
    sum += (j % 2 == 0) ? term : -term;
    partials.push_back(sum);
  }
  return partials;
}

namespace {

// Shared core of zetahat: sum_{n>=1} H_n^{(k-1)}/(n 2^n) from a prebuilt table.
// t_{n+1}/t_n = (H_{n+1}^{(k-1)}/H_n^{(k-1)}) * (n/(n+1)) / 2 <= 1/2,
// since H_{n+1} <= H_n * (n+1)/n (the i = 1 column inequality).
SeriesResult zetahat_series(long k, const HarmonicTable& table,
                            const PrecisionConfig& inner, unsigned wp,
                            unsigned max_rows) {
  Integer pow2 = 2;  // 2^{n} with n = term index + 1
  auto term = [&, n_next = 0u](unsigned idx) mutable -> BigReal {
    if (idx != n_next++) throw std::logic_error("zetahat: non-sequential term request");
    const unsigned n = idx + 1;
    BigReal t = BigReal::from_rational(
        table.at(n, static_cast<unsigned>(k - 1)) / Rational(Integer(n) * pow2), wp);
    pow2 <<= 1;
    return t;
  };
  auto ratio = [&](unsigned) { return BigReal::from_rational(Rational(1, 2), wp); };

  PrecisionConfig run = inner;
  run.max_terms = max_rows;
  return sum_positive_series(term, ratio, run);
}

}  // namespace

SeriesResult zetahat(long k, const PrecisionConfig& cfg) {
  if (k < 0) throw std::invalid_argument("zetahat: need k >= 0");
  const unsigned wp = cfg.working_bits();
  if (k == 0) {
    // Divergent as a series; the closed value is 1/2.
    return {BigReal::from_rational(Rational(1, 2), wp), BigReal(wp), 0, true};
  }
  const PrecisionConfig inner = cfg.eps_shifted(2);
  const unsigned rows = rows_for(inner, Integer(1), 1);
  const HarmonicTable table(rows + 1, static_cast<unsigned>(k - 1));
  return zetahat_series(k, table, inner, wp, rows);
}

SeriesResult zetahat_from_table(long k, const HarmonicTable& table,
                                const PrecisionConfig& cfg) {
  if (k < 1) throw std::invalid_argument("zetahat_from_table: need k >= 1");
  if (table.max_k() + 1 < static_cast<unsigned>(k))
    throw std::invalid_argument("zetahat_from_table: table too shallow for k");
  const unsigned wp = cfg.working_bits();
  const PrecisionConfig inner = cfg.eps_shifted(2);
  const unsigned rows = std::min(cfg.max_terms, table.max_n() - 1);
  return zetahat_series(k, table, inner, wp, rows);
}

SeriesResult zeta_int(long k, const PrecisionConfig& cfg) {
  if (k < 2) throw std::invalid_argument("zeta_int: need k >= 2 (pole at k = 1)");
  const unsigned wp = cfg.working_bits();
  const Integer two_pow = Integer(1) << (k - 1);
  const BigReal prefactor = BigReal::from_rational(Rational(two_pow, two_pow - 1), wp);
  // prefactor <= 2, so an extra eps/2 allocation keeps the scaled bound under eps.
  SeriesResult base = zetahat(k, cfg.eps_shifted(1));
  return {prefactor * base.value, prefactor * base.tail_bound, base.terms_used,
          base.converged};
}

Rational catalan_series_coefficient(unsigned n) {
  Integer dfac;
  mpz_2fac_ui(dfac.get_mpz_t(), 2 * n + 1);  // (2n+1)!!
  Rational sum(0);
  for (unsigned j = 0; j <= n; ++j) sum += Rational(1, 2 * static_cast<long>(j) + 1);
  return Rational(factorial(n), 2 * dfac) * sum;
}

SeriesResult catalan(const PrecisionConfig& cfg) {
  const unsigned wp = cfg.working_bits();
  const PrecisionConfig inner = cfg.eps_shifted(2);
  const unsigned rows = rows_for(inner, Integer(1), 1);

  Rational d(1, 2);  // n! / (2 (2n+1)!!)
  Rational h(1);     // H_{2n+1} - H_n/2 = sum_{j<=n} 1/(2j+1), with H_0 = 0
  auto term = [&, n_next = 0u](unsigned n) mutable -> BigReal {
    if (n != n_next++) throw std::logic_error("catalan: non-sequential term request");
    BigReal t = BigReal::from_rational(d * h, wp);
    d *= Rational(static_cast<long>(n) + 1, 2 * static_cast<long>(n) + 3);
    h += Rational(1, 2 * static_cast<long>(n) + 3);
    return t;
  };
  // t_{n+1}/t_n = ((n+1)/(2n+3)) (h_{n+1}/h_n) <= (n+1)(2n+4)/(2n+3)^2 < 1/2.
  auto ratio = [&](unsigned) { return BigReal::from_rational(Rational(1, 2), wp); };

  PrecisionConfig run = inner;
  run.max_terms = rows;
  return sum_positive_series(term, ratio, run);
}

std::pair<bool, bool> partial_sum_envelope(long k, unsigned m_terms,
                                           const PrecisionConfig& cfg) {
  if (k < 2) throw std::invalid_argument("partial_sum_envelope: need k >= 2");
  const unsigned wp = cfg.working_bits();

  PrecisionConfig hi = cfg.eps_shifted(20);
  hi.precision_bits = cfg.precision_bits + 64;
  hi.max_terms = cfg.max_terms * 4;
  const BigReal reference = zeta_int(k, hi).value;

  const HarmonicTable table(m_terms + 1, static_cast<unsigned>(k - 1));
  Rational partial(0);
  Integer pow2 = 2;
  for (unsigned n = 0; n <= m_terms; ++n) {
    partial += table.at(n + 1, static_cast<unsigned>(k - 1)) / Rational(Integer(n + 1) * pow2);
    pow2 <<= 1;
  }
  const Integer two_pow = Integer(1) << (k - 1);
  partial *= Rational(two_pow, two_pow - 1);

  const BigReal delta = abs(reference - BigReal::from_rational(partial, wp));
  const BigReal lower =
      (BigReal::ln2(wp) - BigReal::from_rational(Rational(1, 2), wp)) *
      BigReal::from_rational(Rational(Integer(1), Integer(m_terms + 1) << (m_terms + 1)), wp);
  const BigReal upper =
      BigReal::from_rational(Rational(Integer(1), Integer(1) << (m_terms + 1)), wp);
  return {lower <= delta, delta <= upper};
}

std::pair<BigReal, BigReal> hurwitz_naive_bracket(long k, const Rational& a,
                                                  unsigned long N,
                                                  unsigned precision_bits) {
  if (k < 2) throw std::invalid_argument("hurwitz_naive_bracket: need k >= 2");
  if (!(a > Rational(0) && a <= Rational(1)))
    throw std::invalid_argument("hurwitz_naive_bracket: need a in (0, 1]");
  if (N < 1) throw std::invalid_argument("hurwitz_naive_bracket: need N >= 1");

  const unsigned lg = ceil_log2(N + 4);
  const unsigned wp = precision_bits + 40 + lg;
  const BigReal a_real = BigReal::from_rational(a, wp);

  BigReal sum(wp);
  BigReal base(wp);
  for (unsigned long j = 0; j < N; ++j) {
    mpfr_add_ui(base.raw(), a_real.raw(), j, MPFR_RNDN);
    sum += pow_int(base, -k);
  }
  const BigReal km1(k - 1, wp);
  mpfr_add_ui(base.raw(), a_real.raw(), N, MPFR_RNDN);
  const BigReal tail_lo = pow_int(base, 1 - k) / km1;
  mpfr_add_ui(base.raw(), a_real.raw(), N - 1, MPFR_RNDN);
  const BigReal tail_hi = pow_int(base, 1 - k) / km1;

  BigReal lo = sum + tail_lo;
  BigReal hi = sum + tail_hi;
  // Widen by the accumulated rounding of ~N+4 nearest-rounded operations.
  const BigReal slack = ldexp2(abs(hi) + BigReal(1, wp), static_cast<long>(lg) + 4 -
                                                             static_cast<long>(wp));
  return {lo - slack, hi + slack};
}

SeriesResult hurwitz_rational(long k, const Integer& i, const Integer& m,
                              const PrecisionConfig& cfg) {
  if (k < 2)
    throw std::invalid_argument("hurwitz_rational: need k >= 2 (telescope diverges at 1)");
  if (m < 1 || i < 1 || i > m)
    throw std::invalid_argument("hurwitz_rational: need m >= 1 and 1 <= i <= m");
  const unsigned wp = cfg.working_bits();

  const Integer m_pow_k = pow(m, static_cast<unsigned long>(k));
  const BigReal scale = BigReal::from_integer(m_pow_k, wp);
  const BigReal eps_s = cfg.target_eps / scale;  // tail budget on the unscaled sum
  const BigReal eps_half = ldexp2(eps_s, -1);

  // Telescope depth: crude overestimate of the dropped tail
  // 2^{T+1} * 2 * ((2^{T+1}-1)m + i)^{-k} * (1 + 1/(k-1)) <= eps_s / 2.
  unsigned depth = 0;
  for (;; ++depth) {
    if (depth > 8192) throw std::runtime_error("hurwitz_rational: telescope depth overflow");
    const Integer edge = ((Integer(1) << (depth + 1)) - 1) * m + i;
    const Rational crude = Rational(Integer(1) << (depth + 2)) * Rational(k, k - 1) /
                           Rational(pow(edge, static_cast<unsigned long>(k)));
    if (BigReal::from_rational(crude, 96) <= eps_half) break;
  }

  BigReal acc(wp);
  BigReal tail_acc(wp);
  unsigned terms = 0;
  bool all_converged = true;
  const BigReal stages(static_cast<long>(depth) + 1, 64);
  for (unsigned t = 0; t <= depth; ++t) {
    const Integer mt = m << t;
    const Integer it = ((Integer(1) << t) - 1) * m + i;
    const PrecisionConfig stage_cfg =
        cfg.with_eps(ldexp2(eps_s, -static_cast<long>(t) - 1) / stages);
    const SeriesResult stage = m_accel(RationalArgument(mt, it, k), stage_cfg);
    acc += ldexp2(stage.value, t);
    tail_acc += ldexp2(stage.tail_bound, t);
    terms += stage.terms_used;
    all_converged = all_converged && stage.converged;
  }

  // Remaining sum 2^{T+1} S_k(2^{T+1} m, ...) evaluated by integral bracket.
  const Integer mf = m << (depth + 1);
  const Integer if_ = ((Integer(1) << (depth + 1)) - 1) * m + i;
  const auto [lo, hi] = hurwitz_naive_bracket(k, Rational(if_, mf), 32,
                                              cfg.precision_bits + 16);
  const BigReal mf_pow_k = BigReal::from_integer(pow(mf, static_cast<unsigned long>(k)), wp);
  const BigReal two(2, wp);
  acc += ldexp2((lo + hi) / two / mf_pow_k, depth + 1);
  tail_acc += ldexp2((hi - lo) / two / mf_pow_k, depth + 1);

  return {scale * acc, scale * tail_acc, terms, all_converged};
}

bool m_hurwitz_identity_check(const RationalArgument& arg, const PrecisionConfig& cfg) {
  arg.validate();
  if (arg.k < 2) throw std::invalid_argument("m_hurwitz_identity_check: need k >= 2");
  const unsigned wp = cfg.working_bits();

  const SeriesResult lhs = m_accel(arg, cfg);
  const Integer m2 = 2 * arg.m;
  const SeriesResult z_low = hurwitz_rational(arg.k, arg.i, m2, cfg);
  const SeriesResult z_high = hurwitz_rational(arg.k, arg.m + arg.i, m2, cfg);

  const BigReal scale =
      BigReal::from_integer(pow(m2, static_cast<unsigned long>(arg.k)), wp);
  const BigReal rhs = (z_low.value - z_high.value) / scale;
  const BigReal rounding =
      ldexp2(abs(lhs.value) + BigReal(1, wp), 8 - static_cast<long>(cfg.precision_bits));
  const BigReal tolerance =
      lhs.tail_bound + (z_low.tail_bound + z_high.tail_bound) / scale + rounding;
  return abs(lhs.value - rhs) <= tolerance;
}

std::vector<BigReal> monotonicity_report(const Integer& m, long k_max,
                                         const PrecisionConfig& cfg) {
  std::vector<BigReal> values;
  values.reserve(static_cast<size_t>(k_max));
  for (long k = 1; k <= k_max; ++k)
    values.push_back(m_accel(RationalArgument(m, Integer(1), k), cfg).value);
  return values;
}

}  // namespace eulerzeta
