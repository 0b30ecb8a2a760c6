#include <doctest.h>

#include "eulerzeta/harmonic.hpp"
#include "eulerzeta/zeta_accel.hpp"
#include "support/test_helpers.hpp"

using namespace eulerzeta;
using testutil::eps;
using testutil::literal;

namespace {

const PrecisionConfig kDefault;  // 128 bits, 1e-30, 10000 terms

BigReal pi_over(long d, unsigned wp) { return BigReal::pi(wp) / BigReal(d, wp); }

}  // namespace

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(m_accel(RationalArgument(2, 3, 1), kDefault), std::invalid_argument);
  CHECK_THROWS_AS(m_accel(RationalArgument(0, 1, 1), kDefault), std::invalid_argument);
  CHECK_THROWS_AS(m_accel(RationalArgument(2, 1, 0), kDefault), std::invalid_argument);
  CHECK_NOTHROW(m_accel(RationalArgument(3, 3, 2), kDefault));  // i = m admitted
}

TEST_CASE("accelerated alternating-progression sums") {
  const unsigned wp = kDefault.working_bits();

  const SeriesResult leibniz = m_accel(RationalArgument(2, 1, 1), kDefault);
  CHECK(leibniz.converged);
  CHECK(abs(leibniz.value - pi_over(4, wp)) <= eps("1e-30"));

  const SeriesResult cat = m_accel(RationalArgument(2, 1, 2), kDefault);
  CHECK(abs(cat.value - literal(testutil::kCatalanDigits)) <= eps("1e-30"));

  // M(3,2,1) = integral of x/(1+x^3) over (0,1) = pi/(3 sqrt 3) - ln(2)/3.
  const SeriesResult m32 = m_accel(RationalArgument(3, 2, 1), kDefault);
  const BigReal expected =
      BigReal::pi(wp) / (BigReal(3, wp) * sqrt(BigReal(3, wp))) -
      BigReal::ln2(wp) / BigReal(3, wp);
  CHECK(abs(m32.value - expected) <= eps("1e-30"));
  CHECK(abs(m32.value - BigReal::from_string("0.3735507279", 64)) <= eps("1e-10"));
}

TEST_CASE("exact series terms match the closed coefficient") {
  const RationalArgument arg(2, 1, 2);
  const DiffTable table(arg.m, arg.i, 20, 2);
  // t_0 = C(0,2)/(2 i) = 1/2; t_1 = (1/8)(1/(1/2 * 3/2)) * C(1,2) = ... = 2/9.
  CHECK(m_series_term(arg, 0, table) == Rational(1, 2));
  CHECK(m_series_term(arg, 1, table) == Rational(2, 9));
  for (unsigned n = 0; n < 20; ++n)
    CHECK(m_series_term(arg, n, table) == catalan_series_coefficient(n));
}

TEST_CASE("naive partial sums") {
  const auto two_terms = m_naive(RationalArgument(2, 1, 1), 2);
  REQUIRE(two_terms.size() == 2);
  CHECK(two_terms[0] == Rational(1));
  CHECK(two_terms[1] == Rational(2, 3));

  const auto three_terms = m_naive(RationalArgument(1, 1, 2), 3);
  REQUIRE(three_terms.size() == 3);
  CHECK(three_terms[0] == Rational(1));
  CHECK(three_terms[1] == Rational(3, 4));
  CHECK(three_terms[2] == Rational(31, 36));

  // Partial sums approach Catalan's constant within the Leibniz bound.
  const auto partials = m_naive(RationalArgument(2, 1, 2), 60);
  const BigReal truth = literal(testutil::kCatalanDigits);
  for (unsigned n = 20; n < 60; ++n) {
    const BigReal gap = abs(BigReal::from_rational(partials[n], 256) - truth);
    CHECK(gap <= BigReal::from_rational(Rational(1, (2 * (n + 1) + 1) *
                                                        (2 * (n + 1) + 1)), 256));
  }
}

TEST_CASE("zetahat values") {
  const unsigned wp = kDefault.working_bits();
  const SeriesResult one = zetahat(1, kDefault);
  CHECK(one.converged);
  CHECK(abs(one.value - BigReal::ln2(wp)) <= eps("1e-25"));

  const SeriesResult two = zetahat(2, kDefault);
  CHECK(abs(two.value - pow_int(BigReal::pi(wp), 2) / BigReal(12, wp)) <= eps("1e-25"));

  const SeriesResult zero = zetahat(0, kDefault);
  CHECK(zero.converged);
  CHECK(zero.terms_used == 0);
  CHECK(zero.value == BigReal::from_rational(Rational(1, 2), wp));

  CHECK_THROWS_AS(zetahat(-1, kDefault), std::invalid_argument);
}

TEST_CASE("zetahat from a shared table agrees with the standalone path") {
  const HarmonicTable table(140, 6);
  for (long k = 1; k <= 7; ++k) {
    const SeriesResult a = zetahat_from_table(k, table, kDefault);
    const SeriesResult b = zetahat(k, kDefault);
    CHECK(a.converged);
    CHECK(abs(a.value - b.value) <= a.tail_bound + b.tail_bound);
  }
  CHECK_THROWS_AS(zetahat_from_table(8, table, kDefault), std::invalid_argument);
}

TEST_CASE("integer zeta values") {
  const unsigned wp = kDefault.working_bits();
  const BigReal pi2 = pow_int(BigReal::pi(wp), 2);

  const SeriesResult z2 = zeta_int(2, kDefault);
  CHECK(abs(z2.value - pi2 / BigReal(6, wp)) <= eps("1e-25"));

  const SeriesResult z3 = zeta_int(3, kDefault);
  CHECK(abs(z3.value - literal(testutil::kZeta3Digits)) <= eps("1e-30"));

  const SeriesResult z4 = zeta_int(4, kDefault);
  CHECK(abs(z4.value - pow_int(BigReal::pi(wp), 4) / BigReal(90, wp)) <= eps("1e-25"));

  CHECK_THROWS_AS(zeta_int(1, kDefault), std::invalid_argument);
}

TEST_CASE("prefactor ties zeta to zetahat") {
  const unsigned wp = kDefault.working_bits();
  for (long k = 2; k <= 10; ++k) {
    const SeriesResult z = zeta_int(k, kDefault);
    const SeriesResult h = zetahat(k, kDefault);
    const Integer tp = Integer(1) << (k - 1);
    const BigReal pref = BigReal::from_rational(Rational(tp, tp - 1), wp);
    CHECK(abs(z.value - pref * h.value) <= z.tail_bound + pref * h.tail_bound);
    CHECK(z.terms_used <= 120);
  }
}

TEST_CASE("catalan series") {
  CHECK(catalan_series_coefficient(0) == Rational(1, 2));
  CHECK(catalan_series_coefficient(1) == Rational(2, 9));

  const SeriesResult k_val = catalan(kDefault);
  CHECK(k_val.converged);
  CHECK(abs(k_val.value - literal(testutil::kCatalanDigits)) <= eps("1e-30"));

  const SeriesResult accel = m_accel(RationalArgument(2, 1, 2), kDefault);
  CHECK(abs(k_val.value - accel.value) <= k_val.tail_bound + accel.tail_bound);
}

TEST_CASE("partial-sum envelope") {
  const auto mid = partial_sum_envelope(2, 10, kDefault);
  CHECK(mid.first);
  CHECK(mid.second);
  const auto deep = partial_sum_envelope(5, 20, kDefault);
  CHECK(deep.first);
  CHECK(deep.second);
  for (long k : {2l, 3l}) {
    for (unsigned m : {5u, 15u, 25u}) {
      const auto r = partial_sum_envelope(k, m, kDefault);
      CHECK(r.first);
      CHECK(r.second);
    }
  }
  // At m = 0, k = 2 the upper envelope does not hold:
  // |zeta(2) - 2 * (1/2)| = 0.6449 > 1/2.
  const auto degenerate = partial_sum_envelope(2, 0, kDefault);
  CHECK(degenerate.first);
  CHECK_FALSE(degenerate.second);
}

TEST_CASE("hurwitz bracket") {
  const unsigned wp = 192;
  const BigReal pi2 = pow_int(BigReal::pi(wp), 2);

  SUBCASE("contains zeta(2,1) = pi^2/6 and narrows") {
    BigReal previous_width(wp);
    bool first = true;
    for (unsigned long N : {10ul, 100ul, 1000ul}) {
      const auto [lo, hi] = hurwitz_naive_bracket(2, Rational(1), N, 128);
      CHECK(lo <= pi2 / BigReal(6, wp));
      CHECK(pi2 / BigReal(6, wp) <= hi);
      if (!first) CHECK(hi - lo < previous_width);
      previous_width = hi - lo;
      first = false;
    }
  }

  SUBCASE("contains zeta(2,1/2) = pi^2/2") {
    const auto [lo, hi] = hurwitz_naive_bracket(2, Rational(1, 2), 400, 128);
    CHECK(lo <= pi2 / BigReal(2, wp));
    CHECK(pi2 / BigReal(2, wp) <= hi);
  }

  SUBCASE("width equals the integral-comparison gap") {
    const long k = 3;
    const unsigned long N = 50;
    const Rational a(2, 5);
    const auto [lo, hi] = hurwitz_naive_bracket(k, a, N, 128);
    const unsigned hp = 256;
    const BigReal gap =
        (pow_int(BigReal::from_rational(a + Rational(Integer(N - 1)), hp), 1 - k) -
         pow_int(BigReal::from_rational(a + Rational(Integer(N)), hp), 1 - k)) /
        BigReal(k - 1, hp);
    // Bracket ends carry a deliberate rounding slack; the width may exceed
    // the algebraic gap only by that slack.
    CHECK(hi - lo >= gap);
    CHECK(hi - lo <= gap + ldexp2(hi, -120));
  }

  CHECK_THROWS_AS(hurwitz_naive_bracket(1, Rational(1, 2), 10, 64), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz_naive_bracket(2, Rational(3, 2), 10, 64), std::invalid_argument);
}

TEST_CASE("hurwitz telescope") {
  const unsigned wp = kDefault.working_bits();
  const BigReal pi2 = pow_int(BigReal::pi(wp), 2);

  const SeriesResult z21 = hurwitz_rational(2, Integer(1), Integer(1), kDefault);
  CHECK(z21.converged);
  CHECK(abs(z21.value - pi2 / BigReal(6, wp)) <= z21.tail_bound + eps("1e-35"));

  const SeriesResult z214 = hurwitz_rational(2, Integer(1), Integer(4), kDefault);
  const BigReal expected = pi2 + BigReal(8, wp) * literal(testutil::kCatalanDigits);
  CHECK(abs(z214.value - expected) <= eps("1e-28"));

  const SeriesResult z325 = hurwitz_rational(3, Integer(2), Integer(5), kDefault);
  const auto [lo, hi] = hurwitz_naive_bracket(3, Rational(2, 5), 10000, 160);
  CHECK(z325.value + z325.tail_bound >= lo);
  CHECK(z325.value - z325.tail_bound <= hi);

  CHECK_THROWS_AS(hurwitz_rational(1, Integer(1), Integer(2), kDefault),
                  std::invalid_argument);
  CHECK_THROWS_AS(hurwitz_rational(2, Integer(3), Integer(2), kDefault),
                  std::invalid_argument);
}

TEST_CASE("alternating sums close against hurwitz differences") {
  PrecisionConfig cfg(128, "1e-20", 10000);
  CHECK(m_hurwitz_identity_check(RationalArgument(2, 1, 2), cfg));
  CHECK(m_hurwitz_identity_check(RationalArgument(1, 1, 2), cfg));
  CHECK(m_hurwitz_identity_check(RationalArgument(3, 2, 3), cfg));
}

TEST_CASE("monotonicity of M(m,1,k) in k") {
  const unsigned wp = kDefault.working_bits();
  for (long m : {1l, 2l, 3l, 4l}) {
    const auto values = monotonicity_report(Integer(m), 12, kDefault);
    REQUIRE(values.size() == 12);
    for (size_t idx = 1; idx < values.size(); ++idx) CHECK(values[idx] > values[idx - 1]);
    // |M(m,1,k) - 1| <= 1/(m+1)^k by the Leibniz bound on the defining series.
    CHECK(abs(values.back() - BigReal(1, wp)) <=
          BigReal::from_rational(Rational(Integer(1), pow(Integer(m + 1), 12)), 64));
  }

  const auto m2 = monotonicity_report(Integer(2), 12, kDefault);
  CHECK(abs(m2[0] - pi_over(4, wp)) <= eps("1e-28"));
  CHECK(abs(m2[1] - literal(testutil::kCatalanDigits)) <= eps("1e-28"));
  CHECK(abs(m2[2] - pow_int(BigReal::pi(wp), 3) / BigReal(32, wp)) <= eps("1e-28"));
  CHECK(abs(m2[11] - BigReal(1, wp)) < eps("1e-5"));

  // Equivalent statement through zeta: {zeta(k)(1 - 2^{1-k})} increases.
  BigReal previous(0, wp);
  for (long k = 2; k <= 12; ++k) {
    const BigReal scaled =
        zeta_int(k, kDefault).value *
        (BigReal(1, wp) - ldexp2(BigReal(1, wp), 1 - k));
    CHECK(scaled > previous);
    previous = scaled;
  }
}

TEST_CASE("transformed terms decay like 2^{-n} with polynomial factor") {
  // t_n 2^n / (n+1)^k stays bounded by 1 over the whole grid.
  const Rational one(1);
  for (long m = 1; m <= 4; ++m) {
    for (long i = 1; i <= m; ++i) {
      for (long k : {1l, 4l, 8l}) {
        const RationalArgument arg(m, i, k);
        const DiffTable table(arg.m, arg.i, 200, static_cast<unsigned>(k));
        Integer two_pow(1);
        for (unsigned n = 0; n <= 200; ++n) {
          const Rational scaled =
              m_series_term(arg, n, table) * Rational(two_pow) /
              Rational(pow(Integer(n + 1), static_cast<unsigned long>(k)));
          CHECK(scaled <= one);
          two_pow <<= 1;
        }
      }
    }
  }
}
