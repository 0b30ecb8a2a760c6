#include <doctest.h>

#include "eulerzeta/closed_forms.hpp"
#include "support/test_helpers.hpp"

using namespace eulerzeta;
using testutil::eps;
using testutil::literal;

namespace {

const PrecisionConfig kDefault;
const unsigned kWp = kDefault.working_bits();

}  // namespace

TEST_CASE("even zeta closed forms") {
  const ClosedValue l1 = zeta_even_closed(1, kDefault);
  CHECK(l1.exact_factor == Rational(1, 6));
  CHECK(l1.pi_power == 2);
  const ClosedValue l2 = zeta_even_closed(2, kDefault);
  CHECK(l2.exact_factor == Rational(1, 90));
  const ClosedValue l3 = zeta_even_closed(3, kDefault);
  CHECK(l3.exact_factor == Rational(1, 945));

  for (unsigned l = 1; l <= 5; ++l) {
    const ClosedValue closed = zeta_even_closed(l, kDefault);
    const SeriesResult series = zeta_int(2 * l, kDefault);
    CHECK(abs(closed.value - series.value) <= eps("1e-18"));
    CHECK(closed.value ==
          BigReal::from_rational(closed.exact_factor, kWp) *
              pow_int(BigReal::pi(kWp), static_cast<long>(closed.pi_power)));
  }
  CHECK_THROWS_AS(zeta_even_closed(0, kDefault), std::invalid_argument);
}

TEST_CASE("centered odd closed forms") {
  const OddCenterClosed basic = m_odd_center_closed(1, 0, kDefault);
  CHECK(basic.m_value.exact_factor == Rational(1, 4));
  CHECK(basic.m_value.pi_power == 1);
  CHECK(basic.two_sided.exact_factor == Rational(1, 2));

  const OddCenterClosed cubed = m_odd_center_closed(1, 1, kDefault);
  CHECK(cubed.m_value.exact_factor == Rational(1, 32));
  CHECK(cubed.m_value.pi_power == 3);

  const OddCenterClosed scaled = m_odd_center_closed(2, 0, kDefault);
  CHECK(scaled.m_value.exact_factor == Rational(1, 8));

  // Against the accelerated route M(2m, m, 2k+1).
  for (unsigned m : {1u, 2u}) {
    for (unsigned k : {0u, 1u}) {
      const OddCenterClosed closed = m_odd_center_closed(m, k, kDefault);
      const SeriesResult accel = m_accel(
          RationalArgument(2 * static_cast<long>(m), static_cast<long>(m),
                           2 * static_cast<long>(k) + 1),
          kDefault);
      CHECK(abs(closed.m_value.value - accel.value) <= accel.tail_bound + eps("1e-35"));
    }
  }
}

TEST_CASE("two-sided quarter sums") {
  const ClosedValue k1 = s_4_1_closed(1, kDefault);
  CHECK(k1.exact_factor == Rational(1, 8));
  CHECK(k1.pi_power == 2);
  const ClosedValue k2 = s_4_1_closed(2, kDefault);
  CHECK(k2.exact_factor == Rational(1, 96));
  CHECK(k2.pi_power == 4);

  // 4^{2k} S(2k,4,1) = zeta(2k,1/4) + zeta(2k,3/4).
  for (unsigned k : {1u, 2u}) {
    const ClosedValue closed = s_4_1_closed(k, kDefault);
    const SeriesResult lo = hurwitz_rational(2 * k, Integer(1), Integer(4), kDefault);
    const SeriesResult hi = hurwitz_rational(2 * k, Integer(3), Integer(4), kDefault);
    const BigReal scale = BigReal::from_integer(pow(Integer(4), 2 * k), kWp);
    CHECK(abs(scale * closed.value - (lo.value + hi.value)) <= eps("1e-10"));
  }
}

TEST_CASE("catalan against hurwitz differences") {
  const CatalanHurwitzRelation relation = catalan_hurwitz_relation(kDefault);
  CHECK(relation.difference_ok);
  CHECK(relation.sum_ok);

  const SeriesResult direct = hurwitz_rational(2, Integer(1), Integer(4), kDefault);
  CHECK(abs(relation.zeta2_quarter - direct.value) <= eps("1e-12"));
  CHECK(abs(relation.zeta2_quarter - BigReal::from_string("17.1973", 64)) <=
        BigReal::from_string("1e-4", 64));
}

TEST_CASE("pi powers from the transformed series") {
  for (unsigned l = 1; l <= 3; ++l) {
    const SeriesResult series = pi_power_series(l, kDefault);
    const BigReal truth = pow_int(BigReal::pi(kWp), 2 * static_cast<long>(l));
    CHECK(series.converged);
    CHECK(abs(series.value - truth) <= eps("1e-15"));
    // And the 2l-th root recovers pi itself.
    const BigReal root =
        pow(series.value, BigReal(1, kWp) / BigReal(2 * static_cast<long>(l), kWp));
    CHECK(abs(root - BigReal::pi(kWp)) <= eps("1e-12"));
  }
  CHECK_THROWS_AS(pi_power_series(0, kDefault), std::invalid_argument);
}

TEST_CASE("parity combinations") {
  // k odd, i = m - i: twice the single sum.
  const SeriesResult folded = parity_combination(RationalArgument(2, 1, 1), kDefault);
  CHECK(abs(folded.value - BigReal::pi(kWp) / BigReal(2, kWp)) <= eps("1e-28"));

  // k even, i = m - i: exact cancellation.
  const SeriesResult cancelled = parity_combination(RationalArgument(2, 1, 2), kDefault);
  CHECK(abs(cancelled.value) <= cancelled.tail_bound + eps("1e-35"));

  // M(4,1,1) + M(4,3,1) equals the two-sided sum over 4j+1, whose folded form
  // is 1 + 2 sum_{j>=1} (-1)^{j-1}/(16 j^2 - 1); pair-averaged oracle below.
  const SeriesResult spread = parity_combination(RationalArgument(4, 1, 1), kDefault);
  {
    const unsigned terms = 20000;
    BigReal sum(1, kWp);
    BigReal base(kWp);
    for (unsigned j = 1; j <= terms; ++j) {
      mpfr_set_ui(base.raw(), 16ul * j * j - 1, MPFR_RNDN);
      const BigReal t = ldexp2(pow_int(base, -1), 1);
      sum += (j % 2 == 1) ? t : -t;
    }
    mpfr_set_ui(base.raw(), 16ul * (terms + 1) * (terms + 1) - 1, MPFR_RNDN);
    const BigReal half_next = pow_int(base, -1);  // half of the next term
    const BigReal oracle = (terms % 2 == 0) ? sum + half_next : sum - half_next;
    CHECK(abs(spread.value - oracle) <= eps("1e-12"));
  }
  // The same value in elementary terms: pi / (2 sqrt 2).
  CHECK(abs(spread.value - BigReal::pi(kWp) / (BigReal(2, kWp) * sqrt(BigReal(2, kWp)))) <=
        eps("1e-28"));

  CHECK_THROWS_AS(parity_combination(RationalArgument(2, 2, 1), kDefault),
                  std::invalid_argument);
  CHECK_THROWS_AS(parity_combination(RationalArgument(3, 1, 0), kDefault),
                  std::invalid_argument);
}
