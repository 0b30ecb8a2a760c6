#include "eulerzeta/genfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eulerzeta/harmonic.hpp"
#include "eulerzeta/zeta_accel.hpp"

namespace eulerzeta {

namespace {

void require_unit_interval(const BigReal& x, const char* who) {
  if (!(x > BigReal(0, 64) && x < BigReal(1, 64)))
    throw std::domain_error(std::string(who) + ": argument must lie in (0, 1)");
}

// Allowance for the handful of nearest-rounded elementary operations on a
// comparison side.
BigReal rounding_slack(const BigReal& magnitude, unsigned precision_bits) {
  return ldexp2(abs(magnitude) + BigReal(1, magnitude.precision()),
                8 - static_cast<long>(precision_bits));
}

// Terms <= (j+1) x^j from index `from` on sum to
// x^{from} (1/(1-x)^2 + from/(1-x)); callers use it to size tables.
unsigned estimate_power_series_rows(const BigReal& x, const BigReal& eps,
                                    unsigned max_terms) {
  const double xd = x.to_double();
  const double log_eps = static_cast<double>(eps.exponent2()) * 0.6931471805599453;
  double est = 64.0;
  if (xd > 0 && xd < 1) est = log_eps / std::log(xd) + 48.0;
  est = std::min(est, static_cast<double>(max_terms));
  return static_cast<unsigned>(std::max(est, 32.0));
}

}  // namespace

SeriesResult f_eval(unsigned n, const BigReal& x, const PrecisionConfig& cfg) {
  require_unit_interval(x, "f_eval");
  const unsigned wp = cfg.working_bits();
  const PrecisionConfig inner = cfg.eps_shifted(2);

  unsigned rows = estimate_power_series_rows(x, inner.target_eps, cfg.max_terms);
  for (;;) {
    const HarmonicTable table(rows + 1, n);
    BigReal x_pow(1, wp);
    auto term = [&, j_next = 0u](unsigned j) mutable -> BigReal {
      if (j != j_next++) throw std::logic_error("f_eval: non-sequential term request");
      BigReal t = BigReal::from_rational(table.at(j + 1, n), wp) * x_pow;
      x_pow *= x;
      return t;
    };
    // t_{j+1}/t_j = x * H_{j+2}^{(n)}/H_{j+1}^{(n)} <= x (j+2)/(j+1),
    // decreasing in j, hence valid for the whole tail.
    auto ratio = [&](unsigned j) {
      return x * BigReal::from_rational(Rational(static_cast<long>(j) + 2,
                                                 static_cast<long>(j) + 1), wp);
    };
    PrecisionConfig run = inner;
    run.max_terms = rows;
    SeriesResult result = sum_positive_series(term, ratio, run);
    if (result.converged || rows >= cfg.max_terms) return result;
    rows = std::min(cfg.max_terms, rows * 2);
  }
}

IdentityCheck f_recursion_check(unsigned n, const BigReal& x, const PrecisionConfig& cfg) {
  if (n < 1) throw std::invalid_argument("f_recursion_check: need n >= 1");
  require_unit_interval(x, "f_recursion_check");
  const unsigned wp = cfg.working_bits();
  const BigReal one(1, wp);

  const SeriesResult lhs = f_eval(n, x, cfg);

  // Termwise integral of f_{n-1}: sum_j H_{j+1}^{(n-1)} x^{j+1}/(j+1).
  const PrecisionConfig inner = cfg.eps_shifted(2);
  unsigned rows = estimate_power_series_rows(x, inner.target_eps, cfg.max_terms);
  SeriesResult integral;
  for (;;) {
    const HarmonicTable table(rows + 1, n - 1);
    BigReal x_pow = x;
    auto term = [&, j_next = 0u](unsigned j) mutable -> BigReal {
      if (j != j_next++)
        throw std::logic_error("f_recursion_check: non-sequential term request");
      BigReal t = BigReal::from_rational(
                      table.at(j + 1, n - 1) / Rational(static_cast<long>(j) + 1), wp) *
                  x_pow;
      x_pow *= x;
      return t;
    };
    // u_{j+1}/u_j = x * (H_{j+2}/H_{j+1}) * ((j+1)/(j+2)) <= x.
    auto ratio = [&](unsigned) { return x; };
    PrecisionConfig run = inner;
    run.max_terms = rows;
    integral = sum_positive_series(term, ratio, run);
    if (integral.converged || rows >= cfg.max_terms) break;
    rows = std::min(cfg.max_terms, rows * 2);
  }

  const BigReal denom = x * (one - x);
  IdentityCheck check;
  check.lhs = lhs.value;
  check.rhs = integral.value / denom;
  check.tolerance = lhs.tail_bound + integral.tail_bound / denom +
                    rounding_slack(check.rhs, cfg.precision_bits);
  check.ok = abs(check.lhs - check.rhs) <= check.tolerance;
  return check;
}

SeriesResult incomplete_beta(const BigReal& x, const BigReal& a, const BigReal& b,
                             const PrecisionConfig& cfg) {
  const unsigned wp = cfg.working_bits();
  if (!(a > BigReal(0, 64))) throw std::invalid_argument("incomplete_beta: need a > 0");
  require_unit_interval(x, "incomplete_beta");
  const BigReal one(1, wp);

  // B(x,a,b) = x^a sum_j (1-b)_j / (j! (a+j)) x^j.
  BigReal pochhammer(1, wp);  // (1-b)_j x^j / j!
  auto term = [&, j_next = 0u](unsigned j) mutable -> BigReal {
    if (j != j_next++)
      throw std::logic_error("incomplete_beta: non-sequential term request");
    BigReal t = pochhammer / (a + BigReal(static_cast<long>(j), wp));
    pochhammer *= (BigReal(static_cast<long>(j) + 1, wp) - b) * x /
                  BigReal(static_cast<long>(j) + 1, wp);
    return t;
  };
  // |t_{j+1}|/|t_j| = x |j+1-b|/(j+1) * (a+j)/(a+j+1) <= x (j+1+|b|)/(j+1),
  // which decreases in j, hence bounds every later ratio.
  auto ratio = [&](unsigned j) {
    return x * (BigReal(static_cast<long>(j) + 1, wp) + abs(b)) /
           BigReal(static_cast<long>(j) + 1, wp);
  };

  SeriesResult sum = sum_ratio_bounded_series(term, ratio, cfg.eps_shifted(1));
  const BigReal front = pow(x, a);  // < 1, so scaling only shrinks the bound
  sum.value = front * sum.value;
  sum.tail_bound = front * sum.tail_bound + rounding_slack(sum.value, cfg.precision_bits);
  return sum;
}

SeriesResult q_eval(const BigReal& x, const BigReal& y, const PrecisionConfig& cfg) {
  require_unit_interval(x, "q_eval");
  const unsigned wp = cfg.working_bits();
  const BigReal one(1, wp);
  if (!(abs(y) < one)) throw std::domain_error("q_eval: need |y| < 1");

  SeriesResult beta = incomplete_beta(x, one - y, one + y, cfg);
  const BigReal denom = pow(x, one - y) * pow(one - x, one + y);
  beta.value = beta.value / denom;
  beta.tail_bound =
      beta.tail_bound / denom + rounding_slack(beta.value, cfg.precision_bits);
  return beta;
}

SeriesResult zetahat_gf(const BigReal& y, const PrecisionConfig& cfg) {
  const unsigned wp = cfg.working_bits();
  const BigReal one(1, wp);
  if (!(abs(y) < one)) throw std::domain_error("zetahat_gf: need |y| < 1");
  return incomplete_beta(BigReal::from_rational(Rational(1, 2), wp), one - y, one + y, cfg);
}

EvenGfCheck even_gf_check(const BigReal& t, const PrecisionConfig& cfg) {
  const unsigned wp = cfg.working_bits();
  const BigReal one(1, wp);
  const BigReal two(2, wp);
  if (abs(t) >= one) throw std::domain_error("even_gf_check: need |t| < 1");

  EvenGfCheck out;
  if (t.is_zero()) {
    // Both identities reduce to 0 = 0.
    out.eta_identity = {BigReal(wp), BigReal(wp), cfg.target_eps, true};
    out.zeta_identity = out.eta_identity;
    return out;
  }

  const BigReal t2 = t * t;
  const BigReal eps_quarter = ldexp2(cfg.target_eps, -2);
  const PrecisionConfig order_cfg = cfg.eps_shifted(4);

  // One harmonic table serves every order; depth grows with the truncation
  // index J defined by t^{2(J+1)}/(1-t^2) <= eps/4 (coefficients are < 1).
  unsigned J = 1;
  {
    BigReal weight = t2 * t2;
    while (weight / (one - t2) > eps_quarter && J < cfg.max_terms) {
      weight *= t2;
      ++J;
    }
  }
  const unsigned rows =
      std::max(32l, -order_cfg.target_eps.exponent2() + 24) < cfg.max_terms
          ? static_cast<unsigned>(std::max(32l, -order_cfg.target_eps.exponent2() + 24))
          : cfg.max_terms;
  const HarmonicTable table(rows + 1, 2 * J);

  BigReal eta_sum(wp), eta_bound(wp), zeta_sum(wp), zeta_bound(wp);
  BigReal weight = t2;
  for (unsigned j = 1; j <= J; ++j) {
    const SeriesResult eta_j = zetahat_from_table(2 * j, table, order_cfg);
    eta_sum += weight * eta_j.value;
    eta_bound += weight * eta_j.tail_bound;
    const Integer two_pow = Integer(1) << (2 * j - 1);
    const BigReal pref = BigReal::from_rational(Rational(two_pow, two_pow - 1), wp);
    zeta_sum += weight * pref * eta_j.value;
    zeta_bound += weight * pref * eta_j.tail_bound;
    weight *= t2;
  }
  // Truncation tails: eta(2j) < 1 and zeta(2j) <= zeta(2) < 2 for j > J.
  const BigReal trunc = weight / (one - t2);
  eta_bound += trunc;
  zeta_bound += two * trunc;

  const BigReal pi_t = BigReal::pi(wp) * t;
  out.eta_identity.lhs = two * eta_sum;
  out.eta_identity.rhs = pi_t / sin(pi_t) - one;
  out.eta_identity.tolerance =
      two * eta_bound + rounding_slack(out.eta_identity.rhs, cfg.precision_bits);
  out.eta_identity.ok =
      abs(out.eta_identity.lhs - out.eta_identity.rhs) <= out.eta_identity.tolerance;

  out.zeta_identity.lhs = two * zeta_sum;
  out.zeta_identity.rhs = one - pi_t * cot(pi_t);
  out.zeta_identity.tolerance =
      two * zeta_bound + rounding_slack(out.zeta_identity.rhs, cfg.precision_bits);
  out.zeta_identity.ok =
      abs(out.zeta_identity.lhs - out.zeta_identity.rhs) <= out.zeta_identity.tolerance;
  return out;
}

IdentityCheck odd_gf_check(const BigReal& y, const PrecisionConfig& cfg) {
  const unsigned wp = cfg.working_bits();
  const BigReal one(1, wp);
  if (y.is_zero() || abs(y) >= one)
    throw std::domain_error("odd_gf_check: need 0 < |y| < 1");

  const BigReal y2 = y * y;
  const BigReal eps_quarter = ldexp2(cfg.target_eps, -2);
  const PrecisionConfig order_cfg = cfg.eps_shifted(4);

  unsigned J = 0;
  {
    BigReal weight = abs(y) * y2;  // |y|^{2J+3} at J = 0
    while (weight / (one - y2) > eps_quarter && J < cfg.max_terms) {
      weight *= y2;
      ++J;
    }
  }
  const unsigned rows =
      std::max(32l, -order_cfg.target_eps.exponent2() + 24) < cfg.max_terms
          ? static_cast<unsigned>(std::max(32l, -order_cfg.target_eps.exponent2() + 24))
          : cfg.max_terms;
  const HarmonicTable table(rows + 1, 2 * J);

  BigReal lhs(wp), lhs_bound(wp);
  BigReal weight = y;
  for (unsigned j = 0; j <= J; ++j) {
    const SeriesResult eta_j = zetahat_from_table(2 * j + 1, table, order_cfg);
    lhs += weight * eta_j.value;
    lhs_bound += abs(weight) * eta_j.tail_bound;
    weight *= y2;
  }
  lhs_bound += abs(weight) / (one - y2);  // eta(odd) < 1 beyond the cut

  const SeriesResult beta = zetahat_gf(y, cfg.eps_shifted(2));
  const BigReal pi_y = BigReal::pi(wp) * y;
  IdentityCheck check;
  check.lhs = lhs;
  check.rhs = beta.value - pi_y / (BigReal(2, wp) * sin(pi_y));
  check.tolerance =
      lhs_bound + beta.tail_bound + rounding_slack(check.rhs, cfg.precision_bits);
  check.ok = abs(check.lhs - check.rhs) <= check.tolerance;
  return check;
}

}  // namespace eulerzeta
