#pragma once

#include "eulerzeta/series.hpp"

namespace eulerzeta {

/// Outcome of a numerical identity check: |lhs - rhs| <= tolerance, where
/// the tolerance combines the certified tail bounds of both sides plus a
/// small rounding allowance.
struct IdentityCheck {
  BigReal lhs;
  BigReal rhs;
  BigReal tolerance;
  bool ok = false;
  explicit operator bool() const { return ok; }
};

/// f_n(x) = sum_{j>=0} x^j H_{j+1}^{(n)}, the generating function of the
/// generalized harmonic numbers, for 0 < x < 1. Tail certified through
/// H_{j+1}^{(n)} <= j+1.
SeriesResult f_eval(unsigned n, const BigReal& x, const PrecisionConfig& cfg);

/// Checks the integral recursion f_n(x) = 1/(x(1-x)) * int_0^x f_{n-1}(y) dy
/// by termwise integration of the truncated power series (n >= 1).
IdentityCheck f_recursion_check(unsigned n, const BigReal& x, const PrecisionConfig& cfg);

/// Incomplete beta function B(x,a,b) = int_0^x t^{a-1}(1-t)^{b-1} dt for
/// 0 < x < 1, a > 0, via the power series
///   x^a sum_{j>=0} (1-b)_j / (j! (a+j)) x^j
/// whose term magnitudes are eventually geometric with ratio <= x.
SeriesResult incomplete_beta(const BigReal& x, const BigReal& a, const BigReal& b,
                             const PrecisionConfig& cfg);

/// Q(x,y) = B(x,1-y,1+y) / (x^{1-y} (1-x)^{1+y}), the generating function of
/// the f_n; 0 < x < 1, |y| < 1.
SeriesResult q_eval(const BigReal& x, const BigReal& y, const PrecisionConfig& cfg);

/// sum_{j>=0} y^j zetahat(j) = B(1/2, 1-y, 1+y) for |y| < 1; returns the
/// right-hand side.
SeriesResult zetahat_gf(const BigReal& y, const PrecisionConfig& cfg);

/// Even-order generating identities at 0 < |t| < 1:
///   2 sum_{j>=1} zetahat(2j) t^{2j} = pi t / sin(pi t) - 1, and the
///   precursor 2 sum_{j>=1} zeta(2j) t^{2j} = 1 - pi t cot(pi t).
struct EvenGfCheck {
  IdentityCheck eta_identity;
  IdentityCheck zeta_identity;
  explicit operator bool() const { return eta_identity.ok && zeta_identity.ok; }
};

EvenGfCheck even_gf_check(const BigReal& t, const PrecisionConfig& cfg);

/// Odd part of the zetahat generating function, 0 < |y| < 1:
///   sum_{j>=0} y^{2j+1} zetahat(2j+1) = B(1/2,1-y,1+y) - pi y / (2 sin(pi y))
/// (full generating function minus zetahat(0) = 1/2 minus the even part).
IdentityCheck odd_gf_check(const BigReal& y, const PrecisionConfig& cfg);

}  // namespace eulerzeta
