#pragma once

#include <mpfr.h>

#include <string>

#include "eulerzeta/rational.hpp"

namespace eulerzeta {

/// Binary floating value with per-value precision (>= 53 bits).
/// Arithmetic between two values runs at the larger of the two precisions
/// and rounds to nearest, so mixing a low-precision exact constant into a
/// high-precision computation loses nothing. Values are immutable in spirit:
/// every operation returns a fresh value.
class BigReal {
 public:
  static constexpr unsigned kMinPrecision = 53;

  explicit BigReal(unsigned bits = kMinPrecision);  // zero
  BigReal(long value, unsigned bits);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  static BigReal from_string(const std::string& decimal, unsigned bits);
  static BigReal from_rational(const Rational& q, unsigned bits);
  static BigReal from_integer(const Integer& n, unsigned bits);
  static BigReal from_double(double d, unsigned bits);

  /// pi and ln 2, correctly rounded to the requested precision.
  static BigReal pi(unsigned bits);
  static BigReal ln2(unsigned bits);

  unsigned precision() const;
  BigReal rounded_to(unsigned bits) const;

  bool is_zero() const;
  bool is_negative() const;
  bool is_nan() const;
  bool is_finite() const;
  int sign() const;

  double to_double() const;

  /// Scientific-notation decimal with the given number of significant
  /// digits, e.g. "9.159655941772190e-01". Deterministic for a fixed value
  /// and digit count; parsing the result at the same precision and
  /// reprinting reproduces the identical string.
  std::string to_string(size_t significant_digits) const;

  BigReal operator-() const;
  BigReal& operator+=(const BigReal& r);
  BigReal& operator-=(const BigReal& r);
  BigReal& operator*=(const BigReal& r);
  BigReal& operator/=(const BigReal& r);

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);

  friend bool operator==(const BigReal& a, const BigReal& b);
  friend bool operator!=(const BigReal& a, const BigReal& b);
  friend bool operator<(const BigReal& a, const BigReal& b);
  friend bool operator<=(const BigReal& a, const BigReal& b);
  friend bool operator>(const BigReal& a, const BigReal& b);
  friend bool operator>=(const BigReal& a, const BigReal& b);

  friend BigReal abs(const BigReal& x);
  friend BigReal sqrt(const BigReal& x);   // domain: x >= 0
  friend BigReal ln(const BigReal& x);     // domain: x > 0
  friend BigReal sin(const BigReal& x);
  friend BigReal cot(const BigReal& x);    // domain: sin(x) != 0
  friend BigReal pow(const BigReal& base, const BigReal& exponent);
  friend BigReal pow_int(const BigReal& base, long e);
  friend BigReal ldexp2(const BigReal& x, long e);  // x * 2^e, exact

  /// Exponent e with |x| in [2^{e-1}, 2^e); 0 for zero.
  long exponent2() const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

/// Correctly rounded conversion of an exact rational.
inline BigReal rational_to_real(const Rational& q, unsigned bits) {
  return BigReal::from_rational(q, bits);
}

}  // namespace eulerzeta
