#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace eulerzeta {

/// Arbitrary-precision integer. Thin alias over GMP's C++ binding.
using Integer = mpz_class;

/// Exact rational number in canonical form: denominator > 0 and
/// gcd(|num|, den) = 1 after every operation. All exact tables
/// (harmonic numbers, difference tables, Bernoulli numbers) carry these.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : q_(n) {}  // NOLINT(google-explicit-constructor)

  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return from_canonical(mpq_class(-q_)); }

  Rational& operator+=(const Rational& r) { q_ += r.q_; return *this; }
  Rational& operator-=(const Rational& r) { q_ -= r.q_; return *this; }
  Rational& operator*=(const Rational& r) { q_ *= r.q_; return *this; }
  Rational& operator/=(const Rational& r) {
    if (r.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= r.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(denominator(), numerator());
  }

  /// q^e for any integer exponent; negative exponents invert.
  Rational pow(long e) const {
    if (e < 0) return reciprocal().pow(-e);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
  }

  std::string to_string() const { return q_.get_str(); }

  /// Underlying GMP value (canonical); used for float conversion.
  const mpq_class& raw() const { return q_; }

 private:
  static Rational from_canonical(mpq_class q) {
    Rational out;
    out.q_ = std::move(q);
    return out;
  }

  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Integer pow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace eulerzeta
