#include "eulerzeta/big_real.hpp"

#include <algorithm>
#include <stdexcept>

namespace eulerzeta {

namespace {

unsigned clamp_bits(unsigned bits) {
  return std::max(bits, BigReal::kMinPrecision);
}

unsigned max_prec(const BigReal& a, const BigReal& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

BigReal::BigReal(unsigned bits) {
  mpfr_init2(v_, clamp_bits(bits));
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, unsigned bits) {
  mpfr_init2(v_, clamp_bits(bits));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  v_[0] = other.v_[0];
  mpfr_init2(other.v_, kMinPrecision);  // moved-from stays destructible (NaN)
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::from_string(const std::string& decimal, unsigned bits) {
  BigReal out(clamp_bits(bits));
  if (mpfr_set_str(out.v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("BigReal::from_string: cannot parse '" + decimal + "'");
  return out;
}

BigReal BigReal::from_rational(const Rational& q, unsigned bits) {
  BigReal out(clamp_bits(bits));
  mpfr_set_q(out.v_, q.raw().get_mpq_t(), MPFR_RNDN);
  return out;
}

BigReal BigReal::from_integer(const Integer& n, unsigned bits) {
  BigReal out(clamp_bits(bits));
  mpfr_set_z(out.v_, n.get_mpz_t(), MPFR_RNDN);
  return out;
}

BigReal BigReal::from_double(double d, unsigned bits) {
  BigReal out(clamp_bits(bits));
  mpfr_set_d(out.v_, d, MPFR_RNDN);
  return out;
}

BigReal BigReal::pi(unsigned bits) {
  BigReal out(clamp_bits(bits));
  mpfr_const_pi(out.v_, MPFR_RNDN);
  return out;
}

BigReal BigReal::ln2(unsigned bits) {
  BigReal out(clamp_bits(bits));
  mpfr_const_log2(out.v_, MPFR_RNDN);
  return out;
}

unsigned BigReal::precision() const {
  return static_cast<unsigned>(mpfr_get_prec(v_));
}

BigReal BigReal::rounded_to(unsigned bits) const {
  BigReal out(clamp_bits(bits));
  mpfr_set(out.v_, v_, MPFR_RNDN);
  return out;
}

bool BigReal::is_zero() const { return mpfr_zero_p(v_) != 0; }
bool BigReal::is_negative() const { return mpfr_sgn(v_) < 0; }
bool BigReal::is_nan() const { return mpfr_nan_p(v_) != 0; }
bool BigReal::is_finite() const { return mpfr_number_p(v_) != 0; }
int BigReal::sign() const { return mpfr_sgn(v_); }

double BigReal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string BigReal::to_string(size_t significant_digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  const size_t digits = std::max<size_t>(significant_digits, 2);
  if (mpfr_zero_p(v_)) {
    std::string s = "0.";
    s.append(digits - 1, '0');
    return s + "e+00";
  }
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, digits, v_, MPFR_RNDN);
  std::string mantissa(raw);
  mpfr_free_str(raw);

  std::string sign;
  if (!mantissa.empty() && mantissa[0] == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  // mpfr mantissa is 0.ddd... * 10^exp10; render as d.dd...e(exp10-1).
  std::string out = sign + mantissa.substr(0, 1) + "." + mantissa.substr(1);
  const long e = static_cast<long>(exp10) - 1;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "e%+03ld", e);
  return out + buf;
}

BigReal BigReal::operator-() const {
  BigReal out(precision());
  mpfr_neg(out.v_, v_, MPFR_RNDN);
  return out;
}

BigReal& BigReal::operator+=(const BigReal& r) { return *this = *this + r; }
BigReal& BigReal::operator-=(const BigReal& r) { return *this = *this - r; }
BigReal& BigReal::operator*=(const BigReal& r) { return *this = *this * r; }
BigReal& BigReal::operator/=(const BigReal& r) { return *this = *this / r; }

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal out(max_prec(a, b));
  mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal out(max_prec(a, b));
  mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal out(max_prec(a, b));
  mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  if (b.is_zero()) throw std::domain_error("BigReal: division by zero");
  BigReal out(max_prec(a, b));
  mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

BigReal abs(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_abs(out.v_, x.v_, MPFR_RNDN);
  return out;
}

BigReal sqrt(const BigReal& x) {
  if (x.is_negative()) throw std::domain_error("BigReal: sqrt of negative value");
  BigReal out(x.precision());
  mpfr_sqrt(out.v_, x.v_, MPFR_RNDN);
  return out;
}

BigReal ln(const BigReal& x) {
  if (x.sign() <= 0) throw std::domain_error("BigReal: ln of non-positive value");
  BigReal out(x.precision());
  mpfr_log(out.v_, x.v_, MPFR_RNDN);
  return out;
}

BigReal sin(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_sin(out.v_, x.v_, MPFR_RNDN);
  return out;
}

BigReal cot(const BigReal& x) {
  if (x.is_zero()) throw std::domain_error("BigReal: cot at a zero of sin");
  BigReal out(x.precision());
  mpfr_cot(out.v_, x.v_, MPFR_RNDN);
  return out;
}

BigReal pow(const BigReal& base, const BigReal& exponent) {
  BigReal out(max_prec(base, exponent));
  mpfr_pow(out.v_, base.v_, exponent.v_, MPFR_RNDN);
  if (out.is_nan() && !base.is_nan() && !exponent.is_nan())
    throw std::domain_error("BigReal: pow outside real domain");
  return out;
}

BigReal pow_int(const BigReal& base, long e) {
  if (base.is_zero() && e < 0) throw std::domain_error("BigReal: negative power of zero");
  BigReal out(base.precision());
  mpfr_pow_si(out.v_, base.v_, e, MPFR_RNDN);
  return out;
}

BigReal ldexp2(const BigReal& x, long e) {
  BigReal out(x.precision());
  mpfr_mul_2si(out.v_, x.v_, e, MPFR_RNDN);
  return out;
}

long BigReal::exponent2() const {
  if (!is_finite() || is_zero()) return 0;
  return static_cast<long>(mpfr_get_exp(v_));
}

}  // namespace eulerzeta
