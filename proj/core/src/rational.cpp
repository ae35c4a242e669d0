#include "dealmix/rational.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "dealmix/error.hpp"

namespace dealmix {

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw InvalidInput("not a rational number: '" + text + "'");
  }
}

std::string Rational::str() const { return value_.get_num().get_str() + "/" + value_.get_den().get_str(); }

double Rational::to_double() const {
  if (value_ == 0) return 0.0;
  const BigInt num = ::abs(value_.get_num());
  const BigInt& den = value_.get_den();
  // scale so the quotient carries at least 55 significant bits
  const long e = 55 - static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) +
                 static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  BigInt scaled = num;
  BigInt divisor = den;
  if (e > 0)
    scaled <<= static_cast<mp_bitcnt_t>(e);
  else
    divisor <<= static_cast<mp_bitcnt_t>(-e);
  BigInt q;
  BigInt r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), divisor.get_mpz_t());
  const bool sticky = r != 0;
  const auto shift = static_cast<mp_bitcnt_t>(mpz_sizeinbase(q.get_mpz_t(), 2) - 53);
  BigInt m = q >> shift;
  const BigInt low = q - (m << shift);
  const BigInt half = BigInt(1) << (shift - 1);
  if (low > half || (low == half && (sticky || mpz_odd_p(m.get_mpz_t())))) ++m;
  const double magnitude = std::ldexp(m.get_d(), static_cast<int>(shift) - static_cast<int>(e));
  return value_ < 0 ? -magnitude : magnitude;
}

std::string Rational::float_str() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", to_double());
  return buf;
}

Rational Rational::abs() const {
  Rational out = *this;
  out.value_ = ::abs(value_);
  return out;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.value_ = -value_;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt power(const BigInt& base, unsigned exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::int64_t to_int64(const BigInt& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + value.get_str());
  return value.get_si();
}

}  // namespace dealmix
