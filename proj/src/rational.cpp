#include "densest/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

#include "densest/errors.hpp"

namespace densest {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt pow10(unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw ParseError("not a number: '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) bad_number(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    const BigInt d(std::string(den), 10);
    if (d == 0) bad_number(text);
    const BigInt n(std::string(num), 10);
    return Rational(negative ? BigInt(-n) : n, d);
  }

  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_text = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) bad_number(text);
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }

  std::string digits;
  const auto dot = s.find('.');
  if (dot == std::string_view::npos) {
    if (!all_digits(s)) bad_number(text);
    digits = std::string(s);
  } else {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_number(text);
    if ((!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad_number(text);
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  }

  BigInt mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  if (exponent >= 0) return Rational(BigInt(mantissa * pow10(exponent)));
  return Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

BigInt floor_sqrt(const BigInt& value) {
  if (value < 0) throw std::domain_error("square root of a negative value");
  BigInt out;
  mpz_sqrt(out.get_mpz_t(), value.get_mpz_t());
  return out;
}

BigInt floor(const Rational& value) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), value.raw().get_num_mpz_t(),
             value.raw().get_den_mpz_t());
  return out;
}

bool fits_int64(const BigInt& value) {
  static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return value >= lo && value <= hi;
}

std::int64_t to_int64(const BigInt& value) {
  if (!fits_int64(value)) throw std::overflow_error("value exceeds int64");
  return static_cast<std::int64_t>(value.get_si());
}

}  // namespace densest
