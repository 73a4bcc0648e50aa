#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace densest {

using BigInt = mpz_class;

/// Exact fraction kept in canonical form (positive denominator, reduced).
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(const BigInt& value) : value_(value) {}                 // NOLINT
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Accepts "a/b", integers, and decimals with an optional exponent
  /// ("-1.25", "3e-2"). Throws ParseError on anything else.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const { return value_.get_d(); }

  /// "num/den", always with the denominator ("3/1").
  std::string str() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational out;
    out.value_ = -a.value_;
    return out;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::string to_string(const BigInt& value);

/// Least common multiple of two positive integers.
BigInt lcm(const BigInt& a, const BigInt& b);

/// floor(sqrt(value)) for value >= 0.
BigInt floor_sqrt(const BigInt& value);

/// floor(value) for any rational.
BigInt floor(const Rational& value);

/// Fits in a signed 64-bit integer.
bool fits_int64(const BigInt& value);
std::int64_t to_int64(const BigInt& value);

}  // namespace densest
