#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "tropskel/error.hpp"

namespace tropskel {

/// Exact rational number. Every length, offset and function value in the
/// library is one of these; there is no floating point in the core.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "p/q", "p" or "-p/q". Throws FormatError on anything else or q == 0.
  static Rational parse(std::string_view text);

  /// Canonical "p/q" form with q >= 1 and gcd(p, q) = 1.
  std::string str() const;

  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }
  bool is_negative() const { return sign() < 0; }

  /// Integer value; throws if not an integer or out of range of long.
  long to_long() const;
  /// Floor and ceiling as integers (range-checked).
  long floor() const;
  long ceil() const;
  /// Approximate value for plotting only.
  double to_double() const { return value_.get_d(); }

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Least common multiple of the denominators of all values in [first, last).
template <typename It>
mpz_class common_denominator(It first, It last) {
  mpz_class l = 1;
  for (; first != last; ++first) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), first->denominator().get_mpz_t());
  }
  return l;
}

}  // namespace tropskel
