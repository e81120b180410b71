#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubetess {

using Integer =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// Exact rational number kept in canonical form: den() > 0 and
/// gcd(|num()|, den()) == 1. Every constructor and operation canonicalizes.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::integral auto value) : num_(value), den_(1) {}  // NOLINT: implicit by design of a number type
  Rational(Integer value) : num_(std::move(value)), den_(1) {}  // NOLINT
  /// Throws Error(BadRational) when den == 0.
  Rational(Integer num, Integer den);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  int sign() const noexcept { return num_.sign(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws Error(BadRational) on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "k" for integers, "p/q" otherwise.
  std::string to_string() const;
  /// Display only; never feed the result back into a decision.
  double to_double() const;

  /// Accepts "[+-]digits" or "[+-]digits/[+-]digits". Malformed text throws
  /// Error(Syntax); a zero denominator throws Error(BadRational).
  static Rational parse(std::string_view text);

 private:
  void canonicalize();

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);
Integer floor(const Rational& r);
Integer ceil(const Rational& r);

Integer ipow(const Integer& base, unsigned exponent);
/// The integer m >= 0 with m^d == n, if one exists. n must be >= 0.
std::optional<Integer> exact_root(const Integer& n, unsigned d);

}  // namespace cubetess
