#include "cubetess/rational.hpp"

#include <cctype>
#include <ostream>

#include "cubetess/error.hpp"

namespace cubetess {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(Errc::BadRational, "zero denominator");
  canonicalize();
}

void Rational::canonicalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  Integer g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  canonicalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  canonicalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(Errc::BadRational, "division by zero");
  // copy first: rhs may alias *this
  Integer rn = rhs.num_;
  num_ *= rhs.den_;
  den_ *= rn;
  canonicalize();
  return *this;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = a.den_ == b.den_ ? a.num_.compare(b.num_) : Integer(a.num_ * b.den_).compare(Integer(b.num_ * a.den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.str();
  return num_.str() + "/" + den_.str();
}

double Rational::to_double() const {
  using Big = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
  return static_cast<double>(Big(num_) / Big(den_));
}

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) return false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  out = Integer(std::string(text.substr(pos)));
  if (negative) out = -out;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  Integer num;
  Integer den = 1;
  auto slash = text.find('/');
  bool ok = slash == std::string_view::npos
                ? parse_integer(text, num)
                : parse_integer(text.substr(0, slash), num) && parse_integer(text.substr(slash + 1), den);
  if (!ok) throw Error(Errc::Syntax, "malformed rational '" + std::string(text) + "'");
  return Rational(std::move(num), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exponent) {
  return Rational(ipow(base.num(), exponent), ipow(base.den(), exponent));
}

Integer floor(const Rational& r) {
  Integer q = r.num() / r.den();  // truncates toward zero
  if (r.sign() < 0 && q * r.den() != r.num()) --q;
  return q;
}

Integer ceil(const Rational& r) {
  Integer q = r.num() / r.den();
  if (r.sign() > 0 && q * r.den() != r.num()) ++q;
  return q;
}

Integer ipow(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

std::optional<Integer> exact_root(const Integer& n, unsigned d) {
  if (n.sign() < 0 || d == 0) return std::nullopt;
  if (n < 2 || d == 1) return n;
  // bisection on m in [1, 2^(bits/d + 1)]
  Integer lo = 1;
  Integer hi = Integer(1) << (boost::multiprecision::msb(n) / d + 1);
  while (lo < hi) {
    Integer mid = (lo + hi + 1) / 2;
    if (ipow(mid, d) <= n) lo = mid; else hi = mid - 1;
  }
  if (ipow(lo, d) == n) return lo;
  return std::nullopt;
}

}  // namespace cubetess
