#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace nilorbit {

namespace detail {

using i128 = __int128;

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

inline i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline long long narrow_checked(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
    throw std::overflow_error("rational arithmetic overflow");
  return static_cast<long long>(v);
}

}  // namespace detail

// Exact rational scalar on 64-bit numerator and denominator. Every operation
// reduces through 128-bit intermediates and throws std::overflow_error
// instead of wrapping. Invariant: denominator > 0, gcd(num, den) = 1.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit integers are intended
  Rational(long long n, long long d) { *this = make(n, d); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational operator+(const Rational& o) const {
    using detail::i128;
    return make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Rational operator-(const Rational& o) const { return *this + (-o); }
  Rational operator*(const Rational& o) const {
    using detail::i128;
    return make(i128(num_) * o.num_, i128(den_) * o.den_);
  }
  Rational operator/(const Rational& o) const {
    using detail::i128;
    if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
    return make(i128(num_) * o.den_, i128(den_) * o.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  std::strong_ordering operator<=>(const Rational& o) const {
    using detail::i128;
    i128 lhs = i128(num_) * o.den_;
    i128 rhs = i128(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  static Rational make(detail::i128 n, detail::i128 d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    detail::i128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = detail::narrow_checked(n);
    r.den_ = detail::narrow_checked(d);
    return r;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace nilorbit
