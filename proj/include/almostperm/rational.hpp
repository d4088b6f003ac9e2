#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <string>

#include "error.hpp"

namespace almostperm {

/// Exact rational number with 64-bit numerator and denominator, always kept
/// in lowest terms with a positive denominator. Intermediate products are
/// formed in 128-bit arithmetic; a result that does not fit throws.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator+(const Rational &a, const Rational &b) {
    using W = __int128;
    return make(W(a.num_) * b.den_ + W(b.num_) * a.den_, W(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational &a, const Rational &b) {
    using W = __int128;
    return make(W(a.num_) * b.den_ - W(b.num_) * a.den_, W(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational &a, const Rational &b) {
    using W = __int128;
    return make(W(a.num_) * b.num_, W(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational &a, const Rational &b) {
    using W = __int128;
    if (b.num_ == 0)
      throw InvalidArgument("rational division by zero");
    return make(W(a.num_) * b.den_, W(a.den_) * b.num_);
  }
  Rational &operator+=(const Rational &o) { return *this = *this + o; }
  Rational &operator-=(const Rational &o) { return *this = *this - o; }
  Rational &operator*=(const Rational &o) { return *this = *this * o; }

  friend bool operator==(const Rational &, const Rational &) = default;
  friend std::strong_ordering operator<=>(const Rational &a,
                                          const Rational &b) {
    using W = __int128;
    W lhs = W(a.num_) * b.den_;
    W rhs = W(b.num_) * a.den_;
    if (lhs < rhs)
      return std::strong_ordering::less;
    if (lhs > rhs)
      return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// `num/den`, or just `num` when the denominator is 1.
  std::string str() const {
    if (den_ == 1)
      return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Six significant digits, e.g. `0.4` or `0.0282843`.
  std::string decimal() const { return format_decimal(to_double()); }

  static std::string format_decimal(double value, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return buf;
  }

  friend std::ostream &operator<<(std::ostream &os, const Rational &r) {
    return os << r.str();
  }

private:
  static Rational make(__int128 num, __int128 den) {
    if (den == 0)
      throw InvalidArgument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    constexpr __int128 lim = INT64_MAX;
    if (num > lim || num < -lim || den > lim)
      throw InvalidArgument("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  void assign(std::int64_t num, std::int64_t den) {
    *this = make(num, den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

} // namespace almostperm
