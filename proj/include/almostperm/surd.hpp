#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "rational.hpp"

namespace almostperm {

/// A nonnegative real of the form sum_i c_i * sqrt(q_i) with rational
/// c_i, q_i >= 0. Used for the a-priori root bounds, which are irrational;
/// comparisons against a Rational are decided exactly.
class SurdSum {
public:
  struct Term {
    Rational coef;
    Rational radicand;
  };

  SurdSum() = default;
  SurdSum(Rational coef, Rational radicand) { add(coef, radicand); }

  void add(Rational coef, Rational radicand) {
    if (coef < 0 || radicand < 0)
      throw InvalidArgument("surd terms must be nonnegative");
    if (coef == 0 || radicand == 0)
      return;
    terms_.push_back({coef, radicand});
  }

  /// this + scale * other
  SurdSum plus_scaled(const SurdSum &other, Rational scale) const {
    SurdSum out = *this;
    for (const auto &t : other.terms_)
      out.add(t.coef * scale, t.radicand);
    return out;
  }

  const std::vector<Term> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  double to_double() const {
    double s = 0;
    for (const auto &t : terms_)
      s += t.coef.to_double() * std::sqrt(t.radicand.to_double());
    return s;
  }

  /// e.g. `1*sqrt(4/5) + 3*sqrt(8/30000)`; `0` for the empty sum.
  std::string str() const {
    if (terms_.empty())
      return "0";
    std::string out;
    for (const auto &t : terms_) {
      if (!out.empty())
        out += " + ";
      out += t.coef.str() + "*sqrt(" + t.radicand.str() + ")";
    }
    return out;
  }

  std::string decimal(int digits = 6) const {
    return Rational::format_decimal(to_double(), digits);
  }

  /// Exact three-way comparison of `x` against this value.
  std::strong_ordering compare(const Rational &x) const;

  friend bool operator<=(const Rational &x, const SurdSum &s) {
    return s.compare(x) != std::strong_ordering::greater;
  }
  friend bool operator<(const Rational &x, const SurdSum &s) {
    return s.compare(x) == std::strong_ordering::less;
  }

private:
  std::vector<Term> terms_;
};

namespace detail {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt isqrt(const BigInt &v) { return boost::multiprecision::sqrt(v); }

} // namespace detail

inline std::strong_ordering SurdSum::compare(const Rational &x) const {
  using detail::BigInt;
  // Each term c*sqrt(q) = sqrt(A)/B with A = a*b, B = b where c^2 q = a/b.
  struct Scaled {
    BigInt a;
    BigInt b;
  };
  std::vector<Scaled> scaled;
  bool all_square = true;
  for (const auto &t : terms_) {
    BigInt cn = t.coef.num(), cd = t.coef.den();
    BigInt qn = t.radicand.num(), qd = t.radicand.den();
    BigInt a = cn * cn * qn;
    BigInt b = cd * cd * qd;
    Scaled s{a * b, b};
    BigInt r = detail::isqrt(s.a);
    if (r * r != s.a)
      all_square = false;
    scaled.push_back(std::move(s));
  }

  const BigInt xn = x.num(), xd = x.den();
  // value <=> x, reported as x <=> value from the caller's perspective.
  auto from_x = [](int sign) {
    if (sign < 0)
      return std::strong_ordering::less;
    if (sign > 0)
      return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  };

  if (all_square) {
    // Sum of rationals sqrt(A)/B; compare exactly over a common denominator.
    BigInt num = 0, den = 1;
    for (const auto &s : scaled) {
      BigInt r = detail::isqrt(s.a);
      num = num * s.b + r * den;
      den *= s.b;
    }
    BigInt lhs = xn * den, rhs = num * xd;
    return from_x(lhs < rhs ? -1 : (lhs > rhs ? 1 : 0));
  }

  // At least one term is irrational and all terms are positive, so the sum
  // is irrational and never equals x: refine a dyadic enclosure until the
  // comparison is decided.
  const BigInt terms = static_cast<long>(scaled.size());
  for (unsigned bits = 64; bits <= 64 * 64; bits += 64) {
    BigInt scale = BigInt(1) << bits;
    BigInt lo = 0;
    for (const auto &s : scaled)
      lo += detail::isqrt(s.a * scale * scale) / s.b;
    // value * scale lies in [lo, lo + terms].
    BigInt xs = xn * scale;
    if (xs < lo * xd)
      return std::strong_ordering::less;
    if (xs > (lo + terms) * xd)
      return std::strong_ordering::greater;
  }
  throw Error("surd comparison did not converge");
}

} // namespace almostperm
