#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "refl/errors.hpp"

namespace refl {

/// Arbitrary-precision rational number, kept in lowest terms with a positive
/// denominator. Thin wrapper over GMP's mpq so the rest of the engine never
/// touches floating point.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den);

  /// Parses "a", "-a" or "a/b". Throws DataError on malformed input.
  static Rational parse(std::string_view s);

  Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  /// true iff the value is an integer that fits in long.
  bool is_small_integer() const;
  long as_long() const;

  /// Renders as "a" for integers, "a/b" otherwise.
  std::string str() const;

  std::size_t hash() const;

  /// Total order consistent with the numeric order.
  static int compare(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_); }

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace refl
