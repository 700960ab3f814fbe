#pragma once

#include <cstdint>
#include <string>

namespace leveldiv {

// Exact fraction on int64, always normalized (gcd 1, positive denominator).
// Arithmetic goes through 128-bit intermediates and throws std::overflow_error
// instead of wrapping, so results are either exact or loud.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den);
  // NOLINTNEXTLINE: implicit on purpose, integers are rationals
  Rational(std::int64_t value) : num_(value), den_(1) {}

  // Exact conversion; throws when d is not finite or needs more than 64 bits.
  static Rational from_double(double d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const;
  // "54" for integers, "-103/2" otherwise.
  std::string to_string() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace leveldiv
