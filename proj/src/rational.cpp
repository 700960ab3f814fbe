#include "leveldiv/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace leveldiv {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("exact arithmetic overflow");
  return static_cast<std::int64_t>(x);
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::pair<std::int64_t, std::int64_t> normalize(Wide num, Wide den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g == 0) g = 1;
  return {narrow(num / g), narrow(den / g)};
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  auto [n, d] = normalize(num, den);
  num_ = n;
  den_ = d;
}

Rational Rational::from_double(double d) {
  if (!std::isfinite(d)) throw std::overflow_error("cannot represent a non-finite value exactly");
  if (d == 0.0) return Rational(0);
  int exp = 0;
  // mant in [0.5, 1); mant * 2^53 is integral for any finite double.
  const double mant = std::frexp(d, &exp);
  std::int64_t num = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  while (num % 2 == 0 && exp < 0) {
    num /= 2;
    ++exp;
  }
  if (exp >= 0) {
    if (exp > 62) throw std::overflow_error("value too large for exact arithmetic");
    auto [n, dn] = normalize(static_cast<Wide>(num) << exp, 1);
    return Rational(n, dn);
  }
  if (exp < -62) throw std::overflow_error("value too small for exact arithmetic");
  auto [n, dn] = normalize(num, Wide{1} << -exp);
  return Rational(n, dn);
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-static_cast<Wide>(num_));
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  auto [n, d] = normalize(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
                          static_cast<Wide>(a.den_) * b.den_);
  return Rational(n, d);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  auto [n, d] = normalize(static_cast<Wide>(a.num_) * b.num_,
                          static_cast<Wide>(a.den_) * b.den_);
  return Rational(n, d);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::invalid_argument("division by zero");
  auto [n, d] = normalize(static_cast<Wide>(a.num_) * b.den_,
                          static_cast<Wide>(a.den_) * b.num_);
  return Rational(n, d);
}

}  // namespace leveldiv
