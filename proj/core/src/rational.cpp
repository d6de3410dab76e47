#include "zernike/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace zernike {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

Rational operator+(Rational a, Rational b) {
  return make_rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator-(Rational a) { return {-a.num, a.den}; }

Rational operator-(Rational a, Rational b) { return a + (-b); }

Rational operator*(Rational a, Rational b) {
  return make_rational(a.num * b.num, a.den * b.den);
}

Rational operator*(std::int64_t k, Rational a) {
  return make_rational(k * a.num, a.den);
}

double to_double(Rational a) {
  return static_cast<double>(a.num) / static_cast<double>(a.den);
}

}  // namespace zernike
