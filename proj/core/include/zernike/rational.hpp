#pragma once

#include <cstdint>

namespace zernike {

/// Exact rational with int64 parts, kept normalized (den > 0, gcd = 1).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Normalizing constructor; throws std::invalid_argument when den == 0.
Rational make_rational(std::int64_t num, std::int64_t den);

Rational operator+(Rational a, Rational b);
Rational operator-(Rational a);
Rational operator-(Rational a, Rational b);
Rational operator*(Rational a, Rational b);
Rational operator*(std::int64_t k, Rational a);

double to_double(Rational a);

}  // namespace zernike
