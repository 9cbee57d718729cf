#pragma once

#include <optional>

namespace kleinian {

struct Fraction {
  long long num = 0;
  long long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_integer() const { return den == 1; }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

long long gcd(long long a, long long b);

// Smallest-denominator continued-fraction convergent p/q of x with
// q <= max_den and |x - p/q| <= tol.
std::optional<Fraction> recognize_rational(double x, long long max_den, double tol);

}  // namespace kleinian
