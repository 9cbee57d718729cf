#include "kleinian/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace kleinian {

long long gcd(long long a, long long b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::optional<Fraction> recognize_rational(double x, long long max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Convergents h/k of the continued fraction of x.
  long long h_prev = 1, h = static_cast<long long>(std::floor(x));
  long long k_prev = 0, k = 1;
  double rest = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    if (k > max_den) break;
    if (std::fabs(x - static_cast<double>(h) / static_cast<double>(k)) <= tol) {
      return Fraction{h, k};
    }
    if (rest < 1e-15) break;
    double inv = 1.0 / rest;
    double a_real = std::floor(inv);
    if (a_real > 1e12) break;
    long long a = static_cast<long long>(a_real);
    rest = inv - a_real;
    long long h_next = a * h + h_prev;
    long long k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

}  // namespace kleinian
