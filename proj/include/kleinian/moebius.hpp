#pragma once

#include <array>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "kleinian/tolerances.hpp"

namespace kleinian {

using Complex = std::complex<double>;

// A point of the Riemann sphere C u {oo}.
struct BoundaryPoint {
  Complex z{};
  bool infinite = false;

  static BoundaryPoint at_infinity() { return {Complex{}, true}; }
  static BoundaryPoint finite(Complex w) { return {w, false}; }
};

// Chordal distance on the Riemann sphere (diameter 2).
double chordal_distance(const BoundaryPoint& p, const BoundaryPoint& q);

// Unimodular 2x2 complex matrix, read projectively (M and -M are the same map).
class MoebiusMap {
 public:
  MoebiusMap() : m_{Complex{1}, Complex{}, Complex{}, Complex{1}} {}

  // Entries must already have unit determinant (within eps_det).
  static MoebiusMap from_entries(Complex a, Complex b, Complex c, Complex d,
                                 double eps_det = 1e-12);
  // Any invertible matrix, rescaled by a square root of its determinant.
  static MoebiusMap from_gl(Complex a, Complex b, Complex c, Complex d);
  static MoebiusMap identity() { return MoebiusMap{}; }
  static MoebiusMap diagonal(Complex lambda);

  Complex a() const { return m_[0]; }
  Complex b() const { return m_[1]; }
  Complex c() const { return m_[2]; }
  Complex d() const { return m_[3]; }

  Complex det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  Complex trace() const { return m_[0] + m_[3]; }
  Complex beta() const { return trace() * trace() - Complex{4}; }
  double norm_inf() const;

  MoebiusMap inverse() const;
  MoebiusMap operator-() const;
  MoebiusMap renormalized() const;

  BoundaryPoint apply(const BoundaryPoint& p) const;

  friend MoebiusMap operator*(const MoebiusMap& x, const MoebiusMap& y);

 private:
  MoebiusMap(Complex a, Complex b, Complex c, Complex d) : m_{a, b, c, d} {}
  std::array<Complex, 4> m_;
};

// Throws non_unit_determinant when |det M - 1| > eps_det * max(1, |M|^2).
void check_unit_determinant(const MoebiusMap& m, double eps_det);

// min(|M-N|, |M+N|) in the max-entry norm, scaled by max(1, |M|, |N|).
double projective_distance(const MoebiusMap& m, const MoebiusMap& n);
bool projectively_equal(const MoebiusMap& m, const MoebiusMap& n, double eps);
bool is_projective_identity(const MoebiusMap& m, double eps);

// Integer power; negative exponents invert first. Renormalizes every k products.
MoebiusMap power(const MoebiusMap& m, int exponent, int renormalize_every = 8);
MoebiusMap commutator(const MoebiusMap& f, const MoebiusMap& g);
MoebiusMap conjugate(const MoebiusMap& m, const MoebiusMap& by);

struct ParamTriple {
  double beta = 0.0;
  double beta_prime = 0.0;
  double gamma = 0.0;
};

struct ComplexTriple {
  Complex beta;
  Complex beta_prime;
  Complex gamma;
};

enum class ElementKind {
  identity,
  elliptic,
  parabolic,
  hyperbolic,
  pi_loxodromic,
  strictly_loxodromic,
};

struct ElementClass {
  ElementKind kind = ElementKind::identity;
  Complex beta{};
  // Elliptic only: unoriented rotation angle in (0, pi].
  std::optional<double> rotation_angle;
  // Elliptic with recognized angle 2*pi*q/order, gcd(q, order) = 1.
  std::optional<int> order;
  std::optional<int> angle_numerator;
  std::optional<bool> primitive;
};

const char* to_string(ElementKind kind);

ElementClass classify_element(const MoebiusMap& m, const Tolerances& tol = {});
// Same partition from beta alone (no determinant check, no identity case).
ElementClass classify_beta(Complex beta, const Tolerances& tol = {});

ComplexTriple complex_params_of(const MoebiusMap& f, const MoebiusMap& g);
ParamTriple params_of(const MoebiusMap& f, const MoebiusMap& g, const Tolerances& tol = {});

// Both signs of (M + I)/sqrt(tr M + 2); one element of PSL.
std::pair<MoebiusMap, MoebiusMap> sqrt_in_psl(const MoebiusMap& m, const Tolerances& tol = {});

// The distinct square roots of M in PSL: one when M is parabolic, else two.
std::vector<MoebiusMap> psl_square_roots(const MoebiusMap& m, const Tolerances& tol = {});

struct KthRoot {
  MoebiusMap root;
  double oriented_angle = 0.0;  // (theta + 2 pi j)/k
};

std::pair<BoundaryPoint, BoundaryPoint> fixed_points(const MoebiusMap& m);

std::vector<KthRoot> elliptic_kth_roots(const MoebiusMap& m, int k, const Tolerances& tol = {});

// The k-th root on M's axis whose unoriented angle is target (unique or throws).
MoebiusMap elliptic_root_with_angle(const MoebiusMap& m, int k, double target,
                                    const Tolerances& tol = {});

// beta = -4 sin^2(q pi / n) with gcd(q, n) = 1 and q <= n/2.
struct EllipticPower {
  int q = 1;
  int n = 2;
};
std::optional<EllipticPower> recognize_elliptic_beta(double beta, const Tolerances& tol = {});

ParamTriple normalize_primitive(const ParamTriple& triple, int q, int n,
                                const Tolerances& tol = {});
// j in [1, n) with j*q = +-1 (mod n).
int primitive_exponent(int q, int n);

struct GeneratorPair {
  MoebiusMap f;
  MoebiusMap g;
  MoebiusMap g_alternate;  // from the other root c
};

GeneratorPair construct_generators(const ParamTriple& triple, const Tolerances& tol = {});

}  // namespace kleinian
