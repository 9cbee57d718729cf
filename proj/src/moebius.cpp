#include "kleinian/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "kleinian/errors.hpp"
#include "kleinian/rational.hpp"

namespace kleinian {

namespace {

constexpr double kPi = std::numbers::pi;

double real_scale(Complex z) { return std::max(1.0, std::abs(z.real())); }

// True when z is real up to eps (relative once |Re z| exceeds 1).
bool nearly_real(Complex z, double eps) { return std::abs(z.imag()) <= eps * real_scale(z); }

MoebiusMap scaled(const MoebiusMap& m, Complex s) {
  return MoebiusMap::from_gl(m.a() * s, m.b() * s, m.c() * s, m.d() * s);
}

MoebiusMap shifted(const MoebiusMap& m, Complex shift) {
  return MoebiusMap::from_gl(m.a() + shift, m.b(), m.c(), m.d() + shift);
}

double fold_angle(double phi) {
  phi = std::fmod(phi, 2 * kPi);
  if (phi < 0) phi += 2 * kPi;
  return phi > kPi ? 2 * kPi - phi : phi;
}

// Map sending p to 0 and q to oo.
MoebiusMap normalizer(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (q.infinite) return MoebiusMap::from_gl(1, -p.z, 0, 1);
  if (p.infinite) return MoebiusMap::from_gl(0, 1, 1, -q.z);
  return MoebiusMap::from_gl(1, -p.z, 1, -q.z);
}

}  // namespace

double chordal_distance(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.infinite && q.infinite) return 0.0;
  if (p.infinite) return 2.0 / std::sqrt(1.0 + std::norm(q.z));
  if (q.infinite) return 2.0 / std::sqrt(1.0 + std::norm(p.z));
  return 2.0 * std::abs(p.z - q.z) /
         std::sqrt((1.0 + std::norm(p.z)) * (1.0 + std::norm(q.z)));
}

MoebiusMap MoebiusMap::from_entries(Complex a, Complex b, Complex c, Complex d, double eps_det) {
  MoebiusMap m(a, b, c, d);
  check_unit_determinant(m, eps_det);
  return m;
}

MoebiusMap MoebiusMap::from_gl(Complex a, Complex b, Complex c, Complex d) {
  Complex det = a * d - b * c;
  double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (!(scale > 0) || std::abs(det) <= 1e-300 || std::abs(det) <= 1e-14 * scale * scale)
    throw Error(ErrorCode::non_unit_determinant, "matrix is singular");
  Complex r = Complex{1} / std::sqrt(det);
  return MoebiusMap(a * r, b * r, c * r, d * r);
}

MoebiusMap MoebiusMap::diagonal(Complex lambda) {
  return from_gl(lambda, 0, 0, Complex{1} / lambda);
}

double MoebiusMap::norm_inf() const {
  return std::max({std::abs(m_[0]), std::abs(m_[1]), std::abs(m_[2]), std::abs(m_[3])});
}

MoebiusMap MoebiusMap::inverse() const { return MoebiusMap(m_[3], -m_[1], -m_[2], m_[0]); }

MoebiusMap MoebiusMap::operator-() const { return MoebiusMap(-m_[0], -m_[1], -m_[2], -m_[3]); }

MoebiusMap MoebiusMap::renormalized() const { return from_gl(m_[0], m_[1], m_[2], m_[3]); }

BoundaryPoint MoebiusMap::apply(const BoundaryPoint& p) const {
  const auto [a, b, c, d] = m_;
  if (p.infinite) {
    if (std::abs(c) == 0.0) return BoundaryPoint::at_infinity();
    return BoundaryPoint::finite(a / c);
  }
  Complex den = c * p.z + d;
  if (std::abs(den) == 0.0) return BoundaryPoint::at_infinity();
  return BoundaryPoint::finite((a * p.z + b) / den);
}

MoebiusMap operator*(const MoebiusMap& x, const MoebiusMap& y) {
  return MoebiusMap(x.m_[0] * y.m_[0] + x.m_[1] * y.m_[2], x.m_[0] * y.m_[1] + x.m_[1] * y.m_[3],
                    x.m_[2] * y.m_[0] + x.m_[3] * y.m_[2], x.m_[2] * y.m_[1] + x.m_[3] * y.m_[3]);
}

double projective_distance(const MoebiusMap& m, const MoebiusMap& n) {
  auto diff = [&](double sign) {
    return std::max({std::abs(m.a() - sign * n.a()), std::abs(m.b() - sign * n.b()),
                     std::abs(m.c() - sign * n.c()), std::abs(m.d() - sign * n.d())});
  };
  double scale = std::max({1.0, m.norm_inf(), n.norm_inf()});
  return std::min(diff(1.0), diff(-1.0)) / scale;
}

bool projectively_equal(const MoebiusMap& m, const MoebiusMap& n, double eps) {
  return projective_distance(m, n) <= eps;
}

bool is_projective_identity(const MoebiusMap& m, double eps) {
  return projectively_equal(m, MoebiusMap::identity(), eps);
}

MoebiusMap power(const MoebiusMap& m, int exponent, int renormalize_every) {
  MoebiusMap base = exponent < 0 ? m.inverse() : m;
  int count = exponent < 0 ? -exponent : exponent;
  MoebiusMap out;
  for (int i = 0; i < count; ++i) {
    out = out * base;
    if (renormalize_every > 0 && (i + 1) % renormalize_every == 0) out = out.renormalized();
  }
  return out;
}

MoebiusMap commutator(const MoebiusMap& f, const MoebiusMap& g) {
  return f * g * f.inverse() * g.inverse();
}

MoebiusMap conjugate(const MoebiusMap& m, const MoebiusMap& by) { return by * m * by.inverse(); }

const char* to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::identity: return "identity";
    case ElementKind::elliptic: return "elliptic";
    case ElementKind::parabolic: return "parabolic";
    case ElementKind::hyperbolic: return "hyperbolic";
    case ElementKind::pi_loxodromic: return "pi_loxodromic";
    case ElementKind::strictly_loxodromic: return "strictly_loxodromic";
  }
  return "unknown";
}

ElementClass classify_beta(Complex beta, const Tolerances& tol) {
  ElementClass out;
  out.beta = beta;
  if (!nearly_real(beta, tol.eps)) {
    out.kind = ElementKind::strictly_loxodromic;
    return out;
  }
  double b = beta.real();
  if (std::abs(b) <= tol.eps) {
    out.kind = ElementKind::parabolic;
    return out;
  }
  if (b > 0) {
    out.kind = ElementKind::hyperbolic;
    return out;
  }
  if (b < -4.0 - tol.eps) {
    out.kind = ElementKind::pi_loxodromic;
    return out;
  }
  out.kind = ElementKind::elliptic;
  double clamped = std::clamp(b, -4.0, 0.0);
  double theta = 2.0 * std::atan2(std::sqrt(-clamped), std::sqrt(clamped + 4.0));
  out.rotation_angle = theta;
  auto frac = recognize_rational(theta / (2 * kPi), tol.max_denominator, tol.eps / (2 * kPi));
  if (frac && frac->num > 0 && std::abs(theta - 2 * kPi * frac->value()) <= tol.eps) {
    out.order = static_cast<int>(frac->den);
    out.angle_numerator = static_cast<int>(frac->num);
    out.primitive = frac->num == 1;
  }
  return out;
}

void check_unit_determinant(const MoebiusMap& m, double eps_det) {
  const double drift = std::abs(m.det() - Complex{1});
  const double scale = std::max(1.0, m.norm_inf() * m.norm_inf());
  if (drift > eps_det * scale) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "det deviates from 1 by %.3g", drift);
    throw Error(ErrorCode::non_unit_determinant, buf);
  }
}

ElementClass classify_element(const MoebiusMap& m, const Tolerances& tol) {
  check_unit_determinant(m, tol.eps_det);
  if (is_projective_identity(m, tol.eps)) {
    ElementClass out;
    out.kind = ElementKind::identity;
    return out;
  }
  return classify_beta(m.beta(), tol);
}

ComplexTriple complex_params_of(const MoebiusMap& f, const MoebiusMap& g) {
  return {f.beta(), g.beta(), commutator(f, g).trace() - Complex{2}};
}

ParamTriple params_of(const MoebiusMap& f, const MoebiusMap& g, const Tolerances& tol) {
  check_unit_determinant(f, tol.eps_det);
  check_unit_determinant(g, tol.eps_det);
  ComplexTriple t = complex_params_of(f, g);
  for (Complex z : {t.beta, t.beta_prime, t.gamma}) {
    if (!nearly_real(z, tol.eps))
      throw Error(ErrorCode::not_real_parameters,
                  "parameter has imaginary part " + std::to_string(z.imag()));
  }
  return {t.beta.real(), t.beta_prime.real(), t.gamma.real()};
}

std::pair<MoebiusMap, MoebiusMap> sqrt_in_psl(const MoebiusMap& m, const Tolerances& tol) {
  Complex t = m.trace();
  if (std::abs(t + Complex{2}) <= tol.eps)
    throw Error(ErrorCode::degenerate_square_root, "trace is -2");
  MoebiusMap s = scaled(shifted(m, 1), Complex{1} / std::sqrt(t + Complex{2}));
  return {s, -s};
}

std::vector<MoebiusMap> psl_square_roots(const MoebiusMap& m, const Tolerances& tol) {
  if (is_projective_identity(m, tol.eps))
    throw Error(ErrorCode::degenerate_square_root, "identity has a continuum of square roots");
  Complex t = m.trace();
  MoebiusMap mh = m;
  if (t.real() < 0 || (t.real() == 0 && t.imag() < 0)) {
    mh = -m;
    t = -t;
  }
  std::vector<MoebiusMap> roots;
  roots.push_back(scaled(shifted(mh, 1), Complex{1} / std::sqrt(t + Complex{2})));
  if (std::abs(t - Complex{2}) > tol.eps)
    roots.push_back(scaled(shifted(mh, -1), Complex{1} / std::sqrt(Complex{2} - t)));
  return roots;
}

std::pair<BoundaryPoint, BoundaryPoint> fixed_points(const MoebiusMap& m) {
  const Complex a = m.a(), b = m.b(), c = m.c(), d = m.d();
  const double scale = m.norm_inf();
  const Complex bb = d - a;
  if (std::abs(c) <= 1e-15 * scale) {
    if (std::abs(bb) <= 1e-15 * scale) return {BoundaryPoint::at_infinity(), BoundaryPoint::at_infinity()};
    return {BoundaryPoint::finite(b / bb), BoundaryPoint::at_infinity()};
  }
  // c z^2 + (d - a) z - b = 0, roots q/c and -b/q.
  Complex disc = std::sqrt(bb * bb + Complex{4} * b * c);
  Complex q1 = -(bb + disc) / Complex{2};
  Complex q2 = -(bb - disc) / Complex{2};
  Complex q = std::abs(q1) >= std::abs(q2) ? q1 : q2;
  if (std::abs(q) == 0.0) return {BoundaryPoint::finite(0), BoundaryPoint::finite(0)};
  return {BoundaryPoint::finite(q / c), BoundaryPoint::finite(-b / q)};
}

std::vector<KthRoot> elliptic_kth_roots(const MoebiusMap& m, int k, const Tolerances& tol) {
  if (k < 1) throw Error(ErrorCode::out_of_range, "root index must be positive");
  ElementClass cls = classify_element(m, tol);
  if (cls.kind != ElementKind::elliptic) throw Error(ErrorCode::not_elliptic, to_string(cls.kind));
  auto [p, q] = fixed_points(m);
  MoebiusMap w = normalizer(p, q);
  MoebiusMap diag = w * m * w.inverse();
  Complex lambda = diag.a();
  double theta = std::arg(lambda * lambda);
  if (theta < 0) {
    w = normalizer(q, p);
    theta = -theta;
  }
  std::vector<KthRoot> roots;
  MoebiusMap w_inv = w.inverse();
  for (int j = 0; j < k; ++j) {
    double phi = (theta + 2 * kPi * j) / k;
    MoebiusMap r = w_inv * MoebiusMap::diagonal(std::polar(1.0, phi / 2)) * w;
    roots.push_back({r.renormalized(), phi});
  }
  return roots;
}

MoebiusMap elliptic_root_with_angle(const MoebiusMap& m, int k, double target,
                                    const Tolerances& tol) {
  std::vector<MoebiusMap> hits;
  for (const KthRoot& r : elliptic_kth_roots(m, k, tol)) {
    if (std::abs(fold_angle(r.oriented_angle) - target) <= tol.eps) hits.push_back(r.root);
  }
  if (hits.size() != 1)
    throw Error(ErrorCode::branch_ambiguity,
                std::to_string(hits.size()) + " roots with the requested angle");
  return hits.front();
}

std::optional<EllipticPower> recognize_elliptic_beta(double beta, const Tolerances& tol) {
  ElementClass cls = classify_beta(Complex{beta}, tol);
  if (cls.kind != ElementKind::elliptic || !cls.order) return std::nullopt;
  return EllipticPower{*cls.angle_numerator, *cls.order};
}

int primitive_exponent(int q, int n) {
  for (int j = 1; j < n; ++j) {
    int r = static_cast<int>((static_cast<long long>(j) * q) % n);
    if (r == 1 || r == n - 1) return j;
  }
  throw Error(ErrorCode::not_non_primitive_elliptic, "q is not a unit modulo n");
}

ParamTriple normalize_primitive(const ParamTriple& triple, int q, int n, const Tolerances& tol) {
  if (n < 2 || q < 1 || gcd(q, n) != 1 || 2 * q > n)
    throw Error(ErrorCode::not_non_primitive_elliptic, "need gcd(q,n)=1 and q <= n/2");
  double expected = -4.0 * std::pow(std::sin(q * kPi / n), 2);
  if (std::abs(triple.beta - expected) > tol.eps * real_scale(expected))
    throw Error(ErrorCode::not_non_primitive_elliptic, "beta is not -4 sin^2(q pi/n)");
  if (q == 1) return triple;
  double beta_tilde = -4.0 * std::pow(std::sin(kPi / n), 2);
  return {beta_tilde, triple.beta_prime, triple.gamma * beta_tilde / triple.beta};
}

GeneratorPair construct_generators(const ParamTriple& triple, const Tolerances& tol) {
  if (!std::isfinite(triple.beta) || !std::isfinite(triple.beta_prime) ||
      !std::isfinite(triple.gamma))
    throw Error(ErrorCode::not_real_parameters, "non-finite parameter");
  if (std::abs(triple.gamma) <= tol.eps)
    throw Error(ErrorCode::zero_gamma, "generators share a fixed point");

  auto eigen = [](double beta) {
    Complex tr = std::sqrt(Complex{beta + 4.0});
    return (tr + std::sqrt(Complex{beta})) / Complex{2};
  };
  Complex s = eigen(triple.beta);
  Complex t = eigen(triple.beta_prime);
  Complex lin = (s - Complex{1} / s) * (t - Complex{1} / t);
  Complex disc = std::sqrt(lin * lin + Complex{4 * triple.gamma});
  Complex c1 = (-lin + disc) / Complex{2};
  Complex c2 = (-lin - disc) / Complex{2};
  Complex c_big = std::abs(c1) >= std::abs(c2) ? c1 : c2;
  Complex c_small = -Complex{triple.gamma} / c_big;

  GeneratorPair out{MoebiusMap::from_gl(s, 1, 0, Complex{1} / s),
                    MoebiusMap::from_gl(t, 0, c_big, Complex{1} / t),
                    MoebiusMap::from_gl(t, 0, c_small, Complex{1} / t)};

  ComplexTriple back = complex_params_of(out.f, out.g);
  const double want[] = {triple.beta, triple.beta_prime, triple.gamma};
  const Complex got[] = {back.beta, back.beta_prime, back.gamma};
  for (int i = 0; i < 3; ++i) {
    if (std::abs(got[i] - Complex{want[i]}) > 1e-9 * std::max(1.0, std::abs(want[i])))
      throw Error(ErrorCode::construction_failure, "parameters do not round-trip");
  }
  return out;
}

}  // namespace kleinian
