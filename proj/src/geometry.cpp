#include "kleinian/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "kleinian/errors.hpp"

namespace kleinian {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEndpointTol = 1e-9;

bool same_point(const BoundaryPoint& p, const BoundaryPoint& q) {
  return chordal_distance(p, q) <= kEndpointTol;
}

// Sends from -> 0, to -> oo.
MoebiusMap straighten(const Geodesic& g) {
  if (g.to.infinite) return MoebiusMap::from_gl(1, -g.from.z, 0, 1);
  if (g.from.infinite) return MoebiusMap::from_gl(0, 1, 1, -g.to.z);
  return MoebiusMap::from_gl(1, -g.from.z, 1, -g.to.z);
}

// Stored to three decimals, rows and columns 2..7.
constexpr std::array<std::array<double, 6>, 6> kMinDistance{{
    {1.000, 1.019, 1.088, 1.106, 1.225, 1.152},
    {1.019, 1.079, 1.155, 1.376, 1.155, 1.198},
    {1.088, 1.155, 1.366, 1.203, 1.414, 1.630},
    {1.106, 1.376, 1.203, 1.447, 1.701, 1.961},
    {1.225, 1.155, 1.414, 1.701, 2.000, 2.305},
    {1.152, 1.198, 1.630, 1.961, 2.305, 1.656},
}};

using Vec3 = std::array<double, 3>;

double minkowski(const Vec3& u, const Vec3& v) { return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

// Normal (in the Minkowski form) of the plane spanned by u and v.
Vec3 minkowski_cross(const Vec3& u, const Vec3& v) {
  return {-(u[1] * v[2] - u[2] * v[1]), u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Vec3 hyperboloid_point(double dist, double direction) {
  return {std::cosh(dist), std::sinh(dist) * std::cos(direction),
          std::sinh(dist) * std::sin(direction)};
}

}  // namespace

const char* to_string(AxisRelationKind kind) {
  switch (kind) {
    case AxisRelationKind::coincident: return "coincident";
    case AxisRelationKind::intersecting: return "intersecting";
    case AxisRelationKind::parallel: return "parallel";
    case AxisRelationKind::disjoint: return "disjoint";
  }
  return "unknown";
}

Geodesic axis_of(const MoebiusMap& m, const Tolerances& tol) {
  ElementClass cls = classify_element(m, tol);
  if (cls.kind == ElementKind::identity || cls.kind == ElementKind::parabolic)
    throw Error(ErrorCode::no_axis, std::string(to_string(cls.kind)) + " element has no axis");
  auto [p, q] = fixed_points(m);
  return {p, q};
}

Complex endpoint_cross_ratio(const Geodesic& a, const Geodesic& b) {
  auto factor = [](const BoundaryPoint& x, const BoundaryPoint& y) {
    return (x.infinite || y.infinite) ? Complex{1} : x.z - y.z;
  };
  return factor(a.from, b.from) * factor(a.to, b.to) /
         (factor(a.from, b.to) * factor(a.to, b.from));
}

AxisRelation axes_relation(const Geodesic& a, const Geodesic& b, double intersect_tol) {
  if (same_point(a.from, a.to) || same_point(b.from, b.to))
    throw Error(ErrorCode::degenerate_geodesic, "geodesic endpoints coincide");
  AxisRelation out;
  int shared = 0;
  for (const BoundaryPoint* x : {&a.from, &a.to})
    for (const BoundaryPoint* y : {&b.from, &b.to}) shared += same_point(*x, *y) ? 1 : 0;
  if (shared >= 2) {
    out.kind = AxisRelationKind::coincident;
    return out;
  }
  if (shared == 1) {
    out.kind = AxisRelationKind::parallel;
    return out;
  }
  Complex cr = endpoint_cross_ratio(a, b);
  Complex sigma = std::acosh((Complex{1} + cr) / (Complex{1} - cr));
  double delta = std::abs(sigma.real());
  double theta = std::fmod(std::abs(sigma.imag()), kPi);
  theta = std::min(theta, kPi - theta);
  out.delta = delta;
  out.theta = theta;
  if (delta <= intersect_tol) {
    out.kind = AxisRelationKind::intersecting;
    out.angle = theta;
  } else {
    out.kind = AxisRelationKind::disjoint;
    out.distance = delta;
  }
  return out;
}

double feet_separation(const Geodesic& axis, const Geodesic& b, const Geodesic& c) {
  MoebiusMap w = straighten(axis);
  auto foot_height = [&](const Geodesic& line) {
    BoundaryPoint p = w.apply(line.from), q = w.apply(line.to);
    if (p.infinite || q.infinite)
      throw Error(ErrorCode::degenerate_geodesic, "line shares an endpoint with the axis");
    return std::sqrt(std::abs(p.z) * std::abs(q.z));
  };
  return std::abs(std::log(foot_height(b) / foot_height(c)));
}

double min_distance_table_entry(int p, int q) {
  if (p < 2 || q < 2 || p > 7 || q > 7)
    throw Error(ErrorCode::out_of_range, "stored entries cover 2 <= p, q <= 7");
  return kMinDistance[p - 2][q - 2];
}

double min_distance_formula(int p, int q) {
  if (p < 2 || q < 2) throw Error(ErrorCode::out_of_range, "orders must be at least 2");
  if (q > p) std::swap(p, q);
  if (p < 7) throw Error(ErrorCode::out_of_range, "closed form needs max(p, q) >= 7");
  double sp = std::sin(kPi / p), sq = std::sin(kPi / q);
  double num = 1.0;
  if (q == p) num = std::cos(2 * kPi / p);
  else if (q == 3) num = std::cos(kPi / p);
  return num / (2 * sp * sq);
}

double min_distance(int p, int q) {
  if (p < 2 || q < 2) throw Error(ErrorCode::out_of_range, "orders must be at least 2");
  if (std::max(p, q) >= 7) return min_distance_formula(p, q);
  return min_distance_table_entry(p, q);
}

std::vector<MinDistanceDiscrepancy> min_distance_discrepancies(double tol) {
  std::vector<MinDistanceDiscrepancy> out;
  for (int p = 2; p <= 7; ++p) {
    for (int q = 2; q <= 7; ++q) {
      if (std::max(p, q) != 7) continue;
      double stored = min_distance_table_entry(p, q);
      double formula = min_distance_formula(p, q);
      if (std::abs(stored - formula) > tol) out.push_back({p, q, stored, formula});
    }
  }
  return out;
}

double pivot_bound(double psi, double chi, double k) {
  return (1.0 - std::cos(k * psi) * std::cos(k * chi)) / (std::sin(k * psi) * std::sin(k * chi));
}

bool lines_disjoint_after_pivot(const DisjointLinesQuery& q) {
  if (!(q.psi > 0 && q.psi < q.chi && q.chi < kPi / 2) || !(q.k > 0 && q.k <= 1) ||
      !(q.cosh_pq >= 1))
    throw Error(ErrorCode::hypothesis_violated, "query outside 0<psi<chi<pi/2, 0<k<=1, cosh>=1");
  const double at_one = pivot_bound(q.psi, q.chi, 1.0);
  if (!(q.cosh_pq > at_one))
    throw Error(ErrorCode::hypothesis_violated, "original lines are not disjoint");
  const double at_k = pivot_bound(q.psi, q.chi, q.k);
  // Monotone bound: f(k) <= f(1) < cosh PQ.
  if (at_k > at_one * (1 + 1e-12) || !(q.cosh_pq > at_k))
    throw Error(ErrorCode::internal_consistency, "pivot inequality chain failed");
  return true;
}

bool half_line_misses_opposite_side(double phi, double psi, double theta, double c) {
  if (!(phi > 0 && psi > 0 && theta > 0 && phi + psi + theta < kPi))
    throw Error(ErrorCode::hypothesis_violated, "angles do not form a hyperbolic triangle");
  if (!(c > 0 && c * psi < kPi)) throw Error(ErrorCode::hypothesis_violated, "need 0 < c psi < pi");
  // Side lengths from the angle form of the hyperbolic law of cosines.
  double lm = std::acosh((std::cos(phi) + std::cos(psi) * std::cos(theta)) /
                         (std::sin(psi) * std::sin(theta)));
  double ln = std::acosh((std::cos(theta) + std::cos(phi) * std::cos(psi)) /
                         (std::sin(phi) * std::sin(psi)));
  // L at the origin, M on direction 0, N on direction psi (upper side).
  Vec3 m = hyperboloid_point(lm, 0.0);
  Vec3 n = hyperboloid_point(ln, psi);
  Vec3 normal = minkowski_cross(n, m);
  // Ray from L at direction -c*psi: <R(s), normal> = 0 gives tanh s = tau.
  double dir = -c * psi;
  double slope = std::cos(dir) * normal[1] + std::sin(dir) * normal[2];
  if (slope == 0.0) return true;
  double tau = -(minkowski({1, 0, 0}, normal)) / slope;
  return !(tau >= 0.0 && tau < 1.0);
}

}  // namespace kleinian
