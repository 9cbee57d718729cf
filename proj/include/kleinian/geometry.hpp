#pragma once

#include <optional>
#include <vector>

#include "kleinian/moebius.hpp"
#include "kleinian/tolerances.hpp"

namespace kleinian {

// Geodesic of H^3 given by its two ideal endpoints.
struct Geodesic {
  BoundaryPoint from;
  BoundaryPoint to;
};

enum class AxisRelationKind { coincident, intersecting, parallel, disjoint };

const char* to_string(AxisRelationKind kind);

struct AxisRelation {
  AxisRelationKind kind = AxisRelationKind::disjoint;
  std::optional<double> angle;     // intersecting: (0, pi/2]
  std::optional<double> distance;  // disjoint: > 0
  // Complex distance delta + i theta, |theta| folded into [0, pi/2]; set unless parallel/coincident.
  double delta = 0.0;
  double theta = 0.0;
};

Geodesic axis_of(const MoebiusMap& m, const Tolerances& tol = {});

// Cross ratio (a1-b1)(a2-b2)/((a1-b2)(a2-b1)) with infinite factors cancelled; equals tanh^2(sigma/2).
Complex endpoint_cross_ratio(const Geodesic& a, const Geodesic& b);

AxisRelation axes_relation(const Geodesic& a, const Geodesic& b, double intersect_tol = 1e-9);

// Distance along `axis` between the feet of the common perpendiculars from b and c.
double feet_separation(const Geodesic& axis, const Geodesic& b, const Geodesic& c);

// cosh of the minimal distance between axes of elliptic elements of orders p and q.
double min_distance(int p, int q);
// The stored three-decimal value, p, q in [2, 7].
double min_distance_table_entry(int p, int q);
// Closed form, valid when max(p, q) >= 7.
double min_distance_formula(int p, int q);

struct MinDistanceDiscrepancy {
  int p = 0;
  int q = 0;
  double stored = 0.0;
  double formula = 0.0;
};
// Entries with max(p,q) = 7 whose stored value differs from the closed form by more than tol.
std::vector<MinDistanceDiscrepancy> min_distance_discrepancies(double tol = 5e-4);

struct DisjointLinesQuery {
  double cosh_pq = 1.0;
  double psi = 0.0;
  double chi = 0.0;
  double k = 1.0;
};

// (1 - cos k psi cos k chi)/(sin k psi sin k chi)
double pivot_bound(double psi, double chi, double k);

bool lines_disjoint_after_pivot(const DisjointLinesQuery& q);

// Triangle with angles phi, psi, theta at N, L, M; is the half-line from L at
// angle c*psi to LM, on the far side of LM, disjoint from the line NM?
bool half_line_misses_opposite_side(double phi, double psi, double theta, double c);

}  // namespace kleinian
