#include "kleinian/taxonomy.hpp"

#include <cmath>

#include "kleinian/errors.hpp"

namespace kleinian {

const char* to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::elementary: return "elementary";
    case SpaceKind::invariant_plane: return "invariant_plane";
    case SpaceKind::truly_spatial: return "truly_spatial";
    case SpaceKind::degenerate: return "degenerate";
  }
  return "unknown";
}

double truly_spatial_margin(const ParamTriple& t, int pi_lox_count) {
  const double sign = pi_lox_count % 2 == 0 ? 1.0 : -1.0;
  return sign * t.gamma + sign * t.beta * t.beta_prime / 4.0;
}

GroupSpaceClass classify_pair(const ParamTriple& t, const Tolerances& tol) {
  if (!std::isfinite(t.beta) || !std::isfinite(t.beta_prime) || !std::isfinite(t.gamma))
    throw Error(ErrorCode::not_real_parameters, "non-finite parameter");
  GroupSpaceClass out;
  out.pi_lox_count = (t.beta < -4.0 - tol.eps ? 1 : 0) + (t.beta_prime < -4.0 - tol.eps ? 1 : 0);

  if (std::abs(t.gamma) <= tol.eps) {
    out.kind = SpaceKind::elementary;
    out.reason = "gamma_zero_shared_fixed_point";
    return out;
  }
  if (std::abs(t.beta + 4.0) <= tol.eps || std::abs(t.beta_prime + 4.0) <= tol.eps) {
    out.kind = SpaceKind::degenerate;
    out.reason = "order_two_generator";
    return out;
  }
  const double margin = truly_spatial_margin(t, out.pi_lox_count);
  const double scale = std::max(1.0, std::abs(t.beta * t.beta_prime) / 4.0);
  if (std::abs(margin) <= tol.eps * scale) {
    out.kind = SpaceKind::invariant_plane;
    out.reason = "inequality_boundary";
    return out;
  }
  if (margin < 0) {
    out.kind = SpaceKind::truly_spatial;
    out.reason = "inequality_holds";
    return out;
  }
  out.reason = "inequality_fails";
  out.indicative = true;
  const bool both_elliptic = t.beta >= -4.0 && t.beta < 0 && t.beta_prime >= -4.0 && t.beta_prime < 0;
  // Elliptic pairs with intersecting axes have gamma in [-beta beta'/4, 0).
  if (both_elliptic && t.gamma < 0) {
    out.kind = SpaceKind::elementary;
    out.reason = "inequality_fails_intersecting_elliptic_axes";
  } else {
    out.kind = SpaceKind::invariant_plane;
  }
  return out;
}

bool in_witness_region(const ParamTriple& t, const Tolerances& tol) {
  auto power = recognize_elliptic_beta(t.beta, tol);
  if (!power || power->q != 1 || power->n < 3 || power->n % 2 == 0) return false;
  if (!(t.beta_prime > tol.eps)) return false;
  return t.gamma > tol.eps && t.gamma < -t.beta * t.beta_prime / 4.0 - tol.eps;
}

}  // namespace kleinian
