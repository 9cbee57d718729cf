#pragma once

#include <string>
#include <vector>

#include "kleinian/moebius.hpp"
#include "kleinian/table.hpp"
#include "kleinian/tolerances.hpp"

namespace kleinian {

// Half-turn e written in the generators of the (n, m, l) = (5, 2, 3/2) group.
inline constexpr const char* kHalfTurnWord =
    "f^3 g f g^-1 f^3 g^-1 f^2 g f^3 g f^2 g^-1 f^3 g^-1 f g f^2 g f^-1 g^-1";

struct Gamma353Config {
  Tolerances tol;
  double trace_tol = 1e-8;
  double square_tol = 1e-8;
  double axis_tol = 1e-7;
  double imag_tol = 1e-10;
  double relation_tol = 1e-8;
};

struct Gamma353Report {
  ParamTriple triple;
  std::vector<RowMatch> matched_rows;
  double max_imag_part = 0.0;  // over the complex parameters of the constructed pair
  Complex e_trace;
  double e_square_residual = 0.0;  // projective distance from e^2 to the identity
  bool e_order2 = false;
  double orth_residual_f = 0.0;  // |angle(axis e, axis f) - pi/2|
  double orth_residual_g = 0.0;
  double common_point_residual = 0.0;  // feet of axis f and axis g along axis e
  double h1_order4_residual = 0.0;
  double h2_order3_residual = 0.0;
  double trace_residual_k4 = 0.0;  // |tr e| with renormalization every 4 products
  double trace_residual_k16 = 0.0;
  std::vector<std::string> skipped;
  bool passed = false;
};

Gamma353Report verify_353(const Gamma353Config& cfg = {});

}  // namespace kleinian
