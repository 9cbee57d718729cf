#pragma once

namespace kleinian {

struct Tolerances {
  double eps = 1e-9;         // classification and projective equality
  double eps_det = 1e-12;    // determinant drift
  double eps_axis = 1e-7;    // "axes meet" after two root findings
  double eps_match = 1e-8;   // closed-form row matching (relative above 1)
  int max_denominator = 1000;
  int renormalize_every = 8;

  // Throws Error(invalid_config) on non-positive tolerances or Q < 10.
  void validate() const;
};

}  // namespace kleinian
