#pragma once

#include <string>

#include "kleinian/moebius.hpp"
#include "kleinian/tolerances.hpp"

namespace kleinian {

enum class SpaceKind { elementary, invariant_plane, truly_spatial, degenerate };

const char* to_string(SpaceKind kind);

struct GroupSpaceClass {
  SpaceKind kind = SpaceKind::truly_spatial;
  int pi_lox_count = 0;
  std::string reason;
  bool indicative = false;  // sub-case guessed from parameters alone
};

// Sign of (-1)^k gamma - (-1)^(k+1) beta beta'/4; negative means truly spatial.
double truly_spatial_margin(const ParamTriple& t, int pi_lox_count);

GroupSpaceClass classify_pair(const ParamTriple& triple, const Tolerances& tol = {});

// f elliptic of odd order n >= 3 (primitive), g hyperbolic, 0 < gamma < -beta beta'/4.
bool in_witness_region(const ParamTriple& triple, const Tolerances& tol = {});

}  // namespace kleinian
