#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kleinian {

enum class ErrorCode {
  non_unit_determinant,
  not_real_parameters,
  degenerate_square_root,
  not_elliptic,
  not_non_primitive_elliptic,
  zero_gamma,
  no_axis,
  degenerate_geodesic,
  out_of_range,
  hypothesis_violated,
  branch_ambiguity,
  not_applicable,
  precondition_violated,
  invalid_row,
  construction_failure,
  internal_consistency,
  invalid_config,
  parse_error,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kleinian
