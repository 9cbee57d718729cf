#include "kleinian/errors.hpp"

namespace kleinian {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::non_unit_determinant: return "NonUnitDeterminant";
    case ErrorCode::not_real_parameters: return "NotRealParameters";
    case ErrorCode::degenerate_square_root: return "DegenerateSquareRoot";
    case ErrorCode::not_elliptic: return "NotElliptic";
    case ErrorCode::not_non_primitive_elliptic: return "NotNonPrimitiveElliptic";
    case ErrorCode::zero_gamma: return "ZeroGamma";
    case ErrorCode::no_axis: return "NoAxis";
    case ErrorCode::degenerate_geodesic: return "DegenerateGeodesic";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::hypothesis_violated: return "HypothesisViolated";
    case ErrorCode::branch_ambiguity: return "BranchAmbiguity";
    case ErrorCode::not_applicable: return "NotApplicable";
    case ErrorCode::precondition_violated: return "PreconditionViolated";
    case ErrorCode::invalid_row: return "InvalidRow";
    case ErrorCode::construction_failure: return "ConstructionFailure";
    case ErrorCode::internal_consistency: return "InternalConsistency";
    case ErrorCode::invalid_config: return "InvalidConfig";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace kleinian
