#include "kleinian/tolerances.hpp"

#include "kleinian/errors.hpp"

namespace kleinian {

void Tolerances::validate() const {
  if (!(eps > 0) || !(eps_det > 0) || !(eps_axis > 0) || !(eps_match > 0))
    throw Error(ErrorCode::invalid_config, "tolerances must be positive");
  if (max_denominator < 10)
    throw Error(ErrorCode::invalid_config, "max_denominator must be at least 10");
  if (renormalize_every < 1)
    throw Error(ErrorCode::invalid_config, "renormalize_every must be at least 1");
}

}  // namespace kleinian
