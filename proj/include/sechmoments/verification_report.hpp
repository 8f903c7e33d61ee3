#pragma once

#include <string>

#include "sechmoments/prec_real.hpp"

namespace sechmoments {

// One identity check: lhs and rhs each carry a certified absolute bound, and
// the check passes when |lhs - rhs| <= lhs_bound + rhs_bound (which the caller
// has arranged to be <= its tolerance). runtime_seconds is informational and
// is deliberately left out of serialized output so that output stays
// byte-stable across runs.
struct VerificationReport {
  std::string identity;
  long n = -1;  // sequence index the row refers to, -1 when not applicable
  PrecReal lhs;
  PrecReal lhs_bound;
  PrecReal rhs;
  PrecReal rhs_bound;
  PrecReal gap;  // |lhs - rhs|
  bool pass = false;
  double runtime_seconds = 0.0;
};

}  // namespace sechmoments
