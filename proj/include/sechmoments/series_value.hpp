#pragma once

#include <cstddef>

#include "sechmoments/prec_real.hpp"

namespace sechmoments {

// A numerical result with a certified absolute error bound:
// |true value - value| <= error_bound. terms_used reports how much work the
// producing routine did (series terms, acceleration steps, or quadrature
// panels, as documented per operation).
struct SeriesValue {
  PrecReal value;
  PrecReal error_bound;
  std::size_t terms_used = 0;
};

}  // namespace sechmoments
