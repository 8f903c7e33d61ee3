#pragma once

#include <gmpxx.h>

#include "sechmoments/prec_real.hpp"

namespace sechmoments {

// Exact value of the form coeff * pi^pi_power with rational coeff.
// Every closed form in this project evaluates to one of these.
struct PiPolyValue {
  mpq_class coeff;
  unsigned pi_power = 0;

  PrecReal evaluate(unsigned precision_bits = kDefaultPrecisionBits) const;

  friend bool operator==(const PiPolyValue& a, const PiPolyValue& b) {
    if (a.coeff == 0 && b.coeff == 0) return true;  // power irrelevant at 0
    return a.coeff == b.coeff && a.pi_power == b.pi_power;
  }
};

}  // namespace sechmoments
