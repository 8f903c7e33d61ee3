#pragma once

#include "sechmoments/pi_poly.hpp"
#include "sechmoments/series_value.hpp"
#include "sechmoments/verification_report.hpp"

namespace sechmoments::closed {

// Closed form of the alternating odd-power sum:
// dirichlet_beta(2n+1) = (-1)^n E_2n / (2 (2n)!) * (pi/2)^(2n+1).
// Returned with the power of pi split out; coefficient sign is always +.
PiPolyValue beta_closed(unsigned n);

// zeta(2n+2) through the even-index convolution
// sum_{l=0..n} C(2n,2l) E_2l E_(2n-2l); positive rational times pi^(2n+2).
PiPolyValue zeta_even_closed(unsigned n);

// zeta(2n) through the star sequence:
// (-1)^(n-1) (2 pi)^(2n) / (4 (2n-1)! (1 - 4^n)) * E*_(2n-1), n >= 1.
// Exactly equal (as a rational times the same power of pi) to
// zeta_even_closed(n-1).
PiPolyValue zeta_even_via_estar(unsigned n);

// Numerical check of the Hurwitz-zeta relation, n >= 1:
//   zeta(2n+1, 1/4) + 2^2n (1 - 2^(2n+1)) zeta(2n+1)
//     = (-1)^n E_2n / (2 (2n)!) * pi^(2n+1) * 2^2n.
// Left side by direct sums (Hurwitz + integer zeta), right side exact.
// Passes when |lhs - rhs| <= combined certified bounds <= tolerance.
VerificationReport verify_eq9(unsigned n, double tolerance = 1e-12,
                              unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace sechmoments::closed
