#pragma once

#include <cstddef>
#include <vector>

#include "sechmoments/pi_poly.hpp"
#include "sechmoments/prec_real.hpp"
#include "sechmoments/rng_stream.hpp"
#include "sechmoments/series_value.hpp"

namespace sechmoments::hsec {

// Density (1/pi) sech(x), evaluated as 2 e^-|x| / (pi (1 + e^-2|x|)) so large
// |x| underflows to 0 instead of overflowing.
double pdf(double x);

// (2/pi) atan(e^x), folded through 1 - cdf(-x) for x > 0 so e^x never
// overflows. Accepts +-infinity.
double cdf(double x);

// Inverse of cdf on (0,1): log(tan(pi u / 2)), with the u > 1/2 half computed
// as -quantile(1-u) so the antisymmetry is exact. Throws std::domain_error
// outside (0,1).
double quantile(double u);

// Inverse-transform draws; deterministic given the stream state.
std::vector<double> sample(RngStream& stream, std::size_t count);

// Moment generating function 1/cos(pi t / 2), |t| < 1.
PrecReal mgf(double t, unsigned precision_bits = kDefaultPrecisionBits);

// E[X^order]: (-1)^n E_2n (pi/2)^2n for order = 2n, exactly 0 for odd order.
// The even coefficient (-1)^n E_2n / 2^2n is positive for all n.
PiPolyValue moment_closed(unsigned order);

// Two independent numerical routes for E[X^order] that must agree:
//   series: (4/pi) order! * dirichlet_beta(order+1)  (even order; odd is 0)
//   quadrature: adaptive panels on [-L, L], L = max(50, 10*order), plus the
//   analytic tail bound (4/pi) * order! e^-L sum_{k<=order} L^k/k!.
// The returned SeriesValue is the certified series route; the quadrature
// cross-check lives in the detail struct. Routes disagreeing beyond their
// combined error estimates throws std::runtime_error.
struct MomentRoutes {
  SeriesValue series;       // certified
  double quadrature = 0.0;  // double-precision cross-check
  double quadrature_error_estimate = 0.0;
  double tail_bound = 0.0;
  double discrepancy = 0.0;  // |series - quadrature|
};

MomentRoutes moment_routes(unsigned order, double series_target_bound = 1e-12,
                           unsigned precision_bits = kDefaultPrecisionBits);
SeriesValue moment_quadrature(unsigned order, double series_target_bound = 1e-12,
                              unsigned precision_bits = kDefaultPrecisionBits);

// Monte Carlo moment with its standard error.
struct MomentEstimate {
  unsigned order = 0;
  double estimate = 0.0;
  double standard_error = 0.0;
  std::size_t sample_count = 0;
};

MomentEstimate estimate_moment(RngStream& stream, unsigned order, std::size_t count);

}  // namespace sechmoments::hsec
