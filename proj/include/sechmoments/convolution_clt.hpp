#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sechmoments/pi_poly.hpp"
#include "sechmoments/prec_real.hpp"
#include "sechmoments/rng_stream.hpp"
#include "sechmoments/series_value.hpp"

namespace sechmoments::clt {

// Density of the sum of two independent draws:
//   4a / (pi^2 (e^a - e^-a)),  a != 0
// evaluated as (2/pi^2) * (a / sinh a) with the exponential factored so large
// |a| underflows cleanly, and as the even Taylor polynomial
// (2/pi^2)(1 - a^2/6 + 7a^4/360) for |a| below the cancellation threshold
// (1e-3 in double; 2^(-precision_bits/5) for the PrecReal overload).
double sum_density_2(double a);
PrecReal sum_density_2(const PrecReal& a);

// E[(X1+X2)^2n] = (-1)^n (pi/2)^2n sum_{l=0..n} C(2n,2l) E_2l E_(2n-2l),
// positive for all n.
PiPolyValue sum_moment_closed(unsigned n);

// Same moment through (8/pi^2) (2n+1)! sum_{k>=0} (2k+1)^-(2n+2); certified.
SeriesValue sum_moment_series(unsigned n, double target_bound = 1e-25,
                              unsigned precision_bits = kDefaultPrecisionBits);

// Density of the n-fold sum by characteristic function inversion:
//   (1/pi) Integral_0^T cos(t x) sech(pi t / 2)^n dt
// with certified truncation tail (2^n/pi)(2/(n pi)) e^(-n pi T / 2) and a
// Richardson-refined composite rule (step h <= min(pi/(4|x|), 0.05)).
// error_bound = tail + 4x Richardson estimate + rounding floor; value may be
// a hair negative within error_bound.
SeriesValue nfold_density(unsigned n, double x, double target_bound = 1e-10);

// Integral of x^order * nfold density over |x| <= M plus a certified
// exponential tail bound for |x| > M (density dominated through the moment
// generating function at t = 0.9). order 0 gives total mass, order 2 the
// second moment, which must equal n (pi/2)^2.
SeriesValue nfold_moment(unsigned n, unsigned order, double target_bound = 1e-9);

// Same machinery for the closed two-fold density (mass and e.g. 4th moment).
SeriesValue sum_density_2_moment(unsigned order, double target_bound = 1e-11);

// (pi/2) sqrt(n) * nfold_density(n, (pi/2) sqrt(n) y): density of the
// standardized sum, which converges to the standard normal.
SeriesValue normalized_density(unsigned n, double y, double target_bound = 1e-9);

// sup over y in [-4,4] (step 0.1) of |normalized_density - phi(y)|.
double normalized_density_sup_gap(unsigned n, double target_bound = 1e-9);

double normal_pdf(double y);
// Standard normal distribution function via erfc; |error| < 1e-14 absolute.
double normal_cdf(double y);

// Kolmogorov-Smirnov distance between the empirical distribution of
// standardized n-fold sums (m batches from the stream) and the normal cdf.
struct CltReport {
  unsigned fold_count = 0;
  std::size_t sample_count = 0;      // batches
  double ks_statistic = 0.0;         // in [0,1]
  std::optional<double> sup_density_gap;  // filled by the density route
};

CltReport ks_check(unsigned n, std::size_t m, RngStream& stream);

// D_m statistic of an arbitrary standardized sample against the normal cdf.
double ks_statistic_vs_normal(std::vector<double> sample);

}  // namespace sechmoments::clt
