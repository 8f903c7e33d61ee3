#include "sechmoments/sech_distribution.hpp"

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>

#include "sechmoments/detail/quadrature.hpp"
#include "sechmoments/errors.hpp"
#include "sechmoments/exact_sequences.hpp"
#include "sechmoments/series_engine.hpp"

namespace sechmoments::hsec {

namespace {

double ipow(double x, unsigned k) {
  double acc = 1.0, base = x;
  for (; k; k >>= 1) {
    if (k & 1) acc *= base;
    base *= base;
  }
  return acc;
}

}  // namespace

double pdf(double x) {
  double e = std::exp(-std::abs(x));
  return 2.0 * e / (M_PI * (1.0 + e * e));
}

double cdf(double x) {
  if (x > 0.0) return 1.0 - cdf(-x);
  return (2.0 / M_PI) * std::atan(std::exp(x));
}

double quantile(double u) {
  if (!(u > 0.0 && u < 1.0))
    throw std::domain_error("quantile: u must lie in (0,1)");
  if (u > 0.5) return -quantile(1.0 - u);
  return std::log(std::tan(M_PI_2 * u));
}

std::vector<double> sample(RngStream& stream, std::size_t count) {
  std::vector<double> draws;
  draws.reserve(count);
  for (std::size_t i = 0; i < count; ++i) draws.push_back(quantile(stream.next_open01()));
  return draws;
}

PrecReal mgf(double t, unsigned precision_bits) {
  if (!(std::abs(t) < 1.0)) throw std::domain_error("mgf: need |t| < 1");
  unsigned w = precision_bits + 32;
  PrecReal arg = PrecReal::pi(w) * PrecReal(t, w) * PrecReal(0.5, w);
  return (PrecReal(1.0, w) / cos(arg)).to_precision(precision_bits);
}

PiPolyValue moment_closed(unsigned order) {
  if (order % 2 == 1) return {mpq_class(0), 0};
  unsigned n = order / 2;
  exact::EulerTable table = exact::euler_numbers(order);
  mpz_class num = table.at(order);
  if (n % 2 == 1) num = -num;  // (-1)^n E_2n, positive
  mpq_class coeff(num, mpz_class(1) << order);
  coeff.canonicalize();
  return {coeff, order};
}

MomentRoutes moment_routes(unsigned order, double series_target_bound,
                           unsigned precision_bits) {
  if (!(series_target_bound > 0))
    throw std::domain_error("moment_routes: target bound must be positive");
  MomentRoutes out;

  if (order % 2 == 1) {
    // odd moments vanish by symmetry; the quadrature side only checks that
    // the panels agree
    out.series.value = PrecReal(0.0, precision_bits);
    out.series.error_bound = PrecReal(0.0, 64);
  } else {
    unsigned w = precision_bits + 64;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), order);
    PrecReal amp = PrecReal::from_integer(fact, w) * PrecReal(4.0, w) / PrecReal::pi(w);
    PrecReal target(series_target_bound, 64);
    SeriesValue beta =
        series::dirichlet_beta(order + 1, target * PrecReal(0.5, 64) / amp, w);
    PrecReal value = amp * beta.value;
    PrecReal slack = (abs(value) + PrecReal(1.0, 64)) *
                     (PrecReal::pow2(6 - static_cast<long>(w), 64) +
                      PrecReal::pow2(2 - static_cast<long>(precision_bits), 64));
    out.series.value = value.to_precision(precision_bits);
    out.series.error_bound = amp * beta.error_bound + slack;
    out.series.terms_used = beta.terms_used;
    if (!(out.series.error_bound <= target))
      throw PrecisionError("moment_routes: series bound exceeds target (achieved " +
                           out.series.error_bound.to_decimal_string() + ")");
  }

  double L = std::max(50.0, 10.0 * static_cast<double>(order));
  auto integrand = [order](double x) { return ipow(x, order) * pdf(x); };
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), order);
  // tolerance scaled by E[|X|^m] <= (4/pi) m!, the mass the panels carry;
  // an absolute target below that mass times epsilon is unreachable in double
  double scale = 1.0 + (4.0 / M_PI) * fact.get_d();
  auto q = detail::integrate(integrand, -L, L, 1e-12 * scale);
  out.quadrature = q.value;
  out.quadrature_error_estimate =
      q.error_estimate + 1e-14 * scale * static_cast<double>(q.panels + 8);

  // two half-line tails under x^m sech(x)/pi <= (2/pi) x^m e^-x
  double sum = 1.0, term = 1.0;
  for (unsigned k = 1; k <= order; ++k) {
    term *= L / static_cast<double>(k);
    sum += term;
  }
  out.tail_bound = (4.0 / M_PI) * fact.get_d() * std::exp(-L) * sum;

  out.discrepancy = std::abs(out.series.value.to_double() - out.quadrature);
  double combined = out.quadrature_error_estimate + out.tail_bound +
                    out.series.error_bound.to_double() + 1e-11 * scale;
  if (out.discrepancy > combined)
    throw std::runtime_error("moment_routes: series and quadrature disagree");
  return out;
}

SeriesValue moment_quadrature(unsigned order, double series_target_bound,
                              unsigned precision_bits) {
  return moment_routes(order, series_target_bound, precision_bits).series;
}

MomentEstimate estimate_moment(RngStream& stream, unsigned order, std::size_t count) {
  if (count < 2) throw std::domain_error("estimate_moment: need at least 2 samples");
  double sum = 0.0, sumsq = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    double p = ipow(quantile(stream.next_open01()), order);
    sum += p;
    sumsq += p * p;
  }
  double n = static_cast<double>(count);
  double mean = sum / n;
  double var = std::max(0.0, (sumsq / n - mean * mean) * n / (n - 1.0));
  return {order, mean, std::sqrt(var / n), count};
}

}  // namespace sechmoments::hsec
