#include "sechmoments/convolution_clt.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sechmoments/detail/quadrature.hpp"
#include "sechmoments/errors.hpp"
#include "sechmoments/exact_sequences.hpp"
#include "sechmoments/sech_distribution.hpp"
#include "sechmoments/series_engine.hpp"

namespace sechmoments::clt {

namespace {

constexpr std::uint64_t kKsStreamBase = 1001;
constexpr std::size_t kKsPartitions = 8;

double ipow(double x, unsigned k) {
  double acc = 1.0, base = x;
  for (; k; k >>= 1) {
    if (k & 1) acc *= base;
    base *= base;
  }
  return acc;
}

double factorial_d(unsigned n) {
  double f = 1.0;
  for (unsigned k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

SeriesValue from_double(double value, double bound, std::size_t work) {
  SeriesValue out;
  out.value = PrecReal(value, 64);
  out.error_bound = PrecReal(bound, 64);
  out.terms_used = work;
  return out;
}

}  // namespace

double sum_density_2(double a) {
  double x = std::abs(a);
  double front = 2.0 / (M_PI * M_PI);
  if (x < 1e-3) {
    double x2 = x * x;
    return front * (1.0 - x2 / 6.0 + 7.0 * x2 * x2 / 360.0);
  }
  double e = std::exp(-x);
  // x / sinh x = 2 x e^-x / (1 - e^-2x); numerator underflows first
  return front * 2.0 * x * e / (1.0 - e * e);
}

PrecReal sum_density_2(const PrecReal& a) {
  unsigned p = a.precision_bits();
  unsigned w = p + 32;
  PrecReal x = abs(a).to_precision(w);
  PrecReal pi = PrecReal::pi(w);
  PrecReal front = PrecReal(2.0, w) / (pi * pi);
  if (x < PrecReal::pow2(-static_cast<long>(p / 5), 64)) {
    PrecReal x2 = x * x;
    PrecReal poly = PrecReal(1.0, w) - x2 / PrecReal(6.0, w) +
                    PrecReal(7.0, w) * x2 * x2 / PrecReal(360.0, w);
    return (front * poly).to_precision(p);
  }
  return (front * x / sinh(x)).to_precision(p);
}

PiPolyValue sum_moment_closed(unsigned n) {
  exact::EulerTable table = exact::euler_numbers(2 * n);
  mpz_class conv = 0;
  for (unsigned l = 0; l <= n; ++l)
    conv += exact::binomial(2 * n, 2 * l) * table.at(2 * l) * table.at(2 * n - 2 * l);
  if (n % 2 == 1) conv = -conv;  // (-1)^n times the convolution, positive
  mpq_class coeff(conv, mpz_class(1) << (2 * n));
  coeff.canonicalize();
  return {coeff, 2 * n};
}

SeriesValue sum_moment_series(unsigned n, double target_bound,
                              unsigned precision_bits) {
  if (!(target_bound > 0))
    throw std::domain_error("sum_moment_series: target bound must be positive");
  unsigned w = precision_bits + 64;
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), 2 * n + 1);
  PrecReal pi = PrecReal::pi(w);
  PrecReal amp = PrecReal(8.0, w) * PrecReal::from_integer(fact, w) / (pi * pi);
  PrecReal target(target_bound, 64);
  SeriesValue lam = series::odd_lambda(2 * n + 2, target * PrecReal(0.5, 64) / amp, w);
  PrecReal value = amp * lam.value;
  PrecReal slack = (abs(value) + PrecReal(1.0, 64)) *
                   (PrecReal::pow2(6 - static_cast<long>(w), 64) +
                    PrecReal::pow2(2 - static_cast<long>(precision_bits), 64));
  SeriesValue out;
  out.value = value.to_precision(precision_bits);
  out.error_bound = amp * lam.error_bound + slack;
  out.terms_used = lam.terms_used;
  if (!(out.error_bound <= target))
    throw PrecisionError("sum_moment_series: bound exceeds target (achieved " +
                         out.error_bound.to_decimal_string() + ")");
  return out;
}

SeriesValue nfold_density(unsigned n, double x, double target_bound) {
  if (n < 1) throw std::domain_error("nfold_density: n >= 1");
  if (!std::isfinite(x)) throw std::domain_error("nfold_density: x must be finite");
  if (!(target_bound >= 1e-12))
    throw CapacityError(
        "nfold_density: target sits below the double-precision rounding floor");

  double ax = std::abs(x);
  // truncation: |sech^n(pi t/2)| <= (2 e^(-pi t/2))^n
  double rate = static_cast<double>(n) * M_PI_2;
  double lead = ipow(2.0, n) / M_PI * (1.0 / rate);
  double T = std::max(1.0, std::log(lead / (0.4 * target_bound)) / rate);
  double tail = lead * std::exp(-rate * T);

  double h = std::min(ax > 0.0 ? M_PI / (4.0 * ax) : 0.05, 0.05);
  auto g = [n, ax](double t) {
    double e = std::exp(-M_PI_2 * t);
    double sech = 2.0 * e / (1.0 + e * e);
    return std::cos(t * ax) * ipow(sech, n);
  };
  auto r = detail::simpson_refine(g, 0.0, T, h, 0.1 * target_bound);

  double value = r.value / M_PI;
  double bound = tail + r.error_estimate / M_PI + 1e-13;
  return from_double(value, bound, r.panels + 1);
}

SeriesValue nfold_moment(unsigned n, unsigned order, double target_bound) {
  if (n < 1) throw std::domain_error("nfold_moment: n >= 1");
  if (!(target_bound > 0))
    throw std::domain_error("nfold_moment: target bound must be positive");

  // f_n(x) <= (2/pi) gamma^(n-1) e^(-0.9|x|) with gamma the exponential
  // moment at 0.9; both tails of Integral x^k f_n then close in elementary
  // incomplete-gamma form.
  double gamma = 1.0 / std::cos(0.45 * M_PI);
  double lead = (2.0 / M_PI) * std::pow(gamma, static_cast<double>(n) - 1.0);
  auto tail_at = [&](double m) {
    double sum = 1.0, term = 1.0;
    for (unsigned j = 1; j <= order; ++j) {
      term *= 0.9 * m / static_cast<double>(j);
      sum += term;
    }
    return 2.0 * lead * factorial_d(order) / std::pow(0.9, order + 1.0) *
           std::exp(-0.9 * m) * sum;
  };
  double M = 20.0;
  while (tail_at(M) > 0.25 * target_bound && M < 400.0) M += 5.0;
  double tail = tail_at(M);
  if (tail > 0.25 * target_bound)
    throw CapacityError("nfold_moment: tail cutoff budget exhausted");

  // pointwise density budget, integrated against |x|^order over [-M, M]
  double weight = 2.0 * std::pow(M, order + 1.0) / (order + 1.0) + 1.0;
  double dtarget = 0.15 * target_bound / weight;
  if (dtarget < 1e-12)
    throw CapacityError("nfold_moment: pointwise density floor unreachable");

  auto f = [n, order, dtarget](double x) {
    return ipow(x, order) * nfold_density(n, x, dtarget).value.to_double();
  };
  auto q = detail::integrate(f, -M, M, 0.4 * target_bound);
  // roundoff grows with the absolute mass the panels carry, for which the
  // Chernoff dominator gives E|S|^k <= 2 lead k! / 0.9^(k+1)
  double mass_hint =
      2.0 * lead * factorial_d(order) / std::pow(0.9, order + 1.0);
  double round_allow = 64.0 * 2.3e-16 * (2.0 + std::abs(q.value) + mass_hint);
  double bound = tail + 0.15 * target_bound + q.error_estimate + round_allow;
  if (bound > target_bound)
    throw PrecisionError("nfold_moment: bound exceeds target");
  return from_double(q.value, bound, q.panels);
}

SeriesValue sum_density_2_moment(unsigned order, double target_bound) {
  if (!(target_bound > 0))
    throw std::domain_error("sum_density_2_moment: target bound must be positive");
  // f_2(x) <= 1.02 (4/pi^2) x e^-x for x >= 3, so both tails close in
  // incomplete-gamma form at order+1
  double M = 40.0 + 5.0 * static_cast<double>(order);
  double sum = 1.0, term = 1.0;
  for (unsigned j = 1; j <= order + 1; ++j) {
    term *= M / static_cast<double>(j);
    sum += term;
  }
  double tail = 2.0 * 1.02 * (4.0 / (M_PI * M_PI)) * factorial_d(order + 1) *
                std::exp(-M) * sum;
  if (tail > 0.25 * target_bound)
    throw CapacityError("sum_density_2_moment: tail cutoff budget exhausted");

  auto f = [order](double x) { return ipow(x, order) * sum_density_2(x); };
  auto q = detail::integrate(f, -M, M, 0.5 * target_bound);
  // E|S|^k <= 2.04 (4/pi^2) (k+1)! caps the absolute mass seen in roundoff
  double round_allow =
      64.0 * 2.3e-16 * (2.0 + std::abs(q.value) + factorial_d(order + 1));
  double bound = tail + q.error_estimate + round_allow;
  if (bound > target_bound)
    throw PrecisionError("sum_density_2_moment: bound exceeds target");
  return from_double(q.value, bound, q.panels);
}

SeriesValue normalized_density(unsigned n, double y, double target_bound) {
  double width = M_PI_2 * std::sqrt(static_cast<double>(n));
  SeriesValue inner = nfold_density(n, width * y, target_bound / (width * 1.05));
  double value = width * inner.value.to_double();
  double bound = width * inner.error_bound.to_double() + 1e-14;
  return from_double(value, bound, inner.terms_used);
}

double normalized_density_sup_gap(unsigned n, double target_bound) {
  double gap = 0.0;
  for (int i = -40; i <= 40; ++i) {
    double y = 0.1 * static_cast<double>(i);
    double d = normalized_density(n, y, target_bound).value.to_double();
    gap = std::max(gap, std::abs(d - normal_pdf(y)));
  }
  return gap;
}

double normal_pdf(double y) {
  return std::exp(-0.5 * y * y) / std::sqrt(2.0 * M_PI);
}

double normal_cdf(double y) { return 0.5 * std::erfc(-y / std::sqrt(2.0)); }

CltReport ks_check(unsigned n, std::size_t m, RngStream& stream) {
  if (n < 1) throw std::domain_error("ks_check: n >= 1");
  if (m < 100) throw std::domain_error("ks_check: need at least 100 batches");
  double width = M_PI_2 * std::sqrt(static_cast<double>(n));
  std::vector<double> standardized;
  standardized.reserve(m);
  // batches are partitioned across derived streams so the result depends only
  // on (seed, partition count)
  for (std::size_t j = 0; j < kKsPartitions; ++j) {
    RngStream sub = stream.split(kKsStreamBase + j);
    std::size_t lo = m * j / kKsPartitions;
    std::size_t hi = m * (j + 1) / kKsPartitions;
    for (std::size_t b = lo; b < hi; ++b) {
      double acc = 0.0;
      for (unsigned i = 0; i < n; ++i) acc += hsec::quantile(sub.next_open01());
      standardized.push_back(acc / width);
    }
  }
  CltReport report;
  report.fold_count = n;
  report.sample_count = m;
  report.ks_statistic = ks_statistic_vs_normal(std::move(standardized));
  return report;
}

double ks_statistic_vs_normal(std::vector<double> sample) {
  if (sample.empty())
    throw std::domain_error("ks_statistic_vs_normal: empty sample");
  std::sort(sample.begin(), sample.end());
  double m = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    double F = normal_cdf(sample[i]);
    double below = F - static_cast<double>(i) / m;
    double above = static_cast<double>(i + 1) / m - F;
    d = std::max({d, below, above});
  }
  return d;
}

}  // namespace sechmoments::clt
