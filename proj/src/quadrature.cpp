#include "sechmoments/detail/quadrature.hpp"

#include <array>
#include <cmath>
#include <cstddef>

#include "sechmoments/errors.hpp"

namespace sechmoments::detail {

namespace {

// Legendre P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

template <int N>
struct GaussRule {
  std::array<double, N> node{};
  std::array<double, N> weight{};

  GaussRule() {
    for (int i = 0; i < N; ++i) {
      // Chebyshev-angle seed converges in a handful of Newton steps
      double x = std::cos(M_PI * (i + 0.75) / (N + 0.5));
      for (int it = 0; it < 60; ++it) {
        auto [p, dp] = legendre(N, x);
        double step = p / dp;
        x -= step;
        if (std::abs(step) < 1e-16) break;
      }
      auto [p, dp] = legendre(N, x);
      (void)p;
      node[i] = x;
      weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }

  double apply(const std::function<double(double)>& f, double a, double b) const {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < N; ++i) acc += weight[i] * f(mid + half * node[i]);
    return half * acc;
  }
};

const GaussRule<12>& rule12() {
  static const GaussRule<12> r;
  return r;
}

const GaussRule<24>& rule24() {
  static const GaussRule<24> r;
  return r;
}

void integrate_panel(const std::function<double(double)>& f, double a, double b,
                     double budget, int depth, QuadratureResult& out,
                     std::size_t max_panels) {
  if (out.panels >= max_panels)
    throw CapacityError("integrate: panel budget exhausted");
  double coarse = rule12().apply(f, a, b);
  double fine = rule24().apply(f, a, b);
  double disagreement = std::abs(fine - coarse);
  if (disagreement <= budget || depth >= 48) {
    out.value += fine;
    out.error_estimate += disagreement;
    out.panels += 1;
    return;
  }
  double mid = 0.5 * (a + b);
  integrate_panel(f, a, mid, 0.5 * budget, depth + 1, out, max_panels);
  integrate_panel(f, mid, b, 0.5 * budget, depth + 1, out, max_panels);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, std::size_t max_panels) {
  QuadratureResult out;
  if (a == b) return out;
  integrate_panel(f, a, b, abs_tol, 0, out, max_panels);
  return out;
}

QuadratureResult simpson_refine(const std::function<double(double)>& f, double a,
                                double b, double initial_step, double abs_tol,
                                int max_halvings) {
  double length = b - a;
  double h = std::min(initial_step, length / 4.0);
  auto composite = [&](double step) {
    auto n = static_cast<std::size_t>(std::ceil(length / step));
    n += n % 2;  // Simpson needs an even panel count
    double hh = length / static_cast<double>(n);
    double acc = f(a) + f(b);
    for (std::size_t k = 1; k < n; ++k)
      acc += f(a + hh * static_cast<double>(k)) * (k % 2 ? 4.0 : 2.0);
    return acc * hh / 3.0;
  };

  QuadratureResult out;
  double prev = composite(h);
  for (int it = 0; it < max_halvings; ++it) {
    h *= 0.5;
    double cur = composite(h);
    double richardson = std::abs(cur - prev) / 15.0;
    out.panels += 1;
    if (richardson <= abs_tol) {
      out.value = cur;
      out.error_estimate = 4.0 * richardson;
      return out;
    }
    prev = cur;
  }
  throw CapacityError("simpson_refine: halving budget exhausted");
}

}  // namespace sechmoments::detail
