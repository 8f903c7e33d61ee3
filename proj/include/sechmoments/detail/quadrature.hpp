#pragma once

#include <cstddef>
#include <functional>

namespace sechmoments::detail {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // accumulated |GL24 - GL12| over accepted panels
  std::size_t panels = 0;
};

// Adaptive bisection with nested 12/24-point Gauss-Legendre panels. Nodes and
// weights are computed once by Newton iteration on the Legendre recurrence
// (no transcribed tables). abs_tol is the whole-interval budget; each split
// halves the child budget. Throws CapacityError past max_panels.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol,
                           std::size_t max_panels = 200000);

// Composite Simpson refined by halving until the Richardson estimate
// |I_h - I_{h/2}| / 15 falls under abs_tol (factor 4 safety booked in
// error_estimate). initial_step is clamped to (b-a)/4.
QuadratureResult simpson_refine(const std::function<double(double)>& f, double a,
                                double b, double initial_step, double abs_tol,
                                int max_halvings = 24);

}  // namespace sechmoments::detail
