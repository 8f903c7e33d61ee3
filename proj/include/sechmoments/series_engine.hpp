#pragma once

#include <cstddef>

#include "sechmoments/prec_real.hpp"
#include "sechmoments/series_value.hpp"

namespace sechmoments::series {

inline constexpr double kDefaultTargetBound = 1e-30;
// Direct summation is used while the certified bound reaches the target within
// this many terms; beyond it the alternating-series acceleration takes over.
inline constexpr std::size_t kDirectTermLimit = 1'000'000;
// Hard cap for routines without an accelerated fallback (Hurwitz).
inline constexpr std::size_t kTermBudget = 10'000'000;

PrecReal pi_at(unsigned precision_bits);

// sum_{k>=0} (-1)^k (2k+1)^-s, s >= 1.
// Certified: error_bound <= target_bound or PrecisionError. Direct mode uses
// the alternating remainder (2K+1)^-s; tight targets at small s switch to
// Chebyshev acceleration (see series_engine.cpp) with its own certificate.
SeriesValue dirichlet_beta(unsigned s, const PrecReal& target_bound,
                           unsigned precision_bits = kDefaultPrecisionBits);
SeriesValue dirichlet_beta(unsigned s, double target_bound = kDefaultTargetBound,
                           unsigned precision_bits = kDefaultPrecisionBits);

// Plain K-term partial sum with the alternating remainder bound (2K+1)^-s.
// Consecutive partial sums bracket the limit.
SeriesValue dirichlet_beta_partial(unsigned s, std::size_t terms,
                                   unsigned precision_bits = kDefaultPrecisionBits);

// sum_{k>=0} (2k+1)^-s, s >= 2. Direct mode returns the partial sum plus the
// integral tail correction (2K+1)^(1-s)/(2(s-1)); the remainder after the
// correction is within (2K+1)^-s.
SeriesValue odd_lambda(unsigned s, const PrecReal& target_bound,
                       unsigned precision_bits = kDefaultPrecisionBits);
SeriesValue odd_lambda(unsigned s, double target_bound = kDefaultTargetBound,
                       unsigned precision_bits = kDefaultPrecisionBits);

// K-term partial sum, no correction; bound = next term + integral tail.
SeriesValue odd_lambda_partial(unsigned s, std::size_t terms,
                               unsigned precision_bits = kDefaultPrecisionBits);

// zeta(s) = odd_lambda(s) / (1 - 2^-s), s >= 2, bound propagated linearly.
SeriesValue zeta_from_lambda(unsigned s, const PrecReal& target_bound,
                             unsigned precision_bits = kDefaultPrecisionBits);
SeriesValue zeta_from_lambda(unsigned s, double target_bound = kDefaultTargetBound,
                             unsigned precision_bits = kDefaultPrecisionBits);

// zeta(s, a) = sum_{n>=0} (n+a)^-s for real s > 1, a > 0. Partial sum plus
// integral tail correction (N+a)^(1-s)/(s-1); certified remainder <= (N+a)^-s.
// CapacityError (reporting the achieved bound) if the target needs more than
// term_budget terms. No analytic continuation, no acceleration.
SeriesValue hurwitz_zeta(double s, const PrecReal& a, const PrecReal& target_bound,
                         unsigned precision_bits = kDefaultPrecisionBits,
                         std::size_t term_budget = kTermBudget);
SeriesValue hurwitz_zeta(double s, double a, double target_bound = kDefaultTargetBound,
                         unsigned precision_bits = kDefaultPrecisionBits,
                         std::size_t term_budget = kTermBudget);

// zeta(s) by direct summation over all integers, s >= 2: partial sum plus
// integral tail correction N^(1-s)/(s-1), remainder <= N^-s. Same capacity
// contract as hurwitz_zeta. Used where the odd-lambda route would be circular.
SeriesValue zeta_direct(unsigned s, const PrecReal& target_bound,
                        unsigned precision_bits = kDefaultPrecisionBits,
                        std::size_t term_budget = kTermBudget);
SeriesValue zeta_direct(unsigned s, double target_bound,
                        unsigned precision_bits = kDefaultPrecisionBits,
                        std::size_t term_budget = kTermBudget);

}  // namespace sechmoments::series
