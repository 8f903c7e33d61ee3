#include "sechmoments/series_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

#include <mpfr.h>

#include "sechmoments/errors.hpp"

namespace sechmoments::series {

namespace {

constexpr unsigned kGuardBits = 32;

// RAII mpfr_t for the raw inner loops.
struct Scratch {
  mpfr_t v;
  explicit Scratch(unsigned bits) { mpfr_init2(v, bits); mpfr_set_zero(v, 1); }
  ~Scratch() { mpfr_clear(v); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  operator mpfr_ptr() { return v; }
  operator mpfr_srcptr() const { return v; }
};

unsigned bits_of(std::size_t x) {
  unsigned b = 0;
  while (x) { ++b; x >>= 1; }
  return b;
}

double log_of(const PrecReal& x) {
  Scratch t(64);
  mpfr_log(t, x.raw(), MPFR_RNDN);
  return mpfr_get_d(t, MPFR_RNDN);
}

// Upper allowance for `ops` rounded operations at w bits on magnitudes <= mag.
PrecReal rounding_allowance(std::size_t ops, unsigned w, double mag) {
  return PrecReal::pow2(1 - static_cast<long>(w), 64) *
         static_cast<long>(ops + 8) * PrecReal(std::abs(mag) + 2.0, 64);
}

// Representation error of rounding to precision_bits: |v| 2^(2-p) is safe.
PrecReal representation_allowance(const PrecReal& v, unsigned precision_bits) {
  if (v.is_zero()) return PrecReal(0.0, 64);
  return abs(v).to_precision(64) * PrecReal::pow2(2 - static_cast<long>(precision_bits), 64);
}

// Rounds the working value to the caller's precision and assembles the final
// certified bound. Throws PrecisionError when the target is unreachable at
// this precision (the truncation part was already arranged to fit).
SeriesValue finalize(const char* name, mpfr_srcptr acc, unsigned w,
                     unsigned precision_bits, const PrecReal& truncation_bound,
                     std::size_t ops, std::size_t terms_used,
                     const PrecReal& target) {
  PrecReal value(precision_bits);
  mpfr_set(value.raw(), acc, MPFR_RNDN);
  double mag = std::abs(mpfr_get_d(acc, MPFR_RNDN));
  PrecReal bound = truncation_bound.to_precision(64) + rounding_allowance(ops, w, mag) +
                   representation_allowance(value, precision_bits);
  if (!(bound <= target))
    throw PrecisionError(std::string(name) +
                         ": target_bound needs more precision_bits (achieved " +
                         bound.to_decimal_string() + ")");
  return SeriesValue{std::move(value), std::move(bound), terms_used};
}

// Smallest K with (step*K + first)^-s <= target/2, or 0 when that exceeds the
// direct-summation budget.
std::size_t direct_terms(unsigned s, const PrecReal& target, unsigned long step,
                         unsigned long first) {
  double log_need = (std::log(2.0) - log_of(target)) / s;  // ln of required base
  if (log_need >= std::log(static_cast<double>(step) * (kDirectTermLimit + 2))) return 0;
  double base = std::exp(log_need);
  auto K = static_cast<std::size_t>(std::ceil((base - first) / step)) + 1;
  K = std::max<std::size_t>(K, 1);
  return K <= kDirectTermLimit ? K : 0;
}

// Chebyshev acceleration of sum_{k>=0} (-1)^k a_k for a_k a Hausdorff moment
// sequence (a_k = Integral x^k dmu, mu >= 0), which holds for (c k + d)^-s.
// With P_n the degree-n Chebyshev polynomial shifted to [0,1] the estimate
// after n steps is off by at most a0 * sup|P_n| / T_n(3), T_n(3) >= (3+v8)^n/2;
// 4 a0 / T_n(3) is booked for slack. a0 must bound |a_0|.
struct Accelerated {
  std::size_t steps;
};

Accelerated cvz_sum(mpfr_ptr out, unsigned w, const PrecReal& target, double a0,
                    const std::function<void(mpfr_ptr, unsigned long)>& term,
                    PrecReal* truncation_bound) {
  double steps_d = (std::log(8.0 * a0) - log_of(target)) / std::log(3.0 + std::sqrt(8.0));
  auto n = static_cast<unsigned long>(std::max(5.0, std::ceil(steps_d) + 2));

  Scratch d(w), b(w), c(w), acc(w), t(w), u(w);
  mpfr_sqrt_ui(t, 8, MPFR_RNDN);
  mpfr_add_ui(t, t, 3, MPFR_RNDN);          // 3 + sqrt(8)
  mpfr_pow_ui(d, t, n, MPFR_RNDN);
  mpfr_ui_div(u, 1, d, MPFR_RNDN);
  mpfr_add(d, d, u, MPFR_RNDN);
  mpfr_div_ui(d, d, 2, MPFR_RNDN);          // T_n(3) exactly
  mpfr_set_si(b, -1, MPFR_RNDN);
  mpfr_neg(c, d, MPFR_RNDN);
  mpfr_set_zero(acc, 1);
  for (unsigned long k = 0; k < n; ++k) {
    mpfr_sub(c, b, c, MPFR_RNDN);           // c = b - c
    term(t, k);
    mpfr_mul(t, t, c, MPFR_RNDN);
    mpfr_add(acc, acc, t, MPFR_RNDN);       // acc += c * a_k
    // b *= 2 (k+n)(k-n) / ((2k+1)(k+1))
    mpfr_mul_ui(b, b, 2 * (k + n), MPFR_RNDN);
    mpfr_mul_si(b, b, static_cast<long>(k) - static_cast<long>(n), MPFR_RNDN);
    mpfr_div_ui(b, b, 2 * k + 1, MPFR_RNDN);
    mpfr_div_ui(b, b, k + 1, MPFR_RNDN);
  }
  mpfr_div(out, acc, d, MPFR_RNDN);

  PrecReal tb(64);
  mpfr_ui_div(u, 4, d, MPFR_RNDU);
  mpfr_mul_d(u, u, a0, MPFR_RNDU);
  mpfr_set(tb.raw(), u.v, MPFR_RNDU);
  *truncation_bound = std::move(tb);
  return Accelerated{n};
}

void require_series_domain(const char* name, unsigned s, unsigned s_min) {
  if (s < s_min)
    throw std::domain_error(std::string(name) + ": s must be >= " + std::to_string(s_min));
}

}  // namespace

PrecReal pi_at(unsigned precision_bits) { return PrecReal::pi(precision_bits); }

SeriesValue dirichlet_beta(unsigned s, const PrecReal& target_bound,
                           unsigned precision_bits) {
  require_series_domain("dirichlet_beta", s, 1);
  if (!(target_bound > PrecReal(0.0, 64)))
    throw std::domain_error("dirichlet_beta: target_bound must be positive");

  std::size_t K = direct_terms(s, target_bound, 2, 1);
  if (K != 0) {
    unsigned w = precision_bits + kGuardBits + bits_of(K + 8);
    Scratch acc(w), term(w);
    for (std::size_t k = 0; k < K; ++k) {
      mpfr_ui_pow_ui(term, 2 * k + 1, s, MPFR_RNDN);
      mpfr_ui_div(term, 1, term, MPFR_RNDN);
      if (k % 2 == 0) mpfr_add(acc, acc, term, MPFR_RNDN);
      else mpfr_sub(acc, acc, term, MPFR_RNDN);
    }
    PrecReal trunc = inv_pow(2 * K + 1, s, 64);  // alternating remainder
    return finalize("dirichlet_beta", acc, w, precision_bits, trunc, 2 * K, K,
                    target_bound);
  }

  // acceleration: same limit, certificate from the Chebyshev bound
  PrecReal half = target_bound / 2L;
  unsigned w = precision_bits + kGuardBits + 64;
  Scratch acc(w);
  PrecReal trunc(64);
  Accelerated a = cvz_sum(acc, w, half, 1.0,
                          [s](mpfr_ptr out, unsigned long k) {
                            mpfr_ui_pow_ui(out, 2 * k + 1, s, MPFR_RNDN);
                            mpfr_ui_div(out, 1, out, MPFR_RNDN);
                          },
                          &trunc);
  return finalize("dirichlet_beta", acc, w, precision_bits, trunc,
                  12 * a.steps * a.steps + 64, a.steps, target_bound);
}

SeriesValue dirichlet_beta(unsigned s, double target_bound, unsigned precision_bits) {
  return dirichlet_beta(s, PrecReal(target_bound, 64), precision_bits);
}

SeriesValue dirichlet_beta_partial(unsigned s, std::size_t terms,
                                   unsigned precision_bits) {
  require_series_domain("dirichlet_beta_partial", s, 1);
  if (terms == 0 || terms > kDirectTermLimit)
    throw std::domain_error("dirichlet_beta_partial: terms out of range");
  unsigned w = precision_bits + kGuardBits + bits_of(terms + 8);
  Scratch acc(w), term(w);
  for (std::size_t k = 0; k < terms; ++k) {
    mpfr_ui_pow_ui(term, 2 * k + 1, s, MPFR_RNDN);
    mpfr_ui_div(term, 1, term, MPFR_RNDN);
    if (k % 2 == 0) mpfr_add(acc, acc, term, MPFR_RNDN);
    else mpfr_sub(acc, acc, term, MPFR_RNDN);
  }
  PrecReal value(precision_bits);
  mpfr_set(value.raw(), acc.v, MPFR_RNDN);
  PrecReal bound = inv_pow(2 * terms + 1, s, 64) +
                   rounding_allowance(2 * terms, w, 1.0) +
                   representation_allowance(value, precision_bits);
  return SeriesValue{std::move(value), std::move(bound), terms};
}

namespace {

// integral tail of sum over (2k+1)^-s from k = K on: (2K+1)^(1-s) / (2(s-1))
void odd_tail_integral(mpfr_ptr out, std::size_t K, unsigned s) {
  mpfr_ui_pow_ui(out, 2 * K + 1, s - 1, MPFR_RNDN);
  mpfr_ui_div(out, 1, out, MPFR_RNDN);
  mpfr_div_ui(out, out, 2 * (s - 1), MPFR_RNDN);
}

}  // namespace

SeriesValue odd_lambda(unsigned s, const PrecReal& target_bound, unsigned precision_bits) {
  require_series_domain("odd_lambda", s, 2);
  if (!(target_bound > PrecReal(0.0, 64)))
    throw std::domain_error("odd_lambda: target_bound must be positive");

  std::size_t K = direct_terms(s, target_bound, 2, 1);
  if (K != 0) {
    unsigned w = precision_bits + kGuardBits + bits_of(K + 8);
    Scratch acc(w), term(w);
    for (std::size_t k = 0; k < K; ++k) {
      mpfr_ui_pow_ui(term, 2 * k + 1, s, MPFR_RNDN);
      mpfr_ui_div(term, 1, term, MPFR_RNDN);
      mpfr_add(acc, acc, term, MPFR_RNDN);
    }
    odd_tail_integral(term, K, s);          // add the correction
    mpfr_add(acc, acc, term, MPFR_RNDN);
    PrecReal trunc = inv_pow(2 * K + 1, s, 64);  // remainder after correction
    return finalize("odd_lambda", acc, w, precision_bits, trunc, 2 * K + 4, K,
                    target_bound);
  }

  // eta route: sum (2k+1)^-s = [(1-2^-s)/(1-2^(1-s))] sum_{k>=1} (-1)^(k-1) k^-s
  unsigned w = precision_bits + kGuardBits + 64;
  PrecReal eta_target = target_bound / 3L;  // factor below is < 3/2
  Scratch acc(w);
  PrecReal eta_trunc(64);
  Accelerated a = cvz_sum(acc, w, eta_target, 1.0,
                          [s](mpfr_ptr out, unsigned long k) {
                            mpfr_ui_pow_ui(out, k + 1, s, MPFR_RNDN);
                            mpfr_ui_div(out, 1, out, MPFR_RNDN);
                          },
                          &eta_trunc);
  Scratch num(w), den(w);
  mpfr_set_ui_2exp(num, 1, -static_cast<long>(s), MPFR_RNDN);
  mpfr_ui_sub(num, 1, num, MPFR_RNDN);      // 1 - 2^-s
  mpfr_set_ui_2exp(den, 1, 1 - static_cast<long>(s), MPFR_RNDN);
  mpfr_ui_sub(den, 1, den, MPFR_RNDN);      // 1 - 2^(1-s)
  mpfr_div(num, num, den, MPFR_RNDN);       // factor in [1, 3/2]
  mpfr_mul(acc, acc, num, MPFR_RNDN);
  double factor = mpfr_get_d(num, MPFR_RNDU);
  PrecReal trunc = eta_trunc * PrecReal(factor * (1.0 + 1e-12), 64);
  return finalize("odd_lambda", acc, w, precision_bits, trunc,
                  12 * a.steps * a.steps + 64, a.steps, target_bound);
}

SeriesValue odd_lambda(unsigned s, double target_bound, unsigned precision_bits) {
  return odd_lambda(s, PrecReal(target_bound, 64), precision_bits);
}

SeriesValue odd_lambda_partial(unsigned s, std::size_t terms, unsigned precision_bits) {
  require_series_domain("odd_lambda_partial", s, 2);
  if (terms == 0 || terms > kDirectTermLimit)
    throw std::domain_error("odd_lambda_partial: terms out of range");
  unsigned w = precision_bits + kGuardBits + bits_of(terms + 8);
  Scratch acc(w), term(w);
  for (std::size_t k = 0; k < terms; ++k) {
    mpfr_ui_pow_ui(term, 2 * k + 1, s, MPFR_RNDN);
    mpfr_ui_div(term, 1, term, MPFR_RNDN);
    mpfr_add(acc, acc, term, MPFR_RNDN);
  }
  PrecReal value(precision_bits);
  mpfr_set(value.raw(), acc.v, MPFR_RNDN);
  // no correction applied: remainder <= next term + integral tail
  Scratch tail(64);
  odd_tail_integral(tail, terms, s);
  PrecReal tail_bound(64);
  mpfr_set(tail_bound.raw(), tail.v, MPFR_RNDU);
  PrecReal bound = inv_pow(2 * terms + 1, s, 64) + tail_bound +
                   rounding_allowance(2 * terms, w, 2.0) +
                   representation_allowance(value, precision_bits);
  return SeriesValue{std::move(value), std::move(bound), terms};
}

SeriesValue zeta_from_lambda(unsigned s, const PrecReal& target_bound,
                             unsigned precision_bits) {
  require_series_domain("zeta_from_lambda", s, 2);
  SeriesValue lam = odd_lambda(s, target_bound * 3L / 8L, precision_bits + kGuardBits);
  unsigned w = precision_bits + kGuardBits;
  Scratch den(w), acc(w);
  mpfr_set_ui_2exp(den, 1, -static_cast<long>(s), MPFR_RNDN);
  mpfr_ui_sub(den, 1, den, MPFR_RNDN);      // 1 - 2^-s in [3/4, 1)
  mpfr_div(acc, lam.value.raw(), den, MPFR_RNDN);
  double scale = 1.0 / mpfr_get_d(den, MPFR_RNDD);
  PrecReal trunc = lam.error_bound * PrecReal(scale * (1.0 + 1e-12), 64);
  return finalize("zeta_from_lambda", acc, w, precision_bits, trunc, 8,
                  lam.terms_used, target_bound);
}

SeriesValue zeta_from_lambda(unsigned s, double target_bound, unsigned precision_bits) {
  return zeta_from_lambda(s, PrecReal(target_bound, 64), precision_bits);
}

namespace {

// (base)^-s for real s at w bits; integral s uses the integer-power path.
void pow_neg_real(mpfr_ptr out, mpfr_srcptr base, double s, mpfr_srcptr s_raw,
                  bool s_integral) {
  if (s_integral) {
    mpfr_pow_ui(out, base, static_cast<unsigned long>(s), MPFR_RNDN);
    mpfr_ui_div(out, 1, out, MPFR_RNDN);
  } else {
    mpfr_pow(out, base, s_raw, MPFR_RNDN);
    mpfr_ui_div(out, 1, out, MPFR_RNDN);
  }
}

}  // namespace

SeriesValue hurwitz_zeta(double s, const PrecReal& a, const PrecReal& target_bound,
                         unsigned precision_bits, std::size_t term_budget) {
  if (!(s > 1.0)) throw std::domain_error("hurwitz_zeta: s must be > 1");
  if (!(a > PrecReal(0.0, 64))) throw std::domain_error("hurwitz_zeta: a must be > 0");
  if (!(target_bound > PrecReal(0.0, 64)))
    throw std::domain_error("hurwitz_zeta: target_bound must be positive");

  double a_d = a.to_double();
  // (N+a)^-s <= target/2
  double log_need = (std::log(2.0) - log_of(target_bound)) / s;
  double N_d = std::exp(std::min(log_need, 500.0)) - a_d + 1.0;
  if (log_need > 60.0 || N_d > static_cast<double>(term_budget)) {
    PrecReal achieved = PrecReal(static_cast<double>(term_budget) + a_d, 64);
    achieved = 1L / pow_ui(achieved, static_cast<unsigned long>(std::ceil(s)));
    throw CapacityError("hurwitz_zeta: term budget exhausted; achieved bound ~" +
                        achieved.to_decimal_string());
  }
  auto N = static_cast<std::size_t>(std::max(1.0, std::ceil(N_d)));

  bool s_integral = (s == std::floor(s)) && s <= 4e9;
  unsigned w = precision_bits + kGuardBits + bits_of(N + 8) +
               static_cast<unsigned>(std::max(0.0, s * std::log2(a_d < 1 ? 1.0 / a_d : 1.0))) + 8;
  Scratch acc(w), base(w), term(w), s_raw(w);
  mpfr_set_d(s_raw, s, MPFR_RNDN);
  mpfr_set(base, a.raw(), MPFR_RNDN);
  for (std::size_t n = 0; n < N; ++n) {
    pow_neg_real(term, base, s, s_raw, s_integral);
    mpfr_add(acc, acc, term, MPFR_RNDN);
    mpfr_add_ui(base, base, 1, MPFR_RNDN);
  }
  // integral tail correction (N+a)^(1-s)/(s-1); base currently holds N+a
  Scratch corr(w), sm1(w);
  mpfr_set_d(sm1, s - 1.0, MPFR_RNDN);
  mpfr_pow(corr, base, sm1, MPFR_RNDN);
  mpfr_ui_div(corr, 1, corr, MPFR_RNDN);
  mpfr_div(corr, corr, sm1, MPFR_RNDN);
  mpfr_add(acc, acc, corr, MPFR_RNDN);
  // certified remainder after the correction: (N+a)^-s
  pow_neg_real(term, base, s, s_raw, s_integral);
  PrecReal trunc(64);
  mpfr_set(trunc.raw(), term.v, MPFR_RNDU);
  double mag = std::abs(mpfr_get_d(acc, MPFR_RNDN));
  PrecReal value(precision_bits);
  mpfr_set(value.raw(), acc.v, MPFR_RNDN);
  PrecReal bound = trunc + rounding_allowance(3 * N + 8, w, mag) +
                   representation_allowance(value, precision_bits);
  if (!(bound <= target_bound))
    throw PrecisionError("hurwitz_zeta: target_bound needs more precision_bits (achieved " +
                         bound.to_decimal_string() + ")");
  return SeriesValue{std::move(value), std::move(bound), N};
}

SeriesValue hurwitz_zeta(double s, double a, double target_bound,
                         unsigned precision_bits, std::size_t term_budget) {
  return hurwitz_zeta(s, PrecReal(a, precision_bits), PrecReal(target_bound, 64),
                      precision_bits, term_budget);
}

SeriesValue zeta_direct(unsigned s, const PrecReal& target_bound,
                        unsigned precision_bits, std::size_t term_budget) {
  require_series_domain("zeta_direct", s, 2);
  // N^-s <= target/2
  double log_need = (std::log(2.0) - log_of(target_bound)) / s;
  if (log_need > std::log(static_cast<double>(term_budget) + 2.0))
    throw CapacityError("zeta_direct: term budget exhausted; achieved bound ~" +
                        (1L / pow_ui(PrecReal(static_cast<double>(term_budget), 64), s))
                            .to_decimal_string());
  auto N = static_cast<std::size_t>(std::max(1.0, std::ceil(std::exp(log_need))));

  unsigned w = precision_bits + kGuardBits + bits_of(N + 8);
  Scratch acc(w), term(w);
  for (std::size_t k = 1; k <= N; ++k) {
    mpfr_ui_pow_ui(term, k, s, MPFR_RNDN);
    mpfr_ui_div(term, 1, term, MPFR_RNDN);
    mpfr_add(acc, acc, term, MPFR_RNDN);
  }
  // + N^(1-s)/(s-1), remainder within N^-s
  mpfr_ui_pow_ui(term, N, s - 1, MPFR_RNDN);
  mpfr_ui_div(term, 1, term, MPFR_RNDN);
  mpfr_div_ui(term, term, s - 1, MPFR_RNDN);
  mpfr_add(acc, acc, term, MPFR_RNDN);
  PrecReal trunc = inv_pow(N, s, 64);
  return finalize("zeta_direct", acc, w, precision_bits, trunc, 2 * N + 6, N,
                  target_bound);
}

SeriesValue zeta_direct(unsigned s, double target_bound, unsigned precision_bits,
                        std::size_t term_budget) {
  return zeta_direct(s, PrecReal(target_bound, 64), precision_bits, term_budget);
}

}  // namespace sechmoments::series
