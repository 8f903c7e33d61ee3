#include "sechmoments/closed_forms.hpp"

#include <gmpxx.h>

#include <stdexcept>

#include "sechmoments/errors.hpp"
#include "sechmoments/exact_sequences.hpp"
#include "sechmoments/series_engine.hpp"

namespace sechmoments {

PrecReal PiPolyValue::evaluate(unsigned precision_bits) const {
  if (coeff == 0) return PrecReal(0.0, precision_bits);
  unsigned w = precision_bits + 32;
  PrecReal p = pow_ui(PrecReal::pi(w), pi_power);
  return (PrecReal::from_rational(coeff, w) * p).to_precision(precision_bits);
}

namespace closed {

namespace {

mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace

PiPolyValue beta_closed(unsigned n) {
  exact::EulerTable table = exact::euler_numbers(2 * n);
  mpz_class num = table.at(2 * n);
  if (n % 2 == 1) num = -num;  // (-1)^n E_2n, always positive
  mpq_class coeff(num, 2 * factorial(2 * n) * (mpz_class(1) << (2 * n + 1)));
  coeff.canonicalize();
  return {coeff, 2 * n + 1};
}

PiPolyValue zeta_even_closed(unsigned n) {
  exact::EulerTable table = exact::euler_numbers(2 * n);
  mpz_class conv = 0;
  for (unsigned l = 0; l <= n; ++l)
    conv += exact::binomial(2 * n, 2 * l) * table.at(2 * l) * table.at(2 * n - 2 * l);
  if (n % 2 == 1) conv = -conv;
  // (-1)^n conv / (2 (2n+1)! (4^(n+1) - 1)), after folding the 2^-(2n+2)
  // geometric factor into the power of two
  mpq_class coeff(conv,
                  2 * factorial(2 * n + 1) * ((mpz_class(1) << (2 * n + 2)) - 1));
  coeff.canonicalize();
  return {coeff, 2 * n + 2};
}

PiPolyValue zeta_even_via_estar(unsigned n) {
  if (n == 0) throw std::domain_error("zeta_even_via_estar: n >= 1");
  exact::EulerStarTable table = exact::euler_star_numbers(2 * n - 1);
  mpq_class coeff = table.at(2 * n - 1) * (mpz_class(1) << (2 * n));
  coeff /= 4 * factorial(2 * n - 1) * (1 - (mpz_class(1) << (2 * n)));
  if (n % 2 == 0) coeff = -coeff;  // (-1)^(n-1)
  coeff.canonicalize();
  return {coeff, 2 * n};
}

VerificationReport verify_eq9(unsigned n, double tolerance, unsigned precision_bits) {
  if (n == 0) throw std::domain_error("verify_eq9: n >= 1");
  if (!(tolerance > 0)) throw std::domain_error("verify_eq9: tolerance must be positive");
  unsigned s = 2 * n + 1;

  // shift factor 2^2n (1 - 2^(2n+1)), exact and negative
  mpz_class factor = (mpz_class(1) << (2 * n)) * (1 - (mpz_class(1) << (2 * n + 1)));
  unsigned fbits = std::max(96u, 8 * n + 32);
  PrecReal f = PrecReal::from_integer(factor, fbits);

  PrecReal tol(tolerance, 64);
  PrecReal quarter_target = tol * PrecReal(0.25, 64);
  PrecReal zeta_target = quarter_target / abs(f);

  SeriesValue quarter = series::hurwitz_zeta(
      static_cast<double>(s), PrecReal::from_rational(mpq_class(1, 4), precision_bits),
      quarter_target, precision_bits);
  SeriesValue whole = series::zeta_direct(s, zeta_target, precision_bits);

  PrecReal lhs = quarter.value + f * whole.value;
  PrecReal combine_slack = (abs(lhs) + abs(f) * abs(whole.value) + PrecReal(2.0, 64)) *
                           PrecReal::pow2(5 - static_cast<long>(precision_bits), 64);
  PrecReal lhs_bound =
      quarter.error_bound + abs(f) * whole.error_bound + combine_slack;

  // rhs = |E_2n| 2^2n / (2 (2n)!) * pi^(2n+1), exact
  exact::EulerTable table = exact::euler_numbers(2 * n);
  mpz_class num = table.at(2 * n) * (mpz_class(1) << (2 * n));
  if (n % 2 == 1) num = -num;
  mpq_class coeff(num, 2 * factorial(2 * n));
  coeff.canonicalize();
  PiPolyValue rhs_poly{coeff, 2 * n + 1};
  PrecReal rhs = rhs_poly.evaluate(precision_bits + 32);
  PrecReal rhs_bound = (abs(rhs) + PrecReal(1.0, 64)) *
                       PrecReal::pow2(6 - static_cast<long>(precision_bits + 32), 64);

  VerificationReport report;
  report.identity = "eq9";
  report.n = static_cast<long>(n);
  report.lhs = lhs;
  report.lhs_bound = lhs_bound;
  report.rhs = rhs;
  report.rhs_bound = rhs_bound;
  report.gap = abs(lhs - rhs);
  report.pass = report.gap <= lhs_bound + rhs_bound;
  return report;
}

}  // namespace closed
}  // namespace sechmoments
