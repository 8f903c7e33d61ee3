#include <doctest.h>

#include <stdexcept>

#include "sechmoments/closed_forms.hpp"
#include "sechmoments/errors.hpp"
#include "sechmoments/series_engine.hpp"

using namespace sechmoments;
using namespace sechmoments::closed;

namespace {

// |got - want| <= slack with everything evaluated at got's precision.
void check_close(const PrecReal& got, const PrecReal& want, double slack) {
  PrecReal gap = abs(got - want);
  CAPTURE(gap.to_decimal_string());
  CHECK(gap <= PrecReal(slack, 64));
}

}  // namespace

TEST_CASE("beta closed forms match the frozen rationals") {
  CHECK(beta_closed(0) == PiPolyValue{mpq_class(1, 4), 1});
  CHECK(beta_closed(1) == PiPolyValue{mpq_class(1, 32), 3});
  CHECK(beta_closed(2) == PiPolyValue{mpq_class(5, 1536), 5});
  CHECK(beta_closed(3) == PiPolyValue{mpq_class(61, 184320), 7});

  for (unsigned n = 0; n <= 10; ++n) {
    PiPolyValue v = beta_closed(n);
    CHECK(v.pi_power == 2 * n + 1);
    CHECK(sgn(v.coeff) > 0);  // (-1)^n E_2n = |E_2n|
  }
}

TEST_CASE("even zeta closed forms match the frozen rationals") {
  CHECK(zeta_even_closed(0) == PiPolyValue{mpq_class(1, 6), 2});
  CHECK(zeta_even_closed(1) == PiPolyValue{mpq_class(1, 90), 4});
  CHECK(zeta_even_closed(2) == PiPolyValue{mpq_class(1, 945), 6});
  CHECK(zeta_even_closed(3) == PiPolyValue{mpq_class(1, 9450), 8});
  CHECK(zeta_even_closed(4) == PiPolyValue{mpq_class(1, 93555), 10});
  // the irregular-prime numerator shows up exactly where it should
  CHECK(zeta_even_closed(5) == PiPolyValue{mpq_class(691, 638512875), 12});

  for (unsigned n = 0; n <= 10; ++n) {
    PiPolyValue v = zeta_even_closed(n);
    CHECK(v.pi_power == 2 * n + 2);
    CHECK(sgn(v.coeff) > 0);
  }
}

TEST_CASE("star-sequence route gives exactly the convolution route") {
  for (unsigned n = 1; n <= 6; ++n) {
    PiPolyValue star = zeta_even_via_estar(n);
    PiPolyValue conv = zeta_even_closed(n - 1);
    CAPTURE(n);
    CHECK(star == conv);
  }
  CHECK_THROWS_AS(zeta_even_via_estar(0), std::domain_error);
}

TEST_CASE("closed forms agree with the summation engine") {
  // Two independent routes to the same number: exact rational times pi^k
  // on one side, certified partial summation on the other.
  for (unsigned n = 0; n <= 4; ++n) {
    CAPTURE(n);
    SeriesValue direct = series::dirichlet_beta(2 * n + 1, 1e-30, 128);
    check_close(beta_closed(n).evaluate(192), direct.value, 2e-30);
  }
  for (unsigned n = 0; n <= 4; ++n) {
    CAPTURE(n);
    SeriesValue direct = series::zeta_from_lambda(2 * n + 2, 1e-30, 128);
    check_close(zeta_even_closed(n).evaluate(192), direct.value, 2e-30);
  }
}

TEST_CASE("pi polynomial evaluation") {
  PiPolyValue sixth{mpq_class(1, 6), 2};
  PrecReal want = PrecReal::from_string(
      "1.64493406684822643647241516664602518922", 128);
  check_close(sixth.evaluate(128), want, 1e-36);

  PiPolyValue zero{mpq_class(0), 5};
  CHECK(zero.evaluate(64).is_zero());

  PiPolyValue negative{mpq_class(-3, 2), 0};
  CHECK(negative.evaluate(64).to_double() == -1.5);
}

TEST_CASE("quarter-shift zeta relation verifies numerically") {
  VerificationReport r1 = verify_eq9(1);
  CHECK(r1.pass);
  CHECK(r1.n == 1);
  CHECK(!r1.identity.empty());
  CHECK(r1.gap <= r1.lhs_bound + r1.rhs_bound);
  CHECK(r1.lhs_bound + r1.rhs_bound <= PrecReal(1e-12, 64));

  VerificationReport r2 = verify_eq9(2, 5e-13);
  CHECK(r2.pass);
  CHECK(r2.gap <= PrecReal(5e-13, 64));

  CHECK_THROWS_AS(verify_eq9(0), std::domain_error);
  // a bound this small needs more summation terms than the budget allows
  CHECK_THROWS_AS(verify_eq9(1, 1e-300), CapacityError);
}
