#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sechmoments/convolution_clt.hpp"
#include "sechmoments/detail/quadrature.hpp"
#include "sechmoments/errors.hpp"
#include "sechmoments/sech_distribution.hpp"

using namespace sechmoments;
using namespace sechmoments::clt;

TEST_CASE("two-fold density: closed form against direct convolution") {
  double at_zero = 2.0 / (M_PI * M_PI);
  CHECK(sum_density_2(0.0) == doctest::Approx(at_zero).epsilon(1e-15));
  CHECK(sum_density_2(2.5) == sum_density_2(-2.5));
  CHECK(sum_density_2(1600.0) == 0.0);
  CHECK(std::isfinite(sum_density_2(745.0)));
  CHECK(sum_density_2(745.0) >= 0.0);

  // across the Taylor switch at 1e-3 the jump is no more than the local slope
  // (~6.8e-5) explains
  CHECK(std::abs(sum_density_2(0.000999) - sum_density_2(0.001001)) < 3e-10);
  // the double branch below the switch against the exact form evaluated in
  // high precision (whose own switch sits near 3e-8)
  PrecReal exact_near = sum_density_2(PrecReal(0.0009, 128));
  CHECK(std::abs(sum_density_2(0.0009) - exact_near.to_double()) < 1e-15);

  // the convolution integral is the independent route to the same density
  for (double a : {0.0, 0.5, 1.0, 3.0}) {
    CAPTURE(a);
    auto conv = detail::integrate(
        [a](double t) { return hsec::pdf(t) * hsec::pdf(a - t); }, -45.0, 45.0,
        1e-13);
    CHECK(std::abs(conv.value - sum_density_2(a)) < 1e-10);
  }
}

TEST_CASE("two-fold density: high-precision overload") {
  unsigned p = 128;
  PrecReal two(2.0, 160);
  PrecReal pisq = PrecReal::pi(160) * PrecReal::pi(160);
  CHECK(abs(sum_density_2(PrecReal(0.0, p)) - two / pisq) <= PrecReal(1e-36, 64));

  CHECK(sum_density_2(PrecReal(1.0, p)).to_double() ==
        doctest::Approx(sum_density_2(1.0)).epsilon(1e-14));
  // just below the high-precision Taylor threshold
  CHECK(sum_density_2(PrecReal(1e-9, p)).to_double() ==
        doctest::Approx(sum_density_2(1e-9)).epsilon(1e-14));
  PrecReal x(0.75, p);
  CHECK(abs(sum_density_2(x) - sum_density_2(-x)).is_zero());
}

TEST_CASE("sum moments: closed values") {
  CHECK(sum_moment_closed(0) == PiPolyValue{mpq_class(1), 0});
  CHECK(sum_moment_closed(1) == PiPolyValue{mpq_class(1, 2), 2});
  CHECK(sum_moment_closed(2) == PiPolyValue{mpq_class(1), 4});
  CHECK(sum_moment_closed(3) == PiPolyValue{mpq_class(17, 4), 6});
  for (unsigned n = 0; n <= 8; ++n) {
    CHECK(sgn(sum_moment_closed(n).coeff) > 0);
    CHECK(sum_moment_closed(n).pi_power == 2 * n);
  }
}

TEST_CASE("sum moments: series route meets the closed route") {
  for (unsigned n = 0; n <= 6; ++n) {
    CAPTURE(n);
    SeriesValue s = sum_moment_series(n);
    PrecReal closed = sum_moment_closed(n).evaluate(224);
    CHECK(s.error_bound <= PrecReal(1e-25, 64));
    CHECK(abs(s.value - closed) <= s.error_bound + PrecReal(1e-28, 64));
  }
  CHECK(sum_moment_series(0).value.to_double() == doctest::Approx(1.0));
}

TEST_CASE("n-fold density by transform inversion") {
  for (double x : {0.0, 0.7, 2.0, -1.3}) {
    CAPTURE(x);
    SeriesValue d = nfold_density(1, x);
    CHECK(d.error_bound <= PrecReal(1e-10, 64));
    CHECK(std::abs(d.value.to_double() - hsec::pdf(x)) <=
          d.error_bound.to_double() + 1e-13);
  }
  for (double x : {0.0, 0.5, -0.5, 1.0, -1.0, 3.0, -3.0}) {
    CAPTURE(x);
    SeriesValue d = nfold_density(2, x);
    CHECK(d.error_bound <= PrecReal(1e-10, 64));
    CHECK(std::abs(d.value.to_double() - sum_density_2(x)) <=
          d.error_bound.to_double() + 1e-13);
  }
  CHECK(nfold_density(2, 0.0).value.to_double() ==
        doctest::Approx(2.0 / (M_PI * M_PI)).epsilon(1e-9));

  CHECK(nfold_density(3, 1.5).value.to_double() ==
        nfold_density(3, -1.5).value.to_double());
  SeriesValue far = nfold_density(3, 9.0);
  CHECK(far.value.to_double() >= -far.error_bound.to_double());

  CHECK_THROWS_AS(nfold_density(2, 0.0, 1e-13), CapacityError);
  CHECK_THROWS_AS(nfold_density(0, 0.0), std::domain_error);
}

TEST_CASE("n-fold mass and variance additivity") {
  for (unsigned n : {1u, 2u, 4u}) {
    CAPTURE(n);
    SeriesValue mass = nfold_moment(n, 0);
    CHECK(mass.error_bound <= PrecReal(1e-8, 64));
    CHECK(std::abs(mass.value.to_double() - 1.0) <= mass.error_bound.to_double());

    SeriesValue second = nfold_moment(n, 2, 1e-6);
    CHECK(second.error_bound <= PrecReal(1e-6, 64));
    double want = n * M_PI * M_PI / 4.0;
    CHECK(std::abs(second.value.to_double() - want) <= second.error_bound.to_double());
  }
  SeriesValue odd = nfold_moment(2, 1, 1e-8);
  CHECK(std::abs(odd.value.to_double()) <= odd.error_bound.to_double());
}

TEST_CASE("two-fold closed-density moments") {
  SeriesValue mass = sum_density_2_moment(0);
  CHECK(mass.error_bound <= PrecReal(1e-10, 64));
  CHECK(std::abs(mass.value.to_double() - 1.0) <= 1e-10);

  SeriesValue second = sum_density_2_moment(2);
  CHECK(std::abs(second.value.to_double() - M_PI * M_PI / 2.0) <=
        second.error_bound.to_double());

  SeriesValue fourth = sum_density_2_moment(4);
  double want = sum_moment_closed(2).evaluate(160).to_double();  // pi^4
  CHECK(std::abs(fourth.value.to_double() - want) <= 1e-10);
}

TEST_CASE("standardized density approaches the normal curve") {
  SeriesValue one = normalized_density(1, 0.0);
  CHECK(one.value.to_double() == doctest::Approx(0.5).epsilon(1e-9));

  SeriesValue sixteen = normalized_density(16, 0.0);
  CHECK(std::abs(sixteen.value.to_double() - normal_pdf(0.0)) < 0.01);

  double g2 = normalized_density_sup_gap(2);
  double g4 = normalized_density_sup_gap(4);
  CHECK(g4 < g2);
  CHECK(normalized_density_sup_gap(16) <= 0.01);
}

TEST_CASE("normal helpers") {
  CHECK(normal_pdf(0.0) == doctest::Approx(0.3989422804014327).epsilon(1e-15));
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(normal_cdf(1.959964) == doctest::Approx(0.975).epsilon(1e-6));
  for (double y : {0.3, 1.0, 2.5})
    CHECK(normal_cdf(y) + normal_cdf(-y) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(normal_cdf(-10.0) < 1e-22);
  CHECK(normal_cdf(10.0) >= 1.0 - 1e-15);
}

namespace {

// Inverse normal through bisection; only used to build an oracle sample.
double normal_quantile(double u) {
  double lo = -12.0, hi = 12.0;
  for (int i = 0; i < 80; ++i) {
    double mid = 0.5 * (lo + hi);
    (normal_cdf(mid) < u ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("distance statistic against the normal law") {
  // a sample placed exactly at the normal quantiles has distance ~ 1/(2m)
  std::vector<double> ideal;
  const std::size_t m = 500;
  for (std::size_t i = 0; i < m; ++i)
    ideal.push_back(normal_quantile((static_cast<double>(i) + 0.5) / m));
  CHECK(ks_statistic_vs_normal(ideal) <= 2.0 / m);

  // un-standardized draws are visibly not normal
  RngStream raw(3);
  CHECK(ks_statistic_vs_normal(hsec::sample(raw, 5000)) > 0.03);

  CHECK_THROWS_AS(ks_statistic_vs_normal({}), std::domain_error);
}

TEST_CASE("batch-sum distribution converges under folding") {
  RngStream tiny(11);
  CltReport small = ks_check(4, 100, tiny);
  CHECK(small.fold_count == 4);
  CHECK(small.sample_count == 100);
  CHECK(small.ks_statistic >= 0.0);
  CHECK(small.ks_statistic <= 1.0);
  CHECK(!small.sup_density_gap.has_value());

  RngStream a(5), b(5);
  CltReport ra = ks_check(8, 1000, a);
  CltReport rb = ks_check(8, 1000, b);
  CHECK(ra.ks_statistic == rb.ks_statistic);

  RngStream s64(0), s1(0);
  CltReport many = ks_check(64, 20000, s64);
  CltReport one = ks_check(1, 20000, s1);
  CHECK(many.ks_statistic <= 0.015);
  CHECK(many.ks_statistic < one.ks_statistic);
  CHECK(one.ks_statistic >= 0.018);

  CHECK_THROWS_AS(ks_check(4, 99, tiny), std::domain_error);
  CHECK_THROWS_AS(ks_check(0, 1000, tiny), std::domain_error);
}
