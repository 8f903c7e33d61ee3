#include "sechmoments/exact_sequences.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

#include "doctest.h"
#include "sechmoments/errors.hpp"

using namespace sechmoments;
using exact::ExactInt;
using exact::ExactRational;

namespace {

// Oracle: Pascal's triangle, no factorials and no GMP builtin.
std::vector<std::vector<ExactInt>> pascal_rows(unsigned n_max) {
  std::vector<std::vector<ExactInt>> rows(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    rows[n].resize(n + 1, 1);
    for (unsigned k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return rows;
}

// Oracle: power series reciprocal with exact rationals. Given the coefficients
// d_j of a series with d_0 != 0, returns the coefficients of its reciprocal:
// e_0 = 1/d_0, e_n = -(1/d_0) sum_{j=1..n} d_j e_{n-j}.
std::vector<ExactRational> series_reciprocal(const std::vector<ExactRational>& d) {
  std::vector<ExactRational> e(d.size());
  e[0] = 1 / d[0];
  for (std::size_t n = 1; n < d.size(); ++n) {
    ExactRational acc = 0;
    for (std::size_t j = 1; j <= n; ++j) acc += d[j] * e[n - j];
    e[n] = -acc / d[0];
  }
  return e;
}

ExactInt factorial(unsigned n) {
  ExactInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// E_{2m} by dividing 1 by the even series of cosh: coefficients 1/(2j)!.
std::vector<ExactInt> euler_even_by_series_division(unsigned m_max) {
  std::vector<ExactRational> cosh_even(m_max + 1);
  for (unsigned j = 0; j <= m_max; ++j)
    cosh_even[j] = ExactRational(1) / ExactRational(factorial(2 * j));
  auto sech_even = series_reciprocal(cosh_even);
  std::vector<ExactInt> e(m_max + 1);
  for (unsigned m = 0; m <= m_max; ++m) {
    ExactRational v = sech_even[m] * ExactRational(factorial(2 * m));
    REQUIRE(v.get_den() == 1);
    e[m] = v.get_num();
  }
  return e;
}

// E*_n by dividing 2 by the series of e^t + 1: coefficients 1/n! except the
// constant term, which is 2.
std::vector<ExactRational> euler_star_by_series_division(unsigned n_max) {
  std::vector<ExactRational> d(n_max + 1);
  d[0] = 2;
  for (unsigned j = 1; j <= n_max; ++j) d[j] = ExactRational(1) / ExactRational(factorial(j));
  auto inv = series_reciprocal(d);
  std::vector<ExactRational> star(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) star[n] = 2 * inv[n] * ExactRational(factorial(n));
  return star;
}

}  // namespace

TEST_CASE("binomial matches the Pascal triangle oracle") {
  auto rows = pascal_rows(20);
  for (unsigned n = 0; n <= 20; ++n)
    for (unsigned k = 0; k <= n; ++k) CHECK(exact::binomial(n, k) == rows[n][k]);
  CHECK(exact::binomial(4, 2) == 6);
  CHECK(exact::binomial(10, 5) == 252);
  CHECK_THROWS_AS((void)exact::binomial(3, 4), std::domain_error);
}

TEST_CASE("secant-number table: frozen values and series-division oracle") {
  auto t = exact::euler_numbers(12);
  // E_0..E_10 frozen; E_12 cross-checked against the reciprocal-series
  // oracle above (division of 1 by the even cosh series, exact rationals).
  const long expected[] = {1, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521, 0, 2702765};
  REQUIRE(t.values.size() == 13);
  for (std::size_t i = 0; i <= 12; ++i) CHECK(t.at(i) == expected[i]);

  auto oracle = euler_even_by_series_division(12);
  auto big = exact::euler_numbers(24);
  for (unsigned m = 0; m <= 12; ++m) CHECK(big.at(2 * m) == oracle[m]);
}

TEST_CASE("secant-number invariants") {
  auto t = exact::euler_numbers(30);
  for (std::size_t i = 1; i <= 30; i += 2) CHECK(t.at(i) == 0);
  for (std::size_t k = 0; 2 * k <= 30; ++k) {
    // sign alternation (-1)^k and the defining recurrence, exactly
    CHECK(sgn(t.at(2 * k)) == ((k % 2 == 0) ? 1 : -1));
    if (k >= 1) {
      ExactInt acc = 0;
      for (std::size_t j = 0; j <= k; ++j)
        acc += exact::binomial(2 * k, 2 * j) * t.at(2 * j);
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("table prefixes are stable") {
  auto small = exact::euler_numbers(5);
  auto large = exact::euler_numbers(12);
  for (std::size_t i = 0; i <= 5; ++i) CHECK(small.at(i) == large.at(i));

  auto zs = exact::zigzag_numbers(6);
  auto zl = exact::zigzag_numbers(14);
  for (std::size_t i = 0; i <= 6; ++i) CHECK(zs.at(i) == zl.at(i));
}

TEST_CASE("star-number table: frozen values, oracle, invariants") {
  auto t = exact::euler_star_numbers(16);
  CHECK(t.at(0) == ExactRational(1));
  CHECK(t.at(1) == ExactRational(-1, 2));
  CHECK(t.at(3) == ExactRational(1, 4));

  auto oracle = euler_star_by_series_division(16);
  for (unsigned n = 0; n <= 16; ++n) CHECK(t.at(n) == oracle[n]);

  for (unsigned n = 2; n <= 16; n += 2) CHECK(t.at(n) == 0);  // even index, n >= 2

  // defining recurrence, exactly
  for (unsigned n = 1; n <= 16; ++n) {
    ExactRational acc = t.at(n);
    for (unsigned k = 0; k <= n; ++k)
      acc += ExactRational(exact::binomial(n, k)) * t.at(k);
    CHECK(acc == 0);
  }

  // denominators are powers of two
  for (unsigned n = 0; n <= 16; ++n) {
    ExactInt den = t.at(n).get_den();
    while (den % 2 == 0) den /= 2;
    CHECK(den == 1);
  }
}

TEST_CASE("zigzag table against enumeration and the secant numbers") {
  auto z = exact::zigzag_numbers(10);
  const long expected[] = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};
  for (std::size_t i = 0; i <= 10; ++i) CHECK(z.at(i) == expected[i]);

  for (unsigned n = 0; n <= 10; ++n)
    CHECK(z.at(n) == exact::count_alternating_permutations(n));

  // even zigzag numbers equal |E_2n|; verified, not assumed by either side
  auto e = exact::euler_numbers(30);
  auto zl = exact::zigzag_numbers(30);
  for (unsigned n = 0; 2 * n <= 30; ++n) CHECK(zl.at(2 * n) == abs(e.at(2 * n)));
}

TEST_CASE("alternating permutation enumeration") {
  CHECK(exact::count_alternating_permutations(0) == 1);
  CHECK(exact::count_alternating_permutations(1) == 1);
  CHECK(exact::count_alternating_permutations(2) == 1);
  CHECK(exact::count_alternating_permutations(4) == 5);

  // the five alternating permutations of S_4
  auto perms = exact::list_alternating_permutations(4);
  std::vector<std::vector<int>> expected = {
      {2, 1, 4, 3}, {3, 1, 4, 2}, {3, 2, 4, 1}, {4, 1, 3, 2}, {4, 2, 3, 1}};
  std::sort(perms.begin(), perms.end());
  std::sort(expected.begin(), expected.end());
  CHECK(perms == expected);

  CHECK_THROWS_AS((void)exact::count_alternating_permutations(11), CapacityError);
}
