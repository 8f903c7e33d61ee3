#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace sechmoments::exact {

// Exact arithmetic carriers. mpq_class values are kept canonical by GMP:
// lowest terms, denominator > 0.
using ExactInt = mpz_class;
using ExactRational = mpq_class;

ExactInt binomial(unsigned n, unsigned k);  // throws std::domain_error if k > n

// Integer sequence E_n from the secant generating function: E_0 = 1 and
// sum_{k=0..n} C(2n,2k) E_{2k} = 0 for n >= 1; odd indices are 0.
struct EulerTable {
  std::size_t n_max = 0;
  std::vector<ExactInt> values;  // values[i] = E_i, i = 0..n_max

  const ExactInt& at(std::size_t i) const { return values.at(i); }
};

EulerTable euler_numbers(std::size_t n_max);

// Rational sequence E*_n from 2/(e^t + 1): E*_0 = 1 and
// sum_{k=0..n} C(n,k) E*_k + E*_n = 0 for n >= 1.
// Denominators are always powers of two.
struct EulerStarTable {
  std::size_t n_max = 0;
  std::vector<ExactRational> values;

  const ExactRational& at(std::size_t i) const { return values.at(i); }
};

EulerStarTable euler_star_numbers(std::size_t n_max);

// Zigzag sequence A_n built with the Seidel (boustrophedon) triangle,
// independent of EulerTable. A_n counts the alternating permutations of S_n.
struct ZigzagTable {
  std::size_t n_max = 0;
  std::vector<ExactInt> values;

  const ExactInt& at(std::size_t i) const { return values.at(i); }
};

ZigzagTable zigzag_numbers(std::size_t n_max);

// Brute-force enumeration oracle. A permutation p of {1..n} counts when
// p1 > p2 < p3 > p4 < ... ; n = 0 and n = 1 count as 1.
// Guard: n <= 10 (factorial growth), otherwise CapacityError.
std::uint64_t count_alternating_permutations(unsigned n);
std::vector<std::vector<int>> list_alternating_permutations(unsigned n);

}  // namespace sechmoments::exact
