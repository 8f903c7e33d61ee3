#include "sechmoments/exact_sequences.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sechmoments/errors.hpp"

namespace sechmoments::exact {

ExactInt binomial(unsigned n, unsigned k) {
  if (k > n) throw std::domain_error("binomial: k > n");
  ExactInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

EulerTable euler_numbers(std::size_t n_max) {
  EulerTable t;
  t.n_max = n_max;
  t.values.assign(n_max + 1, ExactInt(0));
  t.values[0] = 1;
  // sum_{k=0..n} C(2n,2k) E_{2k} = 0 solved for the last term
  for (std::size_t n = 1; 2 * n <= n_max; ++n) {
    ExactInt acc = 0;
    for (std::size_t k = 0; k < n; ++k)
      acc += binomial(2 * n, 2 * k) * t.values[2 * k];
    t.values[2 * n] = -acc;
  }
  return t;
}

EulerStarTable euler_star_numbers(std::size_t n_max) {
  EulerStarTable t;
  t.n_max = n_max;
  t.values.assign(n_max + 1, ExactRational(0));
  t.values[0] = 1;
  // sum_{k=0..n} C(n,k) E*_k + E*_n = 0  =>  E*_n = -(1/2) sum_{k<n} C(n,k) E*_k
  for (std::size_t n = 1; n <= n_max; ++n) {
    ExactRational acc = 0;
    for (std::size_t k = 0; k < n; ++k)
      acc += ExactRational(binomial(n, k)) * t.values[k];
    acc /= -2;
    acc.canonicalize();
    t.values[n] = acc;
  }
  return t;
}

ZigzagTable zigzag_numbers(std::size_t n_max) {
  ZigzagTable t;
  t.n_max = n_max;
  t.values.assign(n_max + 1, ExactInt(0));
  // Seidel triangle: row(n)[k] = row(n)[k-1] + row(n-1)[n-k], first entry 0
  // for n >= 1; the last entry of row n is A_n.
  std::vector<ExactInt> prev{ExactInt(1)};
  t.values[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<ExactInt> row(n + 1);
    row[0] = 0;
    for (std::size_t k = 1; k <= n; ++k) row[k] = row[k - 1] + prev[n - k];
    t.values[n] = row[n];
    prev = std::move(row);
  }
  return t;
}

namespace {

bool is_alternating(const std::vector<int>& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (i % 2 == 0 ? p[i] < p[i + 1] : p[i] > p[i + 1]) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> list_alternating_permutations(unsigned n) {
  if (n > 10) throw CapacityError("list_alternating_permutations: n > 10");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    if (is_alternating(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::uint64_t count_alternating_permutations(unsigned n) {
  if (n > 10) throw CapacityError("count_alternating_permutations: n > 10");
  if (n <= 1) return 1;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::uint64_t count = 0;
  do {
    if (is_alternating(p)) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace sechmoments::exact
