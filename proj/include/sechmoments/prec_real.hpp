#pragma once

#include <cstddef>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace sechmoments {

inline constexpr unsigned kMinPrecisionBits = 64;
inline constexpr unsigned kDefaultPrecisionBits = 128;

// Arbitrary-precision real with explicit per-value precision. Every operation
// is correctly rounded to the result's precision (MPFR, round-to-nearest), so
// a single operation is accurate to 1/2 ulp, well within the contract of
// 2^(1-precision_bits) relative error. Binary operations produce a result at
// the wider of the two operand precisions.
class PrecReal {
 public:
  PrecReal();  // 0 at kMinPrecisionBits
  explicit PrecReal(unsigned precision_bits);
  PrecReal(double x, unsigned precision_bits);
  PrecReal(long x, unsigned precision_bits);
  PrecReal(const PrecReal& other);
  PrecReal(PrecReal&& other) noexcept;
  PrecReal& operator=(const PrecReal& other);
  PrecReal& operator=(PrecReal&& other) noexcept;
  ~PrecReal();

  static PrecReal from_rational(const mpq_class& q, unsigned precision_bits);
  static PrecReal from_integer(const mpz_class& z, unsigned precision_bits);
  static PrecReal from_string(const std::string& s, unsigned precision_bits);
  static PrecReal pi(unsigned precision_bits);

  unsigned precision_bits() const;
  PrecReal to_precision(unsigned precision_bits) const;

  double to_double() const;
  // Scientific decimal form with enough digits to round-trip the precision.
  std::string to_decimal_string() const;

  bool is_zero() const;
  int sign() const;  // -1, 0, +1

  PrecReal operator-() const;
  PrecReal& operator+=(const PrecReal& rhs);
  PrecReal& operator-=(const PrecReal& rhs);
  PrecReal& operator*=(const PrecReal& rhs);
  PrecReal& operator/=(const PrecReal& rhs);

  friend PrecReal operator+(PrecReal a, const PrecReal& b) { return a += b; }
  friend PrecReal operator-(PrecReal a, const PrecReal& b) { return a -= b; }
  friend PrecReal operator*(PrecReal a, const PrecReal& b) { return a *= b; }
  friend PrecReal operator/(PrecReal a, const PrecReal& b) { return a /= b; }

  friend PrecReal operator*(PrecReal a, long b);
  friend PrecReal operator*(long a, PrecReal b) { return std::move(b) * a; }
  friend PrecReal operator/(PrecReal a, long b);
  friend PrecReal operator/(long a, const PrecReal& b);
  friend PrecReal operator+(PrecReal a, long b);
  friend PrecReal operator-(PrecReal a, long b);

  friend bool operator==(const PrecReal& a, const PrecReal& b);
  friend bool operator!=(const PrecReal& a, const PrecReal& b) { return !(a == b); }
  friend bool operator<(const PrecReal& a, const PrecReal& b);
  friend bool operator<=(const PrecReal& a, const PrecReal& b);
  friend bool operator>(const PrecReal& a, const PrecReal& b) { return b < a; }
  friend bool operator>=(const PrecReal& a, const PrecReal& b) { return b <= a; }

  friend PrecReal abs(PrecReal x);
  friend PrecReal sqrt(const PrecReal& x);
  friend PrecReal exp(const PrecReal& x);
  friend PrecReal log(const PrecReal& x);
  friend PrecReal sin(const PrecReal& x);
  friend PrecReal cos(const PrecReal& x);
  friend PrecReal atan(const PrecReal& x);
  friend PrecReal cosh(const PrecReal& x);
  friend PrecReal sinh(const PrecReal& x);
  // 2^e as an exact PrecReal (e may be negative)
  static PrecReal pow2(long e, unsigned precision_bits);

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

// x^k, k >= 0
PrecReal pow_ui(const PrecReal& x, unsigned long k);
// base^-e at the given precision, base >= 1, e >= 1: the series term shape
PrecReal inv_pow(unsigned long base, unsigned long e, unsigned precision_bits);

}  // namespace sechmoments
