#include "sechmoments/prec_real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace sechmoments {

namespace {

mpfr_prec_t clamp_prec(unsigned bits) {
  return static_cast<mpfr_prec_t>(std::max(bits, kMinPrecisionBits));
}

}  // namespace

PrecReal::PrecReal() { mpfr_init2(v_, clamp_prec(kMinPrecisionBits)); mpfr_set_zero(v_, 1); }

PrecReal::PrecReal(unsigned precision_bits) {
  mpfr_init2(v_, clamp_prec(precision_bits));
  mpfr_set_zero(v_, 1);
}

PrecReal::PrecReal(double x, unsigned precision_bits) {
  mpfr_init2(v_, clamp_prec(precision_bits));
  mpfr_set_d(v_, x, MPFR_RNDN);
}

PrecReal::PrecReal(long x, unsigned precision_bits) {
  mpfr_init2(v_, clamp_prec(precision_bits));
  mpfr_set_si(v_, x, MPFR_RNDN);
}

PrecReal::PrecReal(const PrecReal& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

PrecReal::PrecReal(PrecReal&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

PrecReal& PrecReal::operator=(const PrecReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

PrecReal& PrecReal::operator=(PrecReal&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

PrecReal::~PrecReal() { mpfr_clear(v_); }

PrecReal PrecReal::from_rational(const mpq_class& q, unsigned precision_bits) {
  PrecReal r(precision_bits);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

PrecReal PrecReal::from_integer(const mpz_class& z, unsigned precision_bits) {
  PrecReal r(precision_bits);
  mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
  return r;
}

PrecReal PrecReal::from_string(const std::string& s, unsigned precision_bits) {
  PrecReal r(precision_bits);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("PrecReal::from_string: unparsable: " + s);
  return r;
}

PrecReal PrecReal::pi(unsigned precision_bits) {
  PrecReal r(precision_bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

unsigned PrecReal::precision_bits() const {
  return static_cast<unsigned>(mpfr_get_prec(v_));
}

PrecReal PrecReal::to_precision(unsigned precision_bits) const {
  PrecReal r(precision_bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

double PrecReal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string PrecReal::to_decimal_string() const {
  // ceil(bits * log10(2)) + 2 significant digits round-trips the value
  long digits = static_cast<long>(mpfr_get_prec(v_) * 0.30103) + 3;
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits - 1), v_);
  return std::string(buf.data());
}

bool PrecReal::is_zero() const { return mpfr_zero_p(v_) != 0; }

int PrecReal::sign() const {
  if (mpfr_zero_p(v_)) return 0;
  return mpfr_signbit(v_) ? -1 : 1;
}

namespace {
mpfr_prec_t wider(mpfr_srcptr a, mpfr_srcptr b) {
  return std::max(mpfr_get_prec(a), mpfr_get_prec(b));
}
}  // namespace

PrecReal PrecReal::operator-() const {
  PrecReal r(precision_bits());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

PrecReal& PrecReal::operator+=(const PrecReal& rhs) {
  PrecReal out(static_cast<unsigned>(wider(v_, rhs.v_)));
  mpfr_add(out.v_, v_, rhs.v_, MPFR_RNDN);
  mpfr_swap(v_, out.v_);
  return *this;
}

PrecReal& PrecReal::operator-=(const PrecReal& rhs) {
  PrecReal out(static_cast<unsigned>(wider(v_, rhs.v_)));
  mpfr_sub(out.v_, v_, rhs.v_, MPFR_RNDN);
  mpfr_swap(v_, out.v_);
  return *this;
}

PrecReal& PrecReal::operator*=(const PrecReal& rhs) {
  PrecReal out(static_cast<unsigned>(wider(v_, rhs.v_)));
  mpfr_mul(out.v_, v_, rhs.v_, MPFR_RNDN);
  mpfr_swap(v_, out.v_);
  return *this;
}

PrecReal& PrecReal::operator/=(const PrecReal& rhs) {
  PrecReal out(static_cast<unsigned>(wider(v_, rhs.v_)));
  mpfr_div(out.v_, v_, rhs.v_, MPFR_RNDN);
  mpfr_swap(v_, out.v_);
  return *this;
}

PrecReal operator*(PrecReal a, long b) {
  mpfr_mul_si(a.v_, a.v_, b, MPFR_RNDN);
  return a;
}

PrecReal operator/(PrecReal a, long b) {
  mpfr_div_si(a.v_, a.v_, b, MPFR_RNDN);
  return a;
}

PrecReal operator/(long a, const PrecReal& b) {
  PrecReal r(b.precision_bits());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

PrecReal operator+(PrecReal a, long b) {
  mpfr_add_si(a.v_, a.v_, b, MPFR_RNDN);
  return a;
}

PrecReal operator-(PrecReal a, long b) {
  mpfr_sub_si(a.v_, a.v_, b, MPFR_RNDN);
  return a;
}

bool operator==(const PrecReal& a, const PrecReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
bool operator<(const PrecReal& a, const PrecReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
bool operator<=(const PrecReal& a, const PrecReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }

PrecReal abs(PrecReal x) {
  mpfr_abs(x.v_, x.v_, MPFR_RNDN);
  return x;
}

#define SECHMOMENTS_UNARY(name, fn)          \
  PrecReal name(const PrecReal& x) {         \
    PrecReal r(x.precision_bits());          \
    fn(r.v_, x.v_, MPFR_RNDN);               \
    return r;                                \
  }

SECHMOMENTS_UNARY(sqrt, mpfr_sqrt)
SECHMOMENTS_UNARY(exp, mpfr_exp)
SECHMOMENTS_UNARY(log, mpfr_log)
SECHMOMENTS_UNARY(sin, mpfr_sin)
SECHMOMENTS_UNARY(cos, mpfr_cos)
SECHMOMENTS_UNARY(atan, mpfr_atan)
SECHMOMENTS_UNARY(cosh, mpfr_cosh)
SECHMOMENTS_UNARY(sinh, mpfr_sinh)

#undef SECHMOMENTS_UNARY

PrecReal pow_ui(const PrecReal& x, unsigned long k) {
  PrecReal r(x.precision_bits());
  mpfr_pow_ui(r.raw(), x.raw(), k, MPFR_RNDN);
  return r;
}

PrecReal inv_pow(unsigned long base, unsigned long e, unsigned precision_bits) {
  PrecReal r(precision_bits);
  mpfr_ui_pow_ui(r.raw(), base, e, MPFR_RNDN);
  mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
  return r;
}

PrecReal PrecReal::pow2(long e, unsigned precision_bits) {
  PrecReal r(precision_bits);
  mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

}  // namespace sechmoments
