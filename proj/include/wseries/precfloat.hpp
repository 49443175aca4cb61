#pragma once

#include <mpfr.h>

#include <cstdlib>
#include <string>
#include <utility>

#include "wseries/exact.hpp"

namespace wseries {

// Elevated-precision real number backed by MPFR. The default working
// precision is 106 bits (roughly 32 decimal digits), which is what the
// coefficient recurrences need for the deep asymptotic-ratio comparisons;
// it can be overridden globally through W_SERIES_PRECISION_BITS or
// programmatically via set_default_bits. Each value snapshots the default
// precision at construction time.
class PrecFloat {
 public:
  static mpfr_prec_t default_bits() { return default_bits_ref(); }

  static void set_default_bits(mpfr_prec_t bits) {
    if (bits < 24) bits = 24;
    default_bits_ref() = bits;
  }

  PrecFloat() { init_(); }
  PrecFloat(double d) {  // NOLINT: implicit by design, mirrors double literals
    init_();
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  PrecFloat(int i) {  // NOLINT
    init_();
    mpfr_set_si(v_, i, MPFR_RNDN);
  }
  PrecFloat(long i) {  // NOLINT
    init_();
    mpfr_set_si(v_, i, MPFR_RNDN);
  }
  explicit PrecFloat(const char* s) {
    init_();
    mpfr_set_str(v_, s, 10, MPFR_RNDN);
  }
  explicit PrecFloat(const ExactInt& z) {
    init_();
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  explicit PrecFloat(const Rational& q) {
    init_();
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }

  PrecFloat(const PrecFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  PrecFloat(PrecFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  PrecFloat& operator=(const PrecFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  PrecFloat& operator=(PrecFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~PrecFloat() { mpfr_clear(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  explicit operator double() const { return to_double(); }

  std::string to_string(int digits = 32) const {
    char buf[256];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v_);
    return std::string(buf);
  }

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }

  PrecFloat& operator+=(const PrecFloat& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  PrecFloat& operator-=(const PrecFloat& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  PrecFloat& operator*=(const PrecFloat& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  PrecFloat& operator/=(const PrecFloat& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  friend PrecFloat operator+(PrecFloat a, const PrecFloat& b) { return a += b; }
  friend PrecFloat operator-(PrecFloat a, const PrecFloat& b) { return a -= b; }
  friend PrecFloat operator*(PrecFloat a, const PrecFloat& b) { return a *= b; }
  friend PrecFloat operator/(PrecFloat a, const PrecFloat& b) { return a /= b; }
  friend PrecFloat operator-(PrecFloat a) {
    mpfr_neg(a.v_, a.v_, MPFR_RNDN);
    return a;
  }

  friend bool operator<(const PrecFloat& a, const PrecFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const PrecFloat& a, const PrecFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const PrecFloat& a, const PrecFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const PrecFloat& a, const PrecFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const PrecFloat& a, const PrecFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const PrecFloat& a, const PrecFloat& b) { return !(a == b); }

#define WSERIES_PRECFLOAT_UNARY(name, fn)            \
  friend PrecFloat name(const PrecFloat& a) {        \
    PrecFloat r;                                     \
    fn(r.v_, a.v_, MPFR_RNDN);                       \
    return r;                                        \
  }
  WSERIES_PRECFLOAT_UNARY(abs, mpfr_abs)
  WSERIES_PRECFLOAT_UNARY(sqrt, mpfr_sqrt)
  WSERIES_PRECFLOAT_UNARY(exp, mpfr_exp)
  WSERIES_PRECFLOAT_UNARY(log, mpfr_log)
  WSERIES_PRECFLOAT_UNARY(sin, mpfr_sin)
  WSERIES_PRECFLOAT_UNARY(cos, mpfr_cos)
  WSERIES_PRECFLOAT_UNARY(expm1, mpfr_expm1)
  WSERIES_PRECFLOAT_UNARY(log1p, mpfr_log1p)
#undef WSERIES_PRECFLOAT_UNARY

  friend PrecFloat atan2(const PrecFloat& y, const PrecFloat& x) {
    PrecFloat r;
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
  }
  friend PrecFloat hypot(const PrecFloat& a, const PrecFloat& b) {
    PrecFloat r;
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend PrecFloat pow(const PrecFloat& a, long e) {
    PrecFloat r;
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  friend PrecFloat pow(const PrecFloat& a, const PrecFloat& b) {
    PrecFloat r;
    mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend PrecFloat copysign(const PrecFloat& a, const PrecFloat& b) {
    PrecFloat r;
    mpfr_copysign(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  static PrecFloat pi() {
    PrecFloat r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  // One unit in the last place of 1.0 at the current working precision.
  static PrecFloat epsilon() {
    PrecFloat r(1);
    mpfr_mul_2si(r.v_, r.v_, 1 - static_cast<long>(default_bits()), MPFR_RNDN);
    return r;
  }

 private:
  static mpfr_prec_t& default_bits_ref() {
    static mpfr_prec_t bits = [] {
      if (const char* env = std::getenv("W_SERIES_PRECISION_BITS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 24) return static_cast<mpfr_prec_t>(v);
      }
      return static_cast<mpfr_prec_t>(106);
    }();
    return bits;
  }

  void init_() { mpfr_init2(v_, default_bits()); }

  mpfr_t v_;
};

// Uniform access to the machine epsilon of the scalar type used by the
// templated evaluators.
template <class R>
struct FloatTraits;

template <>
struct FloatTraits<double> {
  static double epsilon() { return 2.220446049250313e-16; }
  static double pi() { return 3.141592653589793; }
};

template <>
struct FloatTraits<PrecFloat> {
  static PrecFloat epsilon() { return PrecFloat::epsilon(); }
  static PrecFloat pi() { return PrecFloat::pi(); }
};

}  // namespace wseries
