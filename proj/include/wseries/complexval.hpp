#pragma once

#include <cmath>

#include "wseries/precfloat.hpp"

namespace wseries {

// Complex value over a configurable real scalar. std::complex is only
// specified for the built-in floating types, so the elevated-precision path
// needs its own small complex type; the double path uses the same code.
template <class R>
struct CVal {
  R re{};
  R im{};

  CVal() = default;
  CVal(R r) : re(std::move(r)) {}  // NOLINT: implicit real -> complex
  CVal(R r, R i) : re(std::move(r)), im(std::move(i)) {}
};

using Cplx = CVal<double>;

template <class R>
CVal<R> operator+(const CVal<R>& a, const CVal<R>& b) {
  return {a.re + b.re, a.im + b.im};
}
template <class R>
CVal<R> operator-(const CVal<R>& a, const CVal<R>& b) {
  return {a.re - b.re, a.im - b.im};
}
template <class R>
CVal<R> operator-(const CVal<R>& a) {
  return {-a.re, -a.im};
}
template <class R>
CVal<R> operator*(const CVal<R>& a, const CVal<R>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class R>
CVal<R> operator/(const CVal<R>& a, const CVal<R>& b) {
  R d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

template <class R>
CVal<R> operator*(const CVal<R>& a, const R& s) {
  return {a.re * s, a.im * s};
}
template <class R>
CVal<R> operator*(const R& s, const CVal<R>& a) {
  return {s * a.re, s * a.im};
}
template <class R>
CVal<R> operator/(const CVal<R>& a, const R& s) {
  return {a.re / s, a.im / s};
}
template <class R>
CVal<R> operator+(const CVal<R>& a, const R& s) {
  return {a.re + s, a.im};
}
template <class R>
CVal<R> operator+(const R& s, const CVal<R>& a) {
  return {s + a.re, a.im};
}
template <class R>
CVal<R> operator-(const CVal<R>& a, const R& s) {
  return {a.re - s, a.im};
}
template <class R>
CVal<R> operator-(const R& s, const CVal<R>& a) {
  return {s - a.re, -a.im};
}

template <class R>
bool operator==(const CVal<R>& a, const CVal<R>& b) {
  return a.re == b.re && a.im == b.im;
}
template <class R>
bool operator!=(const CVal<R>& a, const CVal<R>& b) {
  return !(a == b);
}

template <class R>
CVal<R> conj(const CVal<R>& a) {
  return {a.re, -a.im};
}

template <class R>
R abs(const CVal<R>& a) {
  using std::hypot;
  return hypot(a.re, a.im);
}

template <class R>
R norm(const CVal<R>& a) {
  return a.re * a.re + a.im * a.im;
}

template <class R>
R arg(const CVal<R>& a) {
  using std::atan2;
  return atan2(a.im, a.re);
}

template <class R>
CVal<R> exp(const CVal<R>& a) {
  using std::cos;
  using std::exp;
  using std::sin;
  R e = exp(a.re);
  return {e * cos(a.im), e * sin(a.im)};
}

// Principal logarithm: imaginary part in (-pi, pi].
template <class R>
CVal<R> log(const CVal<R>& a) {
  using std::log;
  return {log(abs(a)), arg(a)};
}

template <class R>
CVal<R> sqrt(const CVal<R>& a) {
  using std::sqrt;
  R r = abs(a);
  if (r == R(0)) return {R(0), R(0)};
  if (a.re >= R(0)) {
    R t = sqrt((r + a.re) / R(2));
    return {t, a.im / (R(2) * t)};
  }
  R t = sqrt((r - a.re) / R(2));
  if (a.im < R(0)) return {-a.im / (R(2) * t), -t};
  return {a.im / (R(2) * t), t};
}

template <class R>
CVal<R> pow_int(CVal<R> base, long e) {
  CVal<R> r{R(1), R(0)};
  bool inv = e < 0;
  if (inv) e = -e;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  if (inv) return CVal<R>{R(1), R(0)} / r;
  return r;
}

// Uniform helpers so scalar-generic code can treat R and CVal<R> alike.
inline double real_part(double x) { return x; }
inline const PrecFloat& real_part(const PrecFloat& x) { return x; }
template <class R>
const R& real_part(const CVal<R>& z) {
  return z.re;
}

inline double abs_value(double x) { return std::fabs(x); }
inline PrecFloat abs_value(const PrecFloat& x) { return abs(x); }
template <class R>
R abs_value(const CVal<R>& z) {
  return abs(z);
}

}  // namespace wseries
