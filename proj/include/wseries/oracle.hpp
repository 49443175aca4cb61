#pragma once

#include <cmath>
#include <stdexcept>

#include "wseries/complexval.hpp"
#include "wseries/precfloat.hpp"

namespace wseries {

// Reference evaluation of the Lambert W branches 0, -1, +1 and of the Wright
// omega function, independent of every series implemented elsewhere in this
// project: a Halley iteration on w*e^w - z = 0 (cubic convergence) started
// from a region-appropriate seed. Any agreement between series and oracle is
// therefore meaningful evidence rather than circularity.
//
// Seeding regions:
//   * near the branch point -1/e, the square-root expansion in
//     p = sqrt(2(e z + 1)), picking the sign/branch combination that belongs
//     to the requested sheet;
//   * near the origin on the principal branch, the Maclaurin start z(1 - z);
//   * everywhere else, the asymptotic start L - ln L with L the logarithm on
//     the requested sheet (ln z, ln z - 2 pi i, or ln z + 2 pi i).

namespace detail {

template <class R>
R ln_e_inv() {  // 1/e at working precision
  using std::exp;
  return R(1) / exp(R(1));
}

// Four-term branch-point expansion w = -1 + s*p - p^2/3 + s*11 p^3/72 with
// s = +1 on the principal sheet and s = -1 on the adjacent sheets.
template <class R>
CVal<R> branch_point_series(const CVal<R>& p, int sign) {
  R s(sign);
  CVal<R> p2 = p * p;
  CVal<R> p3 = p2 * p;
  return CVal<R>(R(-1), R(0)) + s * p - p2 / R(3) + (s * R(11) / R(72)) * p3;
}

template <class R>
CVal<R> halley_w(CVal<R> w, const CVal<R>& z, const R& tol) {
  using std::exp;
  for (int it = 0; it < 60; ++it) {
    CVal<R> ew = exp(w);
    CVal<R> f = w * ew - z;
    if (abs(f) <= tol) return w;
    CVal<R> df = ew * (w + R(1));
    CVal<R> denom = df - f * (w + R(2)) / (R(2) * (w + R(1)));
    w = w - f / denom;
  }
  throw std::runtime_error("lambert_w: Halley iteration failed to converge");
}

template <class R>
R halley_w_real(R w, const R& z, const R& tol) {
  using std::exp;
  for (int it = 0; it < 60; ++it) {
    R ew = exp(w);
    R f = w * ew - z;
    if (abs_value(f) <= tol) return w;
    R df = ew * (w + R(1));
    R denom = df - f * (w + R(2)) / (R(2) * (w + R(1)));
    w = w - f / denom;
  }
  throw std::runtime_error("lambert_w: Halley iteration failed to converge");
}

template <class R>
R residual_tol(const R& zmag) {
  R four(4);
  R one(1);
  R scale = zmag > one ? zmag : one;
  return four * FloatTraits<R>::epsilon() * scale;
}

}  // namespace detail

// Real-argument evaluation on the real branch segments: branch 0 on
// [-1/e, inf), branch -1 on [-1/e, 0).
template <class R>
R lambert_w_real(int k, const R& z) {
  using std::exp;
  using std::log;
  using std::sqrt;

  const R einv = detail::ln_e_inv<R>();
  const R tol = detail::residual_tol(abs_value(z));

  if (k == 0) {
    if (z < -einv - R(64) * FloatTraits<R>::epsilon())
      throw std::domain_error("lambert_w: branch 0 needs z >= -1/e on the real line");
    if (z == R(0)) return R(0);
    R disc = R(2) * (exp(R(1)) * z + R(1));
    if (disc < R(0)) disc = R(0);  // clamp the tolerated sliver below -1/e
    if (abs_value(exp(R(1)) * z + R(1)) < R(1e-12)) {
      R p = sqrt(disc);
      return R(-1) + p - p * p / R(3) + R(11) / R(72) * p * p * p;
    }
    R w;
    if (abs_value(exp(R(1)) * z + R(1)) < R(0.25)) {
      R p = sqrt(disc);
      w = R(-1) + p - p * p / R(3) + R(11) / R(72) * p * p * p;
    } else if (abs_value(z) < R(0.4)) {
      w = z * (R(1) - z);
    } else if (z > R(3)) {
      R l1 = log(z);
      R l2 = log(l1);
      w = l1 - l2 + l2 / l1;
    } else {
      w = log(R(1) + z);
    }
    return detail::halley_w_real(w, z, tol);
  }

  if (k == -1) {
    if (z >= R(0) || z < -einv - R(64) * FloatTraits<R>::epsilon())
      throw std::domain_error("lambert_w: branch -1 is real only for -1/e <= z < 0");
    R d = exp(R(1)) * z + R(1);
    if (d < R(0)) d = R(0);
    if (abs_value(d) < R(1e-12)) {
      R p = sqrt(R(2) * d);
      return R(-1) - p - p * p / R(3) - R(11) / R(72) * p * p * p;
    }
    R w;
    if (d < R(0.25)) {
      R p = sqrt(R(2) * d);
      w = R(-1) - p - p * p / R(3) - R(11) / R(72) * p * p * p;
    } else {
      R l1 = log(-z);
      R l2 = log(-l1);
      w = l1 - l2 + l2 / l1;
    }
    return detail::halley_w_real(w, z, tol);
  }

  throw std::domain_error("lambert_w: no real segment on this branch");
}

inline double lambert_w(int k, double z) { return lambert_w_real<double>(k, z); }

template <class R>
CVal<R> lambert_w(int k, const CVal<R>& z) {
  using std::exp;
  using std::sqrt;

  if (k != 0 && k != -1 && k != 1)
    throw std::domain_error("lambert_w: supported branches are 0, -1, +1");

  const R pi = FloatTraits<R>::pi();
  const R tol = detail::residual_tol(abs(z));
  const CVal<R> d = exp(R(1)) * z + R(1);  // distance measure to the branch point
  const bool near_bp = abs(d) < R(0.25);
  const bool upper = !(z.im < R(0));  // im >= 0, counting +0 as upper

  // Real-axis inputs that lie on a real branch segment go through the real
  // path so the imaginary part comes out exactly zero.
  if (z.im == R(0)) {
    if (k == 0 && !(z.re < -detail::ln_e_inv<R>()))
      return CVal<R>(lambert_w_real<R>(0, z.re), R(0));
    if (k == -1 && z.re < R(0) && !(z.re < -detail::ln_e_inv<R>()))
      return CVal<R>(lambert_w_real<R>(-1, z.re), R(0));
    if (z.re == R(0))
      throw std::domain_error("lambert_w: z = 0 is a logarithmic singularity off branch 0");
  }

  CVal<R> w;
  if (k == 0) {
    if (abs(d) < R(1e-12)) return detail::branch_point_series(sqrt(R(2) * d), +1);
    if (near_bp) {
      w = detail::branch_point_series(sqrt(R(2) * d), +1);
    } else if (abs(z) < R(0.4)) {
      w = z * (R(1) - z);
    } else if (abs(z) > R(3)) {
      CVal<R> l = log(z);
      w = l - log(l);
    } else if (abs(z + R(1)) >= R(0.4)) {
      w = log(z + R(1));
    } else {
      // small ball around z = -1: W0 sits near 0.32 + 1.34i (conjugated in
      // the lower half-plane)
      w = CVal<R>(R(0.3), upper ? R(1.3) : R(-1.3));
    }
  } else if (k == -1) {
    // The square-root sheet joins branch -1 only from the upper half-plane;
    // from below, branch -1 is far from the branch point and the shifted
    // logarithm is the right start.
    if (upper && abs(d) < R(1e-12)) return detail::branch_point_series(sqrt(R(2) * d), -1);
    if (upper && near_bp) {
      w = detail::branch_point_series(sqrt(R(2) * d), -1);
    } else {
      CVal<R> l = log(z) - CVal<R>(R(0), R(2) * pi);
      w = l - log(l);
    }
  } else {  // k == +1, mirror of branch -1
    if (!upper && abs(d) < R(1e-12)) return detail::branch_point_series(sqrt(R(2) * d), -1);
    if (!upper && near_bp) {
      w = detail::branch_point_series(sqrt(R(2) * d), -1);
    } else {
      CVal<R> l = log(z) + CVal<R>(R(0), R(2) * pi);
      w = l - log(l);
    }
  }
  return detail::halley_w(w, z, tol);
}

// Wright omega: the solution of omega + ln omega = z that is positive for
// real z. Also exposed for complex z off the singular rays Im z = +-pi,
// Re z <= -1 (where the function jumps).
template <class R>
R wright_omega_real(const R& t) {
  using std::exp;
  using std::log;
  using std::log1p;

  R w;
  if (t > R(2)) {
    R l = log(t);
    w = t - l + l / t;
  } else if (t < R(-40)) {
    return exp(t);  // e^t is already below the attainable residual there
  } else {
    w = log1p(exp(t));  // smooth interpolant, good enough for Halley
  }
  const R tol = R(4) * FloatTraits<R>::epsilon() * (abs_value(t) > R(1) ? abs_value(t) : R(1));
  for (int it = 0; it < 60; ++it) {
    R f = w + log(w) - t;
    if (abs_value(f) <= tol) return w;
    R fp = R(1) + R(1) / w;
    R fpp = R(-1) / (w * w);
    w = w - R(2) * f * fp / (R(2) * fp * fp - f * fpp);
  }
  throw std::runtime_error("wright_omega: iteration failed to converge");
}

inline int unwinding_number(const Cplx& z) {
  return static_cast<int>(std::ceil((z.im - 3.141592653589793) / (2 * 3.141592653589793)));
}

inline Cplx wright_omega(const Cplx& z) {
  const double pi = 3.141592653589793;
  if ((z.im == pi || z.im == -pi) && z.re <= -1.0)
    throw std::domain_error("wright_omega: z lies on a singular ray xi +- i pi, xi <= -1");
  if (z.im == 0.0) return {wright_omega_real<double>(z.re), 0.0};

  if (z.re > 300.0) {
    // e^z would overflow; iterate on omega + Log omega - z directly. Only the
    // principal sheet is needed at such magnitudes.
    if (unwinding_number(z) != 0)
      throw std::domain_error("wright_omega: unsupported region (huge modulus off the principal sheet)");
    Cplx w = z - log(z);
    for (int it = 0; it < 60; ++it) {
      Cplx f = w + log(w) - z;
      if (abs(f) <= 1e-14 * std::max(1.0, abs(z))) return w;
      Cplx fp = 1.0 + Cplx(1.0) / w;
      w = w - f / fp;
    }
    throw std::runtime_error("wright_omega: iteration failed to converge");
  }

  int k = unwinding_number(z);
  if (k < -1 || k > 1)
    throw std::domain_error("wright_omega: |Im z| > 3 pi needs branches beyond +-1");
  return lambert_w(k, exp(CVal<double>(z)));
}

// Self-test quantity |e^{-psi} - psi - t| with psi(t) = W(e^t) - t; exactly
// zero in exact arithmetic for every real t.
inline double psi_residual(double t) {
  double psi = wright_omega_real<double>(t) - t;
  return std::fabs(std::exp(-psi) - psi - t);
}

}  // namespace wseries
