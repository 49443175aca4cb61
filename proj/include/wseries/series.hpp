#pragma once

#include <stdexcept>
#include <vector>

#include "wseries/combinatorics.hpp"
#include "wseries/complexval.hpp"
#include "wseries/exact.hpp"

namespace wseries {

// The expansions implemented here all express W on part of its domain as
//
//   W(z) = ln z - ln(p + ln z) + u(sigma, tau),
//   sigma = 1/(p + ln z),  tau = (p + ln(p + ln z))/(p + ln z),
//
// with a free shift parameter p (p = 0 recovers the classical double-log
// form), plus a plain power series in ln x around x = 1. The u-series comes
// in three interchangeable shapes that must agree term for term — same
// coefficients in different clothing — which the tests exploit. Evaluators
// are templated over the scalar: double, PrecFloat, or a CVal over either.
enum class SeriesVariant {
  Comtet,            // triangular double sum in sigma, tau (cycle-number coefficients)
  ImprovedStirling,  // series in whole tau-orders, coefficients built in zeta = 1/(1+sigma)
  ImprovedEulerian,  // the same series written with second-order Eulerian numbers
  WrightLn,          // power series in ln x around x = 1
};

// Coefficient representations for the ln-x series.
enum class WrightMethod {
  Eulerian,        // closed form with second-order Eulerian numbers
  AssocStirling1,  // closed form with the d(m, k) triangle
  AssocStirling2,  // closed form with 2-associated Stirling subset numbers
  Recurrence,      // quadratic convolution recurrence; the numerically stable path
};

// Compensated accumulation (Kahan); works for every scalar the series use.
template <class C>
struct KahanAccumulator {
  C sum = C(0.0);
  C carry = C(0.0);
  void add(const C& x) {
    C y = x - carry;
    C t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// u(sigma, tau) truncated by outer total order n <= N, summed as whole
// orders: V_n collects every term with sigma^{n-m} tau^m of total order n and
// satisfies
//
//   V_1 = tau,
//   n V_n = -((n sigma - (n-1) tau) V_{n-1} + sigma * sum_{k=1}^{n-2} k V_k V_{n-1-k}),
//
// a consequence of the differential equation the series solves order by
// order. Unlike the raw double sum this form has no cancellation between
// rows, so it is the production evaluator at every precision. At sigma = 0
// it reduces exactly to V_n = tau^n / n.
template <class C>
C comtet_u(const C& sigma, const C& tau, int n_terms) {
  if (n_terms < 1) return C(0.0);
  std::vector<C> v(static_cast<size_t>(n_terms) + 1, C(0.0));
  v[1] = tau;
  KahanAccumulator<C> acc;
  acc.add(v[1]);
  for (int n = 2; n <= n_terms; ++n) {
    C conv = C(0.0);
    for (int k = 1; k <= n - 2; ++k)
      conv = conv + C(static_cast<double>(k)) * v[static_cast<size_t>(k)] *
                        v[static_cast<size_t>(n - 1 - k)];
    C lead = (C(static_cast<double>(n)) * sigma - C(static_cast<double>(n - 1)) * tau) *
             v[static_cast<size_t>(n - 1)];
    v[static_cast<size_t>(n)] = -(lead + sigma * conv) / C(static_cast<double>(n));
    acc.add(v[static_cast<size_t>(n)]);
  }
  return acc.sum;
}

// The same truncation as the raw triangular double sum
//
//   u = sum_{n=1}^{N} sum_{m=1}^{n} (-1)^{n-m} [n, n-m+1] / m! * sigma^{n-m} tau^m
//
// with [n, k] the Stirling cycle numbers. Rows beyond roughly n = 40 lose
// all double-precision accuracy to cancellation, so this path exists only as
// an independent cross-check of comtet_u at small orders.
double comtet_u_triangle(double sigma, double tau, int n_terms);

// u(sigma, tau) truncated after M whole tau-orders. Writing
// zeta = 1/(1+sigma), the row vector
//
//   G_1 = [zeta tau],
//   G_m[p] = (zeta tau / m) * (p G_{m-1}[p] + (p + m - 2) zeta G_{m-1}[p-1]),
//
// gives block_m = sum_p (-1)^{p+m-1} G_m[p] = c_m(sigma) tau^m. All entries
// of one row share the magnitude scale of the block, so the blocks are free
// of the cancellation that kills the closed coefficient forms in double.
// At sigma = 0 the function reduces to the exact partial sum
// sum_{m=1}^{M} tau^m / m, accumulated in ascending m with a running power
// (the form the reduction tests replicate bit for bit).
template <class C>
C improved_u(const C& sigma, const C& tau, int m_terms) {
  if (m_terms < 1) return C(0.0);
  if (sigma == C(0.0)) {
    C acc = C(0.0);
    C power = tau;
    for (int m = 1; m <= m_terms; ++m) {
      acc = acc + power / C(static_cast<double>(m));
      power = power * tau;
    }
    return acc;
  }
  C zeta = C(1.0) / (C(1.0) + sigma);
  std::vector<C> g(1, zeta * tau);
  KahanAccumulator<C> acc;
  acc.add(g[0]);
  for (int m = 2; m <= m_terms; ++m) {
    std::vector<C> next(static_cast<size_t>(m), C(0.0));
    C f = zeta * tau / C(static_cast<double>(m));
    for (int p = 0; p < m; ++p) {
      C t = C(0.0);
      if (p < m - 1) t = t + C(static_cast<double>(p)) * g[static_cast<size_t>(p)];
      if (p >= 1)
        t = t + C(static_cast<double>(p + m - 2)) * zeta * g[static_cast<size_t>(p - 1)];
      next[static_cast<size_t>(p)] = f * t;
    }
    C block = C(0.0);
    for (int p = 0; p < m; ++p) {
      if (((p + m - 1) & 1) == 0)
        block = block + next[static_cast<size_t>(p)];
      else
        block = block - next[static_cast<size_t>(p)];
    }
    acc.add(block);
    g = std::move(next);
  }
  return acc.sum;
}

// The same series written directly from its closed coefficient form,
//
//   u = tau/(1+sigma) + sum_{m=2}^{M} tau^m / (m! (1+sigma)^{2m-1})
//         * sum_{k=0}^{m-2} <<m-1, k>> (-1)^{m-k} sigma^{m-k-2},
//
// with <<n, k>> the second-order Eulerian numbers. Term by term equal to
// improved_u. The factorials and Eulerian numbers enter as doubles, so
// orders beyond roughly 120 overflow; improved_u is the production
// evaluator, this one demonstrates the closed form and cross-checks it.
template <class C>
C eulerian_u(const C& sigma, const C& tau, int m_terms) {
  if (m_terms < 1) return C(0.0);
  C one = C(1.0);
  C onep = one + sigma;
  KahanAccumulator<C> acc;
  acc.add(tau / onep);
  C tau_m = tau;
  double mfact = 1.0;
  C onep_pow = onep;
  for (int m = 2; m <= m_terms; ++m) {
    tau_m = tau_m * tau;
    mfact *= m;
    onep_pow = onep_pow * onep * onep;
    C inner = C(0.0);
    C spow = C(1.0);  // sigma^{m-k-2}, built from k = m-2 downward
    for (int k = m - 2; k >= 0; --k) {
      C term = C(to_double(eulerian2(m - 1, k))) * spow;
      if ((m - k) & 1)
        inner = inner - term;
      else
        inner = inner + term;
      spow = spow * sigma;
    }
    acc.add(tau_m * inner / (C(mfact) * onep_pow));
  }
  return acc.sum;
}

// Residual of the relation every u-series solves: 1 - e^{-u} + sigma u - tau
// is identically zero at the true u, and its partial-sum residual shrinking
// with the truncation is the series-independent convergence witness.
template <class C>
C fundamental_residual(const C& sigma, const C& tau, const C& u) {
  using std::exp;
  return C(1.0) - exp(-u) + sigma * u - tau;
}

// Exact coefficient c_m(sigma) of tau^m in the improved series, for rational
// sigma != -1:
//
//   c_1 = 1/(1+sigma),
//   c_m = (-1)^m sigma^{m-1} / (m! (1+sigma)^{2m-1})
//           * sum_{k=0}^{m-2} <<m-1, k>> (-1)^k sigma^{-(k+1)}   (m >= 2),
//
// with the sigma = 0 limit c_m = 1/m taken explicitly.
Rational coeff_cm_exact(const Rational& sigma, int m);

// The same coefficient generated from the 2-associated Stirling subset
// numbers in the variable zeta = 1/(1+sigma):
//
//   c_m = (1/m!) sum_{p=0}^{m-1} {p+m-1, p} (-1)^{p+m-1} zeta^{p+m}.
//
// Exact equality with coeff_cm_exact is the identity that makes eulerian_u
// and improved_u the same series.
Rational coeff_cm_zeta(const Rational& zeta, int m);

// Order-m block of the Eulerian form as a polynomial in zeta = 1/(1+sigma):
// coefficient vector (index = power of zeta) of
//
//   (1/m!) sum_{k=0}^{m-2} <<m-1, k>> (-1)^{m+k} zeta^{m+k+1} (1-zeta)^{m-k-2}
//
// for m >= 2, and [0, 1] for m = 1. Every block skips the quadratic power of
// zeta, which is what the zeta-form of the series makes visible.
std::vector<Rational> eulerian_zeta_block(int m);

// Coefficient a_n of W(x) = omega_0 + sum a_n (ln x)^n, parametrized by the
// expansion value w (= W at the expansion point; w = omega_0 for the series
// around x = 1) so the closed forms can be compared at exact rational w.
// Four representations:
//
//   Eulerian:        a_n = 1/(n! (1+w)^{2n-1}) sum_{k=0}^{n-1} <<n-1, k>> (-1)^k w^{k+1}
//   AssocStirling1:  a_n = (w/n!) sum_{k=0}^{n-1} (-1)^{n+k-1} d(n+k-1, k) / (1+w)^{n+k}
//   AssocStirling2:  a_n = (1/n!) sum_{k=0}^{n-1} {n+k-1, k} (-1)^{k+1} w^k / (1+w)^{n+k},
//                    plus 1 at n = 1 (the n = 1 sum alone gives -1/(1+w), the
//                    c_1 of the recurrence below; the shift restores a_1)
//   Recurrence:      c_1 = -1/(1+w),
//                    n (1+w) c_n = -((n-1) c_{n-1} + sum_{k=1}^{n-1} k c_k c_{n-k}),
//                    a_1 = 1 + c_1, a_n = c_n for n >= 2.
//
// The three closed forms cancel catastrophically in double beyond n ~ 40;
// the recurrence is the numerically stable path and the one the series
// evaluator uses.
double wright_series_a(int n, WrightMethod method, double w);
double wright_series_a(int n, WrightMethod method);  // at w = omega_constant()
Rational wright_series_a_exact(int n, WrightMethod method, const Rational& w);

// a_1..a_n_max by the recurrence, in one pass, at any scalar precision (the
// asymptotic-ratio tests need roughly 32 digits once n reaches 40, which is
// what the PrecFloat instantiation provides).
template <class R>
std::vector<R> wright_coeffs_recurrence_t(int n_max, const R& w) {
  std::vector<R> c(static_cast<size_t>(n_max) + 1, R(0.0));
  std::vector<R> a;
  if (n_max < 1) return a;
  a.assign(static_cast<size_t>(n_max), R(0.0));
  R onep = R(1.0) + w;
  c[1] = R(-1.0) / onep;
  a[0] = R(1.0) + c[1];
  for (int n = 2; n <= n_max; ++n) {
    KahanAccumulator<R> s;
    s.add(R(static_cast<double>(n - 1)) * c[static_cast<size_t>(n - 1)]);
    for (int k = 1; k <= n - 1; ++k)
      s.add(R(static_cast<double>(k)) * c[static_cast<size_t>(k)] * c[static_cast<size_t>(n - k)]);
    c[static_cast<size_t>(n)] = -s.sum / (R(static_cast<double>(n)) * onep);
    a[static_cast<size_t>(n - 1)] = c[static_cast<size_t>(n)];
  }
  return a;
}

// a_1..a_n_max by the recurrence at double w.
std::vector<double> wright_coeffs_recurrence(int n_max, double w);

// W(1): the root of w e^w = 1, computed once by the reference iteration.
double omega_constant();

// Partial sum omega_0 + sum_{n=1}^{N} a_n (ln x)^n for x > 0.
double wright_series_eval(double x, int n_terms);

// sigma, tau and the head term ln z - ln(p + ln z) of the transformation.
struct TransformedVars {
  Cplx sigma, tau, head;
};
struct TransformedVarsReal {
  double sigma, tau, head;
};
TransformedVars transformed_vars(const Cplx& z, const Cplx& p);
// Real scalar path, taken whenever z > 0, p is real and p + ln z > 0; keeps
// real inputs exactly real, and at p = 0 it is the branch that phi_alpha with
// alpha = 1 matches bit for bit.
TransformedVarsReal transformed_vars_real(double z, double p);

// W(z) through the shifted transformation, truncating the chosen u-series
// variant after `terms` orders. Throws std::domain_error at the singular
// point z = e^{-p} of the transformation and std::invalid_argument for
// WrightLn (not a u-series).
Cplx transformed_w(const Cplx& z, const Cplx& p, SeriesVariant variant, int terms);

// The one-parameter real family
//
//   phi_alpha(x) = ln x - alpha ln ln x + alpha u(sigma, tau),
//   sigma = alpha / ln x,  tau = alpha ln ln x / ln x,
//
// defined for x > 1, alpha > 0; alpha = 1 is the W-series value (identical,
// bit for bit, to transformed_w at p = 0 on the real path).
double phi_alpha(double x, double alpha, SeriesVariant variant, int terms);

// Closed-form starting approximations for the real branch -1 on [-1/e, 0).
enum class BranchApproxForm {
  Untransformed,  // w - Log w + (Log w)/w with w = ln z - 2 pi i = ln|z| - i pi
  Transformed,    // ln(-z) - ln(-ln(-z)) + ln(-ln(-z))/ln(-z); real, exact at -1/e
};
Cplx branch_m1_approx(double z, BranchApproxForm form);

// u(sigma, tau) recovered from the reference omega evaluation instead of a
// series: with s = (1 - tau)/sigma - ln sigma, the defining relation gives
// u = omega(s) - (1 - tau)/sigma for real sigma > 0. Lets tests check a
// truncated u-series against ground truth without going through z at all.
double u_reference(double sigma, double tau);

}  // namespace wseries
