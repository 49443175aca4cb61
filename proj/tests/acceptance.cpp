// Acceptance gate. Each criterion prints exactly one [PASS]/[FAIL] line with
// the measured quantity and the pinned tolerance; the process exits with the
// number of failed criteria. Two sub-checks are known to miss their stated
// bounds (criterion 3 at x = 3, criterion 4's closed-form threshold gap);
// they are reported red rather than loosened, with the measured values shown.
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "wseries/asymptotics.hpp"
#include "wseries/combinatorics.hpp"
#include "wseries/convergence.hpp"
#include "wseries/oracle.hpp"
#include "wseries/precfloat.hpp"
#include "wseries/series.hpp"

using namespace wseries;

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

void report(int id, const char* desc, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, desc, detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------------------

void criterion1_constants() {
  struct Row {
    const char* name;
    double got, want, tol;
  };
  const auto d1 = alpha_domain(1.0);
  const auto xm = x_of_alpha_max();
  const Row rows[] = {
      {"sigma_1", d1.sigma_alpha.value, 224.790951, 1e-5},
      {"x_1", d1.x_alpha.value, 1.004458, 1e-6},
      {"sigma_c", sigma_c_threshold().value, 1.059945, 1e-5},
      {"alpha_c", alpha_c_threshold().value, 41.349171, 1e-4},
      {"sigma_1_approx", sigma1_approx(), 223.8126969, 1e-6},
      {"alpha_star", xm.first, 0.155186, 1e-5},
      {"x_star", xm.second, 1.044161, 1e-5},
  };
  bool ok = true;
  double worst = 0.0;
  const char* worst_name = "";
  for (const Row& r : rows) {
    const double err = std::fabs(r.got - r.want);
    if (err / r.tol > worst) {
      worst = err / r.tol;
      worst_name = r.name;
    }
    ok = ok && err <= r.tol;
  }
  report(1, "critical constants at their published precision", ok,
         std::string("worst margin ") + fmt(worst) + " of tolerance at " + worst_name);
}

void criterion2_table() {
  struct Row {
    double z, oracle, transf, untr_re, untr_im;
  };
  const Row rows[] = {
      {-0.01, -6.4728, -6.4640, -6.3210, -0.04815},
      {-0.1, -3.5772, -3.4988, -3.4124, -0.3223},
      {-0.2, -2.5426, -2.3810, -2.5182, -0.5153},
      {-0.3, -1.7813, -1.5438, -2.0087, -0.6621},
      {-std::exp(-1.0), -1.0, -1.0, -1.7597, -0.7450},
  };
  bool ok = true;
  double worst = 0.0;
  for (const Row& r : rows) {
    // One digit in the last printed place: 1.01e-4 for the 4-decimal
    // entries, 1.01e-5 for the one 5-decimal entry.
    const double tol4 = 1.01e-4;
    const double w = lambert_w(-1, r.z);  // oracle column, recomputed
    const Cplx t = branch_m1_approx(r.z, BranchApproxForm::Transformed);
    const Cplx u = branch_m1_approx(r.z, BranchApproxForm::Untransformed);
    const double errs[] = {std::fabs(w - r.oracle) / tol4, std::fabs(t.re - r.transf) / tol4,
                           std::fabs(u.re - r.untr_re) / tol4,
                           std::fabs(u.im - r.untr_im) / (r.z == -0.01 ? 1.01e-5 : tol4)};
    for (double e : errs) {
      worst = std::max(worst, e);
      ok = ok && e <= 1.0;
    }
  }
  report(2, "all 15 starting-approximation table entries at printed precision", ok,
         "worst margin " + fmt(worst) + " of tolerance");
}

void criterion3_domains() {
  bool ok = true;
  std::string detail;

  // (a) Inside the domain at alpha = 1 the N = 40 truncation reaches 1e-8.
  for (double x : {3.0, 5.0, 10.0}) {
    const double err = std::fabs(phi_alpha(x, 1.0, SeriesVariant::Comtet, 40) -
                                 lambert_w_real(0, x));
    const bool pass = err <= 1e-8;
    ok = ok && pass;
    if (!pass) detail += "x=" + fmt(x) + " err=" + fmt(err) + " > 1e-8; ";
  }

  // (b) Inside the divergence interval deeper truncations never improve.
  for (double x : {1.5, 2.0, 2.5}) {
    double prev = -1.0;
    for (int n : {20, 40, 60}) {
      const double err = std::fabs(phi_alpha(x, 1.0, SeriesVariant::Comtet, n) -
                                   lambert_w_real(0, x));
      if (err < prev) {
        ok = false;
        detail += "divergence tail shrank at x=" + fmt(x) + "; ";
      }
      prev = err;
    }
  }

  // (c) The improved arrangement reaches 1e-6 by M = 60 just above x_1.
  for (double x : {1.1, 1.5, 2.0}) {
    const double err = std::fabs(phi_alpha(x, 1.0, SeriesVariant::ImprovedStirling, 60) -
                                 lambert_w_real(0, x));
    if (err > 1e-6) {
      ok = false;
      detail += "improved x=" + fmt(x) + " err=" + fmt(err) + "; ";
    }
  }

  // (d) The ln-x series reaches 1e-8 inside its radius (t = 3, N = 250)...
  const double e3 = std::exp(3.0);
  const double werr = std::fabs(wright_series_eval(e3, 250) - lambert_w_real(0, e3));
  if (werr > 1e-8) {
    ok = false;
    detail += "ln-x t=3 err=" + fmt(werr) + "; ";
  }

  // (e) ...and fails to improve outside it (t = 3.5).
  const double x35 = std::exp(3.5), w35 = lambert_w_real(0, x35);
  const double n40 = std::fabs(wright_series_eval(x35, 40) - w35);
  const double n80 = std::fabs(wright_series_eval(x35, 80) - w35);
  if (!(n80 > n40)) {
    ok = false;
    detail += "ln-x t=3.5 improved with N; ";
  }

  if (detail.empty()) detail = "all in/out-of-domain truncation checks held";
  report(3, "series behave per their convergence domains", ok, detail);
}

void criterion4_transformed() {
  bool ok = true;
  std::string detail;

  // (a) Threshold curve values at p = -1, 0, 1, each sitting on the
  // convergence boundary of its own series.
  const double want[3] = {std::exp(3.0), std::exp(1.0), std::exp(kPi / 2 - 1.0)};
  const double ps[3] = {-1.0, 0.0, 1.0};
  for (int i = 0; i < 3; ++i) {
    const auto t = transformed_comtet_threshold(ps[i]);
    if (std::fabs(t.value - want[i]) > 1e-12 * want[i] || std::fabs(t.residual) > 1e-12) {
      ok = false;
      detail += "z_p(" + fmt(ps[i]) + ") off; ";
    }
  }

  // (b) Shifting by ln(alpha) and assembling through x = (alpha z)^alpha are
  // the same computation.
  double worst_sim = 0.0;
  for (double a : {0.5, 2.0})
    for (auto v : {SeriesVariant::Comtet, SeriesVariant::ImprovedStirling,
                   SeriesVariant::ImprovedEulerian}) {
      const Cplx t = transformed_w(Cplx(10.0), Cplx(std::log(a)), v, 20);
      const double assembled = phi_alpha(std::pow(a * 10.0, a), a, v, 20) / a;
      worst_sim = std::max(worst_sim, abs(t - Cplx(assembled)));
    }
  if (worst_sim > 1e-12) {
    ok = false;
    detail += "similarity gap " + fmt(worst_sim) + "; ";
  }

  // (c) The closed-form threshold tracks the exact one within 5% on [-1, 1).
  double worst_gap = 0.0, worst_p = 0.0;
  for (int i = 0; i <= 39; ++i) {
    const double p = -1.0 + 0.05 * i;
    const double ze = transformed_improved_threshold(p, ThresholdMode::Exact).value;
    const double za = transformed_improved_threshold(p, ThresholdMode::Approx).value;
    const double gap = std::fabs(za - ze) / ze;
    if (gap > worst_gap) {
      worst_gap = gap;
      worst_p = p;
    }
  }
  if (worst_gap >= 0.05) {
    ok = false;
    detail += "threshold gap " + fmt(100 * worst_gap) + "% at p=" + fmt(worst_p) +
              " vs 5% bound; ";
  }

  if (detail.empty())
    detail = "thresholds, similarity " + fmt(worst_sim) + ", gap " + fmt(100 * worst_gap) + "%";
  report(4, "p-shifted transformation suite", ok, detail);
}

void criterion5_identities() {
  bool ok = true;
  std::string detail;
  std::string diag;
  const Tables& t = default_tables();

  const Rational lams[5] = {make_rational(1, 2), make_rational(-1, 2), make_rational(2, 1),
                            make_rational(5, 3), make_rational(-3, 1)};
  for (const Rational& lam : lams)
    for (long n = 1; n <= 15 && ok; ++n)
      if (!check_carlitz_riordan(n, lam, t, &diag)) {
        ok = false;
        detail += "carlitz-riordan: " + diag + "; ";
      }
  for (long n = 1; n <= 12 && ok; ++n)
    for (long q = 0; q <= n && ok; ++q)
      if (!check_binomial_pair(n, q, t, &diag)) {
        ok = false;
        detail += "binomial pair: " + diag + "; ";
      }
  for (long m = 1; m <= 20 && ok; ++m)
    if (!check_alternating_sum_2assoc(m, t, &diag)) {
      ok = false;
      detail += "alternating sum: " + diag + "; ";
    }
  const Rational ws[3] = {make_rational(2, 3), make_rational(-3, 5), make_rational(7, 2)};
  for (const Rational& w : ws)
    for (long n = 1; n <= 15 && ok; ++n)
      if (!check_euler_d_2assoc(n, w, t, &diag)) {
        ok = false;
        detail += "euler-d-2assoc at w=" + w.get_str() + ": " + diag + "; ";
      }
  for (long n = 1; n <= 15 && ok; ++n)
    if (!check_euler_d_2assoc_numeric(n, omega_constant(), 1e-12)) {
      ok = false;
      detail += "euler-d-2assoc numeric at n=" + std::to_string(n) + "; ";
    }

  if (detail.empty()) detail = "all families exact (and numeric at omega_0 to 1e-12)";
  report(5, "combinatorial identity suites", ok, detail);
}

void criterion6_representations() {
  bool ok = true;
  std::string detail;

  double worst = 0.0;
  for (int n = 1; n <= 25; ++n) {
    const double r = wright_series_a(n, WrightMethod::Recurrence);
    for (auto m : {WrightMethod::Eulerian, WrightMethod::AssocStirling1,
                   WrightMethod::AssocStirling2})
      worst = std::max(worst, std::fabs(wright_series_a(n, m) - r));
  }
  if (worst > 1e-12) {
    ok = false;
    detail += "a_n methods spread " + fmt(worst) + "; ";
  }

  for (const Rational& s :
       {make_rational(1, 2), make_rational(-1, 3), make_rational(2, 1), make_rational(-3, 1)})
    for (int m = 1; m <= 30; ++m) {
      const Rational zeta = Rational(1) / (Rational(1) + s);
      if (!(coeff_cm_exact(s, m) == coeff_cm_zeta(zeta, m))) {
        ok = false;
        detail += "c_m forms differ at sigma=" + s.get_str() + " m=" + std::to_string(m) + "; ";
      }
    }

  if (detail.empty()) detail = "a_n spread " + fmt(worst) + " <= 1e-12; c_m forms identical";
  report(6, "coefficient representations agree", ok, detail);
}

void criterion7_asymptotics() {
  bool ok = true;
  std::string detail;

  // tau-coefficients at sigma = 1, oscillation bounded away from its zeros.
  const double th = theta1(1.0);
  double dev_cm = 0.0;
  for (int m = 40; m <= 80; ++m) {
    if (std::fabs(std::sin((m - 0.5) * th)) < 0.3) continue;
    const double ex = PrecFloat(coeff_cm_exact(Rational(1), m)).to_double();
    dev_cm = std::max(dev_cm, std::fabs(cm_asymptotic(1.0, m) / ex - 1.0));
  }
  if (dev_cm > 0.15) {
    ok = false;
    detail += "c_m(1) dev " + fmt(dev_cm) + "; ";
  }

  // ln-x coefficients in the window doubles still resolve.
  const PrecFloat om = wright_omega_real(PrecFloat(0));
  const auto an = wright_coeffs_recurrence_t<PrecFloat>(50, om);
  const double phase = std::atan(kPi);
  double dev_an = 0.0;
  for (int n = 30; n <= 50; ++n) {
    if (std::fabs(std::sin((2 * n - 1) * 0.5 * phase)) < 0.3) continue;
    dev_an = std::max(dev_an, std::fabs(an_asymptotic(n) / an[n - 1].to_double() - 1.0));
  }
  if (dev_an > 0.15) {
    ok = false;
    detail += "a_n dev " + fmt(dev_an) + "; ";
  }

  // Single-singularity case: sigma = -2 at m = 40.
  const double ex40 = PrecFloat(coeff_cm_exact(Rational(-2), 40)).to_double();
  const double dev_neg = std::fabs(cm_asymptotic(-2.0, 40) / ex40 - 1.0);
  if (dev_neg > 0.10) {
    ok = false;
    detail += "c_40(-2) dev " + fmt(dev_neg) + "; ";
  }

  // Row-sum estimate of the 2-associated subset numbers at m = 40.
  const auto& t = default_tables();
  PrecFloat sum(0);
  for (long p = 1; p <= 39; ++p) sum += PrecFloat(t.assoc2.value(p + 39, p));
  const double dev_sum = std::fabs((sum / PrecFloat(assoc_sum_asymptotic(40))).to_double() - 1.0);
  if (dev_sum > 0.10) {
    ok = false;
    detail += "row-sum dev " + fmt(dev_sum) + "; ";
  }

  if (detail.empty())
    detail = "devs: c_m(1) " + fmt(dev_cm) + ", a_n " + fmt(dev_an) + ", c_40(-2) " +
             fmt(dev_neg) + ", row-sum " + fmt(dev_sum);
  report(7, "coefficient estimates within stated margins", ok, detail);
}

void criterion8_boundaries() {
  bool ok = true;
  std::string detail;

  const auto cb = comtet_complex_boundary(101);
  const auto ib = improved_complex_boundary(80);
  for (const auto* curve : {&cb, &ib}) {
    double max_res = 0.0, max_conj = 0.0;
    const auto& s = curve->samples;
    for (size_t i = 0; i < s.size(); ++i) {
      max_res = std::max(max_res, std::fabs(s[i].residual));
      const auto& m = s[s.size() - 1 - i];
      max_conj = std::max({max_conj, std::fabs(s[i].re - m.re), std::fabs(s[i].im + m.im)});
    }
    if (max_res > 1e-10) {
      ok = false;
      detail += curve->source + " residual " + fmt(max_res) + "; ";
    }
    if (max_conj > 1e-15) {
      ok = false;
      detail += curve->source + " not conjugate-symmetric; ";
    }
  }

  const double lim_c = comtet_boundary_radius(1e-8);
  const double lim_i = improved_boundary_radius(1e-8);
  const double x1 = alpha_domain(1.0).x_alpha.value;
  if (std::fabs(lim_c - std::exp(1.0)) > 1e-4) {
    ok = false;
    detail += "real-axis limit " + fmt(lim_c) + " != e; ";
  }
  if (std::fabs(lim_i - x1) > 1e-4) {
    ok = false;
    detail += "real-axis limit " + fmt(lim_i) + " != x_1; ";
  }

  if (detail.empty())
    detail = "residuals <= 1e-10, conjugate-symmetric, limits e and x_1 to 1e-4";
  report(8, "complex boundary curves satisfy their defining equations", ok, detail);
}

}  // namespace

int main() {
  criterion1_constants();
  criterion2_table();
  criterion3_domains();
  criterion4_transformed();
  criterion5_identities();
  criterion6_representations();
  criterion7_asymptotics();
  criterion8_boundaries();
  if (g_failures)
    std::printf("%d of 8 criteria failed\n", g_failures);
  else
    std::printf("all 8 criteria passed\n");
  return g_failures;
}
