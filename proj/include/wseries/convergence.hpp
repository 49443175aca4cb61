#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wseries/complexval.hpp"

namespace wseries {

// Every convergence threshold, domain predicate and boundary curve for the
// series family: the sigma-tau criterion and its complex extension, the real
// x_alpha threshold and divergence interval, both complex boundary curves,
// the alpha-classification with its critical constants, the p-transformed
// thresholds, and the ln-x series radius.

enum class ThresholdKind {
  XAlpha,
  ZP,
  Sigma1,
  SigmaC,
  AlphaC,
  MuAlpha,
  NuAlpha,
  Eta0,
  RadiusTau,
  WrightRadius,
};

struct Threshold {
  double value = 0.0;
  ThresholdKind kind = ThresholdKind::XAlpha;
  // Residual of the threshold's own defining equation evaluated at value;
  // closed-form cases report 0.
  double residual = 0.0;
  bool degenerate = false;  // set only for the radius at sigma = -1
};

// A verdict plus the two sides of the governing inequality (lhs < rhs), so
// callers can see the margin that produced it.
struct ConvergenceVerdict {
  bool converges = false;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct BoundarySample {
  double param = 0.0;  // the sweep parameter (eta or theta) that produced the point
  double re = 0.0;
  double im = 0.0;
  double residual = 0.0;  // defining-equation residual at the point
};

struct BoundaryCurve {
  std::vector<BoundarySample> samples;
  std::string source;      // which boundary this is, for output metadata
  double param_lo = 0.0;   // native parameter range (before mirroring)
  double param_hi = 0.0;
};

// Cutoff b with Re W_{-1}(x) > a exactly for x < b: b = a e^a for a <= -1,
// and b = -e^a eta0 csc eta0 with eta0 cot eta0 = -a, eta0 in (0, pi), for
// a > -1. Both cases meet at b = -1/e when a = -1. The residual reports
// |eta0 cot eta0 + a| for the bisection case.
Threshold lemma_threshold(double a);

// The sigma-tau convergence criterion: with lambda = tau/sigma,
//
//   Re Log sigma < 1 - Re lambda + min_m Re W_m(-e^{lambda-1}),
//
// where the min runs over branches m in {-1, 0} for complex data and only
// m = -1 applies on the real ray sigma > 0 (there the branch -1 value is the
// smaller one and the criterion reduces to the real inequality).
ConvergenceVerdict comtet_converges(const Cplx& sigma, const Cplx& tau);

// Real threshold x_alpha: the series at parameter alpha converges for
// x > x_alpha. Two cases: x_alpha = (e/alpha)^alpha for 0 < alpha <= 1, and
// x_alpha = e^{alpha eta0 csc eta0} with eta0 cot eta0 = 1 - ln alpha for
// alpha > 1. Monotone increasing in alpha.
Threshold comtet_real_threshold(double alpha);

// Interval of guaranteed divergence (e^{-|alpha|}, e^{b |alpha|}) with
// b = W(1/|alpha|) for |alpha| < 1/e and b = 1 otherwise.
std::pair<double, double> comtet_divergence_interval(double alpha);

// Boundary radius |z| of the alpha = 1 convergence domain at ray angle
// |arg z| = theta in [0, pi): found by inverting the parametric boundary
//   arg z = sin eta - eta cos eta,  ln|z| = cos eta + eta sin eta
// over eta in (-pi, 0] (arg z is monotone in eta there).
double comtet_boundary_radius(double theta);

// The full parametric boundary polyline: n_samples points swept over
// eta in (-pi, 0] (lower half-plane), mirrored upward by conjugation.
// Per-sample residual: |Re W_k(-(ln z)/e) + 1| with k = -1 below the axis
// and k = +1 above (the branches the two halves belong to).
BoundaryCurve comtet_complex_boundary(int n_samples);

// Radius tau*(sigma) of the improved series in tau:
//   sigma = 0        -> 1
//   real sigma < 0   -> |1 + sigma - sigma ln|sigma||       (one singularity)
//   otherwise        -> |1 + sigma - sigma Log sigma + i pi sigma sgn(Im sigma)|
// (for real sigma > 0 the two sign choices have equal modulus). At
// sigma = -1 the radius is 0 and the result is flagged degenerate.
Threshold improved_radius(const Cplx& sigma);

// |tau| = |sigma (ln alpha - ln sigma)| against tau*(sigma), sigma > 0.
ConvergenceVerdict improved_converges(double sigma, double alpha);

// g(sigma) = sqrt(pi^2 + (1 + 1/sigma - ln sigma)^2), the function whose
// comparison with |ln sigma - ln alpha| decides convergence for sigma > 0.
double g_of_sigma(double sigma);

// Classification of the improved series' sigma-domain at parameter alpha:
//   case 1 (0 < alpha < e):      converges exactly for 0 < sigma < sigma_alpha,
//                                the root of ln sigma - g(sigma) = ln alpha;
//                                also reports x_alpha = e^{alpha/sigma_alpha}.
//   case 2 (e <= alpha <= alpha_c): converges for every sigma > 0 (the case
//                                boundaries are included here and flagged by
//                                the boundary bool, without claiming more).
//   case 3 (alpha > alpha_c):    diverges exactly for mu_alpha < sigma < nu_alpha,
//                                the two roots of ln sigma + g(sigma) = ln alpha.
struct AlphaDomain {
  int case_id = 0;
  bool on_case_boundary = false;
  Threshold sigma_alpha;  // case 1
  Threshold x_alpha;      // case 1
  Threshold mu;           // case 3
  Threshold nu;           // case 3
};
AlphaDomain alpha_domain(double alpha);

// The critical constants of the classification: sigma_c minimizes
// psi(sigma) = ln sigma + g(sigma) (root of psi' by bisection; the residual
// reports |psi'(sigma_c)|), and alpha_c = e^{psi(sigma_c)}.
Threshold sigma_c_threshold();
Threshold alpha_c_threshold();

// Closed-form under-estimate exp((1+pi^2)/2) - (1+pi^2)/2 of sigma_1
// (= sigma_alpha at alpha = 1).
double sigma1_approx();

// Maximum of x_alpha = e^{alpha/sigma_alpha} over alpha in (0, e), located
// by golden-section search; returns (alpha*, x*).
std::pair<double, double> x_of_alpha_max();

// Boundary radius |z| of the improved series' complex domain at ray angle
// theta in (0, pi): bisection on t = ln|z| of |tau| - tau*(sigma) with
// sigma = 1/(t + i theta) and tau = -sigma Log sigma.
double improved_boundary_radius(double theta);

// The improved complex boundary polyline: theta swept over the open interval
// (0, pi) (upper half-plane native, mirrored downward); per-sample residual
// is the bisection target ||tau| - tau*|.
BoundaryCurve improved_complex_boundary(int n_samples);

// Threshold z_p of the p-transformed series: z_p = e^{1-2p} for p <= 0 and
// z_p = e^{-p + eta0 csc eta0} with eta0 cot eta0 = 1 - p for p > 0.
// Monotone decreasing in p. The residual evaluates the sigma-tau criterion
// as an equality at z_p (it must sit exactly on the boundary).
Threshold transformed_comtet_threshold(double p);

// Threshold z of the p-transformed improved series on the real ray
// z > e^{-p}. Exact mode bisects |tau(z,p)| = tau*(sigma(z,p)); Approx mode
// returns e^{-p} x_1^{e^{-p}} (stated for p < 1; exact at p = 0, where it
// reproduces x_1 bit for bit).
enum class ThresholdMode { Exact, Approx };
Threshold transformed_improved_threshold(double p, ThresholdMode mode);

// Radius sqrt(1 + pi^2) of the ln-x series, its real-axis rendering
// (e^{-r}, e^{r}), and the |sigma| > 1/r form of the domain predicate.
Threshold wright_radius();
std::pair<double, double> wright_real_interval();
bool wright_sigma_predicate(double sigma);

}  // namespace wseries
