#include "wseries/convergence.hpp"

#include <cmath>
#include <stdexcept>

#include "wseries/oracle.hpp"

namespace wseries {

namespace {

constexpr double kPi = 3.141592653589793;

// Plain bisection, 200 halvings (far past double resolution for every
// bracket used here). Callers guarantee a sign change on [lo, hi]; a zero
// endpoint counts as the sign opposite to the other end.
template <class F>
double bisect(F&& f, double lo, double hi, const char* what) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0))
    throw std::runtime_error(std::string("bisection bracket does not change sign: ") + what);
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// eta0 in (0, pi) with eta0 cot(eta0) = c, for c < 1. eta cot eta decreases
// from 1 (eta -> 0) to -inf (eta -> pi), so the root is unique.
double eta0_root(double c) {
  auto f = [c](double eta) { return eta * (std::cos(eta) / std::sin(eta)) - c; };
  return bisect(f, 1e-12, kPi - 1e-12, "eta cot eta");
}

// Residual of the sigma-tau boundary equation at a real transformed point:
// |ln sigma - (1 - lambda + Re W_{-1}(-e^{lambda-1}))| with sigma = 1/q,
// lambda = p + ln q, q = p + ln z. The branch value is taken on the upper
// side of the cut when -e^{lambda-1} < -1/e.
double sigma_tau_equality_residual(double z, double p) {
  double q = p + std::log(z);
  double lambda = p + std::log(q);
  Cplx wm1 = lambert_w(-1, Cplx(-std::exp(lambda - 1.0), 0.0));
  double rhs = 1.0 - lambda + wm1.re;
  return std::abs(std::log(1.0 / q) - rhs);
}

// Parametric alpha = 1 boundary: eta in (-pi, 0] traces the lower half.
double boundary_arg(double eta) { return std::sin(eta) - eta * std::cos(eta); }
double boundary_logabs(double eta) { return std::cos(eta) + eta * std::sin(eta); }

double psi_of_sigma(double sigma) { return std::log(sigma) + g_of_sigma(sigma); }

double psi_prime(double sigma) {
  double h = 1.0 + 1.0 / sigma - std::log(sigma);
  double hp = -1.0 / (sigma * sigma) - 1.0 / sigma;
  return 1.0 / sigma + h * hp / g_of_sigma(sigma);
}

const Threshold& sigma_c_cached() {
  static const Threshold t = [] {
    double root = bisect(psi_prime, 0.5, 2.0, "psi'(sigma)");
    return Threshold{root, ThresholdKind::SigmaC, std::abs(psi_prime(root))};
  }();
  return t;
}

// sigma_alpha for 0 < alpha < e: the unique root of ln sigma - g(sigma)
// = ln alpha. The left side increases from -inf to 1, so a geometric
// expansion from sigma = 1 always brackets the root.
Threshold sigma_alpha_root(double alpha) {
  double target = std::log(alpha);
  auto f = [target](double s) { return std::log(s) - g_of_sigma(s) - target; };
  double lo = 1.0;
  double hi = 1.0;
  if (f(1.0) < 0.0) {
    // sigma_alpha grows like exp(pi^2 / (2 (1 - ln alpha))) as alpha -> e,
    // so it leaves double range already around alpha = 2.6994.
    while (f(hi) < 0.0 && hi < 1e307) hi *= 2.0;
    if (f(hi) < 0.0)
      throw std::runtime_error("sigma_alpha exceeds double range for alpha this close to e");
    lo = hi / 2.0;
  } else {
    while (f(lo) > 0.0) lo /= 2.0;
    hi = lo * 2.0;
  }
  double root = bisect(f, lo, hi, "ln sigma - g(sigma)");
  double resid = std::abs(std::abs(std::log(root) - target) - g_of_sigma(root));
  return Threshold{root, ThresholdKind::Sigma1, resid};
}

double x1_cached() {
  static const double x1 = alpha_domain(1.0).x_alpha.value;
  return x1;
}

}  // namespace

double g_of_sigma(double sigma) {
  if (!(sigma > 0.0)) throw std::domain_error("g(sigma) requires sigma > 0");
  double h = 1.0 + 1.0 / sigma - std::log(sigma);
  return std::sqrt(kPi * kPi + h * h);
}

Threshold lemma_threshold(double a) {
  if (a <= -1.0) return Threshold{a * std::exp(a), ThresholdKind::Eta0, 0.0};
  double eta = eta0_root(-a);
  double b = -std::exp(a) * eta / std::sin(eta);
  double resid = std::abs(eta * std::cos(eta) / std::sin(eta) + a);
  return Threshold{b, ThresholdKind::Eta0, resid};
}

ConvergenceVerdict comtet_converges(const Cplx& sigma, const Cplx& tau) {
  if (sigma == Cplx(0.0)) throw std::domain_error("sigma = 0 has no log singularity to compare");
  if (sigma.im == 0.0 && tau.im == 0.0 && sigma.re > 0.0) {
    double lambda = tau.re / sigma.re;
    // Branch -1 is the smaller real part on this ray; for lambda > 0 the
    // argument passes beyond -1/e and the upper-side value continues it.
    Cplx w = lambert_w(-1, Cplx(-std::exp(lambda - 1.0), 0.0));
    double lhs = std::log(sigma.re);
    double rhs = 1.0 - lambda + w.re;
    return ConvergenceVerdict{lhs < rhs, lhs, rhs};
  }
  Cplx lambda = tau / sigma;
  Cplx arg = -exp(lambda - 1.0);
  Cplx w0 = lambert_w(0, arg);
  Cplx wm1 = lambert_w(-1, arg);
  double lhs = std::log(abs(sigma));
  double rhs = 1.0 - lambda.re + (w0.re < wm1.re ? w0.re : wm1.re);
  return ConvergenceVerdict{lhs < rhs, lhs, rhs};
}

Threshold comtet_real_threshold(double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("x_alpha requires alpha > 0");
  if (alpha <= 1.0)
    return Threshold{std::pow(std::exp(1.0) / alpha, alpha), ThresholdKind::XAlpha, 0.0};
  double c = 1.0 - std::log(alpha);
  double eta = eta0_root(c);
  double x = std::exp(alpha * eta / std::sin(eta));
  double resid = std::abs(eta * std::cos(eta) / std::sin(eta) - c);
  return Threshold{x, ThresholdKind::XAlpha, resid};
}

std::pair<double, double> comtet_divergence_interval(double alpha) {
  if (alpha == 0.0) throw std::domain_error("divergence interval requires alpha != 0");
  double a = std::abs(alpha);
  double b = (a < std::exp(-1.0)) ? lambert_w(0, 1.0 / a) : 1.0;
  return {std::exp(-a), std::exp(b * a)};
}

double comtet_boundary_radius(double theta) {
  if (!(theta >= 0.0) || theta >= kPi)
    throw std::domain_error("boundary radius requires |arg z| in [0, pi)");
  // boundary_arg increases from -pi to 0 as eta runs (-pi, 0].
  auto f = [theta](double eta) { return boundary_arg(eta) + theta; };
  double eta = bisect(f, -kPi + 1e-12, 0.0, "arg z(eta)");
  return std::exp(boundary_logabs(eta));
}

BoundaryCurve comtet_complex_boundary(int n_samples) {
  if (n_samples < 2) throw std::invalid_argument("boundary needs at least 2 samples");
  const double e = std::exp(1.0);
  BoundaryCurve curve;
  curve.source = "comtet-complex";
  curve.param_lo = -kPi + kPi / n_samples;
  curve.param_hi = kPi - kPi / n_samples;
  curve.samples.reserve(2 * static_cast<size_t>(n_samples) - 1);
  auto residual_at = [&](double l, double a, int k) {
    Cplx w = lambert_w(k, Cplx(-l / e, -a / e));
    return std::abs(w.re + 1.0);
  };
  for (int i = 0; i < n_samples; ++i) {
    double eta = -kPi + kPi * (i + 1) / n_samples;
    double a = boundary_arg(eta);
    double l = boundary_logabs(eta);
    double r = std::exp(l);
    curve.samples.push_back(
        BoundarySample{eta, r * std::cos(a), r * std::sin(a), residual_at(l, a, -1)});
  }
  // Mirror the open part of the sweep into the upper half-plane; the branch
  // containing the boundary there is +1.
  for (int i = n_samples - 2; i >= 0; --i) {
    double eta = -kPi + kPi * (i + 1) / n_samples;
    double a = boundary_arg(eta);
    double l = boundary_logabs(eta);
    double r = std::exp(l);
    curve.samples.push_back(
        BoundarySample{-eta, r * std::cos(a), -r * std::sin(a), residual_at(l, -a, 1)});
  }
  return curve;
}

Threshold improved_radius(const Cplx& sigma) {
  if (sigma == Cplx(0.0)) return Threshold{1.0, ThresholdKind::RadiusTau, 0.0};
  if (sigma == Cplx(-1.0)) return Threshold{0.0, ThresholdKind::RadiusTau, 0.0, true};
  if (sigma.im == 0.0) {
    double s = sigma.re;
    double v = (s < 0.0) ? std::abs(1.0 + s - s * std::log(-s))
                         : std::hypot(1.0 + s - s * std::log(s), kPi * s);
    return Threshold{v, ThresholdKind::RadiusTau, 0.0};
  }
  // Of the two conjugate singularities the nearer lies on the side of the
  // data: + i pi sigma above the axis, - i pi sigma below.
  double sign = (sigma.im > 0.0) ? 1.0 : -1.0;
  Cplx t = Cplx(1.0) + sigma - sigma * log(sigma) + Cplx(0.0, sign * kPi) * sigma;
  return Threshold{abs(t), ThresholdKind::RadiusTau, 0.0};
}

ConvergenceVerdict improved_converges(double sigma, double alpha) {
  if (!(sigma > 0.0)) throw std::domain_error("improved criterion stated for sigma > 0");
  if (!(alpha > 0.0)) throw std::domain_error("improved criterion requires alpha > 0");
  double lhs = std::abs(sigma * (std::log(alpha) - std::log(sigma)));
  double rhs = improved_radius(Cplx(sigma)).value;
  return ConvergenceVerdict{lhs < rhs, lhs, rhs};
}

AlphaDomain alpha_domain(double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("alpha classification requires alpha > 0");
  const double e = std::exp(1.0);
  const Threshold sc = sigma_c_cached();
  const double alpha_c = std::exp(psi_of_sigma(sc.value));
  AlphaDomain d;
  if (alpha < e) {
    d.case_id = 1;
    d.sigma_alpha = sigma_alpha_root(alpha);
    d.x_alpha = Threshold{std::exp(alpha / d.sigma_alpha.value), ThresholdKind::XAlpha,
                          d.sigma_alpha.residual};
    return d;
  }
  if (alpha <= alpha_c) {
    d.case_id = 2;
    d.on_case_boundary = (alpha == e || alpha == alpha_c);
    return d;
  }
  d.case_id = 3;
  double target = std::log(alpha);
  auto f = [target](double s) { return psi_of_sigma(s) - target; };
  // psi decreases to its minimum at sigma_c and increases past it;
  // psi(alpha) = ln alpha + g(alpha) > ln alpha, so (sigma_c, alpha)
  // brackets the upper root.
  double mu = bisect(f, 1e-6, sc.value, "psi = ln alpha, lower root");
  double nu = bisect(f, sc.value, alpha, "psi = ln alpha, upper root");
  auto resid = [target](double s) {
    return std::abs(std::abs(std::log(s) - target) - g_of_sigma(s));
  };
  d.mu = Threshold{mu, ThresholdKind::MuAlpha, resid(mu)};
  d.nu = Threshold{nu, ThresholdKind::NuAlpha, resid(nu)};
  return d;
}

Threshold sigma_c_threshold() { return sigma_c_cached(); }

Threshold alpha_c_threshold() {
  const Threshold sc = sigma_c_cached();
  return Threshold{std::exp(psi_of_sigma(sc.value)), ThresholdKind::AlphaC, sc.residual};
}

double sigma1_approx() {
  double half = 0.5 * (1.0 + kPi * kPi);
  return std::exp(half) - half;
}

std::pair<double, double> x_of_alpha_max() {
  // Golden-section maximization of alpha / sigma_alpha over (0.01, e-0.01);
  // the maximand is smooth and single-peaked there.
  auto fn = [](double alpha) { return alpha / sigma_alpha_root(alpha).value; };
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = 0.01;
  double b = std::exp(1.0) - 0.01;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = fn(c);
  double fd = fn(d);
  for (int i = 0; i < 200 && (b - a) > 1e-12; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = fn(d);
    }
  }
  double alpha_star = 0.5 * (a + b);
  return {alpha_star, std::exp(fn(alpha_star))};
}

double improved_boundary_radius(double theta) {
  if (!(theta > 0.0) || !(theta < kPi))
    throw std::domain_error("improved boundary radius requires arg z in (0, pi)");
  // t = ln|z|; inside the domain |tau| < tau*(sigma), so f < 0 for large t.
  auto f = [theta](double t) {
    Cplx logz{t, theta};
    Cplx sigma = Cplx(1.0) / logz;
    Cplx tau = -sigma * log(sigma);
    return abs(tau) - improved_radius(sigma).value;
  };
  double lo = -3.0;
  double hi = 10.0;
  for (int i = 0; i < 5 && !(f(lo) > 0.0); ++i) lo -= 3.0;
  for (int i = 0; i < 5 && !(f(hi) < 0.0); ++i) hi += 5.0;
  return std::exp(bisect(f, lo, hi, "|tau| = tau*(sigma)"));
}

BoundaryCurve improved_complex_boundary(int n_samples) {
  if (n_samples < 1) throw std::invalid_argument("boundary needs at least 1 sample");
  BoundaryCurve curve;
  curve.source = "improved-complex";
  curve.param_lo = -kPi * n_samples / (n_samples + 1);
  curve.param_hi = kPi * n_samples / (n_samples + 1);
  curve.samples.reserve(2 * static_cast<size_t>(n_samples));
  auto sample_at = [](double theta) {
    double r = improved_boundary_radius(std::abs(theta));
    Cplx logz{std::log(r), std::abs(theta)};
    Cplx sigma = Cplx(1.0) / logz;
    double resid = std::abs(abs(-sigma * log(sigma)) - improved_radius(sigma).value);
    double im = r * std::sin(theta);
    return BoundarySample{theta, r * std::cos(theta), im, resid};
  };
  for (int i = n_samples - 1; i >= 0; --i)
    curve.samples.push_back(sample_at(-kPi * (i + 1) / (n_samples + 1)));
  for (int i = 0; i < n_samples; ++i)
    curve.samples.push_back(sample_at(kPi * (i + 1) / (n_samples + 1)));
  return curve;
}

Threshold transformed_comtet_threshold(double p) {
  double z;
  double resid_eta = 0.0;
  if (p <= 0.0) {
    z = std::exp(1.0 - 2.0 * p);
  } else {
    double eta = eta0_root(1.0 - p);
    z = std::exp(-p + eta / std::sin(eta));
    resid_eta = std::abs(eta * std::cos(eta) / std::sin(eta) - (1.0 - p));
  }
  // Both cases must land exactly on the sigma-tau boundary; report that
  // equation's residual (it dominates the eta residual when both exist).
  double resid = sigma_tau_equality_residual(z, p);
  if (resid_eta > resid) resid = resid_eta;
  return Threshold{z, ThresholdKind::ZP, resid};
}

Threshold transformed_improved_threshold(double p, ThresholdMode mode) {
  if (mode == ThresholdMode::Approx) {
    if (p >= 1.0) throw std::domain_error("approximate z_p stated for p < 1");
    double ep = std::exp(-p);
    return Threshold{ep * std::pow(x1_cached(), ep), ThresholdKind::ZP, 0.0};
  }
  // Work in q = p + ln z > 0, the distance past the singular point in log
  // scale. Near q = 0 the criterion margin behaves like
  // (1 - p) - pi^2/(2 |ln q|), so the divergent sliver is positive but
  // shrinks double-exponentially as p -> 1 (root near exp(-pi^2/(2(1-p)))).
  auto f = [p](double q) {
    double tau = (p + std::log(q)) / q;
    return std::abs(tau) - improved_radius(Cplx(1.0 / q)).value;
  };
  // Very negative p pushes the root past q = 10 (it sits near q = -p + ...);
  // stretch the top of the bracket until the sign flips.
  double hi = 10.0;
  while (f(hi) > 0.0 && hi < 1e6) hi *= 2.0;
  const double lo = 1e-300;
  if (!(f(lo) > 0.0)) {
    if (p >= 1.0)
      throw std::domain_error(
          "the transformed improved series satisfies the criterion on the whole ray for "
          "p >= 1; there is no finite threshold");
    throw std::domain_error(
        "threshold not representable: it sits within one ulp of the singular point e^{-p}");
  }
  double q = bisect(f, lo, hi, "|tau(z,p)| = tau*(sigma)");
  return Threshold{std::exp(q - p), ThresholdKind::ZP, std::abs(f(q))};
}

Threshold wright_radius() {
  return Threshold{std::sqrt(1.0 + kPi * kPi), ThresholdKind::WrightRadius, 0.0};
}

std::pair<double, double> wright_real_interval() {
  double r = std::sqrt(1.0 + kPi * kPi);
  return {std::exp(-r), std::exp(r)};
}

bool wright_sigma_predicate(double sigma) {
  return std::abs(sigma) > 1.0 / std::sqrt(1.0 + kPi * kPi);
}

}  // namespace wseries
