#include "wseries/series.hpp"

#include <cmath>

#include "wseries/oracle.hpp"

namespace wseries {

double comtet_u_triangle(double sigma, double tau, int n_terms) {
  KahanAccumulator<double> acc;
  for (int n = 1; n <= n_terms; ++n) {
    double mfact = 1.0;
    for (int m = 1; m <= n; ++m) {
      mfact *= m;
      double c = to_double(stirling_cycle(n, n - m + 1)) / mfact;
      if ((n - m) & 1) c = -c;
      acc.add(c * std::pow(sigma, n - m) * std::pow(tau, m));
    }
  }
  return acc.sum;
}

Rational coeff_cm_exact(const Rational& sigma, int m) {
  if (m < 1) throw std::invalid_argument("coeff_cm_exact: m >= 1");
  Rational one(1);
  if (sigma == -1)
    throw std::domain_error("coeff_cm_exact: sigma = -1 is the pole of every coefficient");
  if (m == 1) return one / (one + sigma);
  if (sigma == 0) return make_rational(1, m);
  Rational inner(0);
  for (int k = 0; k <= m - 2; ++k) {
    Rational t = Rational(eulerian2(m - 1, k)) * rational_pow(sigma, -(k + 1));
    if (k & 1)
      inner -= t;
    else
      inner += t;
  }
  Rational pre =
      rational_pow(sigma, m - 1) / (Rational(factorial(m)) * rational_pow(one + sigma, 2 * m - 1));
  if (m & 1) pre = -pre;
  return pre * inner;
}

Rational coeff_cm_zeta(const Rational& zeta, int m) {
  if (m < 1) throw std::invalid_argument("coeff_cm_zeta: m >= 1");
  Rational sum(0);
  for (int p = 0; p <= m - 1; ++p) {
    const ExactInt& s = stirling2_assoc2(p + m - 1, p);
    if (s == 0) continue;
    Rational t = Rational(s) * rational_pow(zeta, p + m);
    if ((p + m - 1) & 1)
      sum -= t;
    else
      sum += t;
  }
  return sum / Rational(factorial(m));
}

std::vector<Rational> eulerian_zeta_block(int m) {
  if (m < 1) throw std::invalid_argument("eulerian_zeta_block: m >= 1");
  if (m == 1) return {Rational(0), Rational(1)};
  std::vector<Rational> poly(static_cast<size_t>(2 * m), Rational(0));
  Rational mfact(factorial(m));
  for (int k = 0; k <= m - 2; ++k) {
    Rational base = Rational(eulerian2(m - 1, k)) / mfact;
    if ((m + k) & 1) base = -base;
    int e = m - k - 2;
    for (int j = 0; j <= e; ++j) {
      Rational c = base * Rational(binomial_general(e, j));
      if (j & 1) c = -c;
      poly[static_cast<size_t>(m + k + 1 + j)] += c;
    }
  }
  return poly;
}

namespace {

std::vector<Rational> wright_c_exact(int n_max, const Rational& w) {
  std::vector<Rational> c(static_cast<size_t>(n_max) + 1, Rational(0));
  Rational onep = Rational(1) + w;
  c[1] = Rational(-1) / onep;
  for (int n = 2; n <= n_max; ++n) {
    Rational s = Rational(n - 1) * c[static_cast<size_t>(n - 1)];
    for (int k = 1; k <= n - 1; ++k)
      s += Rational(k) * c[static_cast<size_t>(k)] * c[static_cast<size_t>(n - k)];
    c[static_cast<size_t>(n)] = -s / (Rational(n) * onep);
  }
  return c;
}

}  // namespace

Rational wright_series_a_exact(int n, WrightMethod method, const Rational& w) {
  if (n < 1) throw std::invalid_argument("wright_series_a: n >= 1");
  Rational onep = Rational(1) + w;
  switch (method) {
    case WrightMethod::Eulerian: {
      Rational sum(0);
      for (int k = 0; k <= n - 1; ++k) {
        Rational t = Rational(eulerian2(n - 1, k)) * rational_pow(w, k + 1);
        if (k & 1)
          sum -= t;
        else
          sum += t;
      }
      return sum / (Rational(factorial(n)) * rational_pow(onep, 2 * n - 1));
    }
    case WrightMethod::AssocStirling1: {
      Rational sum(0);
      for (int k = 0; k <= n - 1; ++k) {
        const ExactInt& d = assoc_stirling1_d(n + k - 1, k);
        if (d == 0) continue;
        Rational t = Rational(d) / rational_pow(onep, n + k);
        if ((n + k - 1) & 1)
          sum -= t;
        else
          sum += t;
      }
      return w * sum / Rational(factorial(n));
    }
    case WrightMethod::AssocStirling2: {
      Rational sum(0);
      for (int k = 0; k <= n - 1; ++k) {
        const ExactInt& s = stirling2_assoc2(n + k - 1, k);
        if (s == 0) continue;
        Rational t = Rational(s) * rational_pow(w, k) / rational_pow(onep, n + k);
        if (k & 1)
          sum += t;  // (-1)^{k+1}
        else
          sum -= t;
      }
      Rational a = sum / Rational(factorial(n));
      if (n == 1) a += 1;
      return a;
    }
    case WrightMethod::Recurrence: {
      auto c = wright_c_exact(n, w);
      if (n == 1) return Rational(1) + c[1];
      return c[static_cast<size_t>(n)];
    }
  }
  throw std::logic_error("wright_series_a: unknown method");
}

std::vector<double> wright_coeffs_recurrence(int n_max, double w) {
  return wright_coeffs_recurrence_t<double>(n_max, w);
}

double wright_series_a(int n, WrightMethod method, double w) {
  if (n < 1) throw std::invalid_argument("wright_series_a: n >= 1");
  double onep = 1.0 + w;
  switch (method) {
    case WrightMethod::Eulerian: {
      KahanAccumulator<double> sum;
      double wpow = w;
      for (int k = 0; k <= n - 1; ++k) {
        double t = to_double(eulerian2(n - 1, k)) * wpow;
        sum.add((k & 1) ? -t : t);
        wpow *= w;
      }
      return sum.sum / (to_double(factorial(n)) * std::pow(onep, 2 * n - 1));
    }
    case WrightMethod::AssocStirling1: {
      KahanAccumulator<double> sum;
      double oppow = std::pow(onep, n);
      for (int k = 0; k <= n - 1; ++k) {
        double t = to_double(assoc_stirling1_d(n + k - 1, k)) / oppow;
        sum.add(((n + k - 1) & 1) ? -t : t);
        oppow *= onep;
      }
      return w * sum.sum / to_double(factorial(n));
    }
    case WrightMethod::AssocStirling2: {
      KahanAccumulator<double> sum;
      double wpow = 1.0;
      double oppow = std::pow(onep, n);
      for (int k = 0; k <= n - 1; ++k) {
        double t = to_double(stirling2_assoc2(n + k - 1, k)) * wpow / oppow;
        sum.add((k & 1) ? t : -t);  // (-1)^{k+1}
        wpow *= w;
        oppow *= onep;
      }
      double res = sum.sum / to_double(factorial(n));
      if (n == 1) res += 1.0;
      return res;
    }
    case WrightMethod::Recurrence: {
      auto a = wright_coeffs_recurrence(n, w);
      return a[static_cast<size_t>(n - 1)];
    }
  }
  throw std::logic_error("wright_series_a: unknown method");
}

double omega_constant() {
  static const double w0 = wright_omega_real<double>(0.0);
  return w0;
}

double wright_series_a(int n, WrightMethod method) {
  return wright_series_a(n, method, omega_constant());
}

double wright_series_eval(double x, int n_terms) {
  if (!(x > 0.0)) throw std::domain_error("wright_series_eval: needs x > 0");
  double t = std::log(x);
  auto a = wright_coeffs_recurrence(n_terms, omega_constant());
  KahanAccumulator<double> acc;
  acc.add(omega_constant());
  double tpow = 1.0;
  for (int n = 1; n <= n_terms; ++n) {
    tpow *= t;
    acc.add(a[static_cast<size_t>(n - 1)] * tpow);
  }
  return acc.sum;
}

TransformedVars transformed_vars(const Cplx& z, const Cplx& p) {
  Cplx l = log(z);
  Cplx q = p + l;
  Cplx lq = log(q);
  return {Cplx(1.0) / q, (p + lq) / q, l - lq};
}

TransformedVarsReal transformed_vars_real(double z, double p) {
  double l = std::log(z);
  double q = p + l;
  double lq = std::log(q);
  return {1.0 / q, (p + lq) / q, l - lq};
}

namespace {

double u_by_variant_real(double sigma, double tau, SeriesVariant variant, int terms) {
  switch (variant) {
    case SeriesVariant::Comtet:
      return comtet_u(sigma, tau, terms);
    case SeriesVariant::ImprovedStirling:
      return improved_u(sigma, tau, terms);
    case SeriesVariant::ImprovedEulerian:
      return eulerian_u(sigma, tau, terms);
    case SeriesVariant::WrightLn:
      break;
  }
  throw std::invalid_argument("a sigma-tau series variant is required here (not the ln-x series)");
}

Cplx u_by_variant(const Cplx& sigma, const Cplx& tau, SeriesVariant variant, int terms) {
  switch (variant) {
    case SeriesVariant::Comtet:
      return comtet_u(sigma, tau, terms);
    case SeriesVariant::ImprovedStirling:
      return improved_u(sigma, tau, terms);
    case SeriesVariant::ImprovedEulerian:
      return eulerian_u(sigma, tau, terms);
    case SeriesVariant::WrightLn:
      break;
  }
  throw std::invalid_argument("a sigma-tau series variant is required here (not the ln-x series)");
}

}  // namespace

Cplx transformed_w(const Cplx& z, const Cplx& p, SeriesVariant variant, int terms) {
  if (z.im == 0.0 && p.im == 0.0 && z.re > 0.0) {
    double q = p.re + std::log(z.re);
    if (q == 0.0)
      throw std::domain_error("transformed_w: z = e^{-p} is the singular point of the transformation");
    if (q > 0.0) {
      TransformedVarsReal tv = transformed_vars_real(z.re, p.re);
      double u = u_by_variant_real(tv.sigma, tv.tau, variant, terms);
      return {tv.head + u, 0.0};
    }
  }
  Cplx l = log(z);
  Cplx q = p + l;
  if (q.re == 0.0 && q.im == 0.0)
    throw std::domain_error("transformed_w: z = e^{-p} is the singular point of the transformation");
  TransformedVars tv = transformed_vars(z, p);
  return tv.head + u_by_variant(tv.sigma, tv.tau, variant, terms);
}

double phi_alpha(double x, double alpha, SeriesVariant variant, int terms) {
  if (!(x > 1.0)) throw std::domain_error("phi_alpha: needs x > 1");
  if (!(alpha > 0.0)) throw std::domain_error("phi_alpha: needs alpha > 0");
  double l = std::log(x);
  double ll = std::log(l);
  double sigma = alpha / l;
  double tau = alpha * ll / l;
  double u = u_by_variant_real(sigma, tau, variant, terms);
  return (l - alpha * ll) + alpha * u;
}

Cplx branch_m1_approx(double z, BranchApproxForm form) {
  const double einv = std::exp(-1.0);
  if (!(z < 0.0) || z < -einv * (1.0 + 4e-16))
    throw std::domain_error("branch_m1_approx: defined on -1/e <= z < 0");
  if (form == BranchApproxForm::Transformed) {
    double l1 = std::log(-z);
    double l2 = std::log(-l1);
    return {l1 - l2 + l2 / l1, 0.0};
  }
  Cplx w{std::log(-z), -3.141592653589793};  // ln z - 2 pi i for z < 0, principal ln
  Cplx lw = log(w);
  return w - lw + lw / w;
}

double u_reference(double sigma, double tau) {
  if (!(sigma > 0.0)) throw std::domain_error("u_reference: the real path needs sigma > 0");
  double v = (1.0 - tau) / sigma;
  return wright_omega_real<double>(v - std::log(sigma)) - v;
}

}  // namespace wseries
