#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wseries/asymptotics.hpp"
#include "wseries/combinatorics.hpp"
#include "wseries/convergence.hpp"
#include "wseries/oracle.hpp"
#include "wseries/precfloat.hpp"
#include "wseries/series.hpp"

namespace {

using nlohmann::json;
using namespace wseries;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Grid {
  double lo = 0.0, hi = 0.0;
  int count = 0;
  double at(int i) const { return count < 2 ? lo : lo + (hi - lo) * i / (count - 1); }
};

Grid parse_grid(const std::string& s) {
  Grid g;
  char trailing;
  if (std::sscanf(s.c_str(), "%lf:%lf:%d%c", &g.lo, &g.hi, &g.count, &trailing) != 3 ||
      g.count < 1)
    throw std::domain_error("--grid must be start:stop:count with count >= 1, got '" + s + "'");
  return g;
}

// Tabular output in either format. CSV goes to --out with the metadata on
// stderr as '# key: value' lines; JSON carries the metadata inline.
struct Output {
  std::string format = "csv";
  std::string path = "-";
  json meta = json::object();
  std::vector<std::string> columns;
  std::vector<json> rows;

  void add_row(json row) { rows.push_back(std::move(row)); }

  static std::string cell_csv(const json& c) {
    if (c.is_string()) return c.get<std::string>();
    if (c.is_number_integer()) return std::to_string(c.get<long long>());
    if (c.is_number_float()) return fmt17(c.get<double>());
    if (c.is_boolean()) return c.get<bool>() ? "true" : "false";
    return "nan";
  }

  void write() const {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (path != "-") {
      file.open(path, std::ios::binary);  // binary keeps LF endings everywhere
      if (!file) throw std::runtime_error("cannot open output file: " + path);
      os = &file;
    }
    if (format == "json") {
      json doc;
      doc["meta"] = meta;
      doc["columns"] = columns;
      doc["rows"] = rows;
      *os << doc.dump(2) << "\n";
      return;
    }
    for (auto it = meta.begin(); it != meta.end(); ++it)
      std::cerr << "# " << it.key() << ": "
                << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                << "\n";
    for (size_t i = 0; i < columns.size(); ++i)
      *os << columns[i] << (i + 1 < columns.size() ? "," : "\n");
    for (const auto& row : rows)
      for (size_t i = 0; i < row.size(); ++i)
        *os << cell_csv(row[i]) << (i + 1 < row.size() ? "," : "\n");
  }
};

struct Common {
  std::string format = "csv";
  std::string out = "-";
  std::string precision = "standard";

  bool elevated() const { return precision == "elevated"; }
  json precision_meta() const {
    json m;
    m["precision"] = precision;
    m["significand_bits"] =
        elevated() ? static_cast<long>(PrecFloat::default_bits()) : 53L;
    return m;
  }
  Output make_output() const {
    Output o;
    o.format = format;
    o.path = out;
    o.meta = precision_meta();
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", c.out, "Output path ('-' = stdout)");
  cmd->add_option("--precision", c.precision,
                  "Arithmetic for the series evaluation; 'elevated' uses the "
                  "MPFR backend (W_SERIES_PRECISION_BITS overrides its width)")
      ->check(CLI::IsMember({"standard", "elevated"}));
}

SeriesVariant variant_from_name(const std::string& name) {
  if (name == "comtet") return SeriesVariant::Comtet;
  if (name == "improved") return SeriesVariant::ImprovedStirling;
  if (name == "eulerian") return SeriesVariant::ImprovedEulerian;
  throw std::domain_error("unknown series '" + name + "'");
}

// ---------------------------------------------------------------- eval ----

struct EvalOpts {
  std::string series;
  double x = std::nan("");
  double z_re = std::nan("");
  double z_im = 0.0;
  double p_re = 0.0;
  double p_im = 0.0;
  double alpha = std::nan("");
  int n_terms = 40;
  Common common;
};

// Elevated-precision u-series at real (sigma, tau).
PrecFloat u_elevated(const PrecFloat& sigma, const PrecFloat& tau, SeriesVariant v, int terms) {
  switch (v) {
    case SeriesVariant::Comtet:
      return comtet_u<PrecFloat>(sigma, tau, terms);
    case SeriesVariant::ImprovedStirling:
      return improved_u<PrecFloat>(sigma, tau, terms);
    case SeriesVariant::ImprovedEulerian:
      return eulerian_u<PrecFloat>(sigma, tau, terms);
    default:
      throw std::invalid_argument("wright-ln is not a u-series");
  }
}

int cmd_eval(const EvalOpts& o) {
  Output out = o.common.make_output();
  out.meta["series"] = o.series;
  out.meta["N"] = o.n_terms;
  out.columns = {"value_re", "value_im", "oracle_re", "oracle_im",
                 "abs_error", "rel_error", "residual"};

  const bool have_x = !std::isnan(o.x);
  const bool have_z = !std::isnan(o.z_re);
  if (have_x == have_z)
    throw std::domain_error("give the argument as either --x or --z-re/--z-im");
  const Cplx z = have_x ? Cplx(o.x) : Cplx(o.z_re, o.z_im);
  const bool have_alpha = !std::isnan(o.alpha);
  const bool have_p = (o.p_re != 0.0 || o.p_im != 0.0);
  out.meta["z"] = {z.re, z.im};

  Cplx value, oracle;
  double residual = 0.0;

  if (o.series == "wright-ln") {
    if (have_alpha || have_p)
      throw std::domain_error("wright-ln takes no --alpha or --p parameters");
    if (z.im != 0.0 || !(z.re > 0.0))
      throw std::domain_error("wright-ln needs a real argument x > 0");
    if (o.common.elevated()) {
      PrecFloat x(z.re);
      PrecFloat t = log(x);
      PrecFloat w0 = wright_omega_real(PrecFloat(0.0));
      auto a = wright_coeffs_recurrence_t<PrecFloat>(o.n_terms, w0);
      KahanAccumulator<PrecFloat> acc;
      acc.add(w0);
      PrecFloat tp(1.0);
      for (int n = 1; n <= o.n_terms; ++n) {
        tp = tp * t;
        acc.add(a[static_cast<size_t>(n - 1)] * tp);
      }
      value = Cplx(acc.sum.to_double());
      oracle = Cplx(lambert_w_real(0, x).to_double());
      residual = abs(acc.sum + log(acc.sum) - t).to_double();
    } else {
      double v = wright_series_eval(z.re, o.n_terms);
      value = Cplx(v);
      oracle = Cplx(lambert_w(0, z.re));
      residual = std::abs(v + std::log(v) - std::log(z.re));
    }
  } else if (have_alpha) {
    SeriesVariant variant = variant_from_name(o.series);
    if (have_p) throw std::domain_error("--alpha and --p are mutually exclusive");
    if (z.im != 0.0 || !(z.re > 1.0))
      throw std::domain_error("the alpha family needs a real argument x > 1");
    if (!(o.alpha > 0.0)) throw std::domain_error("--alpha must be positive");
    out.meta["alpha"] = o.alpha;
    if (o.common.elevated()) {
      PrecFloat x(z.re), al(o.alpha);
      PrecFloat l = log(x), ll = log(l);
      PrecFloat sigma = al / l, tau = al * ll / l;
      PrecFloat u = u_elevated(sigma, tau, variant, o.n_terms);
      PrecFloat v = (l - al * ll) + al * u;
      value = Cplx(v.to_double());
      oracle = Cplx((al * lambert_w_real(0, exp(l / al) / al)).to_double());
      residual = abs(fundamental_residual<PrecFloat>(sigma, tau, u)).to_double();
    } else {
      double v = phi_alpha(z.re, o.alpha, variant, o.n_terms);
      double l = std::log(z.re), ll = std::log(l);
      double sigma = o.alpha / l, tau = o.alpha * ll / l;
      value = Cplx(v);
      oracle = Cplx(o.alpha * lambert_w(0, std::pow(z.re, 1.0 / o.alpha) / o.alpha));
      residual = std::abs(fundamental_residual<double>(sigma, tau, (v - (l - o.alpha * ll)) / o.alpha));
    }
  } else {
    SeriesVariant variant = variant_from_name(o.series);
    const Cplx p(o.p_re, o.p_im);
    out.meta["p"] = {p.re, p.im};
    if (o.common.elevated()) {
      if (z.im != 0.0 || p.im != 0.0 || !(z.re > 0.0))
        throw std::domain_error("elevated precision supports the real path only");
      PrecFloat x(z.re), pp(p.re);
      PrecFloat l = log(x);
      PrecFloat q = pp + l;
      if (!(q.to_double() > 0.0))
        throw std::domain_error("elevated real path needs p + ln z > 0");
      PrecFloat lq = log(q);
      PrecFloat sigma = PrecFloat(1.0) / q, tau = (pp + lq) / q;
      PrecFloat u = u_elevated(sigma, tau, variant, o.n_terms);
      value = Cplx(((l - lq) + u).to_double());
      oracle = Cplx(lambert_w_real(0, x).to_double());
      residual = abs(fundamental_residual<PrecFloat>(sigma, tau, u)).to_double();
    } else {
      value = transformed_w(z, p, variant, o.n_terms);
      oracle = lambert_w(0, z);
      if (z.im == 0.0 && p.im == 0.0 && z.re > 0.0 && p.re + std::log(z.re) > 0.0) {
        TransformedVarsReal tv = transformed_vars_real(z.re, p.re);
        residual = std::abs(fundamental_residual<double>(tv.sigma, tv.tau, value.re - tv.head));
      } else {
        TransformedVars tv = transformed_vars(z, p);
        residual = abs(fundamental_residual<Cplx>(tv.sigma, tv.tau, value - tv.head));
      }
    }
  }

  double abs_err = abs(value - oracle);
  double rel_err = abs_err / abs(oracle);
  out.add_row(json::array(
      {value.re, value.im, oracle.re, oracle.im, abs_err, rel_err, residual}));
  out.write();
  return 0;
}

// -------------------------------------------------------------- coeffs ----

struct CoeffsOpts {
  std::string series;
  int n_max = 20;
  long sigma_num = 1, sigma_den = 1;
  long w_num = 0, w_den = 1;
  bool have_w = false;
  std::string method = "stirling2";
  Common common;
};

WrightMethod method_from_name(const std::string& name) {
  if (name == "eulerian") return WrightMethod::Eulerian;
  if (name == "stirling1") return WrightMethod::AssocStirling1;
  if (name == "stirling2") return WrightMethod::AssocStirling2;
  if (name == "recurrence") return WrightMethod::Recurrence;
  throw std::domain_error("unknown coefficient method '" + name + "'");
}

int cmd_coeffs(const CoeffsOpts& o) {
  Output out = o.common.make_output();
  out.meta["series"] = o.series;
  if (o.n_max < 1) throw std::domain_error("--N must be at least 1");

  if (o.series == "wright-ln") {
    if (o.have_w) {
      // Exact rational coefficients at a rational evaluation point.
      if (o.w_den == 0) throw std::domain_error("--w-den must be nonzero");
      Rational w = make_rational(o.w_num, o.w_den);
      out.meta["w"] = w.get_str();
      out.meta["method"] = o.method;
      out.columns = {"n", "exact", "value"};
      WrightMethod m = method_from_name(o.method);
      for (int n = 1; n <= o.n_max; ++n) {
        Rational a = wright_series_a_exact(n, m, w);
        out.add_row(json::array({n, a.get_str(), to_double(a)}));
      }
    } else {
      // Deep a_n runs drown in double rounding, so the recurrence always
      // runs on the elevated backend here.
      out.meta["precision"] = "elevated";
      out.meta["significand_bits"] = static_cast<long>(PrecFloat::default_bits());
      out.meta["note"] = "a_n recurrence always runs at elevated precision";
      out.columns = {"n", "value", "asymptotic", "ratio"};
      PrecFloat w0 = wright_omega_real(PrecFloat(0.0));
      auto a = wright_coeffs_recurrence_t<PrecFloat>(o.n_max, w0);
      for (int n = 1; n <= o.n_max; ++n) {
        double v = a[static_cast<size_t>(n - 1)].to_double();
        double est = an_asymptotic(n);
        out.add_row(json::array({n, v, est, v / est}));
      }
    }
    out.write();
    return 0;
  }

  if (o.series == "improved" || o.series == "comtet") {
    // The tau-coefficients c_m(sigma) belong to the improved arrangement;
    // the Comtet arrangement has bivariate terms with no single-coefficient
    // table, so point at eval instead.
    if (o.series == "comtet")
      throw std::domain_error(
          "the comtet arrangement has bivariate coefficients; use 'coeffs --series improved' "
          "for c_m(sigma) or 'eval' for values");
    if (o.sigma_den == 0) throw std::domain_error("--sigma-den must be nonzero");
    Rational sigma = make_rational(o.sigma_num, o.sigma_den);
    double sd = to_double(sigma);
    out.meta["sigma"] = sigma.get_str();
    out.columns = {"m", "exact", "value", "asymptotic", "ratio"};
    for (int m = 1; m <= o.n_max; ++m) {
      Rational c = coeff_cm_exact(sigma, m);
      double v = to_double(c);
      json est, ratio;
      if (sd != -1.0) {
        double e = cm_asymptotic(sd, m);
        est = e;
        ratio = v / e;
      }
      out.add_row(json::array({m, c.get_str(), v, est, ratio}));
    }
    out.write();
    return 0;
  }

  throw std::domain_error("coeffs supports --series improved or wright-ln");
}

// ------------------------------------------------------------ boundary ----

struct BoundaryOpts {
  std::string curve;
  int samples = 100;
  std::string grid;
  Common common;
};

int cmd_boundary(const BoundaryOpts& o) {
  Output out = o.common.make_output();
  out.meta["curve"] = o.curve;
  out.columns = {"param", "re_z", "im_z", "residual"};

  if (o.curve == "comtet-complex" || o.curve == "improved-complex") {
    if (!o.grid.empty())
      throw std::domain_error("complex boundary curves take --samples, not --grid");
    BoundaryCurve c = (o.curve == "comtet-complex") ? comtet_complex_boundary(o.samples)
                                                    : improved_complex_boundary(o.samples);
    out.meta["param"] = (o.curve == "comtet-complex") ? "eta" : "theta";
    out.meta["param_range"] = {c.param_lo, c.param_hi};
    for (const auto& s : c.samples)
      out.add_row(json::array({s.param, s.re, s.im, s.residual}));
    out.write();
    return 0;
  }

  // Parameter sweeps share the schema: param, threshold (re_z), 0, residual.
  std::string def;
  if (o.curve == "x-alpha" || o.curve == "x-alpha-improved")
    def = "0.1:2.6:51";
  else if (o.curve == "z-p")
    def = "-1:1:41";
  else if (o.curve == "z-p-improved" || o.curve == "z-p-improved-approx")
    def = "-1:0.95:40";
  else if (o.curve == "div-lower" || o.curve == "div-upper")
    def = "0.1:3:30";
  else
    throw std::domain_error("unknown curve '" + o.curve + "'");
  Grid g = parse_grid(o.grid.empty() ? def : o.grid);
  out.meta["param"] = (o.curve.rfind("z-p", 0) == 0) ? "p" : "alpha";

  for (int i = 0; i < g.count; ++i) {
    double t = g.at(i);
    double v = 0.0, resid = 0.0;
    if (o.curve == "x-alpha") {
      Threshold th = comtet_real_threshold(t);
      v = th.value;
      resid = th.residual;
    } else if (o.curve == "x-alpha-improved") {
      AlphaDomain d = alpha_domain(t);
      if (d.case_id == 1) {
        v = d.x_alpha.value;
        resid = d.x_alpha.residual;
      } else {
        v = 1.0;  // sigma is unrestricted, so the series reaches every x > 1
      }
    } else if (o.curve == "z-p") {
      Threshold th = transformed_comtet_threshold(t);
      v = th.value;
      resid = th.residual;
    } else if (o.curve == "z-p-improved" || o.curve == "z-p-improved-approx") {
      Threshold th = transformed_improved_threshold(
          t, o.curve == "z-p-improved" ? ThresholdMode::Exact : ThresholdMode::Approx);
      v = th.value;
      resid = th.residual;
    } else {
      auto iv = comtet_divergence_interval(t);
      v = (o.curve == "div-lower") ? iv.first : iv.second;
    }
    out.add_row(json::array({t, v, 0.0, resid}));
  }
  out.write();
  return 0;
}

// ------------------------------------------------------------ accuracy ----

struct AccuracyOpts {
  std::string series = "comtet";
  std::string sweep = "z";
  std::string metric = "ratio";
  std::string grid;
  double x_fixed = std::nan("");
  double p_fixed = 0.0;
  Common common;
};

int cmd_accuracy(const AccuracyOpts& o) {
  SeriesVariant variant = variant_from_name(o.series);
  Output out = o.common.make_output();
  out.meta["series"] = o.series;
  out.meta["metric"] = o.metric;
  out.meta["sweep"] = o.sweep;
  out.columns = {"param", "n10", "n20", "n40"};
  const int ns[3] = {10, 20, 40};

  Grid g;
  if (o.sweep == "z") {
    g = parse_grid(o.grid.empty() ? "1.02:30:59" : o.grid);
    out.meta["p"] = o.p_fixed;
  } else if (o.sweep == "p") {
    if (std::isnan(o.x_fixed)) throw std::domain_error("--sweep p needs a fixed --x");
    g = parse_grid(o.grid.empty() ? "-1:1:41" : o.grid);
    out.meta["x"] = o.x_fixed;
  } else {
    throw std::domain_error("--sweep must be z or p");
  }

  for (int i = 0; i < g.count; ++i) {
    double t = g.at(i);
    double z = (o.sweep == "z") ? t : o.x_fixed;
    double p = (o.sweep == "z") ? o.p_fixed : t;
    if (!(z > 0.0)) throw std::domain_error("accuracy sweeps need z > 0");
    if (p + std::log(z) == 0.0)
      throw std::domain_error("grid hits the singular point z = e^{-p}");
    json row = json::array({t});
    for (int n : ns) {
      double approx, w;
      if (o.common.elevated()) {
        PrecFloat zp(z), pp(p);
        PrecFloat l = log(zp);
        PrecFloat q = pp + l;
        if (!(q.to_double() > 0.0))
          throw std::domain_error("elevated accuracy sweeps need p + ln z > 0");
        PrecFloat lq = log(q);
        PrecFloat u = u_elevated(PrecFloat(1.0) / q, (pp + lq) / q, variant, n);
        approx = ((l - lq) + u).to_double();
        w = lambert_w_real(0, zp).to_double();
      } else {
        // For p + ln z < 0 the partial sums are complex; the ratio metric
        // reports their real part against the oracle.
        approx = transformed_w(Cplx(z), Cplx(p), variant, n).re;
        w = lambert_w(0, z);
      }
      row.push_back(o.metric == "ratio" ? approx / w
                                        : std::log10(std::abs(approx - w) / std::abs(w)));
    }
    out.add_row(std::move(row));
  }
  out.write();
  return 0;
}

// -------------------------------------------------------- branch-table ----

struct BranchTableOpts {
  std::string grid;
  Common common;
};

int cmd_branch_table(const BranchTableOpts& o) {
  if (!o.grid.empty()) {
    // Error sweep across the branch -1 domain (-1/e, 0).
    Grid g = parse_grid(o.grid);
    Output out = o.common.make_output();
    out.meta["view"] = "branch -1 approximation errors";
    out.columns = {"param", "err_transformed", "err_one_term"};
    for (int i = 0; i < g.count; ++i) {
      double z = g.at(i);
      double w = lambert_w(-1, z);
      Cplx hat = branch_m1_approx(z, BranchApproxForm::Transformed);
      Cplx one = branch_m1_approx(z, BranchApproxForm::Untransformed);
      out.add_row(json::array({z, abs(hat - Cplx(w)), abs(one - Cplx(w))}));
    }
    out.write();
    return 0;
  }

  // The fixed five-row comparison table, 4-decimal view.
  const double rows[5] = {-0.01, -0.1, -0.2, -0.3, -std::exp(-1.0)};
  const char* labels[5] = {"-0.01", "-0.1", "-0.2", "-0.3", "-1/e"};
  if (o.common.format == "json") {
    Output out = o.common.make_output();
    out.columns = {"z", "w_oracle", "w_transformed", "w_one_term_re", "w_one_term_im"};
    for (int i = 0; i < 5; ++i) {
      double z = rows[i];
      Cplx one = branch_m1_approx(z, BranchApproxForm::Untransformed);
      out.add_row(json::array({z, lambert_w(-1, z),
                               branch_m1_approx(z, BranchApproxForm::Transformed).re, one.re,
                               one.im}));
    }
    out.write();
    return 0;
  }
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (o.common.out != "-") {
    file.open(o.common.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + o.common.out);
    os = &file;
  }
  char line[160];
  std::snprintf(line, sizeof line, "%8s  %10s  %10s  %22s\n", "z", "W_{-1}", "What_{-1}",
                "W^{(1)}_{-1}");
  *os << line;
  for (int i = 0; i < 5; ++i) {
    double z = rows[i];
    double w = lambert_w(-1, z);
    double hat = branch_m1_approx(z, BranchApproxForm::Transformed).re;
    Cplx one = branch_m1_approx(z, BranchApproxForm::Untransformed);
    std::snprintf(line, sizeof line, "%8s  %10.4f  %10.4f  %12.4f %+.4fi\n", labels[i], w, hat,
                  one.re, one.im);
    *os << line;
  }
  return 0;
}

// ---------------------------------------------------------- identities ----

struct IdentitiesOpts {
  long max_n = 12;
  std::string corrupt;
  Common common;
};

int cmd_identities(const IdentitiesOpts& o) {
  if (o.max_n < 1) throw std::domain_error("--max-n must be at least 1");
  if (!o.corrupt.empty()) {
    // Testing hook: add 1 to one triangle entry and watch the suites notice.
    char name[64];
    long n = 0, k = 0;
    if (std::sscanf(o.corrupt.c_str(), "%63[^:]:%ld:%ld", name, &n, &k) != 3)
      throw std::domain_error("--corrupt-triangle wants name:n:k");
    IntTriangle* t = default_tables().by_name(name);
    if (!t) throw std::domain_error(std::string("unknown triangle '") + name + "'");
    t->poison(n, k, ExactInt(1));
  }

  struct Suite {
    std::string label;
    bool ok;
    std::string diag;
  };
  std::vector<Suite> suites;
  auto run = [&suites](std::string label, auto&& fn) {
    std::string diag;
    bool ok = fn(&diag);
    suites.push_back({std::move(label), ok, std::move(diag)});
  };

  const Rational lams[5] = {make_rational(1, 2), make_rational(-1, 2), make_rational(2, 1),
                            make_rational(5, 3), make_rational(-3, 1)};
  for (const Rational& lam : lams) {
    run("carlitz-riordan lambda=" + lam.get_str() + " n<=" + std::to_string(o.max_n),
        [&](std::string* diag) {
          for (long n = 1; n <= o.max_n; ++n)
            if (!check_carlitz_riordan(n, lam, default_tables(), diag)) return false;
          return true;
        });
  }
  run("binomial-pair n,q<=" + std::to_string(o.max_n), [&](std::string* diag) {
    for (long n = 1; n <= o.max_n; ++n)
      for (long q = 0; q <= n; ++q)
        if (!check_binomial_pair(n, q, default_tables(), diag)) return false;
    return true;
  });
  run("alternating-sum-2assoc m<=" + std::to_string(o.max_n), [&](std::string* diag) {
    for (long m = 1; m <= o.max_n; ++m)
      if (!check_alternating_sum_2assoc(m, default_tables(), diag)) return false;
    return true;
  });
  long wn = std::min(o.max_n, 15L);
  run("euler-d-2assoc w=2/3 n<=" + std::to_string(wn), [&](std::string* diag) {
    for (long n = 1; n <= wn; ++n)
      if (!check_euler_d_2assoc(n, make_rational(2, 3), default_tables(), diag)) return false;
    return true;
  });
  long nn = std::min(o.max_n, 20L);
  run("euler-d-2assoc numeric w=omega0 n<=" + std::to_string(nn), [&](std::string* diag) {
    for (long n = 1; n <= nn; ++n)
      if (!check_euler_d_2assoc_numeric(n, omega_constant(), 1e-10)) {
        if (diag) *diag = "n = " + std::to_string(n);
        return false;
      }
    return true;
  });

  bool all_ok = true;
  for (const Suite& s : suites) {
    std::cout << (s.ok ? "PASS  " : "FAIL  ") << s.label;
    if (!s.ok && !s.diag.empty()) std::cout << "  (" << s.diag << ")";
    std::cout << "\n";
    all_ok = all_ok && s.ok;
  }
  return all_ok ? 0 : 1;
}

// ----------------------------------------------------------- constants ----

int cmd_constants(const Common& common) {
  Output out = common.make_output();
  out.columns = {"name", "value", "residual"};
  auto row = [&out](const char* name, double v, double r) {
    out.add_row(json::array({name, v, r}));
  };

  double w0 = omega_constant();
  row("omega_0", w0, std::abs(std::exp(-w0) - w0));
  AlphaDomain d1 = alpha_domain(1.0);
  row("sigma_1", d1.sigma_alpha.value, d1.sigma_alpha.residual);
  row("x_1", d1.x_alpha.value, d1.x_alpha.residual);
  row("sigma_1_approx", sigma1_approx(), 0.0);
  Threshold sc = sigma_c_threshold();
  Threshold ac = alpha_c_threshold();
  row("sigma_c", sc.value, sc.residual);
  row("alpha_c", ac.value, ac.residual);
  auto xm = x_of_alpha_max();
  row("alpha_star", xm.first, 0.0);
  row("x_star", xm.second, 0.0);
  Threshold wr = wright_radius();
  row("wright_radius", wr.value, wr.residual);
  auto wi = wright_real_interval();
  row("wright_x_lo", wi.first, 0.0);
  row("wright_x_hi", wi.second, 0.0);
  row("tau_star_sigma_1", improved_radius(Cplx(1.0)).value, 0.0);
  double sw = 1.0 / lambert_w(0, std::exp(-1.0));
  row("theta1_switch", sw, std::abs(1.0 + 1.0 / sw - std::log(sw)));
  Threshold z1 = transformed_comtet_threshold(1.0);
  row("z_p_comtet_at_1", z1.value, z1.residual);
  out.write();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Series expansions of the Lambert W function: evaluation against an "
      "independent oracle, coefficient tables, convergence thresholds and "
      "boundary curves, accuracy sweeps, and the exact identity suites."};
  app.require_subcommand(1);
  int rc = 0;

  EvalOpts ev;
  auto* eval = app.add_subcommand("eval", "Evaluate a truncated series against the oracle");
  eval->add_option("--series", ev.series, "comtet | improved | eulerian | wright-ln")
      ->required();
  eval->add_option("--x", ev.x, "Real argument");
  eval->add_option("--z-re", ev.z_re, "Complex argument, real part");
  eval->add_option("--z-im", ev.z_im, "Complex argument, imaginary part");
  eval->add_option("--p-re", ev.p_re, "Shift parameter, real part");
  eval->add_option("--p-im", ev.p_im, "Shift parameter, imaginary part");
  eval->add_option("--alpha", ev.alpha, "Evaluate the alpha family instead of the p family");
  eval->add_option("--N", ev.n_terms, "Truncation order");
  add_common(eval, ev.common);
  eval->callback([&rc, &ev] { rc = cmd_eval(ev); });

  CoeffsOpts co;
  auto* coeffs = app.add_subcommand("coeffs", "Coefficient tables: exact, double, asymptotic");
  coeffs->add_option("--series", co.series, "improved | wright-ln")->required();
  coeffs->add_option("--N", co.n_max, "Number of coefficients");
  coeffs->add_option("--sigma-num", co.sigma_num, "sigma numerator (improved)");
  coeffs->add_option("--sigma-den", co.sigma_den, "sigma denominator (improved)");
  auto* wopt = coeffs->add_option("--w-num", co.w_num,
                                  "Rational evaluation point numerator (wright-ln exact)");
  coeffs->add_option("--w-den", co.w_den, "Rational evaluation point denominator");
  coeffs->add_option("--method", co.method,
                     "wright-ln construction: eulerian | stirling1 | stirling2 | recurrence");
  add_common(coeffs, co.common);
  coeffs->callback([&rc, &co, wopt] {
    co.have_w = wopt->count() > 0;
    rc = cmd_coeffs(co);
  });

  BoundaryOpts bo;
  auto* boundary =
      app.add_subcommand("boundary", "Convergence-domain boundary and threshold curves");
  boundary
      ->add_option("--curve", bo.curve,
                   "comtet-complex | improved-complex | x-alpha | x-alpha-improved | z-p | "
                   "z-p-improved | z-p-improved-approx | div-lower | div-upper")
      ->required();
  boundary->add_option("--samples", bo.samples, "Sample count for the complex curves")
      ->check(CLI::PositiveNumber);
  boundary->add_option("--grid", bo.grid, "Parameter grid start:stop:count");
  add_common(boundary, bo.common);
  boundary->callback([&rc, &bo] { rc = cmd_boundary(bo); });

  AccuracyOpts ao;
  auto* accuracy =
      app.add_subcommand("accuracy", "Truncation accuracy sweeps at N = 10, 20, 40");
  accuracy->add_option("--series", ao.series, "comtet | improved | eulerian");
  accuracy->add_option("--sweep", ao.sweep, "Sweep variable: z | p");
  accuracy->add_option("--metric", ao.metric, "ratio | log10err")
      ->check(CLI::IsMember({"ratio", "log10err"}));
  accuracy->add_option("--grid", ao.grid, "Sweep grid start:stop:count");
  accuracy->add_option("--x", ao.x_fixed, "Fixed argument for the p sweep");
  accuracy->add_option("--p-re", ao.p_fixed, "Fixed shift for the z sweep");
  add_common(accuracy, ao.common);
  accuracy->callback([&rc, &ao] { rc = cmd_accuracy(ao); });

  BranchTableOpts bt;
  auto* branch = app.add_subcommand(
      "branch-table", "Branch -1 closed-form approximations; fixed table or error sweep");
  branch->add_option("--grid", bt.grid, "Optional z grid inside (-1/e, 0) for an error sweep");
  add_common(branch, bt.common);
  branch->callback([&rc, &bt] { rc = cmd_branch_table(bt); });

  IdentitiesOpts io;
  auto* identities =
      app.add_subcommand("identities", "Exact combinatorial identity suites (exit 1 on failure)");
  identities->add_option("--max-n", io.max_n, "Depth of each suite");
  identities->add_option("--corrupt-triangle", io.corrupt,
                         "Testing hook: perturb one triangle entry, name:n:k");
  add_common(identities, io.common);
  identities->callback([&rc, &io] { rc = cmd_identities(io); });

  Common cc;
  auto* constants = app.add_subcommand("constants", "Named constants with their residuals");
  add_common(constants, cc);
  constants->callback([&rc, &cc] { rc = cmd_constants(cc); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
