// Python bindings for the main operations: the oracle, the series
// evaluators, the convergence thresholds, and the identity suites. The
// internal complex type converts to and from Python complex at the edge.
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wseries/asymptotics.hpp"
#include "wseries/combinatorics.hpp"
#include "wseries/convergence.hpp"
#include "wseries/oracle.hpp"
#include "wseries/series.hpp"

namespace py = pybind11;
using namespace wseries;

namespace {

using StdCplx = std::complex<double>;

Cplx from_std(StdCplx z) { return Cplx(z.real(), z.imag()); }
StdCplx to_std(const Cplx& z) { return {z.re, z.im}; }

SeriesVariant variant_from_name(const std::string& name) {
  if (name == "comtet") return SeriesVariant::Comtet;
  if (name == "improved") return SeriesVariant::ImprovedStirling;
  if (name == "eulerian") return SeriesVariant::ImprovedEulerian;
  throw std::domain_error("unknown series '" + name + "'");
}

WrightMethod method_from_name(const std::string& name) {
  if (name == "eulerian") return WrightMethod::Eulerian;
  if (name == "stirling1") return WrightMethod::AssocStirling1;
  if (name == "stirling2") return WrightMethod::AssocStirling2;
  if (name == "recurrence") return WrightMethod::Recurrence;
  throw std::domain_error("unknown coefficient method '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(wseries_py, m) {
  m.doc() =
      "Series expansions of the Lambert W function: oracle, evaluators, "
      "convergence thresholds, coefficient tables and identity suites";

  // ------------------------------------------------------------- oracle ----
  m.def(
      "lambert_w", [](int k, StdCplx z) { return to_std(lambert_w(k, from_std(z))); },
      py::arg("k"), py::arg("z"), "Branch k of W(z) for k in {-1, 0, 1}");
  m.def(
      "lambert_w_real", [](int k, double x) { return lambert_w_real(k, x); }, py::arg("k"),
      py::arg("x"), "Real segment of branch k in {-1, 0}");
  m.def(
      "wright_omega", [](StdCplx z) { return to_std(wright_omega(from_std(z))); }, py::arg("z"));
  m.def(
      "wright_omega_real", [](double t) { return wright_omega_real(t); }, py::arg("t"));
  m.def("omega_constant", &omega_constant, "The solution of w e^w = 1");

  // ------------------------------------------------------------- series ----
  m.def(
      "phi_alpha",
      [](double x, double alpha, const std::string& series, int n) {
        return phi_alpha(x, alpha, variant_from_name(series), n);
      },
      py::arg("x"), py::arg("alpha"), py::arg("series") = "improved", py::arg("n") = 40,
      "Truncated alpha-family evaluation, approximating alpha W(x^(1/alpha)/alpha)");
  m.def(
      "transformed_w",
      [](StdCplx z, StdCplx p, const std::string& series, int n) {
        return to_std(transformed_w(from_std(z), from_std(p), variant_from_name(series), n));
      },
      py::arg("z"), py::arg("p") = StdCplx(0.0), py::arg("series") = "comtet",
      py::arg("n") = 40, "Truncated p-shifted series for W(z)");
  m.def(
      "wright_series_eval", [](double x, int n) { return wright_series_eval(x, n); },
      py::arg("x"), py::arg("n") = 40, "Truncated ln-x series for W(x), x > 0");
  m.def(
      "wright_series_a",
      [](int n, const std::string& method) {
        return wright_series_a(n, method_from_name(method));
      },
      py::arg("n"), py::arg("method") = "recurrence", "n-th coefficient of the ln-x series");
  m.def(
      "branch_m1_approx",
      [](double z, const std::string& form) {
        if (form == "transformed") return to_std(branch_m1_approx(z, BranchApproxForm::Transformed));
        if (form == "untransformed")
          return to_std(branch_m1_approx(z, BranchApproxForm::Untransformed));
        throw std::domain_error("form must be 'transformed' or 'untransformed'");
      },
      py::arg("z"), py::arg("form") = "transformed",
      "Closed-form starting approximation of W_{-1} on (-1/e, 0)");

  // -------------------------------------------------------- convergence ----
  m.def(
      "comtet_real_threshold", [](double alpha) { return comtet_real_threshold(alpha).value; },
      py::arg("alpha"), "x_alpha: the series converges exactly for x > x_alpha");
  m.def(
      "transformed_comtet_threshold",
      [](double p) { return transformed_comtet_threshold(p).value; }, py::arg("p"));
  m.def(
      "transformed_improved_threshold",
      [](double p, bool exact) {
        return transformed_improved_threshold(p, exact ? ThresholdMode::Exact
                                                       : ThresholdMode::Approx)
            .value;
      },
      py::arg("p"), py::arg("exact") = true);
  m.def(
      "comtet_converges",
      [](StdCplx sigma, StdCplx tau) {
        return comtet_converges(from_std(sigma), from_std(tau)).converges;
      },
      py::arg("sigma"), py::arg("tau"), "The sigma-tau convergence criterion");
  m.def(
      "improved_radius", [](StdCplx sigma) { return improved_radius(from_std(sigma)).value; },
      py::arg("sigma"), "Radius tau*(sigma) of the improved series");
  m.def(
      "comtet_complex_boundary",
      [](int n) {
        std::vector<std::tuple<double, double, double, double>> rows;
        for (const auto& s : comtet_complex_boundary(n).samples)
          rows.emplace_back(s.param, s.re, s.im, s.residual);
        return rows;
      },
      py::arg("n_samples") = 100, "Boundary polyline as (param, re, im, residual) tuples");
  m.def(
      "improved_complex_boundary",
      [](int n) {
        std::vector<std::tuple<double, double, double, double>> rows;
        for (const auto& s : improved_complex_boundary(n).samples)
          rows.emplace_back(s.param, s.re, s.im, s.residual);
        return rows;
      },
      py::arg("n_samples") = 100);
  m.def("constants", [] {
    py::dict d;
    const auto d1 = alpha_domain(1.0);
    const auto xm = x_of_alpha_max();
    d["omega_0"] = omega_constant();
    d["sigma_1"] = d1.sigma_alpha.value;
    d["x_1"] = d1.x_alpha.value;
    d["sigma_1_approx"] = sigma1_approx();
    d["sigma_c"] = sigma_c_threshold().value;
    d["alpha_c"] = alpha_c_threshold().value;
    d["alpha_star"] = xm.first;
    d["x_star"] = xm.second;
    d["wright_radius"] = wright_radius().value;
    return d;
  });

  // --------------------------------------------------------- identities ----
  m.def(
      "check_identities",
      [](long max_n) {
        const Tables& t = default_tables();
        const Rational lams[5] = {make_rational(1, 2), make_rational(-1, 2),
                                  make_rational(2, 1), make_rational(5, 3),
                                  make_rational(-3, 1)};
        for (const Rational& lam : lams)
          for (long n = 1; n <= max_n; ++n)
            if (!check_carlitz_riordan(n, lam, t, nullptr)) return false;
        for (long n = 1; n <= max_n; ++n)
          for (long q = 0; q <= n; ++q)
            if (!check_binomial_pair(n, q, t, nullptr)) return false;
        for (long m = 1; m <= max_n; ++m)
          if (!check_alternating_sum_2assoc(m, t, nullptr)) return false;
        for (long n = 1; n <= max_n; ++n)
          if (!check_euler_d_2assoc(n, make_rational(2, 3), t, nullptr)) return false;
        return true;
      },
      py::arg("max_n") = 10, "Run every exact identity family up to depth max_n");
}
