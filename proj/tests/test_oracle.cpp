// Root-finding oracle for Lambert W and Wright omega: frozen reference
// values, the defining-equation residual over random samples, branch
// symmetries, and domain guards.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "wseries/oracle.hpp"
#include "wseries/precfloat.hpp"
#include "wseries/series.hpp"

using namespace wseries;

namespace {

constexpr double kPi = 3.141592653589793;

bool close(const Cplx& a, double re, double im, double tol) {
  return std::fabs(a.re - re) <= tol && std::fabs(a.im - im) <= tol;
}

}  // namespace

TEST_CASE("principal branch at frozen real points") {
  auto near = [](double x) { return doctest::Approx(x).epsilon(5e-15); };
  CHECK(lambert_w(0, 10.0) == near(1.7455280027406993831));
  CHECK(lambert_w(0, 5.0) == near(1.3267246652422002236));
  CHECK(lambert_w(0, 3.0) == near(1.04990889496403996));
  CHECK(lambert_w(0, 2.0) == near(0.85260550201372549135));
  CHECK(lambert_w(0, 1.5) == near(0.72586135776622625705));
  CHECK(lambert_w(0, 1.1) == near(0.60230368332423955208));
  CHECK(lambert_w(0, 1.0) == near(0.56714329040978387));
  CHECK(lambert_w(0, 0.5) == near(0.35173371124919582602));
  CHECK(lambert_w(0, std::exp(-1.0)) == near(0.27846454276107379511));
  CHECK(lambert_w(0, std::exp(2.0)) == near(1.5571455989976114169));
  CHECK(lambert_w(0, std::exp(3.0)) == near(2.2079400315693229986));
  CHECK(lambert_w(0, std::exp(3.5)) == near(2.559994780412122215));
  CHECK(lambert_w(0, 50.0) == near(2.8608901779822108668));
  CHECK(lambert_w(0, 400.0) == near(4.4896825495193653008));
  CHECK(lambert_w(0, -0.25) == near(-0.35740295618138890307));
  CHECK(lambert_w(-1, -0.25) == near(-2.1532923641103496492));
  CHECK(lambert_w(0, 0.0) == 0.0);
  // At the branch point both real branches hit -1 exactly.
  CHECK(lambert_w(0, -std::exp(-1.0)) == -1.0);
  CHECK(lambert_w(-1, -std::exp(-1.0)) == -1.0);
  // 4.4e-13 above the branch point; agrees with -1 - sqrt(2(ez+1)) to O(z+1/e).
  CHECK(lambert_w(-1, -0.367879441171) == doctest::Approx(-1.0000015507242041579).epsilon(1e-10));
}

TEST_CASE("complex branches at frozen points") {
  CHECK(close(lambert_w(0, Cplx(1, 1)), 0.65696606923043640587, 0.32545033941341502999, 1e-13));
  CHECK(close(lambert_w(1, Cplx(1, 1)), -1.3428489407008043012, 5.2472493742914012057, 1e-13));
  CHECK(close(lambert_w(-1, Cplx(1, -1)), -1.3428489407008043012, -5.2472493742914012057, 1e-13));

  // Just off the branch point -1/e the three supported branches separate.
  const double be = -std::exp(-1.0);
  CHECK(close(lambert_w(0, Cplx(be, 1e-3)), -0.94790387486938526634, 0.050368196391901324898,
              1e-13));
  CHECK(close(lambert_w(-1, Cplx(be, 1e-3)), -1.0520914180450129534, -0.053992563812545052567,
              1e-13));
  CHECK(close(lambert_w(-1, Cplx(be, -1e-3)), -3.088501303219933378, -7.458676867597474814,
              1e-13));
  CHECK(close(lambert_w(1, Cplx(be, -1e-3)), -1.0520914180450129534, 0.053992563812545052567,
              1e-13));
  CHECK(close(lambert_w(1, Cplx(be, 1e-3)), -3.088501303219933378, 7.458676867597474814, 1e-13));

  // Pinch against the negative real axis where branches 0/-1 nearly touch.
  CHECK(close(lambert_w(0, Cplx(-0.368079441171, -1e-6)), -0.99955526178448328434,
              -0.032967241340373820702, 1e-13));
  CHECK(close(lambert_w(-1, Cplx(-0.368079441171, 1e-6)), -0.9997200512754789159,
              -0.032970863834309888096, 1e-13));
  CHECK(close(lambert_w(1, Cplx(-0.367879441171, 0.0)), -3.088843015614287868,
              7.4614892856541050747, 1e-13));
}

TEST_CASE("defining-equation residual over 1000 random points") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> logr(std::log(1e-3), std::log(1e3));
  std::uniform_real_distribution<double> arg(-kPi + 1e-9, kPi - 1e-9);
  for (int i = 0; i < 1000; ++i) {
    const int k = (i % 3) - 1;
    const double r = std::exp(logr(rng)), th = arg(rng);
    const Cplx z(r * std::cos(th), r * std::sin(th));
    const Cplx w = lambert_w(k, z);
    const double resid = abs(w * exp(w) - z);
    CHECK(resid <= 1e-14 * std::max(1.0, abs(z)));
  }
}

TEST_CASE("conjugate symmetry of the branches") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> re(-3.0, 3.0), im(1e-6, 3.0);
  for (int i = 0; i < 100; ++i) {
    const Cplx z(re(rng), im(rng));
    const Cplx zc(z.re, -z.im);
    const Cplx w0 = lambert_w(0, z), w0c = lambert_w(0, zc);
    CHECK(std::fabs(w0.re - w0c.re) <= 1e-14 * std::max(1.0, std::fabs(w0.re)));
    CHECK(std::fabs(w0.im + w0c.im) <= 1e-14 * std::max(1.0, std::fabs(w0.im)));
    // Mirroring z swaps the +-1 branches.
    const Cplx w1 = lambert_w(1, z), wm1c = lambert_w(-1, zc);
    CHECK(std::fabs(w1.re - wm1c.re) <= 1e-14 * std::max(1.0, std::fabs(w1.re)));
    CHECK(std::fabs(w1.im + wm1c.im) <= 1e-14 * std::max(1.0, std::fabs(w1.im)));
  }
}

TEST_CASE("principal branch is increasing on the real line") {
  double prev = lambert_w(0, -std::exp(-1.0));
  for (int i = 1; i <= 300; ++i) {
    // Grid from just above -1/e out to 100, denser near the branch point.
    const double t = i / 300.0;
    const double z = -std::exp(-1.0) + (std::exp(5.0 * t) - 1.0) / (std::exp(5.0) - 1.0) * 100.0;
    const double w = lambert_w(0, z);
    CHECK(w > prev);
    prev = w;
  }
}

TEST_CASE("real domain guards") {
  CHECK_THROWS_AS(lambert_w(0, -0.5), std::domain_error);
  CHECK_THROWS_AS(lambert_w(-1, 0.1), std::domain_error);
  CHECK_THROWS_AS(lambert_w(-1, 0.0), std::domain_error);
  CHECK_THROWS_AS(lambert_w(-1, -0.5), std::domain_error);
  CHECK_THROWS_AS(lambert_w(2, 1.0), std::domain_error);
  CHECK_THROWS_AS(lambert_w(1, Cplx(0.0, 0.0)), std::domain_error);
  CHECK_THROWS_AS(lambert_w(2, Cplx(1.0, 1.0)), std::domain_error);
}

TEST_CASE("wright omega on the real line and round trips") {
  CHECK(wright_omega_real<double>(0.0) == omega_constant());
  for (double w : {0.5, 2.0, 5.0}) {
    const double t = w + std::log(w);
    CHECK(wright_omega_real<double>(t) == doctest::Approx(w).epsilon(1e-15));
  }
  // Deep negative arguments underflow to exp(t); large ones follow t - ln t.
  CHECK(wright_omega_real<double>(-50.0) == doctest::Approx(std::exp(-50.0)).epsilon(1e-13));
  const double t = 40.0;
  const double om = wright_omega_real<double>(t);
  CHECK(std::fabs(om + std::log(om) - t) <= 1e-14 * t);
}

TEST_CASE("wright omega at frozen complex points") {
  CHECK(close(wright_omega(Cplx(2, 3)), 1.1717920038474004358, 1.9665702813601354514, 1e-13));
  CHECK(close(wright_omega(Cplx(-3, 0.5)), 0.042371771450617927632, 0.021954071960407303711,
              1e-13));
  // omega(z) + ln omega(z) = z on the principal sheet
  const Cplx z(2, 3);
  const Cplx om = wright_omega(z);
  CHECK(abs(om + log(om) - z) <= 1e-14 * abs(z));
  // Unwinding against the Lambert branches: omega(t + 2 pi i) = W_1(e^t e^{2 pi i}) etc.
  const Cplx zu(0.5, 2.5 * kPi);
  const Cplx wu = wright_omega(zu);
  CHECK(abs(wu * exp(wu) - exp(zu)) <= 1e-12);
}

TEST_CASE("wright omega singular rays and region guards") {
  CHECK_THROWS_AS(wright_omega(Cplx(-2.0, kPi)), std::domain_error);
  CHECK_THROWS_AS(wright_omega(Cplx(-1.5, -kPi)), std::domain_error);
  CHECK_THROWS_AS(wright_omega(Cplx(0.0, 10.0)), std::domain_error);
  // Just inside the rays is fine.
  CHECK_NOTHROW(wright_omega(Cplx(-2.0, kPi - 1e-6)));
  CHECK_NOTHROW(wright_omega(Cplx(-0.99, kPi)));
}

TEST_CASE("unwinding number") {
  CHECK(unwinding_number(Cplx(0, 0)) == 0);
  CHECK(unwinding_number(Cplx(5, kPi)) == 0);
  CHECK(unwinding_number(Cplx(5, kPi + 0.1)) == 1);
  CHECK(unwinding_number(Cplx(5, -kPi)) == -1);
  CHECK(unwinding_number(Cplx(0, 3 * kPi)) == 1);
  CHECK(unwinding_number(Cplx(0, -3 * kPi)) == -2);
}

TEST_CASE("psi residual of the auxiliary real solver") {
  for (double t : {0.0, 1.0, -2.0, 10.0, -40.0})
    CHECK(std::fabs(psi_residual(t)) <= 1e-15 * std::max(1.0, std::fabs(t)));
}

TEST_CASE("elevated-precision evaluation") {
  const PrecFloat om = wright_omega_real(PrecFloat(0));
  CHECK(std::fabs(om.to_double() - omega_constant()) <= 2e-16);
  CHECK(abs(om * exp(om) - PrecFloat(1)).to_double() <= 1e-30);

  const PrecFloat w10 = lambert_w_real(0, PrecFloat(10));
  CHECK(abs(w10 * exp(w10) - PrecFloat(10)).to_double() <= 1e-29);
  CHECK(std::fabs(w10.to_double() - 1.7455280027406993831) <= 1e-15);

  const PrecFloat wm = lambert_w_real(-1, PrecFloat(-0.25));
  CHECK(abs(wm * exp(wm) - PrecFloat(-0.25)).to_double() <= 1e-30);
}
