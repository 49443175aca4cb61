#include "wseries/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "wseries/convergence.hpp"

namespace wseries {

namespace {
constexpr double kPi = 3.141592653589793;
}

double theta1(double sigma) {
  if (!(sigma > 0.0)) throw std::domain_error("theta1 is defined for sigma > 0");
  double h = 1.0 + 1.0 / sigma - std::log(sigma);
  if (h > 0.0) return std::atan(kPi / h);
  if (h == 0.0) return 0.5 * kPi;
  return kPi + std::atan(kPi / h);
}

double theta1_direct(double sigma) {
  if (!(sigma > 0.0)) throw std::domain_error("theta1 is defined for sigma > 0");
  return std::atan2(kPi * sigma, 1.0 + sigma - sigma * std::log(sigma));
}

double cm_asymptotic(double sigma, int m) {
  if (m < 1) throw std::domain_error("coefficient index starts at 1");
  if (sigma == 0.0) return 1.0 / m;
  double mm = static_cast<double>(m);
  if (sigma > 0.0) {
    double tstar = improved_radius(Cplx(sigma)).value;
    return std::sqrt(2.0 / (kPi * sigma)) * std::sin((mm - 0.5) * theta1(sigma)) /
           (std::pow(tstar, mm - 0.5) * mm * std::sqrt(mm));
  }
  if (sigma == -1.0) throw std::domain_error("sigma = -1 has radius 0; no power-law estimate");
  double s = -sigma;
  double tstar = 1.0 - s + s * std::log(s);
  return -1.0 / (std::sqrt(2.0 * kPi * s) * mm * std::sqrt(mm) * std::pow(tstar, mm - 0.5));
}

Cplx cm_asymptotic(const Cplx& sigma, int m) {
  if (sigma.im == 0.0) return Cplx(cm_asymptotic(sigma.re, m));
  if (m < 1) throw std::domain_error("coefficient index starts at 1");
  double mm = static_cast<double>(m);
  double sign = (sigma.im > 0.0) ? 1.0 : -1.0;
  Cplx sing = Cplx(1.0) + sigma - sigma * log(sigma) + Cplx(0.0, sign * kPi) * sigma;
  Cplx spow = exp((mm - 0.5) * log(sing));
  Cplx denom = sqrt(2.0 * kPi * sigma) * (mm * std::sqrt(mm)) * spow;
  return Cplx(0.0, sign) / denom;
}

int cm_singularity_count(const Cplx& sigma) {
  return (sigma.im == 0.0 && sigma.re > 0.0) ? 2 : 1;
}

double an_asymptotic(int n) {
  if (n < 1) throw std::domain_error("coefficient index starts at 1");
  double nn = static_cast<double>(n);
  double phase = (2.0 * nn - 1.0) / 2.0 * std::atan(kPi);
  double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return std::sqrt(2.0 / kPi) * sign * std::sin(phase) /
         (nn * std::sqrt(nn) * std::pow(1.0 + kPi * kPi, (2.0 * nn - 1.0) / 4.0));
}

double an_envelope(int n) {
  if (n < 1) throw std::domain_error("coefficient index starts at 1");
  double nn = static_cast<double>(n);
  return std::sqrt(2.0 / kPi) /
         (nn * std::sqrt(nn) * std::pow(1.0 + kPi * kPi, (2.0 * nn - 1.0) / 4.0));
}

double assoc_sum_asymptotic(int m) {
  if (m < 1) throw std::domain_error("row index starts at 1");
  double mm = static_cast<double>(m);
  double base = 2.0 * std::log(2.0) - 1.0;
  return std::tgamma(mm) / (2.0 * std::sqrt(kPi * mm) * std::pow(base, mm - 0.5));
}

}  // namespace wseries
