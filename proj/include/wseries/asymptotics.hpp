#pragma once

#include "wseries/complexval.hpp"

namespace wseries {

// Large-index estimates of the series coefficients, all of Darboux type:
// the modulus decays like tau*^{-(m - 1/2)} m^{-3/2} with tau* the distance
// to the nearest singularity, and real sigma > 0 adds an oscillation whose
// phase theta1 is the angle of that singularity.

// Angle of the singularity 1 + sigma - sigma ln sigma + i pi sigma for
// sigma > 0, computed from h = 1 + 1/sigma - ln sigma piecewise so the
// h -> 0 crossing (at sigma = 1/W(1/e)) stays exact.
double theta1(double sigma);

// The same angle straight from atan2 on the unscaled singularity; agrees
// with theta1 to rounding on both sides of the crossing.
double theta1_direct(double sigma);

// Estimate of the m-th tau-coefficient at parameter sigma.
//   sigma = 0:  exactly 1/m (the series is -ln(1 - tau) term for term).
//   sigma > 0:  sqrt(2/(pi sigma)) sin((m - 1/2) theta1) / (tau*^{m-1/2} m^{3/2}),
//               two conjugate singularities beating against each other.
//   sigma < 0:  -1 / (sqrt(2 pi |sigma|) m^{3/2} tau*^{m-1/2}), one
//               singularity, fixed sign; sigma = -1 is degenerate (tau* = 0).
double cm_asymptotic(double sigma, int m);

// Complex sigma off the real axis: single nearest singularity at
// 1 + sigma - sigma Log sigma + i pi sigma sgn(Im sigma), estimate
// (+-i) / (sqrt(2 pi sigma) m^{3/2} (...)^{m-1/2}) with +i above the axis.
Cplx cm_asymptotic(const Cplx& sigma, int m);

// How many singularities sit at distance tau*: two (a conjugate pair) for
// real sigma > 0, one otherwise.
int cm_singularity_count(const Cplx& sigma);

// Estimate of the n-th coefficient of the ln-x series (the sigma = 1 ray
// written in the Wright normalization):
//   sqrt(2/pi) (-1)^n sin(((2n-1)/2) arctan pi) / (n^{3/2} (1+pi^2)^{(2n-1)/4}).
double an_asymptotic(int n);

// The same with the sign and the sine factor dropped: a strict envelope of
// the modulus.
double an_envelope(int n);

// Estimate of the row sum of the 2-associated Stirling subset numbers,
// sum_p {p+m-1; p}: (m-1)! / (2 sqrt(pi m) (2 ln 2 - 1)^{m-1/2}).
double assoc_sum_asymptotic(int m);

}  // namespace wseries
