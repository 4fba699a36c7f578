#pragma once

#include "holecorr/cyclo.hpp"
#include "holecorr/ringt.hpp"

namespace holecorr {

// Asymptotic coefficient U_s(a,b): always a pure rational multiple of T
// (zero constant term).
using UValue = RingT;

// Exact U_s(a,b) computed from the difference-operator formula:
//   z = zeta^(a-b-1) * sum_{l=0}^{s} C(-b,l) (-1)^l zeta^(-l) D^l(x^s)|_{x=a+b-1}
// in Q(zeta), then bridged to a real multiple of sqrt(3)/(2*pi).
UValue u_coef(long s, long a, long b);

// The Q(zeta) element z above, before bridging (used by leading-form checks).
CycloQ u_coef_cyclo(long s, long a, long b);

// |P(-3r-1+a, -1+b) - sum_{s<n} (3r)^(-s-1) U_s(a,b)| evaluated at the
// given binary precision. Exact arithmetic throughout; only the final
// magnitude is floated.
double u_remainder(long a, long b, int n, long r, mpfr_prec_t precision = 2048);

}  // namespace holecorr
