#pragma once

#include "holecorr/ringt.hpp"

namespace holecorr {

// Value of the lattice coupling function: exact element of Q + Q*T.
using PValue = RingT;

// Exact P(x,y) for any integer pair. Degree in T is at most 1.
PValue p_exact(long x, long y);

// Numeric cross-check of the defining double integral. The inner circle
// integral is carried out by residues, the outer one by Gauss-Legendre
// quadrature with `grid` nodes; converges to p_exact far faster than
// linearly in the grid size. grid < 64 is refused.
double p_numeric(long x, long y, int grid);

}  // namespace holecorr
