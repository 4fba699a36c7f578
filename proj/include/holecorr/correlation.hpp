#pragma once

#include <vector>
#include "holecorr/holes.hpp"
#include "holecorr/ringt.hpp"

namespace holecorr {

using RingMatrix = std::vector<std::vector<RingT>>;

// Exact determinant by fraction-free elimination; no division ever leaves
// the polynomial ring.
RingT det_bareiss(RingMatrix m);

// 2x2 coupling block A(x,y) = [[P(x-1,y-1), P(x-2,y)], [P(x,y-2), P(x-1,y-1)]].
RingMatrix coupling_block(long x, long y);
// 2x2 coefficient block B_s(x,y) = [[U_s(x,y), U_s(x-1,y+1)], [U_s(x+1,y-1), U_s(x,y)]].
RingMatrix coefficient_block(long s, long x, long y);

// The 2m x 2m correlation matrix: rows indexed by E-holes (two each),
// first 2n columns are A-blocks against the W-holes, remaining columns are
// B_0..B_{m-n-1} blocks. Requires #E >= #W and pairwise-disjoint holes.
RingMatrix build_M(const HoleConfig& config);

struct OmegaHat {
    RingT exact;   // |det M| as an exact polynomial in T
    double value;  // float evaluation
};

// Correlation of an arbitrary disjoint side-2 hole collection. Configs of
// negative total charge are mirrored first.
OmegaHat omega_hat(const HoleConfig& config, mpfr_prec_t precision = 512);

// Zero-total-charge correlation of explicit monomer lists:
// |det (P(r_i - l_j))| over the k x k coupling matrix.
OmegaHat omega1_balanced(const std::vector<MonomerCoord>& lefts,
                         const std::vector<MonomerCoord>& rights,
                         mpfr_prec_t precision = 512);

}  // namespace holecorr
