#pragma once

#include <vector>
#include "holecorr/holes.hpp"
#include "holecorr/rational.hpp"

namespace holecorr {

// N x N rhombic patch of the lattice with opposite sides identified.
struct TorusRegion {
    long n = 1;
    std::set<MonomerCoord> removed_left;
    std::set<MonomerCoord> removed_right;

    static TorusRegion from_config(long n, const HoleConfig& config);
};

// Biadjacency matrix of the torus graph minus removed monomers: rows are
// surviving left-monomers, columns surviving right-monomers, entries count
// parallel edges (N=1 wraps all three bonds onto one vertex pair).
std::vector<std::vector<int>> torus_biadjacency(const TorusRegion& region);

// Exact tiling count by the Ryser permanent (Gray-code subset updates,
// parallel over contiguous subset ranges). Matrices above `limit` rows are
// refused; use count_tilings_kasteleyn beyond that.
Integer count_tilings(const TorusRegion& region, int limit = 26);

// Exact tiling count as a half-sum of four phased determinants. The sign
// pattern is calibrated on small regions against count_tilings once per
// process and then asserted.
Integer count_tilings_kasteleyn(const TorusRegion& region);

// Reference enumerator: recursive matching count, for cross-checks on
// regions with at most ~18 surviving vertices per side.
Integer count_tilings_enumerate(const TorusRegion& region);

struct ConvergenceRow {
    long n;
    Integer with_holes;
    Integer free;
    double ratio;
};

// Tiling-count ratios M(torus \ holes)/M(torus) over a list of torus
// sizes; approaches the balanced correlation of the config as N grows.
std::vector<ConvergenceRow> omega1_estimate(const HoleConfig& config,
                                            const std::vector<long>& sizes);

}  // namespace holecorr
