#pragma once

#include <vector>
#include "holecorr/holes.hpp"
#include "holecorr/ringt.hpp"

namespace holecorr {

// Exact single-multihole correlation:
//   (sqrt(3)/2pi)^(2s) (1+q+q^2)^C(s,2) prod_{i<j} (a_i - a_j)^2.
// Requires 3 | 1-q (numerator divisibility for rationals).
RingT closed_form_single(Orientation orientation, const Rational& q,
                         const std::vector<long>& positions);

bool slope_admissible(const Rational& q);

// One multihole of a prediction input; slope may vary per hole for the
// arbitrary-direction variant.
struct PredMultihole {
    MultiholeSpec spec;  // offset ignored at scale 1; offsets scale with R
};

// Leading-order prediction for the joint correlation of parallel multiholes
// whose offsets are scaled by R. Validates the hypotheses: common slope q
// with 3 | 1-q, offsets distinct multiples of 3.
double predict_parallel(const std::vector<PredMultihole>& multiholes, long R);

// Same superposition formula with per-multihole slopes (all with 3 | 1-q_i).
double predict_general_slopes(const std::vector<PredMultihole>& multiholes, long R);

// Even-side triangles with scaled offsets; expands each into its side-2
// string (slope 1) and delegates to predict_parallel.
struct TriangleSpec {
    Orientation orientation;
    long side;
    MonomerCoord offset;
};
double predict_even_triangles(const std::vector<TriangleSpec>& triangles, long R);

// The exact configuration a multihole family occupies at scale R.
HoleConfig config_at_scale(const std::vector<PredMultihole>& multiholes, long R);

struct RatioRow {
    long R;
    double exact;
    double predicted;
    double ratio;
    double abs_err;  // |ratio - 1|
};

// Exact correlation vs prediction across a list of scales.
std::vector<RatioRow> ratio_experiment(const std::vector<PredMultihole>& multiholes,
                                       const std::vector<long>& scales,
                                       mpfr_prec_t precision = 1024);

// Relative Boltzmann weight of two placements of the same charges:
//   exp(-(x^2/2) sum_{i<j} q_i q_j (-ln d_ij)) over the same for d'.
// Distances listed pairwise in row-major i<j order.
double boltzmann_ratio(const std::vector<double>& dist1, const std::vector<double>& dist2,
                       const std::vector<int>& charges, double x);

}  // namespace holecorr
