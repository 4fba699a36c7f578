#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>
#include "holecorr/cyclo.hpp"
#include "holecorr/rational.hpp"

namespace holecorr {

using RatMatrix = std::vector<std::vector<Rational>>;

// Exact determinant over Q by fraction elimination.
Rational det_rational(RatMatrix m);

// Parameters of the block determinant identities. zeta is a free rational
// (never the cube root of unity here); q may be shared or per-block.
struct BlockSpec {
    std::vector<long> s;  // east block sizes s_1..s_m
    std::vector<long> t;  // west block sizes t_1..t_n
    std::vector<Rational> x, y;  // east coordinates
    std::vector<Rational> z, w;  // west coordinates
    Rational q = 0;              // shared slope
    std::vector<Rational> qe, qw;  // per-block slopes; empty means shared q
    Rational zeta = 2;
    Rational h = 0;  // deformation parameter for the shifted-factorial family

    long S() const;
    long T() const;
    Rational slope_e(size_t i) const { return qe.empty() ? q : qe[i]; }
    Rational slope_w(size_t j) const { return qw.empty() ? q : qw[j]; }
    void validate() const;
};

// 2S x 2S block matrix with rational-function entries evaluated at the
// spec's parameters; per-block slopes are honoured when present.
RatMatrix build_Mpp(const BlockSpec& spec);
// Product-formula value that build_Mpp's determinant must equal exactly.
Rational formula_Mpp(const BlockSpec& spec);

// S x S binomial/power block matrix generalizing both the Cauchy and the
// Vandermonde determinant, and its closed form.
RatMatrix build_N(const std::vector<long>& s, const std::vector<long>& t,
                  const std::vector<Rational>& x, const std::vector<Rational>& z);
Rational formula_N(const std::vector<long>& s, const std::vector<long>& t,
                   const std::vector<Rational>& x, const std::vector<Rational>& z);

// Shifted-factorial deformation of the q=0 block matrix and its closed
// form (with the explicit constant (zeta^-2 - zeta^2)^(2S)).
RatMatrix build_M0h(const BlockSpec& spec);
Rational formula_M0h(const BlockSpec& spec);

// d = prod over east/west pairs and shifts of the two linear factors that
// clear every denominator of the q=0 matrix.
Rational clearing_factor(const BlockSpec& spec);
// Entries of d * M0 as exact products, well defined even where single
// factors of d vanish.
RatMatrix build_dM0(const BlockSpec& spec);

enum class VanishKind {
    RowPairDifference,     // two east blocks, constrained x_i
    ColumnPairWithinWest,  // single west block, +/- zeta^2 pairing
    ColumnShiftWithinWest  // single west block, shifted-factorial weights
};

struct VanishInstance {
    VanishKind kind;
    // RowPairDifference: blocks (i, j), i < j, order indices (k, l).
    // Column kinds: east block i, west block j, shift a; l is the pair
    // index for ColumnPairWithinWest and the ladder index k for
    // ColumnShiftWithinWest. sign_plus selects zeta vs 1/zeta.
    size_t i = 0, j = 0;
    long a = 0, k = 0, l = 0;
    bool sign_plus = true;
};

// Specializes the block parameters so the instance's constraint holds,
// and the exact coefficient vector of the vanishing row/column
// combination.
BlockSpec constrain_for(const BlockSpec& spec, const VanishInstance& inst);
std::vector<Rational> vanishing_combination(const BlockSpec& spec, const VanishInstance& inst);
// Residual of applying the combination to d*M0 (rows or columns per
// kind); exactly zero at the constrained specialization.
std::vector<Rational> vanishing_residual(const BlockSpec& spec, const VanishInstance& inst);

// Multiplicity counters for the factor bookkeeping:
// N1 counts k-l = a, N2 counts k+l = a over 0<=k<s, 0<=l<t.
long n1_count(long a, long s, long t);
long n2_count(long a, long s, long t);

// Terminating Gauss sum at unit argument: requires a or b a nonpositive
// integer; throws if (c)_j hits zero inside the sum range.
Rational gauss_2f1_unit(const Rational& a, const Rational& b, const Rational& c);

struct IdentityReport {
    std::string identity;
    int trials = 0;
    int failures = 0;
};

// Randomized exact verification of the hypergeometric and binomial
// identities the determinant evaluations rest on.
std::vector<IdentityReport> hyperg_identity_suite(uint64_t seed, int trials = 40);

// Random spec generators (rejection-sampled away from singular parameters).
BlockSpec random_spec(std::mt19937_64& rng, long max_S, bool per_hole_slopes, bool with_h);

}  // namespace holecorr
