#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include "holecorr/correlation.hpp"
#include "holecorr/coupling.hpp"
#include "holecorr/diffops.hpp"
#include "holecorr/predictions.hpp"

using namespace holecorr;

namespace {

HoleConfig multihole(Orientation o, const Rational& q, const std::vector<long>& positions) {
    MultiholeSpec spec;
    spec.orientation = o;
    spec.q = q;
    spec.positions = positions;
    HoleConfig cfg;
    cfg.holes = spec.holes();
    return cfg;
}

}  // namespace

TEST_CASE("bareiss determinant over the polynomial ring") {
    RingMatrix empty;
    CHECK(det_bareiss(empty) == RingT(rat(1)));
    RingMatrix m = {{RingT(rat(2)), RingT(rat(3))}, {RingT(rat(5)), RingT(rat(7))}};
    CHECK(det_bareiss(m) == RingT(rat(-1)));
    // singular matrix with polynomial entries
    RingMatrix s = {{RingT::t_power(1), RingT::t_power(1)},
                    {RingT::t_power(2), RingT::t_power(2)}};
    CHECK(det_bareiss(s).is_zero());
    // zero leading pivot forces a row swap
    RingMatrix z = {{RingT(), RingT(rat(1))}, {RingT(rat(1)), RingT()}};
    CHECK(det_bareiss(z) == RingT(rat(-1)));
}

TEST_CASE("matrix shape per configuration") {
    HoleConfig one_e;
    one_e.holes.push_back({Orientation::E, {3, 1}});
    RingMatrix m = build_M(one_e);
    REQUIRE(m.size() == 2);
    CHECK(m == coefficient_block(0, 3, 1));

    HoleConfig pair;
    pair.holes.push_back({Orientation::E, {0, 0}});
    pair.holes.push_back({Orientation::W, {0, 3}});
    RingMatrix mp = build_M(pair);
    REQUIRE(mp.size() == 2);
    CHECK(mp == coupling_block(0, -3));

    HoleConfig two_one;
    two_one.holes.push_back({Orientation::E, {0, 0}});
    two_one.holes.push_back({Orientation::E, {4, 4}});
    two_one.holes.push_back({Orientation::W, {0, 6}});
    RingMatrix mt = build_M(two_one);
    REQUIRE(mt.size() == 4);
    RingMatrix a0 = coupling_block(0, -6);
    RingMatrix b0 = coefficient_block(0, 0, 0);
    CHECK(mt[0][0] == a0[0][0]);
    CHECK(mt[1][1] == a0[1][1]);
    CHECK(mt[0][2] == b0[0][0]);
    CHECK(mt[1][3] == b0[1][1]);

    HoleConfig overlap;
    overlap.holes.push_back({Orientation::E, {0, 0}});
    overlap.holes.push_back({Orientation::E, {0, 0}});
    CHECK_THROWS(build_M(overlap));

    HoleConfig more_w;
    more_w.holes.push_back({Orientation::W, {0, 0}});
    CHECK_THROWS(build_M(more_w));
    CHECK(omega_hat(more_w).exact == RingT::t_power(2, rat(1, 4)));  // mirrored internally
}

TEST_CASE("single hole value") {
    HoleConfig one;
    one.holes.push_back({Orientation::E, {0, 0}});
    OmegaHat w = omega_hat(one);
    CHECK(w.exact == RingT::t_power(2, rat(1, 4)));  // 3/(4 pi^2)
    CHECK(w.value == doctest::Approx(0.0759909).epsilon(1e-5));
    // position independent
    HoleConfig other;
    other.holes.push_back({Orientation::E, {7, -4}});
    CHECK(omega_hat(other).exact == w.exact);
}

TEST_CASE("balanced pair reduces to a coupling determinant") {
    HoleConfig pair;
    pair.holes.push_back({Orientation::E, {0, 0}});
    pair.holes.push_back({Orientation::W, {0, 3}});
    RingT det = det_bareiss(coupling_block(0, -3));
    RingT expected = det * (det.eval(256).sign() < 0 ? rat(-1) : rat(1));
    CHECK(omega_hat(pair).exact == expected);
}

TEST_CASE("balanced monomer lists") {
    CHECK(omega1_balanced({}, {}).exact == RingT(rat(1)));
    // adjacent pair sharing a vertical side
    OmegaHat adj = omega1_balanced({{0, 0}}, {{0, 0}});
    CHECK(adj.exact == RingT(rat(1, 3)));
    CHECK_THROWS(omega1_balanced({{0, 0}}, {}));
}

TEST_CASE("expansion of a hole pair into monomers matches the block determinant") {
    // E(a,b) ~ right-monomers (a-1,b),(a,b-1); W(c,d) ~ left-monomers
    // (c,d+1),(c+1,d); their coupling determinant is the pair correlation.
    for (auto [c, d] : std::vector<std::pair<long, long>>{{0, 3}, {3, 0}, {2, 2}, {-3, 4}}) {
        HoleConfig pair;
        pair.holes.push_back({Orientation::E, {0, 0}});
        pair.holes.push_back({Orientation::W, {c, d}});
        if (!pair.disjoint()) continue;
        OmegaHat via_blocks = omega_hat(pair);
        OmegaHat via_monomers =
            omega1_balanced({{c, d + 1}, {c + 1, d}}, {{-1, 0}, {0, -1}});
        CHECK(via_blocks.exact == via_monomers.exact);
    }
}

TEST_CASE("forced lozenge leaves the balanced correlation unchanged") {
    // the two right-monomers of E(0,0) force the lozenge at (0,0)
    std::vector<MonomerCoord> lefts = {{0, 4}, {1, 3}};
    std::vector<MonomerCoord> rights = {{-1, 0}, {0, -1}};
    OmegaHat base = omega1_balanced(lefts, rights);
    lefts.push_back({0, 0});
    rights.push_back({0, 0});
    CHECK(omega1_balanced(lefts, rights).exact == base.exact);
}

TEST_CASE("translation invariance of the exact correlation") {
    std::mt19937_64 rng(41);
    HoleConfig cfg;
    cfg.holes.push_back({Orientation::E, {0, 0}});
    cfg.holes.push_back({Orientation::E, {1, 1}});
    cfg.holes.push_back({Orientation::W, {4, 0}});
    RingT base = omega_hat(cfg).exact;
    std::uniform_int_distribution<long> shift(-6, 6);
    for (int trial = 0; trial < 6; ++trial) {
        MonomerCoord d{shift(rng), shift(rng)};
        CHECK(omega_hat(cfg.translated(d)).exact == base);
    }
}

TEST_CASE("single-multihole correlations match the closed form exactly") {
    std::mt19937_64 rng(42);
    for (const Rational& q : {Rational(1), Rational(4), Rational(-2)}) {
        std::vector<std::vector<long>> lists = {
            {0}, {0, 1}, {0, 2}, {-1, 3}, {0, 1, 2}, {0, 2, 5}, {-2, 0, 1, 3},
        };
        for (const auto& a : lists) {
            HoleConfig cfg = multihole(Orientation::E, q, a);
            REQUIRE(cfg.disjoint());
            CHECK(omega_hat(cfg).exact == closed_form_single(Orientation::E, q, a));
        }
    }
    // side-4 triangle: contiguous string with unit spacing
    CHECK(omega_hat(multihole(Orientation::E, 1, {0, 1})).exact ==
          RingT::t_power(4, rat(3, 16)));
    // west strings obey the same closed form (mirroring inverts the slope
    // and rescales positions; the product is invariant)
    for (const Rational& q : {Rational(1), Rational(4), Rational(-2)})
        for (const auto& b : std::vector<std::vector<long>>{{0}, {0, 1}, {-1, 2, 4}}) {
            HoleConfig cfg = multihole(Orientation::W, q, b);
            REQUIRE(cfg.disjoint());
            CHECK(omega_hat(cfg).exact == closed_form_single(Orientation::W, q, b));
        }
}

TEST_CASE("receding balancing hole recovers the charged correlation") {
    // the charged correlation is defined through a balancing west hole
    // pushed to infinity with weight (3r)^2; the closed block determinant
    // must be that limit
    HoleConfig single;
    single.holes.push_back({Orientation::E, {0, 0}});
    double target = omega_hat(single).value;
    double prev = 1e9;
    for (long r : {8L, 16L, 32L, 64L}) {
        HoleConfig with_far;
        with_far.holes.push_back({Orientation::E, {0, 0}});
        with_far.holes.push_back({Orientation::W, {3 * r, 0}});
        double scaled = 9.0 * r * r * omega_hat(with_far, 1024).value;
        double err = std::abs(scaled - target);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 1e-3);
}

TEST_CASE("row/column transform preserves the correlation determinant") {
    // the rows of a multihole's matrix sample a vector function at the
    // positions; the divided-difference transform must keep det M
    std::vector<long> a = {0, 2, 5};
    HoleConfig cfg = multihole(Orientation::E, 1, a);
    RingMatrix m = build_M(cfg);
    RingT det = det_bareiss(m);
    std::vector<Rational> nodes;
    for (long v : a) nodes.push_back(rat(v));
    RingMatrix t1 = dd_transform_rows(m, {0, 2, 4}, nodes);
    RingMatrix t2 = dd_transform_rows(t1, {1, 3, 5}, nodes);
    CHECK(det_bareiss(t2) == det);
}
