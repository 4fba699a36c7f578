#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include "holecorr/correlation.hpp"
#include "holecorr/holes.hpp"

using namespace holecorr;

namespace {

HoleConfig make(std::initializer_list<Side2Hole> hs) {
    HoleConfig c;
    c.holes = hs;
    return c;
}

}  // namespace

TEST_CASE("charge") {
    CHECK(charge(make({{Orientation::E, {0, 0}}})) == 2);
    CHECK(charge(make({{Orientation::E, {0, 0}}, {Orientation::W, {3, 0}}})) == 0);
    CHECK(charge(make({{Orientation::E, {0, 0}},
                       {Orientation::E, {4, 0}},
                       {Orientation::E, {0, 4}},
                       {Orientation::W, {8, 8}}})) == 4);
}

TEST_CASE("distance formula") {
    CHECK(euclid_dist({0, 0}, {3, 0}) == doctest::Approx(3.0));
    CHECK(euclid_dist({0, 0}, {3, 3}) == doctest::Approx(std::sqrt(27.0)));
    CHECK(euclid_dist({1, 2}, {1, 2}) == 0.0);
    CHECK(euclid_dist_sq({0, 0}, {1, 1}) == rat(3));
}

TEST_CASE("unit-triangle membership") {
    Side2Hole e{Orientation::E, {0, 0}};
    auto cells = e.unit_triangles();
    CHECK(cells.size() == 4);
    CHECK(std::count_if(cells.begin(), cells.end(), [](const Monomer& m) { return m.left; }) == 1);
    Side2Hole w{Orientation::W, {0, 0}};
    auto wc = w.unit_triangles();
    CHECK(std::count_if(wc.begin(), wc.end(), [](const Monomer& m) { return m.left; }) == 3);
    // holes touching at a vertex are still disjoint as cell sets
    CHECK(make({{Orientation::E, {0, 0}}, {Orientation::E, {1, 1}}}).disjoint());
    CHECK_FALSE(make({{Orientation::E, {0, 0}}, {Orientation::E, {0, 0}}}).disjoint());
}

TEST_CASE("mirror is an exact involution and flips charge") {
    Side2Hole e{Orientation::E, {2, -5}};
    Side2Hole m = mirror(e);
    CHECK(m.orientation == Orientation::W);
    CHECK(m.center == MonomerCoord{5, -2});
    CHECK(mirror(m) == e);
    HoleConfig cfg = make({{Orientation::E, {0, 0}}, {Orientation::W, {0, 3}}, {Orientation::E, {4, 1}}});
    CHECK(charge(mirror(cfg)) == -charge(cfg));
}

TEST_CASE("mirror preserves the correlation of zero-charge configs exactly") {
    HoleConfig cfg = make({{Orientation::E, {0, 0}}, {Orientation::W, {0, 3}}});
    CHECK(omega_hat(cfg).exact == omega_hat(mirror(cfg)).exact);
    HoleConfig cfg2 =
        make({{Orientation::E, {0, 0}}, {Orientation::E, {1, 1}}, {Orientation::W, {5, 0}},
              {Orientation::W, {0, 5}}});
    CHECK(omega_hat(cfg2).exact == omega_hat(mirror(cfg2)).exact);
}

TEST_CASE("even triangle expansion") {
    auto one = expand_even_triangle(Orientation::E, 2, {3, 1});
    REQUIRE(one.size() == 1);
    CHECK(one[0].center == MonomerCoord{3, 1});

    auto three = expand_even_triangle(Orientation::E, 6, {0, 0});
    REQUIRE(three.size() == 3);
    CHECK(three[1].center == MonomerCoord{1, 1});
    CHECK(three[2].center == MonomerCoord{2, 2});

    auto wtwo = expand_even_triangle(Orientation::W, 4, {3, 0});
    REQUIRE(wtwo.size() == 2);
    CHECK(wtwo[1].center == MonomerCoord{2, -1});

    CHECK_THROWS(expand_even_triangle(Orientation::E, 3, {0, 0}));
    CHECK_THROWS(expand_even_triangle(Orientation::E, 0, {0, 0}));

    // pairwise disjoint, collinear along slope 1
    HoleConfig cfg;
    cfg.holes = three;
    CHECK(cfg.disjoint());
    for (size_t i = 1; i < three.size(); ++i) {
        MonomerCoord d = three[i].center - three[i - 1].center;
        CHECK(d.x == d.y);
    }
}

TEST_CASE("expansion plus forced tiles fills the whole triangle") {
    for (long side : {2L, 4L, 6L})
        for (Orientation o : {Orientation::E, Orientation::W}) {
            MonomerCoord anchor = o == Orientation::E ? MonomerCoord{0, 0} : MonomerCoord{5, 2};
            HoleConfig cfg;
            cfg.holes = expand_even_triangle(o, side, anchor);
            auto cells = cfg.all_unit_triangles();
            for (const auto& [l, r] : forced_lozenges(cells)) {
                cells.insert({true, l});
                cells.insert({false, r});
            }
            CHECK(cells == even_triangle_cells(o, side, anchor));
            CHECK(cells.size() == static_cast<size_t>(side * side));
        }
}

TEST_CASE("json config round-trip") {
    std::string text = R"({"holes":[{"kind":"E","x":0,"y":0},{"kind":"W","x":4,"y":1}]})";
    HoleConfig cfg = parse_config_json(text);
    REQUIRE(cfg.holes.size() == 2);
    CHECK(cfg.holes[1].orientation == Orientation::W);
    HoleConfig again = parse_config_json(config_to_json(cfg));
    CHECK(again.holes.size() == cfg.holes.size());
    for (size_t i = 0; i < cfg.holes.size(); ++i) CHECK(again.holes[i] == cfg.holes[i]);

    HoleConfig tri = parse_config_json(
        R"({"holes":[{"kind":"triangle","orientation":"E","side":6,"anchor":[0,0]}]})");
    CHECK(tri.holes.size() == 3);

    CHECK_THROWS(parse_config_json(
        R"({"holes":[{"kind":"triangle","orientation":"E","side":3,"anchor":[0,0]}]})"));
    CHECK_THROWS(parse_config_json(
        R"({"holes":[{"kind":"E","x":0,"y":0},{"kind":"E","x":0,"y":0}]})"));
    CHECK_THROWS(parse_config_json(R"({"holes": 7})"));
}
