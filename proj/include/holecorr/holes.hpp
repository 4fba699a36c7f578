#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>
#include "holecorr/rational.hpp"

namespace holecorr {

// Coordinates of the midpoint of a vertical lattice side; each pair names
// both the left-monomer (west of the side) and the right-monomer (east).
struct MonomerCoord {
    long x = 0;
    long y = 0;
    bool operator==(const MonomerCoord& o) const { return x == o.x && y == o.y; }
    bool operator<(const MonomerCoord& o) const { return x != o.x ? x < o.x : y < o.y; }
    MonomerCoord operator+(const MonomerCoord& o) const { return {x + o.x, y + o.y}; }
    MonomerCoord operator-(const MonomerCoord& o) const { return {x - o.x, y - o.y}; }
};

// A unit triangle: left- or right-pointing monomer at the given coordinates.
struct Monomer {
    bool left = true;
    MonomerCoord at;
    bool operator==(const Monomer& o) const { return left == o.left && at == o.at; }
    bool operator<(const Monomer& o) const { return left != o.left ? left < o.left : at < o.at; }
};

enum class Orientation : uint8_t { E, W };

// Side-2 triangular hole. E(x,y): east-pointing, central left-monomer at
// (x,y); W(x,y): west-pointing, central right-monomer at (x,y).
struct Side2Hole {
    Orientation orientation = Orientation::E;
    MonomerCoord center;

    // The four unit triangles the hole removes.
    std::vector<Monomer> unit_triangles() const;
    int charge() const { return orientation == Orientation::E ? 2 : -2; }
    // The two monomers left after factoring out the hole's forced central
    // lozenge: right-monomers for E, left-monomers for W.
    std::vector<Monomer> reduced_monomers() const;
    bool operator==(const Side2Hole& o) const {
        return orientation == o.orientation && center == o.center;
    }
};

struct HoleConfig {
    std::vector<Side2Hole> holes;

    size_t count_e() const;
    size_t count_w() const;
    bool disjoint() const;
    std::set<Monomer> all_unit_triangles() const;
    HoleConfig translated(MonomerCoord delta) const;
};

// Collinear like-oriented side-2 holes along a slope-q line: holes at
// (a_i + off.x, q*a_i + off.y), q*a_i integral.
struct MultiholeSpec {
    Orientation orientation = Orientation::E;
    Rational q = 1;
    std::vector<long> positions;
    MonomerCoord offset;

    std::vector<Side2Hole> holes() const;
};

int charge(const HoleConfig& config);

// Distance in the 60-degree coordinate system:
// sqrt((a-c)^2 + (a-c)(b-d) + (b-d)^2).
double euclid_dist(const MonomerCoord& p, const MonomerCoord& q);
Rational euclid_dist_sq(const MonomerCoord& p, const MonomerCoord& q);

// Decomposition of an even-side triangle into side-2 holes whose union,
// together with the lozenges it forces, fills the whole triangle.
// E: centers anchor + k*(1,1); W: centers anchor - k*(1,1); k = 0..s-1.
std::vector<Side2Hole> expand_even_triangle(Orientation orientation, long side,
                                            MonomerCoord anchor);

// All unit triangles of the full even-side triangle (holes plus forced
// lozenges), for oracle comparisons.
std::set<Monomer> even_triangle_cells(Orientation orientation, long side, MonomerCoord anchor);

// Reflection across a vertical lattice line: (x,y) -> (-y,-x), E <-> W.
Side2Hole mirror(const Side2Hole& h);
HoleConfig mirror(const HoleConfig& config);

// Lozenges forced on the infinite lattice by removing `removed`: repeatedly
// pairs any live monomer having exactly one live neighbour. Returned as
// (left, right) coordinate pairs.
std::vector<std::pair<MonomerCoord, MonomerCoord>> forced_lozenges(const std::set<Monomer>& removed);

// Neighbours of a monomer in the adjacency L(x,y) ~ R(x,y), R(x-1,y), R(x,y-1).
std::vector<Monomer> monomer_neighbors(const Monomer& m);

// JSON config: {"holes":[{"kind":"E"|"W","x":..,"y":..} |
//                        {"kind":"triangle","orientation":"E"|"W","side":..,"anchor":[x,y]}]}
HoleConfig parse_config_json(const std::string& text);
std::string config_to_json(const HoleConfig& config);

}  // namespace holecorr
