#include "holecorr/holes.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace holecorr {

std::vector<Monomer> Side2Hole::unit_triangles() const {
    long x = center.x, y = center.y;
    if (orientation == Orientation::E)
        return {{true, {x, y}}, {false, {x, y}}, {false, {x - 1, y}}, {false, {x, y - 1}}};
    return {{false, {x, y}}, {true, {x, y}}, {true, {x, y + 1}}, {true, {x + 1, y}}};
}

std::vector<Monomer> Side2Hole::reduced_monomers() const {
    long x = center.x, y = center.y;
    if (orientation == Orientation::E)
        return {{false, {x - 1, y}}, {false, {x, y - 1}}};
    return {{true, {x, y + 1}}, {true, {x + 1, y}}};
}

size_t HoleConfig::count_e() const {
    size_t n = 0;
    for (const auto& h : holes)
        if (h.orientation == Orientation::E) ++n;
    return n;
}

size_t HoleConfig::count_w() const { return holes.size() - count_e(); }

std::set<Monomer> HoleConfig::all_unit_triangles() const {
    std::set<Monomer> cells;
    for (const auto& h : holes)
        for (const auto& m : h.unit_triangles()) cells.insert(m);
    return cells;
}

bool HoleConfig::disjoint() const {
    size_t total = 0;
    for (const auto& h : holes) total += h.unit_triangles().size();
    return all_unit_triangles().size() == total;
}

HoleConfig HoleConfig::translated(MonomerCoord delta) const {
    HoleConfig out = *this;
    for (auto& h : out.holes) h.center = h.center + delta;
    return out;
}

std::vector<Side2Hole> MultiholeSpec::holes() const {
    std::vector<Side2Hole> out;
    for (long a : positions) {
        Rational qa = q * rat(a);
        if (!is_integer(qa))
            throw std::invalid_argument("position " + std::to_string(a) + " has non-integral q*a");
        out.push_back({orientation, {offset.x + a, offset.y + to_long(qa)}});
    }
    return out;
}

int charge(const HoleConfig& config) {
    int c = 0;
    for (const auto& h : config.holes) c += h.charge();
    return c;
}

Rational euclid_dist_sq(const MonomerCoord& p, const MonomerCoord& q) {
    Rational dx(p.x - q.x), dy(p.y - q.y);
    return dx * dx + dx * dy + dy * dy;
}

double euclid_dist(const MonomerCoord& p, const MonomerCoord& q) {
    return std::sqrt(euclid_dist_sq(p, q).get_d());
}

std::vector<Side2Hole> expand_even_triangle(Orientation orientation, long side,
                                            MonomerCoord anchor) {
    if (side <= 0 || side % 2 != 0)
        throw std::invalid_argument("triangular holes must have positive even side");
    long s = side / 2;
    std::vector<Side2Hole> out;
    for (long k = 0; k < s; ++k) {
        long d = orientation == Orientation::E ? k : -k;
        out.push_back({orientation, {anchor.x + d, anchor.y + d}});
    }
    return out;
}

std::set<Monomer> even_triangle_cells(Orientation orientation, long side, MonomerCoord anchor) {
    if (side <= 0 || side % 2 != 0)
        throw std::invalid_argument("triangular holes must have positive even side");
    long s = side / 2;
    std::set<Monomer> cells;
    if (orientation == Orientation::E) {
        // Apex right-monomer sits at anchor + (s-1)(1,1); the triangle is
        // R(apex - d) for |d|_1 <= 2s-1 and L(apex - d) for |d|_1 <= 2s-2.
        MonomerCoord apex{anchor.x + s - 1, anchor.y + s - 1};
        for (long i = 0; i <= 2 * s - 1; ++i)
            for (long j = 0; i + j <= 2 * s - 1; ++j) {
                cells.insert({false, {apex.x - i, apex.y - j}});
                if (i + j <= 2 * s - 2) cells.insert({true, {apex.x - i, apex.y - j}});
            }
    } else {
        MonomerCoord apex{anchor.x - (s - 1), anchor.y - (s - 1)};
        for (long i = 0; i <= 2 * s - 1; ++i)
            for (long j = 0; i + j <= 2 * s - 1; ++j) {
                cells.insert({true, {apex.x + i, apex.y + j}});
                if (i + j <= 2 * s - 2) cells.insert({false, {apex.x + i, apex.y + j}});
            }
    }
    return cells;
}

Side2Hole mirror(const Side2Hole& h) {
    Orientation o = h.orientation == Orientation::E ? Orientation::W : Orientation::E;
    return {o, {-h.center.y, -h.center.x}};
}

HoleConfig mirror(const HoleConfig& config) {
    HoleConfig out;
    for (const auto& h : config.holes) out.holes.push_back(mirror(h));
    return out;
}

std::vector<Monomer> monomer_neighbors(const Monomer& m) {
    long x = m.at.x, y = m.at.y;
    if (m.left) return {{false, {x, y}}, {false, {x - 1, y}}, {false, {x, y - 1}}};
    return {{true, {x, y}}, {true, {x + 1, y}}, {true, {x, y + 1}}};
}

std::vector<std::pair<MonomerCoord, MonomerCoord>> forced_lozenges(const std::set<Monomer>& removed) {
    // Work inside the bounding box plus margin; cells on the window rim
    // always keep an outside neighbour, so only genuinely forced interior
    // tiles are detected.
    if (removed.empty()) return {};
    long lo_x = removed.begin()->at.x, hi_x = lo_x, lo_y = removed.begin()->at.y, hi_y = lo_y;
    for (const auto& m : removed) {
        lo_x = std::min(lo_x, m.at.x);
        hi_x = std::max(hi_x, m.at.x);
        lo_y = std::min(lo_y, m.at.y);
        hi_y = std::max(hi_y, m.at.y);
    }
    lo_x -= 3; hi_x += 3; lo_y -= 3; hi_y += 3;
    auto in_window = [&](const MonomerCoord& c) {
        return c.x >= lo_x && c.x <= hi_x && c.y >= lo_y && c.y <= hi_y;
    };
    std::set<Monomer> dead = removed;
    std::vector<std::pair<MonomerCoord, MonomerCoord>> forced;
    bool changed = true;
    while (changed) {
        changed = false;
        for (long x = lo_x + 1; x < hi_x; ++x)
            for (long y = lo_y + 1; y < hi_y; ++y)
                for (bool left : {true, false}) {
                    Monomer m{left, {x, y}};
                    if (dead.count(m)) continue;
                    std::vector<Monomer> live;
                    bool rim = false;
                    for (const auto& nb : monomer_neighbors(m)) {
                        if (!in_window(nb.at)) { rim = true; break; }
                        if (!dead.count(nb)) live.push_back(nb);
                    }
                    if (rim || live.size() > 1) continue;
                    if (live.empty()) throw std::logic_error("removed set admits no tiling");
                    Monomer partner = live[0];
                    dead.insert(m);
                    dead.insert(partner);
                    if (left) forced.push_back({m.at, partner.at});
                    else forced.push_back({partner.at, m.at});
                    changed = true;
                }
    }
    return forced;
}

HoleConfig parse_config_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    HoleConfig config;
    for (const auto& jh : j.at("holes")) {
        std::string kind = jh.at("kind").get<std::string>();
        if (kind == "E" || kind == "W") {
            config.holes.push_back({kind == "E" ? Orientation::E : Orientation::W,
                                    {jh.at("x").get<long>(), jh.at("y").get<long>()}});
        } else if (kind == "triangle") {
            std::string o = jh.at("orientation").get<std::string>();
            if (o != "E" && o != "W") throw std::invalid_argument("orientation must be E or W");
            auto anchor = jh.at("anchor");
            auto parts = expand_even_triangle(o == "E" ? Orientation::E : Orientation::W,
                                              jh.at("side").get<long>(),
                                              {anchor.at(0).get<long>(), anchor.at(1).get<long>()});
            config.holes.insert(config.holes.end(), parts.begin(), parts.end());
        } else {
            throw std::invalid_argument("unknown hole kind: " + kind);
        }
    }
    if (!config.disjoint()) throw std::invalid_argument("holes overlap");
    return config;
}

std::string config_to_json(const HoleConfig& config) {
    nlohmann::json holes = nlohmann::json::array();
    for (const auto& h : config.holes) {
        holes.push_back({{"kind", h.orientation == Orientation::E ? "E" : "W"},
                         {"x", h.center.x},
                         {"y", h.center.y}});
    }
    return nlohmann::json{{"holes", holes}}.dump(2);
}

}  // namespace holecorr
