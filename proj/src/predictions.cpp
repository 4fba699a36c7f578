#include "holecorr/predictions.hpp"

#include <mpfr.h>

#include <cmath>
#include <future>
#include <set>
#include <stdexcept>
#include "holecorr/correlation.hpp"

namespace holecorr {

bool slope_admissible(const Rational& q) {
    Rational one_minus = 1 - q;
    return mpz_divisible_ui_p(one_minus.get_num().get_mpz_t(), 3) != 0;
}

namespace {

void require_slope(const Rational& q) {
    if (!slope_admissible(q))
        throw std::invalid_argument("slope q = " + q.get_str() +
                                    " violates the 3 | 1-q assumption");
}

void require_offsets(const std::vector<PredMultihole>& multiholes) {
    std::set<std::pair<long, long>> seen;
    for (const auto& m : multiholes) {
        if (m.spec.offset.x % 3 != 0 || m.spec.offset.y % 3 != 0)
            throw std::invalid_argument("offsets must be integer multiples of 3");
        if (!seen.insert({m.spec.offset.x, m.spec.offset.y}).second)
            throw std::invalid_argument("offsets must be pairwise distinct");
        HoleConfig single;
        single.holes = m.spec.holes();
        if (!single.disjoint())
            throw std::invalid_argument("multihole positions yield overlapping holes");
    }
}

double dist_sq(const MonomerCoord& a, const MonomerCoord& b) {
    return euclid_dist_sq(a, b).get_d();
}

// Shared superposition evaluator; slopes already validated per multihole.
double superpose(const std::vector<PredMultihole>& multiholes, long R) {
    require_offsets(multiholes);
    std::vector<const PredMultihole*> east, west;
    for (const auto& m : multiholes) {
        require_slope(m.spec.q);
        (m.spec.orientation == Orientation::E ? east : west).push_back(&m);
    }
    long S = 0, T = 0;
    for (auto* e : east) S += static_cast<long>(e->spec.positions.size());
    for (auto* w : west) T += static_cast<long>(w->spec.positions.size());

    const double sqrt3_2pi = std::sqrt(3.0) / (2.0 * M_PI);
    double value = std::pow(sqrt3_2pi, double(S + T + std::labs(S - T)));

    auto sizes_product = [&](const std::vector<const PredMultihole*>& side) {
        double acc = 1;
        for (auto* m : side) {
            long s = static_cast<long>(m->spec.positions.size());
            double q = m->spec.q.get_d();
            acc *= std::pow(1.0 + q + q * q, double(s * (s - 1) / 2));
            for (size_t j = 0; j < m->spec.positions.size(); ++j)
                for (size_t k = j + 1; k < m->spec.positions.size(); ++k) {
                    double d = double(m->spec.positions[j] - m->spec.positions[k]);
                    acc *= d * d;
                }
        }
        return acc;
    };
    value *= sizes_product(east) * sizes_product(west);

    long r_exp = 0;
    for (size_t i = 0; i < east.size(); ++i)
        for (size_t j = i + 1; j < east.size(); ++j) {
            long si = east[i]->spec.positions.size(), sj = east[j]->spec.positions.size();
            value *= std::pow(dist_sq(east[i]->spec.offset, east[j]->spec.offset), double(si * sj));
            r_exp += 2 * si * sj;
        }
    for (size_t i = 0; i < west.size(); ++i)
        for (size_t j = i + 1; j < west.size(); ++j) {
            long ti = west[i]->spec.positions.size(), tj = west[j]->spec.positions.size();
            value *= std::pow(dist_sq(west[i]->spec.offset, west[j]->spec.offset), double(ti * tj));
            r_exp += 2 * ti * tj;
        }
    for (auto* e : east)
        for (auto* w : west) {
            long si = e->spec.positions.size(), tj = w->spec.positions.size();
            value /= std::pow(dist_sq(e->spec.offset, w->spec.offset), double(si * tj));
            r_exp -= 2 * si * tj;
        }
    value *= std::pow(double(R), double(r_exp));
    return value;
}

}  // namespace

RingT closed_form_single(Orientation, const Rational& q, const std::vector<long>& positions) {
    require_slope(q);
    long s = static_cast<long>(positions.size());
    Rational coef = pow_rat(rat(1, 2), 2 * s);
    coef *= pow_rat(1 + q + q * q, s * (s - 1) / 2);
    for (size_t i = 0; i < positions.size(); ++i)
        for (size_t j = i + 1; j < positions.size(); ++j) {
            Rational d(positions[i] - positions[j]);
            coef *= d * d;
        }
    return RingT::t_power(static_cast<size_t>(2 * s), coef);
}

double predict_parallel(const std::vector<PredMultihole>& multiholes, long R) {
    if (multiholes.empty()) throw std::invalid_argument("no multiholes given");
    for (size_t i = 1; i < multiholes.size(); ++i)
        if (multiholes[i].spec.q != multiholes[0].spec.q)
            throw std::invalid_argument("parallel prediction requires a common slope");
    return superpose(multiholes, R);
}

double predict_general_slopes(const std::vector<PredMultihole>& multiholes, long R) {
    if (multiholes.empty()) throw std::invalid_argument("no multiholes given");
    return superpose(multiholes, R);
}

double predict_even_triangles(const std::vector<TriangleSpec>& triangles, long R) {
    std::vector<PredMultihole> multiholes;
    for (const auto& t : triangles) {
        auto parts = expand_even_triangle(t.orientation, t.side, {0, 0});
        PredMultihole m;
        m.spec.orientation = t.orientation;
        m.spec.q = 1;
        for (const auto& h : parts) m.spec.positions.push_back(h.center.x);
        m.spec.offset = t.offset;
        multiholes.push_back(std::move(m));
    }
    return predict_parallel(multiholes, R);
}

HoleConfig config_at_scale(const std::vector<PredMultihole>& multiholes, long R) {
    HoleConfig config;
    for (const auto& m : multiholes) {
        MultiholeSpec scaled = m.spec;
        scaled.offset = {R * m.spec.offset.x, R * m.spec.offset.y};
        auto hs = scaled.holes();
        config.holes.insert(config.holes.end(), hs.begin(), hs.end());
    }
    if (!config.disjoint()) throw std::invalid_argument("scaled configuration overlaps");
    return config;
}

std::vector<RatioRow> ratio_experiment(const std::vector<PredMultihole>& multiholes,
                                       const std::vector<long>& scales, mpfr_prec_t precision) {
    for (long R : scales)
        if (R <= 0) throw std::invalid_argument("scales must be positive");
    // scales are independent of one another; evaluate them concurrently
    std::vector<std::future<RatioRow>> futures;
    for (long R : scales)
        futures.push_back(std::async(std::launch::async, [&, R] {
            double predicted = predict_general_slopes(multiholes, R);
            double exact = omega_hat(config_at_scale(multiholes, R), precision).value;
            double ratio = exact / predicted;
            mpfr_free_cache();  // discard this worker's constant cache
            return RatioRow{R, exact, predicted, ratio, std::abs(ratio - 1.0)};
        }));
    std::vector<RatioRow> rows;
    for (auto& f : futures) rows.push_back(f.get());
    return rows;
}

double boltzmann_ratio(const std::vector<double>& dist1, const std::vector<double>& dist2,
                       const std::vector<int>& charges, double x) {
    size_t n = charges.size();
    size_t pairs = n * (n - 1) / 2;
    if (dist1.size() != pairs || dist2.size() != pairs)
        throw std::invalid_argument("expected one distance per unordered pair");
    double s1 = 0, s2 = 0;
    size_t idx = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j, ++idx) {
            if (dist1[idx] <= 0 || dist2[idx] <= 0)
                throw std::invalid_argument("distances must be positive");
            s1 += charges[i] * charges[j] * (-std::log(dist1[idx]));
            s2 += charges[i] * charges[j] * (-std::log(dist2[idx]));
        }
    double e = x * x / 2.0;
    return std::exp(-e * s1) / std::exp(-e * s2);
}

}  // namespace holecorr
