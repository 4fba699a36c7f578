#include "holecorr/correlation.hpp"

#include <algorithm>
#include <stdexcept>
#include "holecorr/coupling.hpp"
#include "holecorr/ucoef.hpp"

namespace holecorr {

RingT det_bareiss(RingMatrix m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return RingT(1);
    RingT prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return RingT();
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev);
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

RingMatrix coupling_block(long x, long y) {
    return {{p_exact(x - 1, y - 1), p_exact(x - 2, y)},
            {p_exact(x, y - 2), p_exact(x - 1, y - 1)}};
}

RingMatrix coefficient_block(long s, long x, long y) {
    return {{u_coef(s, x, y), u_coef(s, x - 1, y + 1)},
            {u_coef(s, x + 1, y - 1), u_coef(s, x, y)}};
}

RingMatrix build_M(const HoleConfig& config) {
    if (!config.disjoint()) throw std::invalid_argument("holes overlap");
    std::vector<Side2Hole> es, ws;
    for (const auto& h : config.holes)
        (h.orientation == Orientation::E ? es : ws).push_back(h);
    size_t m = es.size(), n = ws.size();
    if (m < n) throw std::invalid_argument("build_M requires at least as many E holes as W holes");
    RingMatrix out(2 * m, std::vector<RingT>(2 * m));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) {
            RingMatrix blk = coupling_block(es[i].center.x - ws[j].center.x,
                                            es[i].center.y - ws[j].center.y);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) out[2 * i + r][2 * j + c] = blk[r][c];
        }
        for (size_t s = 0; s + n < m; ++s) {
            RingMatrix blk = coefficient_block(static_cast<long>(s), es[i].center.x, es[i].center.y);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) out[2 * i + r][2 * (n + s) + c] = blk[r][c];
        }
    }
    return out;
}

OmegaHat omega_hat(const HoleConfig& config, mpfr_prec_t precision) {
    HoleConfig c = charge(config) < 0 ? mirror(config) : config;
    RingT det = det_bareiss(build_M(c));
    BigFloat v = det.eval(std::max(precision, det.safe_precision()));
    if (v.sign() < 0) det = -det;
    return {det, v.abs().to_double()};
}

OmegaHat omega1_balanced(const std::vector<MonomerCoord>& lefts,
                         const std::vector<MonomerCoord>& rights, mpfr_prec_t precision) {
    if (lefts.size() != rights.size())
        throw std::invalid_argument("correlation needs equally many left and right monomers");
    size_t k = lefts.size();
    RingMatrix m(k, std::vector<RingT>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            m[i][j] = p_exact(rights[i].x - lefts[j].x, rights[i].y - lefts[j].y);
    RingT det = det_bareiss(std::move(m));
    BigFloat v = det.eval(std::max(precision, det.safe_precision()));
    if (v.sign() < 0) det = -det;
    return {det, v.abs().to_double()};
}

}  // namespace holecorr
