#include "holecorr/coupling.hpp"

#include <cmath>
#include <complex>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace holecorr {

namespace {

// Contour form, valid for x <= -1: expand (-1-t)^(-x-1) binomially and
// integrate each Laurent monomial t^k over the unit-circle arc from
// zeta to zeta^2 through -1 (counterclockwise).  For k != -1 the arc
// integral is (zeta^(2(k+1)) - zeta^(k+1))/(k+1): zero when 3 | k+1,
// and -i*sqrt(3)/(k+1), +i*sqrt(3)/(k+1) for residues 1, 2.  For k = -1
// it is 2*pi*i/3.  The prefactor -i/(2*pi) turns everything rational
// or a rational multiple of T = sqrt(3)/pi.
PValue p_contour(long x, long y) {
    if (x > -1) throw std::logic_error("p_contour requires x <= -1");
    unsigned long n = static_cast<unsigned long>(-x - 1);
    Rational constant(0);
    Rational tpart(0);
    int sign_n = (n % 2 == 0) ? 1 : -1;  // (-1-t)^n = (-1)^n (1+t)^n
    for (unsigned long j = 0; j <= n; ++j) {
        Rational coef(sign_n * binom(n, j));
        long k = static_cast<long>(j) - y - 1;
        if (k == -1) {
            constant += coef / 3;
            continue;
        }
        switch (mod_floor(k + 1, 3)) {
            case 0: break;
            case 1: tpart -= coef / (2 * Rational(k + 1)); break;
            case 2: tpart += coef / (2 * Rational(k + 1)); break;
        }
    }
    return RingT({constant, tpart});
}

struct PairHash {
    size_t operator()(const std::pair<long, long>& p) const {
        return std::hash<long>()(p.first * 1000003 + p.second);
    }
};

std::mutex memo_mutex;
std::unordered_map<std::pair<long, long>, PValue, PairHash> memo;

}  // namespace

PValue p_exact(long x, long y) {
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find({x, y});
        if (it != memo.end()) return it->second;
    }
    // Reduce into x <= -1: direct, else swap arguments, else rotate
    // (x,y) -> (-x-y-1, x).
    PValue v;
    if (x <= -1) v = p_contour(x, y);
    else if (y <= -1) v = p_contour(y, x);
    else v = p_contour(-x - y - 1, x);
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::make_pair(x, y), v);
    return v;
}

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p0 = 0, p1 = 0;
        for (int iter = 0; iter < 100; ++iter) {
            p0 = 1.0;
            p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            double dp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        p0 = 1.0;
        p1 = 0.0;
        for (int j = 0; j < n; ++j) {
            double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
        }
        double dp = n * (x * p0 - p1) / (x * x - 1.0);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

}  // namespace

namespace {

const std::pair<std::vector<double>, std::vector<double>>& cached_rule(int grid) {
    static std::mutex m;
    static std::unordered_map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(grid);
    if (it == cache.end()) {
        std::pair<std::vector<double>, std::vector<double>> rule;
        gauss_legendre(grid, rule.first, rule.second);
        it = cache.emplace(grid, std::move(rule)).first;
    }
    return it->second;
}

}  // namespace

double p_numeric(long x, long y, int grid) {
    if (grid < 64) throw std::invalid_argument("quadrature grid must be at least 64");
    // Reduce to y >= 0 using the swap and rotation symmetries of the
    // integrand, then close the inner phi-integral by residues: the pole
    // of 1/(1 + e^{-i theta} + e^{-i phi}) in w = e^{i phi} lies inside
    // the unit circle exactly for |theta| < 2*pi/3, leaving
    //   P(x,y) = (1/pi) Int_0^{2pi/3} Re[e^{i x th} (-1)^y (1+e^{-i th})^{-y-1}] dth.
    long xr = x, yr = y;
    if (yr < 0) {
        if (xr >= 0) std::swap(xr, yr);
        else {
            long nx = yr, ny = -xr - yr - 1;
            xr = nx;
            yr = ny;
        }
    }
    const auto& [nodes, weights] = cached_rule(grid);
    const double upper = 2.0 * M_PI / 3.0;
    double acc = 0;
    for (int i = 0; i < grid; ++i) {
        double th = 0.5 * upper * (nodes[i] + 1.0);
        std::complex<double> c = 1.0 + std::exp(std::complex<double>(0, -th));
        std::complex<double> f =
            std::exp(std::complex<double>(0, xr * th)) * std::pow(c, -double(yr) - 1.0);
        if (yr % 2 != 0) f = -f;
        acc += weights[i] * f.real();
    }
    return acc * (0.5 * upper) / M_PI;
}

}  // namespace holecorr
