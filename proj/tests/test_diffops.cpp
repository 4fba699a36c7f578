#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include "holecorr/diffops.hpp"
#include "holecorr/ringt.hpp"

using namespace holecorr;

namespace {

Rational rnd_small(std::mt19937_64& rng, long span = 9) {
    std::uniform_int_distribution<long> num(-span, span), den(1, 4);
    return rat(num(rng), den(rng));
}

std::vector<Rational> distinct_nodes(std::mt19937_64& rng, size_t count) {
    std::vector<Rational> nodes;
    while (nodes.size() < count) {
        Rational c = rnd_small(rng);
        bool dup = false;
        for (const auto& n : nodes) dup |= (n == c);
        if (!dup) nodes.push_back(c);
    }
    return nodes;
}

// random polynomial as coefficient list, evaluated exactly
struct Poly {
    std::vector<Rational> c;
    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
};

Poly rnd_poly(std::mt19937_64& rng, int deg) {
    Poly p;
    for (int i = 0; i <= deg; ++i) p.c.push_back(rnd_small(rng));
    return p;
}

}  // namespace

TEST_CASE("finite difference powers") {
    auto sq = [](long x) -> Rational { return Rational(x * x); };
    auto cube = [](long x) -> Rational { return Rational(x * x * x); };
    auto quart = [](long x) -> Rational { return Rational(x) * x * x * x; };
    CHECK(finite_diff_pow(sq, 2, 0) == rat(2));
    CHECK(finite_diff_pow(cube, 3, 5) == rat(6));
    // 3^4 - 2*2^4 + 1
    CHECK(finite_diff_pow(quart, 2, 1) == rat(50));
    CHECK_THROWS(finite_diff_pow(sq, -1, 0));
}

TEST_CASE("divided differences match the explicit partial-fraction oracle") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        auto nodes = distinct_nodes(rng, 5);
        Poly f = rnd_poly(rng, 4);
        std::vector<Rational> values;
        for (const auto& n : nodes) values.push_back(f(n));
        for (size_t k = 0; k < nodes.size(); ++k)
            CHECK(divided_diff(values, nodes, k) == divided_diff_explicit(values, nodes, k));
    }
}

TEST_CASE("divided difference frozen values") {
    // slope of the identity map
    CHECK(divided_diff({rat(2), rat(5)}, {rat(2), rat(5)}, 1) == rat(1));
    // f(x)=x^3 at {0,1,3}, order 2 -> h_1(0,1,3) = 4
    CHECK(divided_diff({rat(0), rat(1), rat(27)}, {rat(0), rat(1), rat(3)}, 2) == rat(4));
    CHECK_THROWS(divided_diff({rat(0), rat(1)}, {rat(2), rat(2)}, 1));
}

TEST_CASE("divided powers give complete homogeneous symmetric functions") {
    std::mt19937_64 rng(22);
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= 5; ++k) {
            if (k > n + 3) continue;
            auto nodes = distinct_nodes(rng, k + 1);
            std::vector<Rational> values;
            for (const auto& c : nodes) values.push_back(pow_rat(c, n));
            CHECK(divided_diff(values, nodes, k) == complete_homog(n - k, nodes));
        }
}

TEST_CASE("complete homogeneous basics") {
    CHECK(complete_homog(0, {}) == rat(1));
    CHECK(complete_homog(-2, {rat(3)}) == rat(0));
    CHECK(complete_homog(2, {rat(3)}) == rat(9));
    CHECK(complete_homog(2, {rat(1), rat(2)}) == rat(7));
}

TEST_CASE("newton reconstruction telescopes exactly") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        auto nodes = distinct_nodes(rng, 6);
        Poly f = rnd_poly(rng, 5);
        std::vector<Rational> values;
        for (const auto& n : nodes) values.push_back(f(n));
        auto table = divided_diff_table(values, nodes);
        for (size_t l = 0; l < nodes.size(); ++l) {
            Rational acc = 0, pre = 1;
            for (size_t r = 0; r <= l; ++r) {
                acc += pre * table[r][0];
                pre *= nodes[l] - nodes[r];
            }
            CHECK(acc == values[l]);
        }
    }
}

TEST_CASE("transform preserves determinants") {
    using Matrix = std::vector<std::vector<RingT>>;
    std::mt19937_64 rng(24);

    // k = 1 leaves the matrix unchanged
    Matrix m1 = {{RingT(rat(2)), RingT(rat(3))}, {RingT(rat(5)), RingT(rat(7))}};
    auto same = dd_transform_rows(m1, {0}, {rat(4)});
    CHECK(same == m1);

    // Vandermonde rows at nodes {0,1,2}
    std::vector<Rational> nodes = {rat(0), rat(1), rat(2)};
    Matrix v(3, std::vector<RingT>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v[i][j] = RingT(pow_rat(nodes[i], j));
    auto tv = dd_transform_rows(v, {0, 1, 2}, nodes);
    // exact determinants via the correlation module would be overkill here;
    // expand 3x3 by hand
    auto det3 = [](const Matrix& a) {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    };
    CHECK(det3(tv) == det3(v));

    // random 4x4 whose rows 1,3 sample (c, c^2, c^3, c^4) at c in {1,4}
    std::vector<Rational> cs = {rat(1), rat(4)};
    Matrix r(4, std::vector<RingT>(4));
    for (int j = 0; j < 4; ++j) {
        r[0][j] = RingT(rnd_small(rng));
        r[2][j] = RingT(rnd_small(rng));
        r[1][j] = RingT(pow_rat(cs[0], j + 1));
        r[3][j] = RingT(pow_rat(cs[1], j + 1));
    }
    auto tr = dd_transform_rows(r, {1, 3}, cs);
    auto det4 = [&](const Matrix& a) {
        RingT acc;
        for (int p0 = 0; p0 < 4; ++p0)
            for (int p1 = 0; p1 < 4; ++p1)
                for (int p2 = 0; p2 < 4; ++p2)
                    for (int p3 = 0; p3 < 4; ++p3) {
                        int perm[4] = {p0, p1, p2, p3};
                        bool ok = true;
                        int inv = 0;
                        for (int i = 0; i < 4; ++i)
                            for (int j = i + 1; j < 4; ++j) {
                                if (perm[i] == perm[j]) ok = false;
                                if (perm[i] > perm[j]) ++inv;
                            }
                        if (!ok) continue;
                        RingT term = a[0][p0] * a[1][p1] * a[2][p2] * a[3][p3];
                        acc = inv % 2 == 0 ? acc + term : acc - term;
                    }
        return acc;
    };
    CHECK(det4(tr) == det4(r));

    CHECK_THROWS(dd_transform_rows(m1, {0, 1, 2}, {rat(0), rat(1), rat(2)}));
}

TEST_CASE("mixed-power difference asymptotics stay bounded") {
    // D_x^k (A x + R B + C)^l at fixed nodes: the leading term is
    // C(l,k) A^k B^(l-k) R^(l-k); the residual over R^(l-k-1) must stay
    // bounded as R doubles.
    std::mt19937_64 rng(25);
    std::vector<Rational> nodes = {rat(0), rat(1), rat(3), rat(6)};
    Rational A = rat(2, 3), B = rat(5, 2), C = rat(-7, 3);
    for (long l = 1; l <= 4; ++l)
        for (long k = 0; k < l; ++k) {
            double bound = 0;
            bool first = true;
            for (long R : {16, 32, 64, 128}) {
                std::vector<Rational> values;
                for (const auto& c : nodes) values.push_back(pow_rat(A * c + rat(R) * B + C, l));
                Rational dd = divided_diff(values, nodes, static_cast<size_t>(k));
                Rational lead = Rational(binom(static_cast<unsigned long>(l),
                                               static_cast<unsigned long>(k))) *
                                pow_rat(A, k) * pow_rat(B, l - k) * pow_rat(rat(R), l - k);
                Rational resid = dd - lead;
                double scaled = std::abs(resid.get_d() / pow_rat(rat(R), l - k - 1).get_d());
                if (first) {
                    bound = scaled;
                    first = false;
                } else {
                    CHECK(scaled <= bound * 1.5 + 1e-12);
                }
            }
        }
}
