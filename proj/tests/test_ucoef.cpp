#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include "holecorr/coupling.hpp"
#include "holecorr/diffops.hpp"
#include "holecorr/ucoef.hpp"

using namespace holecorr;

namespace {

const RingT kHalfT = RingT::t_power(1, rat(1, 2));  // sqrt(3)/(2 pi)

// zeta^(c-d-1) (1-q*zeta)^k (u-v*zeta)^e in Q(zeta)
CycloQ leading_word(long c, long d, const Rational& q, long k, const Rational& u,
                    const Rational& v, long e) {
    CycloQ w = CycloQ::zeta_pow(c - d - 1);
    w = w * CycloQ(1, -q).pow(k);
    w = w * CycloQ(u, -v).pow(e);
    return w;
}

}  // namespace

TEST_CASE("order zero values") {
    CHECK(u_coef(0, 1, 0).is_zero());
    CHECK(u_coef(0, 2, 0) == kHalfT);
    CHECK(u_coef(0, 0, 0) == -kHalfT);
}

TEST_CASE("all values are pure multiples of T") {
    for (long s = 0; s <= 5; ++s)
        for (long a = -4; a <= 4; ++a)
            for (long b = -4; b <= 4; ++b) {
                UValue u = u_coef(s, a, b);
                CHECK(u.coeff(0) == 0);
                CHECK(u.degree() <= 1);
            }
}

TEST_CASE("truncation remainders") {
    // n = 0: the remainder is |P| itself
    for (long r : {4, 8}) {
        double direct = p_exact(-3 * r - 1 + 2, -1 - 1).eval(512).abs().to_double();
        CHECK(u_remainder(2, -1, 0, r, 512) == doctest::Approx(direct).epsilon(1e-12));
    }

    // remainder*(3r) stays bounded across the doubling list
    double first = 0;
    bool have_first = false;
    for (long r : {8, 16, 32, 64}) {
        double scaled = u_remainder(0, 0, 1, r) * 3 * r;
        if (!have_first) {
            first = scaled;
            have_first = true;
        } else {
            CHECK(scaled <= first * 1.05);
        }
    }

    // order-of-decay: truncating after three terms gains at least ~2^3 per doubling
    double r32 = u_remainder(2, -1, 3, 32);
    double r64 = u_remainder(2, -1, 3, 64);
    CHECK(r32 / r64 >= 8.0 / 1.5);
}

TEST_CASE("leading form: residual is polynomial of low joint degree") {
    // On a step-3 sublattice the difference between U_l and its leading
    // closed form is a polynomial of joint degree < l, so every mixed
    // difference of total order l kills it exactly.
    for (long l = 1; l <= 3; ++l)
        for (long a0 : {0L, 1L})
            for (long b0 : {0L, 2L}) {
                auto V = [&](long i, long j) -> RingT {
                    long a = a0 + 3 * i, b = b0 + 3 * j;
                    CycloQ lead = CycloQ::zeta_pow(a - b - 1) *
                                  CycloQ(rat(a), rat(-b)).pow(l);
                    return u_coef(l, a, b) - cyclo_bridge(lead);
                };
                for (long p = 0; p <= l; ++p) {
                    long q = l - p;
                    RingT acc;
                    for (long al = 0; al <= p; ++al)
                        for (long be = 0; be <= q; ++be) {
                            Rational c(binom(static_cast<unsigned long>(p),
                                             static_cast<unsigned long>(al)) *
                                       binom(static_cast<unsigned long>(q),
                                             static_cast<unsigned long>(be)));
                            if ((p - al + q - be) % 2 != 0) c = -c;
                            acc += V(al, be) * c;
                        }
                    CHECK(acc.is_zero());
                }
            }
}

TEST_CASE("divided differences of the coefficients have the stated growth") {
    // D_x^k U_l(Ru+x+c, Rv+qx+d) minus its leading term is O(R^(l-k-1)).
    std::vector<Rational> nodes = {rat(0), rat(1), rat(2), rat(3), rat(4)};
    for (const Rational& q : {Rational(1), Rational(4), Rational(-2)})
        for (auto [u, v] : std::vector<std::pair<long, long>>{{3, 0}, {0, 3}, {3, -3}, {6, 3}})
            for (long l = 1; l <= 3; ++l)
                for (long k = 0; k <= l; ++k) {
                    long c = 1, d = -1;
                    // dd * R^(k-l) tends to the leading constant with an
                    // O(1/R) error; an 8x increase in R must shrink the
                    // error by at least 4x.
                    CycloQ w = leading_word(c, d, q, k, rat(u), rat(v), l - k);
                    RingT lead = cyclo_bridge(w) * Rational(binom(static_cast<unsigned long>(l),
                                                                  static_cast<unsigned long>(k)));
                    auto err_at = [&](long R) {
                        std::vector<RingT> values;
                        for (const auto& node : nodes) {
                            long x = to_long(node);
                            values.push_back(u_coef(l, R * u + x + c, R * v + to_long(q * rat(x)) + d));
                        }
                        RingT dd = divided_diff(values, nodes, static_cast<size_t>(k));
                        return (dd * pow_rat(rat(R), k - l) - lead).eval(512).abs().to_double();
                    };
                    CHECK(err_at(64) <= err_at(8) / 4 + 1e-18);
                    CHECK(err_at(128) <= err_at(16) / 4 + 1e-18);
                }
}

TEST_CASE("divided differences of the coupling have the stated decay") {
    // D_y^l D_x^k P(-Ru+x+y+c, -Rv+q(x+y)+d) approaches
    // C(k+l,l) * bridge(zeta^(c-d-1)(1-q zeta)^(k+l)/(u-v zeta)^(k+l+1)) R^(-k-l-1)
    // with residual O(R^(-k-l-2)).
    for (const Rational& q : {Rational(1), Rational(-2)})
        for (auto [u, v] : std::vector<std::pair<long, long>>{{3, 0}, {3, -3}, {0, 3}})
            for (long k : {0L, 1L})
                for (long l : {0L, 1L, 2L}) {
                    long c = 2, d = 1;
                    std::vector<Rational> xnodes, ynodes;
                    for (long i = 0; i <= k; ++i) xnodes.push_back(rat(i));
                    for (long j = 0; j <= l; ++j) ynodes.push_back(rat(3 * j + 1));
                    CycloQ denom = CycloQ(rat(u), rat(-v)).pow(k + l + 1);
                    CycloQ w = CycloQ::zeta_pow(c - d - 1) * CycloQ(1, -q).pow(k + l) *
                               denom.inverse();
                    RingT lead = cyclo_bridge(w) * Rational(binom(static_cast<unsigned long>(k + l),
                                                                  static_cast<unsigned long>(l)));
                    auto err_at = [&](long R) {
                        std::vector<RingT> outer;
                        for (const auto& ynode : ynodes) {
                            long y = to_long(ynode);
                            std::vector<RingT> inner;
                            for (const auto& xnode : xnodes) {
                                long x = to_long(xnode);
                                long qq = to_long(q * rat(x + y));
                                inner.push_back(p_exact(-R * u + x + y + c, -R * v + qq + d));
                            }
                            outer.push_back(divided_diff(inner, xnodes, static_cast<size_t>(k)));
                        }
                        RingT dd = divided_diff(outer, ynodes, static_cast<size_t>(l));
                        return (dd * pow_rat(rat(R), k + l + 1) - lead).eval(4096).abs().to_double();
                    };
                    // quadrupling R must cut the first-order error roughly
                    // 4x; allow slack for the next-order term
                    CHECK(err_at(256) <= err_at(64) / 2.2 + 1e-18);
                }
}
