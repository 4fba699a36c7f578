#pragma once

#include <stdexcept>
#include <string>
#include "holecorr/rational.hpp"
#include "holecorr/ringt.hpp"

namespace holecorr {

// Element a + b*zeta of Q(zeta) with zeta^2 = -1 - zeta (zeta = exp(2*pi*i/3)).
struct CycloQ {
    Rational re0;  // coefficient of 1
    Rational re1;  // coefficient of zeta

    CycloQ() : re0(0), re1(0) {}
    CycloQ(Rational a, Rational b) : re0(std::move(a)), re1(std::move(b)) {}
    CycloQ(long a) : re0(a), re1(0) {}

    static CycloQ zeta_pow(long k) {
        switch (mod_floor(k, 3)) {
            case 0: return CycloQ(1, 0);
            case 1: return CycloQ(0, 1);
            default: return CycloQ(-1, -1);  // zeta^2
        }
    }

    CycloQ operator+(const CycloQ& o) const { return {re0 + o.re0, re1 + o.re1}; }
    CycloQ operator-(const CycloQ& o) const { return {re0 - o.re0, re1 - o.re1}; }
    CycloQ operator-() const { return {-re0, -re1}; }
    CycloQ operator*(const CycloQ& o) const {
        // (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2, z^2 = -1 - z
        Rational bd = re1 * o.re1;
        return {re0 * o.re0 - bd, re0 * o.re1 + re1 * o.re0 - bd};
    }
    CycloQ operator*(const Rational& s) const { return {re0 * s, re1 * s}; }
    bool operator==(const CycloQ& o) const { return re0 == o.re0 && re1 == o.re1; }

    CycloQ conj() const { return {re0 - re1, -re1}; }
    // z * conj(z) = a^2 - a b + b^2, real and nonnegative.
    Rational norm() const { return re0 * re0 - re0 * re1 + re1 * re1; }
    CycloQ inverse() const {
        Rational n = norm();
        if (n == 0) throw std::domain_error("inverse of zero in Q(zeta)");
        return conj() * (1 / n);
    }
    CycloQ pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        CycloQ acc(1), base = *this;
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    std::string to_string() const { return re0.get_str() + " + " + re1.get_str() + "*z"; }
};

// The real number -(i/2pi)(z - conj z) = re1 * sqrt(3)/(2 pi), as RingT.
inline RingT cyclo_bridge(const CycloQ& z) {
    if (z.re1 == 0) return RingT();
    return RingT::t_power(1, z.re1 / 2);
}

// Powers of a free rational zeta (used where zeta is an indeterminate
// rather than the cube root of unity; negative powers are exact inverses).
struct FreeZeta {
    Rational z;
    explicit FreeZeta(Rational zeta) : z(std::move(zeta)) {
        if (z == 0 || z == 1 || z == -1)
            throw std::invalid_argument("free zeta must avoid 0 and +/-1");
    }
    Rational pow(long k) const { return pow_rat(z, k); }
};

}  // namespace holecorr
