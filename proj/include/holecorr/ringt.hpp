#pragma once

#include <string>
#include <vector>
#include "holecorr/bigfloat.hpp"
#include "holecorr/rational.hpp"

namespace holecorr {

// Element of Q[T] where T stands for the real constant sqrt(3)/pi.
// Kept symbolic so determinant identities can be tested exactly; floated
// only on demand at a caller-chosen binary precision.
class RingT {
  public:
    RingT() = default;
    RingT(const Rational& c) { if (c != 0) coeffs_ = {c}; }
    RingT(long c) : RingT(Rational(c)) {}
    explicit RingT(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static RingT t_power(size_t k, const Rational& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    RingT operator+(const RingT& o) const;
    RingT operator-(const RingT& o) const;
    RingT operator*(const RingT& o) const;
    RingT operator-() const;
    RingT& operator+=(const RingT& o) { *this = *this + o; return *this; }
    RingT& operator-=(const RingT& o) { *this = *this - o; return *this; }
    RingT& operator*=(const RingT& o) { *this = *this * o; return *this; }
    RingT operator*(const Rational& s) const;
    RingT operator/(const Rational& s) const;

    bool operator==(const RingT& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const RingT& o) const { return !(*this == o); }

    // Exact polynomial division; throws if the remainder is nonzero.
    RingT divide_exact(const RingT& d) const;

    // Substitutes T = sqrt(3)/pi; relative error below 2^(1-precision).
    BigFloat eval(mpfr_prec_t precision) const;
    double eval_double(mpfr_prec_t precision = 256) const { return eval(precision).to_double(); }

    // Working precision large enough that coefficient cancellation cannot
    // corrupt the evaluation: total coefficient magnitude plus guard bits.
    mpfr_prec_t safe_precision(mpfr_prec_t extra = 128) const;

    // Canonical form "a/b + c/d*T + e/f*T^2"; terms below min_terms are
    // printed even when zero so fixed-shape values diff stably.
    std::string to_string(size_t min_terms = 0) const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

inline RingT operator*(const Rational& s, const RingT& p) { return p * s; }

}  // namespace holecorr
