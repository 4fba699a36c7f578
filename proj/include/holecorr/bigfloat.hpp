#pragma once

#include <mpfr.h>
#include <string>
#include "holecorr/rational.hpp"

namespace holecorr {

// Arbitrary-precision real backed by MPFR. Precision is fixed per value;
// binary ops use the max precision of the operands.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 53) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const Rational& q, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(double d, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, d, MPFR_RNDN); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(BigFloat o) { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    static BigFloat pi(mpfr_prec_t prec);
    static BigFloat sqrt3_over_pi(mpfr_prec_t prec);

    BigFloat operator+(const BigFloat& o) const;
    BigFloat operator-(const BigFloat& o) const;
    BigFloat operator*(const BigFloat& o) const;
    BigFloat operator/(const BigFloat& o) const;
    BigFloat operator-() const;
    BigFloat abs() const;
    BigFloat pow_si(long e) const;

    bool operator<(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator<=(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
    bool operator==(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) == 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(size_t digits = 15) const;

  private:
    mpfr_t v_;
};

}  // namespace holecorr
