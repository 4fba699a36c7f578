#include "holecorr/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace holecorr {

namespace {
mpfr_prec_t max_prec(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}

// mpfr caches computed constants per thread; release the main thread's
// copy at exit so leak checkers stay quiet.
struct CacheCleanup {
    ~CacheCleanup() { mpfr_free_cache(); }
} cache_cleanup;
}  // namespace

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt3_over_pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_t p;
    mpfr_init2(p, prec + 8);
    mpfr_const_pi(p, MPFR_RNDN);
    mpfr_sqrt_ui(r.v_, 3, MPFR_RNDN);
    mpfr_div(r.v_, r.v_, p, MPFR_RNDN);
    mpfr_clear(p);
    return r;
}

BigFloat BigFloat::operator+(const BigFloat& o) const {
    BigFloat r(max_prec(*this, o));
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-(const BigFloat& o) const {
    BigFloat r(max_prec(*this, o));
    mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator*(const BigFloat& o) const {
    BigFloat r(max_prec(*this, o));
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator/(const BigFloat& o) const {
    BigFloat r(max_prec(*this, o));
    mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow_si(long e) const {
    BigFloat r(precision());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(size_t digits) const {
    std::vector<char> buf(digits + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", static_cast<int>(digits), v_);
    return std::string(buf.data());
}

}  // namespace holecorr
