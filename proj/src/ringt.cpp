#include "holecorr/ringt.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace holecorr {

void RingT::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RingT RingT::t_power(size_t k, const Rational& c) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return RingT(std::move(v));
}

RingT RingT::operator+(const RingT& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return RingT(std::move(v));
}

RingT RingT::operator-(const RingT& o) const { return *this + (-o); }

RingT RingT::operator-() const {
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c = -c;
    return RingT(std::move(v));
}

RingT RingT::operator*(const RingT& o) const {
    if (is_zero() || o.is_zero()) return RingT();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return RingT(std::move(v));
}

RingT RingT::operator*(const Rational& s) const {
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c *= s;
    return RingT(std::move(v));
}

RingT RingT::operator/(const Rational& s) const {
    if (s == 0) throw std::domain_error("division by zero rational");
    return *this * (1 / s);
}

RingT RingT::divide_exact(const RingT& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return RingT();
    if (degree() < d.degree()) throw std::logic_error("inexact polynomial division");
    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quo(coeffs_.size() - d.coeffs_.size() + 1, Rational(0));
    const Rational lead = d.coeffs_.back();
    for (long i = static_cast<long>(rem.size()) - 1; i >= static_cast<long>(d.coeffs_.size()) - 1; --i) {
        if (rem[i] == 0) continue;
        Rational q = rem[i] / lead;
        quo[i - (d.coeffs_.size() - 1)] = q;
        for (size_t j = 0; j < d.coeffs_.size(); ++j)
            rem[i - (d.coeffs_.size() - 1) + j] -= q * d.coeffs_[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::logic_error("inexact polynomial division");
    return RingT(std::move(quo));
}

mpfr_prec_t RingT::safe_precision(mpfr_prec_t extra) const {
    size_t bits = 0;
    for (const auto& c : coeffs_) {
        bits = std::max(bits, mpz_sizeinbase(c.get_num().get_mpz_t(), 2));
        bits = std::max(bits, mpz_sizeinbase(c.get_den().get_mpz_t(), 2));
    }
    return static_cast<mpfr_prec_t>(bits) + extra;
}

BigFloat RingT::eval(mpfr_prec_t precision) const {
    // Horner with guard bits; coefficients may be astronomically larger
    // than the final value, so rounding happens only at the requested
    // precision after a wider working pass.
    mpfr_prec_t work = precision + 32;
    if (is_zero()) return BigFloat(Rational(0), precision);
    BigFloat t = BigFloat::sqrt3_over_pi(work);
    BigFloat acc(Rational(coeffs_.back()), work);
    for (long i = static_cast<long>(coeffs_.size()) - 2; i >= 0; --i)
        acc = acc * t + BigFloat(coeffs_[i], work);
    return acc + BigFloat(Rational(0), precision);
}

std::string RingT::to_string(size_t min_terms) const {
    size_t n = std::max(coeffs_.size(), min_terms);
    if (n == 0) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < n; ++k) {
        Rational c = coeff(k);
        if (c == 0 && k >= min_terms) continue;
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        Rational a = c < 0 ? Rational(-c) : c;
        out << a.get_str();
        if (k == 1) out << "*T";
        else if (k > 1) out << "*T^" << k;
        first = false;
    }
    if (first) return "0";
    return out.str();
}

}  // namespace holecorr
