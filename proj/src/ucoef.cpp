#include "holecorr/ucoef.hpp"

#include <stdexcept>
#include "holecorr/coupling.hpp"
#include "holecorr/diffops.hpp"

namespace holecorr {

CycloQ u_coef_cyclo(long s, long a, long b) {
    if (s < 0) throw std::invalid_argument("coefficient order must be >= 0");
    // (1 - D zeta^{-1})^{-b} = sum_l C(-b,l) (-1)^l zeta^{-l} D^l; the sum
    // truncates at l = s because D^l annihilates x^s beyond that.
    CycloQ acc;
    for (long l = 0; l <= s; ++l) {
        auto mono = [s](long t) { return pow_rat(Rational(t), s); };
        Rational dl = finite_diff_pow<Rational>(mono, l, a + b - 1);
        if (dl == 0) continue;
        Rational c = binom_gen(Rational(-b), static_cast<unsigned long>(l));
        if (l % 2 != 0) c = -c;
        acc = acc + CycloQ::zeta_pow(-l) * (c * dl);
    }
    return CycloQ::zeta_pow(a - b - 1) * acc;
}

UValue u_coef(long s, long a, long b) { return cyclo_bridge(u_coef_cyclo(s, a, b)); }

double u_remainder(long a, long b, int n, long r, mpfr_prec_t precision) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (n < 0) throw std::invalid_argument("truncation order must be >= 0");
    RingT diff = p_exact(-3 * r - 1 + a, -1 + b);
    Rational scale = rat(1, 3 * r);
    Rational power = scale;
    for (int s = 0; s < n; ++s) {
        diff -= u_coef(s, a, b) * power;
        power *= scale;
    }
    return diff.eval(precision).abs().to_double();
}

}  // namespace holecorr
