#include "holecorr/detident.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace holecorr {

namespace {

Rational zp(const Rational& zeta, long k) { return pow_rat(zeta, k); }

// Row/column chooser factors of the three entry flavours 11, 12, 21.
Rational flavour_one(const Rational& zeta, int chi) {
    switch (chi) {
        case 0: return 1;
        case 1: return zp(zeta, -2);
        default: return zp(zeta, 2);
    }
}
Rational flavour_two(const Rational& zeta, int chi) {
    switch (chi) {
        case 0: return 1;
        case 1: return zp(zeta, 2);
        default: return zp(zeta, -2);
    }
}

std::vector<size_t> block_offsets(const std::vector<long>& sizes) {
    std::vector<size_t> off(sizes.size() + 1, 0);
    for (size_t i = 0; i < sizes.size(); ++i) off[i + 1] = off[i] + 2 * sizes[i];
    return off;
}

}  // namespace

long BlockSpec::S() const { return std::accumulate(s.begin(), s.end(), 0L); }
long BlockSpec::T() const { return std::accumulate(t.begin(), t.end(), 0L); }

void BlockSpec::validate() const {
    if (s.size() != x.size() || s.size() != y.size() || t.size() != z.size() ||
        t.size() != w.size())
        throw std::invalid_argument("block spec arrays have inconsistent lengths");
    for (long v : s)
        if (v < 1) throw std::invalid_argument("block sizes must be >= 1");
    for (long v : t)
        if (v < 1) throw std::invalid_argument("block sizes must be >= 1");
    if (!qe.empty() && qe.size() != s.size())
        throw std::invalid_argument("per-block east slopes have wrong length");
    if (!qw.empty() && qw.size() != t.size())
        throw std::invalid_argument("per-block west slopes have wrong length");
    if (S() < T()) throw std::invalid_argument("spec requires S >= T");
    if (zeta == 0 || zeta == 1 || zeta == -1)
        throw std::invalid_argument("zeta must avoid 0 and +/-1");
}

Rational det_rational(RatMatrix m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
    Rational det = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = -det;
        }
        det *= m[k][k];
        Rational inv = 1 / m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rational f = m[i][k] * inv;
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

namespace {

// Entry families of the undeformed block matrix (per-block slopes allowed).
Rational entry_A(const BlockSpec& sp, int chi, long k, long l, const Rational& qe,
                 const Rational& qw, const Rational& u, const Rational& v) {
    const Rational& zt = sp.zeta;
    Rational denom_p = pow_rat(u - v * zt, k + l + 1);
    Rational denom_m = pow_rat(u - v / zt, k + l + 1);
    if (denom_p == 0 || denom_m == 0)
        throw std::domain_error("parameter choice hits factor (u - v*zeta^{+-1}) = 0");
    Rational c(binom(static_cast<unsigned long>(k + l), static_cast<unsigned long>(k)));
    Rational lhs = flavour_one(zt, chi) * zp(zt, -1) * pow_rat(1 - qe * zt, k) *
                   pow_rat(1 - qw * zt, l) / denom_p;
    Rational rhs = flavour_two(zt, chi) * zt * pow_rat(1 - qe / zt, k) *
                   pow_rat(1 - qw / zt, l) / denom_m;
    return c * (lhs - rhs);
}

Rational entry_B(const BlockSpec& sp, int chi, long l, long k, const Rational& qe,
                 const Rational& u, const Rational& v) {
    if (l < k) return 0;
    const Rational& zt = sp.zeta;
    Rational c(binom(static_cast<unsigned long>(l), static_cast<unsigned long>(k)));
    Rational lhs = flavour_one(zt, chi) * zp(zt, -1) * pow_rat(1 - qe * zt, k) *
                   pow_rat(u - v * zt, l - k);
    Rational rhs = flavour_two(zt, chi) * zt * pow_rat(1 - qe / zt, k) *
                   pow_rat(u - v / zt, l - k);
    return c * (lhs - rhs);
}

// Deformed entries with shifted factorials in place of plain powers.
Rational entry_A_h(const BlockSpec& sp, int chi, long k, long l, const Rational& u,
                   const Rational& v) {
    const Rational& zt = sp.zeta;
    Rational denom_p = pochhammer_h(u - v * zt, static_cast<unsigned long>(k + l + 1), sp.h);
    Rational denom_m = pochhammer_h(u - v / zt, static_cast<unsigned long>(k + l + 1), sp.h);
    if (denom_p == 0 || denom_m == 0)
        throw std::domain_error("parameter choice hits a vanishing shifted factorial");
    Rational c(binom(static_cast<unsigned long>(k + l), static_cast<unsigned long>(k)));
    return c * (flavour_one(zt, chi) * zp(zt, -1) / denom_p -
                flavour_two(zt, chi) * zt / denom_m);
}

Rational entry_B_h(const BlockSpec& sp, int chi, long l, long k, const Rational& u,
                   const Rational& v) {
    if (l < k) return 0;
    const Rational& zt = sp.zeta;
    Rational c(binom(static_cast<unsigned long>(l), static_cast<unsigned long>(k)));
    return c * (flavour_one(zt, chi) * zp(zt, -1) *
                    pochhammer_h(u - v * zt, static_cast<unsigned long>(l - k), sp.h) -
                flavour_two(zt, chi) * zt *
                    pochhammer_h(u - v / zt, static_cast<unsigned long>(l - k), sp.h));
}

template <typename EntryA, typename EntryB>
RatMatrix assemble_blocks(const BlockSpec& sp, EntryA&& ea, EntryB&& eb) {
    sp.validate();
    long S = sp.S(), T = sp.T();
    auto row_off = block_offsets(sp.s);
    auto col_off = block_offsets(sp.t);
    RatMatrix m(2 * S, std::vector<Rational>(2 * S, Rational(0)));
    for (size_t i = 0; i < sp.s.size(); ++i)
        for (long k = 0; k < sp.s[i]; ++k) {
            size_t r0 = row_off[i] + 2 * k;
            for (size_t j = 0; j < sp.t.size(); ++j)
                for (long l = 0; l < sp.t[j]; ++l) {
                    size_t c0 = col_off[j] + 2 * l;
                    m[r0][c0] = ea(0, k, l, i, j);
                    m[r0][c0 + 1] = ea(1, k, l, i, j);
                    m[r0 + 1][c0] = ea(2, k, l, i, j);
                    m[r0 + 1][c0 + 1] = ea(0, k, l, i, j);
                }
            for (long l = 0; l < S - T; ++l) {
                size_t c0 = 2 * T + 2 * l;
                m[r0][c0] = eb(0, l, k, i);
                m[r0][c0 + 1] = eb(1, l, k, i);
                m[r0 + 1][c0] = eb(2, l, k, i);
                m[r0 + 1][c0 + 1] = eb(0, l, k, i);
            }
        }
    return m;
}

}  // namespace

RatMatrix build_Mpp(const BlockSpec& spec) {
    return assemble_blocks(
        spec,
        [&](int chi, long k, long l, size_t i, size_t j) {
            return entry_A(spec, chi, k, l, spec.slope_e(i), spec.slope_w(j),
                           spec.z[j] - spec.x[i], spec.w[j] - spec.y[i]);
        },
        [&](int chi, long l, long k, size_t i) {
            return entry_B(spec, chi, l, k, spec.slope_e(i), spec.x[i], spec.y[i]);
        });
}

Rational formula_Mpp(const BlockSpec& spec) {
    spec.validate();
    const Rational& zt = spec.zeta;
    Rational acc = pow_rat(zp(zt, 2) - zp(zt, -2), 2 * spec.S());
    auto qfactor = [&](const Rational& q) -> Rational { return (q - zt) * (q - 1 / zt); };
    for (size_t i = 0; i < spec.s.size(); ++i)
        acc *= pow_rat(qfactor(spec.slope_e(i)), spec.s[i] * (spec.s[i] - 1) / 2);
    for (size_t j = 0; j < spec.t.size(); ++j)
        acc *= pow_rat(qfactor(spec.slope_w(j)), spec.t[j] * (spec.t[j] - 1) / 2);
    auto pair_factor = [&](const Rational& du, const Rational& dv) -> Rational {
        return (du - zt * dv) * (du - dv / zt);
    };
    for (size_t i = 0; i < spec.s.size(); ++i)
        for (size_t j = i + 1; j < spec.s.size(); ++j)
            acc *= pow_rat(pair_factor(spec.x[i] - spec.x[j], spec.y[i] - spec.y[j]),
                           spec.s[i] * spec.s[j]);
    for (size_t i = 0; i < spec.t.size(); ++i)
        for (size_t j = i + 1; j < spec.t.size(); ++j)
            acc *= pow_rat(pair_factor(spec.z[i] - spec.z[j], spec.w[i] - spec.w[j]),
                           spec.t[i] * spec.t[j]);
    for (size_t i = 0; i < spec.s.size(); ++i)
        for (size_t j = 0; j < spec.t.size(); ++j) {
            Rational f = pair_factor(spec.x[i] - spec.z[j], spec.y[i] - spec.w[j]);
            if (f == 0) throw std::domain_error("cross-pair factor vanishes");
            acc /= pow_rat(f, spec.s[i] * spec.t[j]);
        }
    return acc;
}

RatMatrix build_N(const std::vector<long>& s, const std::vector<long>& t,
                  const std::vector<Rational>& x, const std::vector<Rational>& z) {
    long S = std::accumulate(s.begin(), s.end(), 0L);
    long T = std::accumulate(t.begin(), t.end(), 0L);
    if (S < T) throw std::invalid_argument("requires S >= T");
    RatMatrix m(S, std::vector<Rational>(S, Rational(0)));
    size_t row = 0;
    for (size_t i = 0; i < s.size(); ++i)
        for (long r = 0; r < s[i]; ++r, ++row) {
            size_t col = 0;
            for (size_t j = 0; j < t.size(); ++j)
                for (long l = 0; l < t[j]; ++l, ++col) {
                    Rational base = -x[i] - z[j];
                    if (base == 0) throw std::domain_error("factor -x_i - z_j vanishes");
                    m[row][col] = Rational(binom(static_cast<unsigned long>(r + l),
                                                 static_cast<unsigned long>(r))) /
                                  pow_rat(base, r + l + 1);
                }
            for (long l = 0; l < S - T; ++l, ++col)
                if (l >= r)
                    m[row][col] = Rational(binom(static_cast<unsigned long>(l),
                                                 static_cast<unsigned long>(r))) *
                                  pow_rat(x[i], l - r);
        }
    return m;
}

Rational formula_N(const std::vector<long>& s, const std::vector<long>& t,
                   const std::vector<Rational>& x, const std::vector<Rational>& z) {
    long S = std::accumulate(s.begin(), s.end(), 0L);
    long T = std::accumulate(t.begin(), t.end(), 0L);
    // moving the power columns in front of the binomial columns gives the
    // clean product form; moving them back costs (-1)^(T(S-T))
    Rational acc = (T * (S - T)) % 2 == 0 ? 1 : -1;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) acc *= pow_rat(x[j] - x[i], s[i] * s[j]);
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j) acc *= pow_rat(z[j] - z[i], t[i] * t[j]);
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = 0; j < t.size(); ++j) {
            Rational base = -x[i] - z[j];
            if (base == 0) throw std::domain_error("factor -x_i - z_j vanishes");
            acc /= pow_rat(base, s[i] * t[j]);
        }
    return acc;
}

RatMatrix build_M0h(const BlockSpec& spec) {
    return assemble_blocks(
        spec,
        [&](int chi, long k, long l, size_t i, size_t j) {
            return entry_A_h(spec, chi, k, l, spec.z[j] - spec.x[i], spec.w[j] - spec.y[i]);
        },
        [&](int chi, long l, long k, size_t i) {
            return entry_B_h(spec, chi, l, k, spec.x[i], spec.y[i]);
        });
}

Rational formula_M0h(const BlockSpec& spec) {
    spec.validate();
    const Rational& zt = spec.zeta;
    Rational acc = pow_rat(zp(zt, -2) - zp(zt, 2), 2 * spec.S());
    auto lin = [&](const Rational& du, const Rational& dv, long shift, bool plus) -> Rational {
        return du - (plus ? zt : 1 / zt) * dv - rat(shift) * spec.h;
    };
    for (size_t i = 0; i < spec.s.size(); ++i)
        for (size_t j = i + 1; j < spec.s.size(); ++j)
            for (long k = 0; k < spec.s[i]; ++k)
                for (long l = 0; l < spec.s[j]; ++l)
                    acc *= lin(spec.x[i] - spec.x[j], spec.y[i] - spec.y[j], k - l, true) *
                           lin(spec.x[i] - spec.x[j], spec.y[i] - spec.y[j], k - l, false);
    // column ladders run along negated nodes, so west-west pairs carry the
    // opposite shift sign from east-east pairs
    for (size_t i = 0; i < spec.t.size(); ++i)
        for (size_t j = i + 1; j < spec.t.size(); ++j)
            for (long k = 0; k < spec.t[i]; ++k)
                for (long l = 0; l < spec.t[j]; ++l)
                    acc *= lin(spec.z[i] - spec.z[j], spec.w[i] - spec.w[j], l - k, true) *
                           lin(spec.z[i] - spec.z[j], spec.w[i] - spec.w[j], l - k, false);
    for (size_t i = 0; i < spec.s.size(); ++i)
        for (size_t j = 0; j < spec.t.size(); ++j)
            for (long k = 0; k < spec.s[i]; ++k)
                for (long l = 0; l < spec.t[j]; ++l) {
                    Rational fp = lin(spec.x[i] - spec.z[j], spec.y[i] - spec.w[j], k + l, true);
                    Rational fm = lin(spec.x[i] - spec.z[j], spec.y[i] - spec.w[j], k + l, false);
                    if (fp == 0 || fm == 0) throw std::domain_error("cross-pair factor vanishes");
                    acc /= fp * fm;
                }
    return acc;
}

namespace {

// g^{+/-}_{ij a} = (x_i - z_j) - zeta^{+/-1} (y_i - w_j) - a h.
Rational g_factor(const BlockSpec& sp, size_t i, size_t j, long a, bool plus) {
    return (sp.x[i] - sp.z[j]) - (plus ? sp.zeta : 1 / sp.zeta) * (sp.y[i] - sp.w[j]) -
           rat(a) * sp.h;
}

// Product of all factors of the clearing polynomial d, optionally skipping
// the factors g^{sign}_{i0 j0 a} with a <= upto (those cancel against a
// block's own denominator).
Rational d_product(const BlockSpec& sp, long skip_i, long skip_j, bool skip_plus, long upto) {
    Rational acc = 1;
    for (size_t i = 0; i < sp.s.size(); ++i)
        for (size_t j = 0; j < sp.t.size(); ++j)
            for (long a = 0; a <= sp.s[i] + sp.t[j] - 2; ++a) {
                bool skip_here = static_cast<long>(i) == skip_i &&
                                 static_cast<long>(j) == skip_j && a <= upto;
                if (!(skip_here && skip_plus)) acc *= g_factor(sp, i, j, a, true);
                if (!(skip_here && !skip_plus)) acc *= g_factor(sp, i, j, a, false);
            }
    return acc;
}

}  // namespace

Rational clearing_factor(const BlockSpec& spec) { return d_product(spec, -1, -1, true, -1); }

RatMatrix build_dM0(const BlockSpec& spec) {
    spec.validate();
    Rational d = clearing_factor(spec);
    return assemble_blocks(
        spec,
        [&](int chi, long k, long l, size_t i, size_t j) -> Rational {
            // d / (u - v zeta^{+-1})_{k+l+1,h} written as an explicit product:
            // each pochhammer factor equals -g^{+-}_{ij b}, b = 0..k+l.
            const Rational& zt = spec.zeta;
            int neg = (k + l + 1) % 2 == 0 ? 1 : -1;
            Rational qp = d_product(spec, static_cast<long>(i), static_cast<long>(j), true, k + l);
            Rational qm = d_product(spec, static_cast<long>(i), static_cast<long>(j), false, k + l);
            Rational c(binom(static_cast<unsigned long>(k + l), static_cast<unsigned long>(k)));
            return c * neg *
                   (flavour_one(zt, chi) * zp(zt, -1) * qp - flavour_two(zt, chi) * zt * qm);
        },
        [&](int chi, long l, long k, size_t i) -> Rational {
            return d * entry_B_h(spec, chi, l, k, spec.x[i], spec.y[i]);
        });
}

BlockSpec constrain_for(const BlockSpec& spec, const VanishInstance& inst) {
    BlockSpec sp = spec;
    switch (inst.kind) {
        case VanishKind::RowPairDifference:
            // x_i = x_j + zeta (y_i - y_j) + (k - l) h
            sp.x[inst.i] = sp.x[inst.j] + sp.zeta * (sp.y[inst.i] - sp.y[inst.j]) +
                           rat(inst.k - inst.l) * sp.h;
            break;
        case VanishKind::ColumnPairWithinWest:
        case VanishKind::ColumnShiftWithinWest: {
            Rational zpow = inst.sign_plus ? sp.zeta : 1 / sp.zeta;
            sp.x[inst.i] = sp.z[inst.j] + zpow * (sp.y[inst.i] - sp.w[inst.j]) + rat(inst.a) * sp.h;
            break;
        }
    }
    return sp;
}

std::vector<Rational> vanishing_combination(const BlockSpec& spec, const VanishInstance& inst) {
    spec.validate();
    auto row_off = block_offsets(spec.s);
    auto col_off = block_offsets(spec.t);
    switch (inst.kind) {
        case VanishKind::RowPairDifference: {
            if (inst.i >= inst.j || inst.j >= spec.s.size())
                throw std::invalid_argument("needs east blocks i < j");
            if (inst.k < 0 || inst.k >= spec.s[inst.i] || inst.l < 0 || inst.l >= spec.s[inst.j])
                throw std::invalid_argument("order indices out of range");
            std::vector<Rational> coef(2 * spec.S(), Rational(0));
            auto fill = [&](size_t block, long order, const Rational& sign) {
                for (long a = 0; a < spec.s[block]; ++a) {
                    Rational v = a > order
                                     ? Rational(0)
                                     : Rational(factorial(static_cast<unsigned long>(a))) *
                                           Rational(binom(static_cast<unsigned long>(order),
                                                          static_cast<unsigned long>(a))) *
                                           pow_rat(spec.h, a);
                    if (a % 2 != 0) v = -v;
                    coef[row_off[block] + 2 * a] = sign * v;
                    coef[row_off[block] + 2 * a + 1] = -sign * v * zp(spec.zeta, 2);
                }
            };
            fill(inst.i, inst.k, Rational(-1));
            fill(inst.j, inst.l, Rational(1));
            return coef;
        }
        case VanishKind::ColumnPairWithinWest: {
            if (inst.j >= spec.t.size() || inst.i >= spec.s.size())
                throw std::invalid_argument("block index out of range");
            if (inst.l < 0 || inst.l >= spec.t[inst.j])
                throw std::invalid_argument("pair index out of range");
            if (inst.a < 0 || inst.a > spec.s[inst.i] + spec.t[inst.j] - 2)
                throw std::invalid_argument("shift out of range");
            std::vector<Rational> coef(2 * spec.S(), Rational(0));
            coef[col_off[inst.j] + 2 * inst.l] = 1;
            coef[col_off[inst.j] + 2 * inst.l + 1] = -zp(spec.zeta, inst.sign_plus ? 2 : -2);
            return coef;
        }
        case VanishKind::ColumnShiftWithinWest: {
            if (inst.j >= spec.t.size() || inst.i >= spec.s.size())
                throw std::invalid_argument("block index out of range");
            long tj = spec.t[inst.j];
            if (inst.a < 0 || inst.a > tj - 2) throw std::invalid_argument("shift out of range");
            if (inst.k < 0 || inst.k > tj - 2 - inst.a)
                throw std::invalid_argument("ladder index out of range");
            std::vector<Rational> coef(2 * spec.S(), Rational(0));
            Rational lead = Rational(factorial(static_cast<unsigned long>(tj - 1))) /
                            Rational(factorial(static_cast<unsigned long>(tj - 2 - inst.a - inst.k)));
            Rational scale = lead / Rational(factorial(static_cast<unsigned long>(inst.k)));
            if (inst.k % 2 != 0) scale = -scale;
            for (long alpha = 0; alpha <= inst.a; ++alpha) {
                Rational c = scale * pow_rat(-spec.h, alpha) /
                             (Rational(factorial(static_cast<unsigned long>(inst.a - alpha))) *
                              rat(inst.a - alpha + 1 + inst.k));
                coef[col_off[inst.j] + 2 * alpha + 1] = c;
            }
            coef[col_off[inst.j] + 2 * (inst.a + 1 + inst.k) + 1] =
                lead * pow_rat(-spec.h, 1 + inst.a + inst.k);
            return coef;
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<Rational> vanishing_residual(const BlockSpec& spec, const VanishInstance& inst) {
    BlockSpec sp = constrain_for(spec, inst);
    RatMatrix dm = build_dM0(sp);
    std::vector<Rational> coef = vanishing_combination(sp, inst);
    size_t n = dm.size();
    std::vector<Rational> residual(n, Rational(0));
    if (inst.kind == VanishKind::RowPairDifference) {
        for (size_t c = 0; c < n; ++c)
            for (size_t r = 0; r < n; ++r)
                if (coef[r] != 0) residual[c] += coef[r] * dm[r][c];
    } else {
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                if (coef[c] != 0) residual[r] += coef[c] * dm[r][c];
    }
    return residual;
}

long n1_count(long a, long s, long t) {
    long count = 0;
    for (long k = 0; k < s; ++k)
        for (long l = 0; l < t; ++l)
            if (k - l == a) ++count;
    return count;
}

long n2_count(long a, long s, long t) {
    long count = 0;
    for (long k = 0; k < s; ++k)
        for (long l = 0; l < t; ++l)
            if (k + l == a) ++count;
    return count;
}

Rational gauss_2f1_unit(const Rational& a, const Rational& b, const Rational& c) {
    auto term_index = [](const Rational& v) -> long {
        if (is_integer(v) && v <= 0) return -to_long(v);
        return -1;
    };
    long ka = term_index(a), kb = term_index(b);
    long k = -1;
    if (ka >= 0 && kb >= 0) k = std::min(ka, kb);
    else if (ka >= 0) k = ka;
    else if (kb >= 0) k = kb;
    else throw std::invalid_argument("series does not terminate");
    Rational sum = 0, term = 1;
    for (long j = 0; j <= k; ++j) {
        sum += term;
        Rational cj = c + rat(j);
        if (j < k && cj == 0)
            throw std::domain_error("lower parameter hits a nonpositive integer inside the sum");
        if (j < k) term *= (a + rat(j)) * (b + rat(j)) / (rat(j + 1) * cj);
    }
    return sum;
}

namespace {

Rational random_rational(std::mt19937_64& rng, long span = 8, long max_den = 3) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, max_den);
    return rat(num(rng), den(rng));
}

Rational random_nonzero(std::mt19937_64& rng, long span = 8, long max_den = 3) {
    for (;;) {
        Rational r = random_rational(rng, span, max_den);
        if (r != 0) return r;
    }
}

bool spec_is_generic(const BlockSpec& sp) {
    try {
        for (size_t i = 0; i < sp.s.size(); ++i)
            for (size_t j = 0; j < sp.t.size(); ++j)
                for (long a = 0; a <= sp.s[i] + sp.t[j] - 2; ++a)
                    if (g_factor(sp, i, j, a, true) == 0 || g_factor(sp, i, j, a, false) == 0)
                        return false;
        auto pair_ok = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
            for (size_t i = 0; i < u.size(); ++i)
                for (size_t j = i + 1; j < u.size(); ++j) {
                    Rational du = u[i] - u[j], dv = v[i] - v[j];
                    if (du - sp.zeta * dv == 0 || du - dv / sp.zeta == 0) return false;
                }
            return true;
        };
        return pair_ok(sp.x, sp.y) && pair_ok(sp.z, sp.w);
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

BlockSpec random_spec(std::mt19937_64& rng, long max_S, bool per_hole_slopes, bool with_h) {
    std::uniform_int_distribution<long> zeta_num(2, 7);
    std::uniform_int_distribution<long> zeta_den(1, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    for (;;) {
        BlockSpec sp;
        std::uniform_int_distribution<long> m_dist(1, 3);
        long m = m_dist(rng);
        long S = 0;
        for (long i = 0; i < m && S < max_S; ++i) {
            std::uniform_int_distribution<long> size_dist(1, std::min<long>(3, max_S - S));
            long si = size_dist(rng);
            sp.s.push_back(si);
            S += si;
        }
        std::uniform_int_distribution<long> n_dist(0, 2);
        long n = n_dist(rng);
        long T = 0;
        for (long j = 0; j < n; ++j) {
            long room = S - T;
            if (room <= 0) break;
            std::uniform_int_distribution<long> size_dist(1, std::min<long>(3, room));
            long tj = size_dist(rng);
            sp.t.push_back(tj);
            T += tj;
        }
        for (size_t i = 0; i < sp.s.size(); ++i) {
            sp.x.push_back(random_rational(rng));
            sp.y.push_back(random_rational(rng));
        }
        for (size_t j = 0; j < sp.t.size(); ++j) {
            sp.z.push_back(random_rational(rng));
            sp.w.push_back(random_rational(rng));
        }
        Rational zt = rat(zeta_num(rng), zeta_den(rng));
        if (coin(rng)) zt = -zt;
        if (zt == 0 || zt == 1 || zt == -1) continue;
        sp.zeta = zt;
        sp.q = random_rational(rng, 5, 2);
        if (per_hole_slopes) {
            for (size_t i = 0; i < sp.s.size(); ++i) sp.qe.push_back(random_rational(rng, 5, 2));
            for (size_t j = 0; j < sp.t.size(); ++j) sp.qw.push_back(random_rational(rng, 5, 2));
        }
        sp.h = with_h ? random_nonzero(rng, 4, 2) : Rational(0);
        if (!spec_is_generic(sp)) continue;
        return sp;
    }
}

namespace {

using Runner = std::function<bool(std::mt19937_64&)>;

Rational poch(const Rational& a, long n) { return pochhammer(a, static_cast<unsigned long>(n)); }

bool check_gauss(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> kd(0, 8);
    long k = kd(rng);
    Rational b = random_rational(rng, 6, 3);
    Rational c;
    for (;;) {
        c = random_rational(rng, 6, 3);
        bool ok = true;
        for (long j = 0; j < k; ++j)
            if (c + rat(j) == 0) ok = false;
        if (ok && poch(c, k) != 0) break;
    }
    Rational lhs = gauss_2f1_unit(rat(-k), b, c);
    Rational rhs = poch(c - b, k) / poch(c, k);
    return lhs == rhs;
}

bool check_2f1_shift(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> kd(0, 8), rd(-6, 6);
    long k = kd(rng), r = rd(rng);
    Rational c = random_rational(rng, 6, 3) + rat(1, 5);  // avoid integer hits
    if (c == 0) c = rat(1, 5);
    Rational lhs;
    try {
        lhs = gauss_2f1_unit(rat(-k), rat(r + 1), c + rat(r + 1));
    } catch (const std::exception&) {
        return true;  // inadmissible sample
    }
    Rational rhs;
    if (r + 1 >= 0) {
        Rational den = poch(c + rat(k), r + 1);
        if (den == 0) return true;
        rhs = poch(c, r + 1) / den;
    } else {
        Rational den = poch(c + rat(r + 1), -r - 1);
        if (den == 0) return true;
        rhs = poch(c + rat(k + r + 1), -r - 1) / den;
    }
    return lhs == rhs;
}

bool check_binomial_convolution(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> kd(0, 8);
    long k = kd(rng);
    std::uniform_int_distribution<long> nd(0, k);
    long n = nd(rng);
    Rational a = random_rational(rng), b = random_rational(rng);
    Rational lhs = 0;
    for (long l = n; l <= k; ++l)
        lhs += Rational(binom(k, l)) * Rational(binom(l, l - n)) * poch(a, k - l) * poch(b, l);
    Rational rhs = Rational(binom(k, n)) * poch(a + b + rat(n), k - n) * poch(b, n);
    return lhs == rhs;
}

bool check_power_moments(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> nd(0, 8);
    long n = nd(rng);
    Rational q = random_rational(rng, 5, 2);
    // sum_j (-1)^(n-j)/( (n-j)! j! ) (qj)_s (j)_(n-s) = q^s for 0 <= s <= n,
    // and the same sum with plain power j^t is 0 for t < n, 1 for t = n.
    for (long s = 0; s <= n; ++s) {
        Rational acc = 0;
        for (long j = 0; j <= n; ++j) {
            Rational term = poch(q * rat(j), s) * poch(rat(j), n - s) /
                            Rational(factorial(static_cast<unsigned long>(n - j)) *
                                     factorial(static_cast<unsigned long>(j)));
            if ((n - j) % 2 != 0) term = -term;
            acc += term;
        }
        if (acc != pow_rat(q, s)) return false;
    }
    for (long tpow = 0; tpow <= n; ++tpow) {
        Rational acc = 0;
        for (long j = 0; j <= n; ++j) {
            Rational term = pow_rat(rat(j), tpow) /
                            Rational(factorial(static_cast<unsigned long>(n - j)) *
                                     factorial(static_cast<unsigned long>(j)));
            if ((n - j) % 2 != 0) term = -term;
            acc += term;
        }
        if (acc != (tpow == n ? Rational(1) : Rational(0))) return false;
    }
    return true;
}

bool check_pfaff_saalschutz(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> nd(0, 8);
    long n = nd(rng);
    Rational x = random_rational(rng, 5, 3), y = random_rational(rng, 5, 3);
    Rational z = random_rational(rng, 5, 3) + rat(1, 7);
    Rational v = 1 + x + y - z - rat(n);
    for (long j = 0; j < n; ++j)
        if (z + rat(j) == 0 || v + rat(j) == 0) return true;  // inadmissible sample
    Rational den = poch(z, n) * poch(z - x - y, n);
    if (den == 0) return true;
    Rational lhs = 0, term = 1;
    for (long j = 0; j <= n; ++j) {
        lhs += term;
        if (j < n)
            term *= (rat(-n) + rat(j)) * (x + rat(j)) * (y + rat(j)) /
                    (rat(j + 1) * (z + rat(j)) * (v + rat(j)));
    }
    Rational rhs = poch(z - x, n) * poch(z - y, n) / den;
    return lhs == rhs;
}

bool check_alternating_pochhammer(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> nd(0, 8);
    long n = nd(rng);
    Rational a = random_rational(rng, 6, 3);
    Rational acc = 0;
    for (long j = 0; j <= n + 1; ++j) {
        Rational term = poch(a + rat(1 - j), n) /
                        Rational(factorial(static_cast<unsigned long>(n + 1 - j)) *
                                 factorial(static_cast<unsigned long>(j)));
        if (j % 2 != 0) term = -term;
        acc += term;
    }
    return acc == 0;
}

bool check_derivative_collapse(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> kd(0, 8);
    long k = kd(rng);
    std::uniform_int_distribution<long> id(0, k);
    long i = id(rng);
    Rational a = random_rational(rng, 6, 3);
    Rational lhs = 0;
    for (long j = 0; j <= i; ++j) {
        Rational term = poch(a, k - j) /
                        Rational(factorial(static_cast<unsigned long>(j)) *
                                 factorial(static_cast<unsigned long>(i - j)) *
                                 factorial(static_cast<unsigned long>(k - j)));
        if (j % 2 != 0) term = -term;
        lhs += term;
    }
    lhs *= Rational(factorial(static_cast<unsigned long>(k)));
    Rational rhs = poch(a - rat(i), k) / Rational(factorial(static_cast<unsigned long>(i)));
    return lhs == rhs;
}

bool check_binomial_matrix_product(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> nd(1, 8), ld(0, 5);
    long n = nd(rng), l = ld(rng);
    Rational x = random_nonzero(rng, 4, 2);
    RatMatrix lhs(n, std::vector<Rational>(n)), f1(n, std::vector<Rational>(n, Rational(0))),
        f2(n, std::vector<Rational>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            lhs[i][j] = Rational(binom(static_cast<unsigned long>(l + i + j),
                                       static_cast<unsigned long>(i))) *
                        pow_rat(x, i + j + 1);
            if (l + j <= l + i)
                f1[i][j] = Rational(binom(static_cast<unsigned long>(l + i),
                                          static_cast<unsigned long>(l + j))) *
                           pow_rat(x, i - j);
            f2[i][j] = Rational(binom(static_cast<unsigned long>(j),
                                      static_cast<unsigned long>(i))) *
                       pow_rat(x, i + j + 1);
        }
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            Rational acc = 0;
            for (long k = 0; k < n; ++k) acc += f1[i][k] * f2[k][j];
            if (acc != lhs[i][j]) return false;
        }
    return true;
}

}  // namespace

std::vector<IdentityReport> hyperg_identity_suite(uint64_t seed, int trials) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, Runner>> checks = {
        {"gauss_2f1_unit", check_gauss},
        {"gauss_2f1_shifted", check_2f1_shift},
        {"binomial_convolution", check_binomial_convolution},
        {"difference_power_moments", check_power_moments},
        {"pfaff_saalschutz", check_pfaff_saalschutz},
        {"alternating_pochhammer_sum", check_alternating_pochhammer},
        {"derivative_remainder_collapse", check_derivative_collapse},
        {"binomial_matrix_factorization", check_binomial_matrix_product},
    };
    std::vector<IdentityReport> reports;
    for (auto& [name, runner] : checks) {
        IdentityReport rep{name, trials, 0};
        for (int i = 0; i < trials; ++i)
            if (!runner(rng)) ++rep.failures;
        reports.push_back(std::move(rep));
    }
    return reports;
}

}  // namespace holecorr
