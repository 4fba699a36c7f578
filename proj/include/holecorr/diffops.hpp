#pragma once

#include <functional>
#include <stdexcept>
#include <vector>
#include "holecorr/rational.hpp"

namespace holecorr {

// s-th power of the forward difference operator:
//   D^s f(u) = sum_j (-1)^(s-j) C(s,j) f(u+j).
template <typename V, typename F>
V finite_diff_pow(F&& f, long s, long u) {
    if (s < 0) throw std::invalid_argument("difference order must be >= 0");
    V acc{};
    for (long j = 0; j <= s; ++j) {
        Rational c(binom(static_cast<unsigned long>(s), static_cast<unsigned long>(j)));
        if ((s - j) % 2 != 0) c = -c;
        acc = acc + f(u + j) * c;
    }
    return acc;
}

inline Rational finite_diff_pow(const std::function<Rational(long)>& f, long s, long u) {
    return finite_diff_pow<Rational>(f, s, u);
}

inline void check_distinct_nodes(const std::vector<Rational>& nodes) {
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] == nodes[j]) throw std::invalid_argument("divided-difference nodes must be distinct");
}

// Full table of Newton divided differences: row r holds D^r f(c_1..c_{n-r}),
// built from the recursion D^r f(c_i) = (D^(r-1) f(c_{i+1}) - D^(r-1) f(c_i)) / (c_{i+r} - c_i).
template <typename V>
std::vector<std::vector<V>> divided_diff_table(const std::vector<V>& values,
                                               const std::vector<Rational>& nodes) {
    if (values.size() != nodes.size()) throw std::invalid_argument("values/nodes size mismatch");
    check_distinct_nodes(nodes);
    std::vector<std::vector<V>> table;
    table.push_back(values);
    for (size_t r = 1; r < values.size(); ++r) {
        const auto& prev = table.back();
        std::vector<V> row;
        row.reserve(prev.size() - 1);
        for (size_t i = 0; i + 1 < prev.size(); ++i) {
            Rational gap = nodes[i + r] - nodes[i];
            row.push_back((prev[i + 1] - prev[i]) * (1 / gap));
        }
        table.push_back(std::move(row));
    }
    return table;
}

// D^k f(c_1) for tabulated values at the given nodes.
template <typename V>
V divided_diff(const std::vector<V>& values, const std::vector<Rational>& nodes, size_t k) {
    if (k >= nodes.size()) throw std::invalid_argument("divided-difference order exceeds node count");
    auto table = divided_diff_table(values, nodes);
    return table[k][0];
}

inline Rational divided_diff(const std::vector<Rational>& values,
                             const std::vector<Rational>& nodes, size_t k) {
    return divided_diff<Rational>(values, nodes, k);
}

// Partial-fraction form of D^n f(c_0): sum_j f(c_j) / prod_{l != j} (c_j - c_l).
// Independent route used as a test oracle for the recursive definition.
template <typename V>
V divided_diff_explicit(const std::vector<V>& values, const std::vector<Rational>& nodes, size_t n) {
    if (n >= nodes.size()) throw std::invalid_argument("divided-difference order exceeds node count");
    check_distinct_nodes(nodes);
    V acc{};
    for (size_t j = 0; j <= n; ++j) {
        Rational denom = 1;
        for (size_t l = 0; l <= n; ++l)
            if (l != j) denom *= nodes[j] - nodes[l];
        acc = acc + values[j] * (1 / denom);
    }
    return acc;
}

// Complete homogeneous symmetric function h_n(vars); h_n = 0 for n < 0, h_0 = 1.
inline Rational complete_homog(long n, const std::vector<Rational>& vars) {
    if (n < 0) return 0;
    if (n == 0) return 1;
    if (vars.empty()) return 0;
    // h[k] accumulates h_k over a growing prefix of the variables.
    std::vector<Rational> h(static_cast<size_t>(n) + 1, Rational(0));
    h[0] = 1;
    for (const auto& x : vars)
        for (long k = 1; k <= n; ++k) h[k] += h[k - 1] * x;
    // The inner loop uses the updated h[k-1], which is exactly the
    // standard recurrence h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m).
    return h[static_cast<size_t>(n)];
}

// Determinant-preserving transform: rows (or columns) holding f(c_1)..f(c_k)
// are replaced by prod_{j<r} (c_r - c_j) * D^(r-1) f(c_1).
template <typename Matrix>
Matrix dd_transform_rows(const Matrix& m, const std::vector<size_t>& rows,
                         const std::vector<Rational>& nodes) {
    if (rows.size() != nodes.size()) throw std::invalid_argument("row/node count mismatch");
    if (rows.size() > m.size()) throw std::invalid_argument("transform order exceeds row count");
    for (size_t r : rows)
        if (r >= m.size()) throw std::invalid_argument("row index out of range");
    check_distinct_nodes(nodes);
    Matrix out = m;
    using Row = typename Matrix::value_type;
    std::vector<Row> vals;
    vals.reserve(rows.size());
    for (size_t r : rows) vals.push_back(m[r]);
    size_t width = vals.empty() ? 0 : vals[0].size();
    for (size_t k = 0; k < rows.size(); ++k) {
        Rational pre = 1;
        for (size_t j = 0; j < k; ++j) pre *= nodes[k] - nodes[j];
        Row nr(width);
        for (size_t c = 0; c < width; ++c) {
            std::vector<typename Row::value_type> col;
            col.reserve(vals.size());
            for (const auto& v : vals) col.push_back(v[c]);
            nr[c] = divided_diff(col, nodes, k) * pre;
        }
        out[rows[k]] = std::move(nr);
    }
    return out;
}

}  // namespace holecorr
