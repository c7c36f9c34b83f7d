#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kzeta/errors.hpp"
#include "kzeta/numeric.hpp"

namespace kzeta {

// A weight in Bourbaki epsilon-coordinates of the ambient rational space.
using Weight = std::vector<Rational>;

inline Weight weight_add(const Weight& a, const Weight& b) {
    Weight c(a);
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return c;
}

inline Weight weight_sub(const Weight& a, const Weight& b) {
    Weight c(a);
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return c;
}

inline Weight weight_neg(const Weight& a) {
    Weight c(a);
    for (auto& x : c) x = -x;
    return c;
}

inline Weight weight_scale(const Rational& s, const Weight& a) {
    Weight c(a);
    for (auto& x : c) x *= s;
    return c;
}

inline Rational weight_dot(const Weight& a, const Weight& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool weight_is_zero(const Weight& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

inline bool weight_is_integral(const Weight& a) {
    for (const auto& x : a)
        if (!is_integer(x)) return false;
    return true;
}

// True when every coordinate lies in Z + 1/2 (the spin pattern).
inline bool weight_is_half_integral(const Weight& a) {
    for (const auto& x : a)
        if (den(x) != 2) return false;
    return true;
}

inline std::string weight_str(const Weight& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << Rational(a[i]).str();
    }
    os << ')';
    return os.str();
}

namespace detail {

// Column-echelon basis of the lattice spanned by integer vectors.
// Plain gcd-elimination; sizes here are at most 8 x 240.
inline std::vector<std::vector<Integer>> lattice_basis(std::vector<std::vector<Integer>> cols,
                                                       std::size_t dim) {
    std::size_t pivot = 0;
    for (std::size_t row = 0; row < dim && pivot < cols.size(); ++row) {
        while (true) {
            std::size_t best = cols.size();
            for (std::size_t j = pivot; j < cols.size(); ++j) {
                if (cols[j][row] == 0) continue;
                if (best == cols.size() ||
                    abs(cols[j][row]) < abs(cols[best][row]))
                    best = j;
            }
            if (best == cols.size()) break;  // row has no support among remaining columns
            std::swap(cols[pivot], cols[best]);
            bool reduced_all = true;
            for (std::size_t j = pivot + 1; j < cols.size(); ++j) {
                if (cols[j][row] == 0) continue;
                Integer q = floor_div(cols[j][row], cols[pivot][row]);
                for (std::size_t r = 0; r < dim; ++r) cols[j][r] -= q * cols[pivot][r];
                if (cols[j][row] != 0) reduced_all = false;
            }
            if (reduced_all) {
                ++pivot;
                break;
            }
        }
    }
    cols.resize(pivot);
    return cols;
}

// Solves B c = target over Q for a full-column-rank B given columnwise.
inline std::optional<std::vector<Rational>> rational_solve(
    const std::vector<std::vector<Integer>>& basis_cols, const std::vector<Rational>& target) {
    const std::size_t dim = target.size(), r = basis_cols.size();
    std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(r + 1, Rational(0)));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < dim; ++i) m[i][j] = Rational(basis_cols[j][i]);
    for (std::size_t i = 0; i < dim; ++i) m[i][r] = target[i];

    std::size_t row = 0;
    std::vector<std::size_t> pivot_of_col(r, dim);
    for (std::size_t col = 0; col < r && row < dim; ++col) {
        std::size_t sel = row;
        while (sel < dim && m[sel][col] == 0) ++sel;
        if (sel == dim) continue;
        std::swap(m[row], m[sel]);
        Rational inv = Rational(1) / m[row][col];
        for (std::size_t j = col; j <= r; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < dim; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j <= r; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    for (std::size_t i = row; i < dim; ++i)
        if (m[i][r] != 0) return std::nullopt;  // inconsistent
    std::vector<Rational> c(r, Rational(0));
    for (std::size_t col = 0; col < r; ++col)
        if (pivot_of_col[col] < dim) c[col] = m[pivot_of_col[col]][r];
    return c;
}

}  // namespace detail

// Smallest m >= 1 with m * v in the Z-span of the generators, or absent
// if v is not even in the Q-span.
inline std::optional<Integer> lattice_coset_order(const std::vector<Weight>& generators,
                                                  const Weight& v) {
    if (generators.empty()) return std::nullopt;
    const std::size_t dim = v.size();
    Integer scale = 1;
    for (const auto& g : generators)
        for (const auto& x : g) scale = boost::multiprecision::lcm(scale, den(x));
    std::vector<std::vector<Integer>> cols;
    for (const auto& g : generators) {
        std::vector<Integer> col(dim);
        for (std::size_t i = 0; i < dim; ++i) col[i] = num(g[i] * Rational(scale));
        cols.push_back(std::move(col));
    }
    auto basis = detail::lattice_basis(std::move(cols), dim);
    Weight scaled = weight_scale(Rational(scale), v);
    auto coords = detail::rational_solve(basis, scaled);
    if (!coords) return std::nullopt;
    Integer order = 1;
    for (const auto& c : *coords) order = boost::multiprecision::lcm(order, den(c));
    return order;
}

}  // namespace kzeta
