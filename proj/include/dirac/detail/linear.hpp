#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dirac/weight.hpp"

namespace dirac::detail {

/// Solves A x = b exactly by Gauss-Jordan elimination; nullopt if A is singular.
inline std::optional<std::vector<Rat>> solve(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        Rat inv = Rat(1) / a[col][col];
        for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            Rat f = a[row][col];
            for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
            b[row] -= f * b[col];
        }
    }
    return b;
}

/// Coefficients c with sum c_i basis_i = v, for linearly independent basis
/// vectors; nullopt when v lies outside their span.
inline std::optional<std::vector<Rat>> coefficients(const WeightVec& v, const std::vector<WeightVec>& basis) {
    const std::size_t k = basis.size();
    std::vector<std::vector<Rat>> gram(k, std::vector<Rat>(k));
    std::vector<Rat> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) gram[i][j] = inner(basis[i], basis[j]);
        rhs[i] = inner(v, basis[i]);
    }
    auto c = solve(std::move(gram), std::move(rhs));
    if (!c) return std::nullopt;
    WeightVec back(v.dim());
    for (std::size_t i = 0; i < k; ++i) back = back + scale(basis[i], (*c)[i]);
    if (back != v) return std::nullopt;
    return c;
}

} // namespace dirac::detail
