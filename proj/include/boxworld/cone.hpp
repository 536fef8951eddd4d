#ifndef BOXWORLD_CONE_HPP
#define BOXWORLD_CONE_HPP

#include "boxworld/effects.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace boxworld {

/// Result of a cone membership test. When `member` is true, `weights[i]`
/// is the non-negative coefficient of extremal effect i and
/// Σ_i weights[i]·A_i equals the queried effect exactly.
struct ConeMembership {
    bool member = false;
    std::vector<Rational> weights;
    /// Simplex pivots taken; 0 when a fast path applied.
    std::size_t pivots = 0;
};

namespace detail {

// Phase-1 simplex: find λ >= 0 with A λ = b. Bland's rule (lowest index
// entering and leaving) guarantees termination.
inline std::optional<RVector> phase_one_feasible(const RMatrix& a, const RVector& b, std::size_t& pivots) {
    const std::size_t rows = a.rows();
    const std::size_t n = a.cols();
    const std::size_t width = n + rows + 1;  // structural, artificial, rhs
    RMatrix tab(rows, width);
    for (std::size_t i = 0; i < rows; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) tab(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
        tab(i, n + i) = 1;
        tab(i, width - 1) = flip ? Rational(-b[i]) : b[i];
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = n + i;

    // Reduced costs of the phase-1 objective Σ artificials.
    RVector cost(width);
    for (std::size_t j = 0; j < width; ++j) {
        Rational c = (j >= n && j < n + rows) ? Rational(1) : Rational(0);
        if (j == width - 1) c = 0;
        for (std::size_t i = 0; i < rows; ++i) c -= tab(i, j);
        cost[j] = c;
    }
    cost[width - 1] = -cost[width - 1];  // holds the objective value Σ rhs

    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;
        std::size_t leave = rows;
        Rational best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (tab(i, enter) <= 0) continue;
            Rational ratio = tab(i, width - 1) / tab(i, enter);
            if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows) break;  // unbounded direction; cannot happen for phase 1
        ++pivots;
        Rational inv = 1 / tab(leave, enter);
        for (std::size_t j = 0; j < width; ++j) tab(leave, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || tab(i, enter) == 0) continue;
            Rational f = tab(i, enter);
            for (std::size_t j = 0; j < width; ++j)
                if (tab(leave, j) != 0) tab(i, j) -= f * tab(leave, j);
        }
        Rational f = cost[enter];
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (tab(leave, j) != 0) cost[j] -= f * tab(leave, j);
        cost[width - 1] += f * tab(leave, width - 1);
        basis[leave] = enter;
    }
    // Objective = Σ artificial values.
    Rational objective = 0;
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] >= n) objective += tab(i, width - 1);
    if (objective != 0) return std::nullopt;
    RVector x(n);
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] < n) x[basis[i]] = tab(i, width - 1);
    return x;
}

}  // namespace detail

/// Exact test whether `b` lies in the cone generated by the extremal effects.
inline ConeMembership cone_member(const EffectCatalog& cat, const EffectCoeffs& b) {
    if (b.dim() != cat.system().dim()) throw DimensionError("cone_member: dimension mismatch");
    ConeMembership result;
    result.weights.assign(cat.size(), Rational(0));
    if (is_zero(b.coeffs)) {
        result.member = true;
        return result;
    }
    if (auto idx = cat.find(b)) {
        result.member = true;
        result.weights[*idx] = 1;
        return result;
    }
    RMatrix a = RMatrix::from_columns(
        [&] {
            std::vector<RVector> cols;
            for (const auto& e : cat.all_coeffs()) cols.push_back(e.coeffs);
            return cols;
        }(),
        cat.system().dim());
    auto x = detail::phase_one_feasible(a, b.coeffs, result.pivots);
    if (!x) return result;
    result.member = true;
    result.weights = *x;
    return result;
}

/// Σ weights[i]·A_i == b exactly with all weights >= 0.
inline bool verify_certificate(const EffectCatalog& cat, const EffectCoeffs& b, const ConeMembership& m) {
    if (!m.member || m.weights.size() != cat.size()) return false;
    RVector sum(cat.system().dim());
    for (std::size_t i = 0; i < cat.size(); ++i) {
        if (m.weights[i] < 0) return false;
        if (m.weights[i] != 0) sum = sum + m.weights[i] * cat.coeffs(i).coeffs;
    }
    return sum == b.coeffs;
}

}  // namespace boxworld

#endif  // BOXWORLD_CONE_HPP
