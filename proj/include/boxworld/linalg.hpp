#ifndef BOXWORLD_LINALG_HPP
#define BOXWORLD_LINALG_HPP

#include "boxworld/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace boxworld {

namespace detail {

// Reduced row echelon form in place. Returns pivot column per pivot row.
// If `track` is given it receives the same row operations (it must have
// the same number of rows as `m`).
inline std::vector<std::size_t> rref(RMatrix& m, RMatrix* track = nullptr,
                                     std::size_t col_limit = static_cast<std::size_t>(-1)) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.rows();
    const std::size_t cols = std::min(m.cols(), col_limit);
    std::size_t r = 0;
    auto swap_rows = [](RMatrix& a, std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    };
    auto axpy_row = [](RMatrix& a, std::size_t dst, std::size_t src, const Rational& f) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(src, c) != 0) a(dst, c) -= f * a(src, c);
    };
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            swap_rows(m, p, r);
            if (track) swap_rows(*track, p, r);
        }
        Rational inv = 1 / m(r, c);
        for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) *= inv;
        if (track)
            for (std::size_t k = 0; k < track->cols(); ++k) (*track)(r, k) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            axpy_row(m, i, r, f);
            if (track) axpy_row(*track, i, r, f);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

/// Outcome of an exact linear solve A·x = b.
struct SolveResult {
    enum class Kind { unique, inconsistent, underdetermined };

    Kind kind = Kind::inconsistent;
    /// The solution (unique) or one particular solution (underdetermined).
    RVector solution;
    /// Kernel basis of A; non-empty exactly when underdetermined.
    std::vector<RVector> kernel;
    /// For inconsistent systems: y with yᵀA = 0 and yᵀb ≠ 0.
    RVector certificate;

    bool has_solution() const { return kind != Kind::inconsistent; }
};

inline SolveResult solve_exact(const RMatrix& a, const RVector& b) {
    if (a.rows() != b.size())
        throw DimensionError("solve_exact: A has " + std::to_string(a.rows()) +
                             " rows but b has length " + std::to_string(b.size()));
    const std::size_t n = a.cols();
    RMatrix aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    RMatrix track = RMatrix::identity(a.rows());
    auto pivots = detail::rref(aug, &track, n);

    SolveResult result;
    for (std::size_t i = pivots.size(); i < a.rows(); ++i) {
        if (aug(i, n) != 0) {
            result.kind = SolveResult::Kind::inconsistent;
            result.certificate = track.row(i);
            return result;
        }
    }
    result.solution.assign(n, Rational(0));
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        result.solution[pivots[r]] = aug(r, n);
        is_pivot[pivots[r]] = true;
    }
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        RVector k(n, Rational(0));
        k[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) k[pivots[r]] = -aug(r, free);
        result.kernel.push_back(std::move(k));
    }
    result.kind = result.kernel.empty() ? SolveResult::Kind::unique
                                        : SolveResult::Kind::underdetermined;
    return result;
}

inline std::size_t rank(const RMatrix& a) {
    RMatrix m = a;
    return detail::rref(m).size();
}

/// Rank of the matrix whose rows are `vectors` (all of length `dim`).
inline std::size_t rank_of(const std::vector<RVector>& vectors, std::size_t dim) {
    return rank(RMatrix::from_rows(vectors, dim));
}

class SingularMatrixError : public Error {
public:
    SingularMatrixError(std::size_t n, std::size_t r)
        : Error("singular " + std::to_string(n) + "x" + std::to_string(n) + " matrix of rank " +
                std::to_string(r)),
          rank_(r) {}
    std::size_t rank() const { return rank_; }

private:
    std::size_t rank_;
};

inline RMatrix invert(const RMatrix& a) {
    if (!a.is_square()) throw DimensionError("invert: matrix is not square");
    RMatrix m = a;
    RMatrix inv = RMatrix::identity(a.rows());
    auto pivots = detail::rref(m, &inv);
    if (pivots.size() != a.rows()) throw SingularMatrixError(a.rows(), pivots.size());
    return inv;
}

inline std::optional<RMatrix> try_invert(const RMatrix& a) {
    try {
        return invert(a);
    } catch (const SingularMatrixError&) {
        return std::nullopt;
    }
}

/// Kronecker product, first factor most significant: (u⊗v)[i·|v|+j] = u[i]·v[j].
inline RVector tensor(const RVector& u, const RVector& v) {
    RVector out(u.size() * v.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) out[i * v.size() + j] = u[i] * v[j];
    }
    return out;
}

inline RMatrix tensor_map(const RMatrix& a, const RMatrix& b) {
    RMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (b(k, l) != 0) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

}  // namespace boxworld

#endif  // BOXWORLD_LINALG_HPP
