#ifndef BOXWORLD_RATIONAL_HPP
#define BOXWORLD_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace boxworld {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator, so equality is structural.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses "p", "p/q" or "-p/q" (whitespace around the parts is not accepted).
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view part) -> Integer {
        std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (part.size() == start)
            throw ParseError("malformed rational '" + std::string(text) + "'");
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw ParseError("malformed rational '" + std::string(text) + "'");
        std::string digits(part[0] == '+' ? part.substr(1) : part);
        return Integer(digits);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

using RVector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
class RMatrix {
public:
    RMatrix() = default;
    RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static RMatrix identity(std::size_t n) {
        RMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Matrix whose columns are the given vectors.
    static RMatrix from_columns(const std::vector<RVector>& columns, std::size_t rows) {
        RMatrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows) throw DimensionError("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    static RMatrix from_rows(const std::vector<RVector>& rows, std::size_t cols) {
        RMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DimensionError("row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RVector row(std::size_t i) const {
        return RVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                       data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    RVector column(std::size_t j) const {
        RVector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    RMatrix transpose() const {
        RMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_square() const { return rows_ == cols_; }

    friend bool operator==(const RMatrix&, const RMatrix&) = default;

    /// Lexicographic order on (shape, entries); used for deterministic sets.
    friend bool operator<(const RMatrix& a, const RMatrix& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        for (std::size_t i = 0; i < a.data_.size(); ++i) {
            if (a.data_[i] < b.data_[i]) return true;
            if (b.data_[i] < a.data_[i]) return false;
        }
        return false;
    }

    const std::vector<Rational>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline RMatrix operator*(const RMatrix& a, const RMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
    RMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline RVector operator*(const RMatrix& a, const RVector& x) {
    if (a.cols() != x.size()) throw DimensionError("matrix-vector shape mismatch");
    RVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0 && x[j] != 0) y[i] += a(i, j) * x[j];
    return y;
}

inline RVector operator+(const RVector& a, const RVector& b) {
    if (a.size() != b.size()) throw DimensionError("vector length mismatch");
    RVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

inline RVector operator-(const RVector& a, const RVector& b) {
    if (a.size() != b.size()) throw DimensionError("vector length mismatch");
    RVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

inline RVector operator*(const Rational& s, const RVector& v) {
    RVector c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = s * v[i];
    return c;
}

inline Rational dot(const RVector& a, const RVector& b) {
    if (a.size() != b.size()) throw DimensionError("vector length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const RVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

/// Comma-joined "p/q" strings. Canonical, so usable as a dedup key.
inline std::string canonical_key(const RVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += to_string(v[i]);
    }
    return out;
}

inline std::string canonical_key(const RMatrix& m) {
    std::string out = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ":";
    out += canonical_key(m.data());
    return out;
}

}  // namespace boxworld

#endif  // BOXWORLD_RATIONAL_HPP
