#pragma once

// Dense exact linear algebra over a FiniteField. Matrices act on column
// vectors; composition is the matrix product.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "superpoint/field.hpp"

namespace superpoint {

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = kOne;
        return m;
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Mat from_columns(std::size_t rows, const std::vector<Vec>& cols) {
        Mat m(rows, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    Vec column(std::size_t c) const {
        Vec v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    bool is_zero() const {
        for (auto x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    const std::vector<Scalar>& raw() const { return data_; }
    std::vector<Scalar>& raw() { return data_; }

    friend bool operator==(const Mat&, const Mat&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

namespace detail {

inline void require_same_shape(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::DimensionMismatch, "matrix shapes differ");
}

// dst += c * src over the index set where src is nonzero.
inline void axpy(const FieldData& f, std::span<Scalar> dst, Scalar c, std::span<const Scalar> src) {
    if (c.is_zero()) return;
    const std::size_t n = dst.size();
    if (f.small) {
        const std::uint16_t* mrow = f.mul_tab.data() + static_cast<std::size_t>(c.code) * f.q;
        const std::uint16_t* add = f.add_tab.data();
        const std::uint32_t q = f.q;
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint32_t s = src[k].code;
            if (s == 0) continue;
            dst[k].code = add[dst[k].code * q + mrow[s]];
        }
    } else {
        for (std::size_t k = 0; k < n; ++k) {
            if (src[k].is_zero()) continue;
            dst[k].code = f.add(dst[k].code, f.mul(c.code, src[k].code));
        }
    }
}

struct Echelon {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each of the first `rank` rows
};

// In-place Gauss-Jordan to reduced row echelon form.
inline Echelon rref_inplace(const FiniteField& F, Mat& A, bool full = true) {
    const auto& f = F.data();
    Echelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
        std::size_t piv = r;
        while (piv < A.rows() && A(piv, c).is_zero()) ++piv;
        if (piv == A.rows()) continue;
        if (piv != r)
            for (std::size_t k = 0; k < A.cols(); ++k) std::swap(A(piv, k), A(r, k));
        const Scalar inv = F.inv(A(r, c));
        for (std::size_t k = c; k < A.cols(); ++k) A(r, k) = F.mul(A(r, k), inv);
        const auto prow = A.row(r);
        for (std::size_t i = full ? 0 : r + 1; i < A.rows(); ++i) {
            if (i == r || A(i, c).is_zero()) continue;
            axpy(f, A.row(i), F.neg(A(i, c)), prow);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

}  // namespace detail

inline Mat add(const FiniteField& F, const Mat& a, const Mat& b) {
    detail::require_same_shape(a, b);
    Mat c = a;
    for (std::size_t i = 0; i < c.raw().size(); ++i) c.raw()[i] = F.add(c.raw()[i], b.raw()[i]);
    return c;
}

inline Mat sub(const FiniteField& F, const Mat& a, const Mat& b) {
    detail::require_same_shape(a, b);
    Mat c = a;
    for (std::size_t i = 0; i < c.raw().size(); ++i) c.raw()[i] = F.sub(c.raw()[i], b.raw()[i]);
    return c;
}

inline Mat scale(const FiniteField& F, Scalar s, const Mat& a) {
    Mat c = a;
    for (auto& x : c.raw()) x = F.mul(s, x);
    return c;
}

inline Mat neg(const FiniteField& F, const Mat& a) {
    Mat c = a;
    for (auto& x : c.raw()) x = F.neg(x);
    return c;
}

/// a += s * b
inline void accumulate(const FiniteField& F, Mat& a, Scalar s, const Mat& b) {
    detail::require_same_shape(a, b);
    detail::axpy(F.data(), std::span<Scalar>(a.raw()), s, std::span<const Scalar>(b.raw()));
}

inline Mat mul(const FiniteField& F, const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Mat c(a.rows(), b.cols());
    const auto& f = F.data();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto crow = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar x = a(i, k);
            if (!x.is_zero()) detail::axpy(f, crow, x, b.row(k));
        }
    }
    return c;
}

inline Vec apply(const FiniteField& F, const Mat& a, const Vec& v) {
    if (a.cols() != v.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
    Vec out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Scalar acc = kZero;
        const auto row = a.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (!row[k].is_zero() && !v[k].is_zero()) acc = F.add(acc, F.mul(row[k], v[k]));
        out[i] = acc;
    }
    return out;
}

inline Mat power(const FiniteField& F, const Mat& a, std::uint64_t k) {
    if (!a.square()) fail(ErrorCode::DimensionMismatch, "power of a non-square matrix");
    Mat result = Mat::identity(a.rows());
    Mat base = a;
    bool first = true;
    while (k > 0) {
        if (k & 1) {
            result = first ? base : mul(F, result, base);
            first = false;
        }
        k >>= 1;
        if (k > 0) base = mul(F, base, base);
    }
    return result;
}

inline Mat transpose(const Mat& a) {
    Mat t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

/// Kronecker product with row-major index (i, j) -> i * b.rows() + j.
inline Mat kron(const FiniteField& F, const Mat& a, const Mat& b) {
    Mat k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar x = a(i, j);
            if (x.is_zero()) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    k(i * b.rows() + r, j * b.cols() + c) = F.mul(x, b(r, c));
        }
    return k;
}

/// [[a, b], [c, d]] for square blocks of equal size.
inline Mat block2x2(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
    const std::size_t n = a.rows();
    Mat m(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = a(i, j);
            m(i, j + n) = b(i, j);
            m(i + n, j) = c(i, j);
            m(i + n, j + n) = d(i, j);
        }
    return m;
}

/// Entry-wise image under a field embedding.
inline Mat map_entries(const Mat& a, const std::vector<Scalar>& embedding) {
    Mat m = a;
    for (auto& x : m.raw()) x = embedding[x.code];
    return m;
}

inline std::size_t rank(const FiniteField& F, Mat a) {
    return detail::rref_inplace(F, a, false).rank;
}

/// Columns span ker(a); the basis is the standard one attached to the free columns of rref(a).
inline Mat kernel_basis(const FiniteField& F, const Mat& a) {
    Mat r = a;
    const auto ech = detail::rref_inplace(F, r, true);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat k(a.cols(), free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        const std::size_t fc = free_cols[j];
        k(fc, j) = kOne;
        for (std::size_t i = 0; i < ech.rank; ++i) k(ech.pivots[i], j) = F.neg(r(i, fc));
    }
    return k;
}

/// Some X with a * X = y, or none when a column of y lies outside im(a).
inline std::optional<Mat> solve_many(const FiniteField& F, const Mat& a, const Mat& y) {
    if (a.rows() != y.rows()) fail(ErrorCode::DimensionMismatch, "solve: right-hand side has wrong length");
    Mat aug(a.rows(), a.cols() + y.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < y.cols(); ++j) aug(i, a.cols() + j) = y(i, j);
    }
    const auto ech = detail::rref_inplace(F, aug, true);
    for (auto c : ech.pivots)
        if (c >= a.cols()) return std::nullopt;
    Mat x(a.cols(), y.cols());
    for (std::size_t i = 0; i < ech.rank; ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) x(ech.pivots[i], j) = aug(i, a.cols() + j);
    return x;
}

inline std::optional<Vec> solve(const FiniteField& F, const Mat& a, const Vec& b) {
    if (a.rows() != b.size()) fail(ErrorCode::DimensionMismatch, "solve: right-hand side has wrong length");
    auto x = solve_many(F, a, Mat::from_columns(b.size(), {b}));
    if (!x) return std::nullopt;
    return x->column(0);
}

/**
 * A subspace of F^n held as a fully reduced echelon basis: each row has a
 * leading 1 at its pivot and zeros at every other row's pivot. Reducing a
 * vector against it gives a canonical representative modulo the subspace,
 * and coordinates of a member are read off at the pivot positions.
 */
class Subspace {
public:
    Subspace() = default;
    Subspace(FiniteField field, std::size_t ambient)
        : field_(std::move(field)), ambient_(ambient), pivot_row_(ambient, -1) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }

    Vec reduce(Vec v) const {
        const auto& f = field_.data();
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Scalar c = v[pivots_[k]];
            if (!c.is_zero()) detail::axpy(f, v, field_.neg(c), rows_[k]);
        }
        return v;
    }

    bool contains(const Vec& v) const {
        const Vec r = reduce(v);
        for (auto x : r)
            if (!x.is_zero()) return false;
        return true;
    }

    /// Adds v to the span; returns false when it was already there.
    bool insert(const Vec& v) {
        Vec r = reduce(v);
        std::size_t piv = 0;
        while (piv < r.size() && r[piv].is_zero()) ++piv;
        if (piv == r.size()) return false;
        const Scalar inv = field_.inv(r[piv]);
        for (auto& x : r) x = field_.mul(x, inv);
        const auto& f = field_.data();
        for (auto& row : rows_) {
            const Scalar c = row[piv];
            if (!c.is_zero()) detail::axpy(f, row, field_.neg(c), r);
        }
        pivot_row_[piv] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(r));
        pivots_.push_back(piv);
        return true;
    }

    /// Basis rows ordered by pivot position.
    std::vector<Vec> sorted_basis() const {
        std::vector<Vec> out;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (pivot_row_[c] >= 0) out.push_back(rows_[static_cast<std::size_t>(pivot_row_[c])]);
        return out;
    }

    std::vector<std::size_t> sorted_pivots() const {
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (pivot_row_[c] >= 0) out.push_back(c);
        return out;
    }

    /// Coordinates of a member with respect to sorted_basis().
    Vec coordinates(const Vec& v) const {
        Vec out;
        out.reserve(rows_.size());
        for (std::size_t c = 0; c < ambient_; ++c)
            if (pivot_row_[c] >= 0) out.push_back(v[c]);
        return out;
    }

    bool is_pivot(std::size_t c) const { return pivot_row_[c] >= 0; }

private:
    FiniteField field_;
    std::size_t ambient_ = 0;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<long> pivot_row_;
};

}  // namespace superpoint
