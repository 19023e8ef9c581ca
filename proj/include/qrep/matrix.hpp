#pragma once

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

#include "qrep/errors.hpp"
#include "qrep/scalar.hpp"

namespace qrep {

// Dense matrix over an exact field.  Zero-row and zero-column shapes are
// legal values and arise routinely (maps to or from a zero space).
template <Field F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, F(0)) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_)
            throw PreconditionError("matrix: entry count does not match shape");
    }

    Matrix(std::initializer_list<std::initializer_list<F>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        e_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw PreconditionError("matrix: ragged rows");
            e_.insert(e_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return e_[i * cols_ + j];
    }
    const F& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return e_[i * cols_ + j];
    }

    const std::vector<F>& entries() const { return e_; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_square() const { return rows_ == cols_; }

    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](const F& x) { return x == F(0); });
    }

    bool is_identity() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? F(1) : F(0))) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix select_rows(const std::vector<std::size_t>& idx) const {
        Matrix m(idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
        return m;
    }

    Matrix select_cols(const std::vector<std::size_t>& idx) const {
        Matrix m(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
        return m;
    }

    Matrix col(std::size_t j) const { return select_cols({j}); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw PreconditionError("matrix add: shape mismatch");
        Matrix m = a;
        for (std::size_t k = 0; k < m.e_.size(); ++k) m.e_[k] = m.e_[k] + b.e_[k];
        return m;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw PreconditionError("matrix sub: shape mismatch");
        Matrix m = a;
        for (std::size_t k = 0; k < m.e_.size(); ++k) m.e_[k] = m.e_[k] - b.e_[k];
        return m;
    }

    friend Matrix operator*(const F& c, const Matrix& a) {
        Matrix m = a;
        for (auto& x : m.e_) x = c * x;
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw PreconditionError("matrix mul: shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (aik == F(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    m(i, j) = m(i, j) + aik * b(k, j);
            }
        return m;
    }

    Matrix operator-() const {
        Matrix m = *this;
        for (auto& x : m.e_) x = -x;
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<F> e_;
};

template <Field F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows()) throw PreconditionError("hstack: row mismatch");
    Matrix<F> m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

template <Field F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.cols()) throw PreconditionError("vstack: col mismatch");
    Matrix<F> m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

// Kronecker product with left-major index order: row (i1,i2) of a⊗b is
// i1*b.rows()+i2, and likewise for columns.
template <Field F>
Matrix<F> kronecker(const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const F& av = a(i1, j1);
            if (av == F(0)) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    m(i1 * b.rows() + i2, j1 * b.cols() + j2) = av * b(i2, j2);
        }
    return m;
}

template <Field F>
Matrix<F> block_diag(const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

template <Field F>
struct Echelon {
    Matrix<F> mat;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Unique reduced row-echelon form: pivots are 1 and are the only nonzero
// entries in their columns; row space is preserved.
template <Field F>
Echelon<F> row_echelon(const Matrix<F>& input) {
    Matrix<F> m = input;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (m(i, c) != F(0)) {
                sel = i;
                break;
            }
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
        F inv = F(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = inv * m(r, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == F(0)) continue;
            F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <Field F>
Matrix<F> rref(const Matrix<F>& m) {
    return row_echelon(m).mat;
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
    return row_echelon(m).pivots.size();
}

// Canonical null-space basis, one column per free variable (ascending).
template <Field F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
    Echelon<F> e = row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix<F> k(m.cols(), free_cols.size());
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        std::size_t fc = free_cols[fi];
        k(fc, fi) = F(1);
        for (std::size_t pr = 0; pr < e.pivots.size(); ++pr)
            k(e.pivots[pr], fi) = -e.mat(pr, fc);
    }
    return k;
}

// Exact solution X of A*X = B; the particular solution with free variables
// zero when the system is underdetermined, nullopt when inconsistent.
template <Field F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows()) throw PreconditionError("solve: row mismatch");
    Echelon<F> e = row_echelon(hstack(a, b));
    // inconsistent iff some pivot falls in the B block
    for (std::size_t c : e.pivots)
        if (c >= a.cols()) return std::nullopt;
    Matrix<F> x(a.cols(), b.cols());
    for (std::size_t pr = 0; pr < e.pivots.size(); ++pr)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(e.pivots[pr], j) = e.mat(pr, a.cols() + j);
    return x;
}

template <Field F>
F det(const Matrix<F>& input) {
    if (!input.is_square()) throw PreconditionError("det: non-square matrix");
    Matrix<F> m = input;
    F d(1);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t sel = m.rows();
        for (std::size_t i = c; i < m.rows(); ++i)
            if (m(i, c) != F(0)) {
                sel = i;
                break;
            }
        if (sel == m.rows()) return F(0);
        if (sel != c) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(c, j));
            d = -d;
        }
        d = d * m(c, c);
        F inv = F(1) / m(c, c);
        for (std::size_t i = c + 1; i < m.rows(); ++i) {
            if (m(i, c) == F(0)) continue;
            F f = inv * m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return d;
}

template <Field F>
F trace(const Matrix<F>& m) {
    if (!m.is_square()) throw PreconditionError("trace: non-square matrix");
    F t(0);
    for (std::size_t i = 0; i < m.rows(); ++i) t = t + m(i, i);
    return t;
}

template <Field F>
Matrix<F> pow(const Matrix<F>& m, std::size_t e) {
    if (!m.is_square()) throw PreconditionError("pow: non-square matrix");
    Matrix<F> r = Matrix<F>::identity(m.rows());
    Matrix<F> base = m;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

template <Field F>
bool is_invertible(const Matrix<F>& m) {
    return m.is_square() && rank(m) == m.rows();
}

template <Field F>
std::ostream& operator<<(std::ostream& os, const Matrix<F>& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << m(i, j);
        }
        os << ']';
    }
    return os << ']';
}

}  // namespace qrep
