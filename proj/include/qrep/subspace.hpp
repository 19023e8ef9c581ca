#pragma once

#include <vector>

#include "qrep/errors.hpp"
#include "qrep/matrix.hpp"

namespace qrep {

// Reduced column-echelon form: transpose of the RREF of the transpose, with
// zero columns dropped.  Unique per column space, so subspaces compare by
// entry equality.
template <Field F>
Matrix<F> rcef(const Matrix<F>& m) {
    Echelon<F> e = row_echelon(m.transpose());
    std::vector<std::size_t> keep(e.pivots.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    return e.mat.select_rows(keep).transpose();
}

// A subspace of K^ambient, held as a canonical basis matrix (ambient rows,
// dim columns).  Two Subspace values are equal iff their bases are
// entry-identical.
template <Field F>
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}

    // Span of the columns of `vectors`; canonicalizes.
    static Subspace span(const Matrix<F>& vectors) {
        Subspace s(vectors.rows());
        s.basis_ = rcef(vectors);
        return s;
    }

    static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

    static Subspace full(std::size_t ambient) {
        return span(Matrix<F>::identity(ambient));
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix<F>& basis() const { return basis_; }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    // Column vectors of v all lie in this subspace.
    bool contains(const Matrix<F>& v) const {
        if (v.rows() != ambient_) throw PreconditionError("contains: ambient mismatch");
        return rank(hstack(basis_, v)) == dim();
    }

    bool contains(const Subspace& o) const { return contains(o.basis_); }

private:
    std::size_t ambient_;
    Matrix<F> basis_;
};

// Column span of a matrix.
template <Field F>
Subspace<F> image(const Matrix<F>& m) {
    return Subspace<F>::span(m);
}

// Null space of a matrix; dim image + dim kernel = cols.
template <Field F>
Subspace<F> kernel(const Matrix<F>& m) {
    return Subspace<F>::span(kernel_basis(m));
}

template <Field F>
Subspace<F> sum(const Subspace<F>& s, const Subspace<F>& t) {
    if (s.ambient() != t.ambient()) throw PreconditionError("sum: ambient mismatch");
    return Subspace<F>::span(hstack(s.basis(), t.basis()));
}

template <Field F>
Subspace<F> intersect(const Subspace<F>& s, const Subspace<F>& t) {
    if (s.ambient() != t.ambient())
        throw PreconditionError("intersect: ambient mismatch");
    if (s.dim() == 0 || t.dim() == 0) return Subspace<F>::zero(s.ambient());
    // columns (x;y) with S x = T y; the intersection is S * {x-part}
    Matrix<F> k = kernel_basis(hstack(s.basis(), -t.basis()));
    std::vector<std::size_t> xrows(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) xrows[i] = i;
    return Subspace<F>::span(s.basis() * k.select_rows(xrows));
}

// {v : m*v in s}; contains kernel(m).
template <Field F>
Subspace<F> preimage(const Matrix<F>& m, const Subspace<F>& s) {
    if (s.ambient() != m.rows()) throw PreconditionError("preimage: ambient mismatch");
    if (s.is_full()) return Subspace<F>::full(m.cols());
    Matrix<F> k = kernel_basis(hstack(m, -s.basis()));
    std::vector<std::size_t> vrows(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) vrows[i] = i;
    return Subspace<F>::span(k.select_rows(vrows));
}

// Image of a subspace under a linear map.
template <Field F>
Subspace<F> apply_map(const Matrix<F>& m, const Subspace<F>& s) {
    if (s.ambient() != m.cols()) throw PreconditionError("apply_map: ambient mismatch");
    return Subspace<F>::span(m * s.basis());
}

}  // namespace qrep
