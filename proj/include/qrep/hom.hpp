#pragma once

#include <vector>

#include "qrep/representation.hpp"

namespace qrep {

// Flatten morphism components into the unknown vector layout used by
// hom_space: vertex-major, column-major inside each component.
template <Field F>
Matrix<F> vectorize_comps(const std::vector<Matrix<F>>& comps) {
    std::size_t n = 0;
    for (const Matrix<F>& c : comps) n += c.rows() * c.cols();
    Matrix<F> v(n, 1);
    std::size_t at = 0;
    for (const Matrix<F>& c : comps)
        for (std::size_t j = 0; j < c.cols(); ++j)
            for (std::size_t i = 0; i < c.rows(); ++i) v(at++, 0) = c(i, j);
    return v;
}

// Basis of Hom(v, w): the solution space of the intertwining equations
// comps[ha] * V_a = W_a * comps[ta], one solve for the whole quiver.
// Deterministic: canonical echelon kernel basis in unknown order.
template <Field F>
std::vector<RepMorphism<F>> hom_space(const Representation<F>& v, const Representation<F>& w) {
    const Quiver& q = v.quiver();
    if (q != w.quiver()) throw PreconditionError("hom_space: quiver mismatch");
    std::vector<std::size_t> off(q.vertex_count() + 1, 0);
    for (std::size_t x = 0; x < q.vertex_count(); ++x)
        off[x + 1] = off[x] + v.dim(x) * w.dim(x);
    const std::size_t unknowns = off.back();

    std::size_t eqs = 0;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        eqs += w.dim(q.arrow(a).head) * v.dim(q.arrow(a).tail);

    Matrix<F> sys(eqs, unknowns);
    std::size_t row = 0;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        const Matrix<F>& va = v.mat(a);
        const Matrix<F>& wa = w.mat(a);
        // entry (i,j) of comps[head]*V_a - W_a*comps[tail] = 0; the two
        // blocks overlap when the arrow is a loop, so accumulate
        for (std::size_t i = 0; i < w.dim(ar.head); ++i)
            for (std::size_t j = 0; j < v.dim(ar.tail); ++j) {
                for (std::size_t k = 0; k < v.dim(ar.head); ++k) {
                    std::size_t u = off[ar.head] + k * w.dim(ar.head) + i;
                    sys(row, u) = sys(row, u) + va(k, j);
                }
                for (std::size_t l = 0; l < w.dim(ar.tail); ++l) {
                    std::size_t u = off[ar.tail] + j * w.dim(ar.tail) + l;
                    sys(row, u) = sys(row, u) - wa(i, l);
                }
                ++row;
            }
    }

    Matrix<F> ker = kernel_basis(sys);
    std::vector<RepMorphism<F>> basis;
    basis.reserve(ker.cols());
    for (std::size_t b = 0; b < ker.cols(); ++b) {
        std::vector<Matrix<F>> comps;
        for (std::size_t x = 0; x < q.vertex_count(); ++x) {
            Matrix<F> c(w.dim(x), v.dim(x));
            std::size_t at = off[x];
            for (std::size_t j = 0; j < c.cols(); ++j)
                for (std::size_t i = 0; i < c.rows(); ++i) c(i, j) = ker(at++, b);
            comps.push_back(std::move(c));
        }
        basis.emplace_back(v, w, std::move(comps));
    }
    return basis;
}

// Basis of the endomorphism algebra End(v) = Hom(v, v).
template <Field F>
std::vector<RepMorphism<F>> end_algebra(const Representation<F>& v) {
    return hom_space(v, v);
}

// Integer-coefficient combination of morphisms from a common Hom space.
template <Field F>
RepMorphism<F> combine(const std::vector<RepMorphism<F>>& basis,
                       const std::vector<long long>& coeffs) {
    if (basis.empty() || basis.size() != coeffs.size())
        throw PreconditionError("combine: bad coefficient count");
    std::vector<Matrix<F>> comps;
    for (std::size_t x = 0; x < basis[0].comps().size(); ++x) {
        Matrix<F> c(basis[0].comp(x).rows(), basis[0].comp(x).cols());
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (coeffs[b] != 0) c = c + F(coeffs[b]) * basis[b].comp(x);
        comps.push_back(std::move(c));
    }
    return RepMorphism<F>(basis[0].source(), basis[0].target(), comps);
}

}  // namespace qrep
