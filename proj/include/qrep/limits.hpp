#pragma once

#include <vector>

#include "qrep/representation.hpp"
#include "qrep/subspace.hpp"

namespace qrep {

// Limit and colimit of a representation viewed as a diagram of vector
// spaces, with the structure maps alpha_x : lim -> V_x, beta_x : V_x -> colim
// and the composite eta = beta_x . alpha_x, which is vertex-independent.
template <Field F>
struct LimitData {
    std::size_t lim_dim = 0;
    std::size_t colim_dim = 0;
    std::vector<Matrix<F>> alpha;  // per vertex, dims[x] x lim_dim
    std::vector<Matrix<F>> beta;   // per vertex, colim_dim x dims[x]
    Matrix<F> eta;                 // colim_dim x lim_dim
};

// lim = kernel of the combined map  prod_x V_x -> prod_a V_{ha},
// (v_x) |-> (V_a v_{ta} - v_{ha});  colim = cokernel of
// sum_a V_{ta} -> sum_x V_x, w |-> (V_a w at head) - (w at tail).
template <Field F>
LimitData<F> limit(const Representation<F>& v) {
    const Quiver& q = v.quiver();
    std::vector<std::size_t> voff(q.vertex_count() + 1, 0);
    for (std::size_t x = 0; x < q.vertex_count(); ++x) voff[x + 1] = voff[x] + v.dim(x);
    const std::size_t total = voff.back();

    // limit
    std::size_t head_rows = 0;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) head_rows += v.dim(q.arrow(a).head);
    Matrix<F> lsys(head_rows, total);
    std::size_t row = 0;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        const Matrix<F>& m = v.mat(a);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::size_t u = voff[ar.tail] + j;
                lsys(row + i, u) = lsys(row + i, u) + m(i, j);
            }
            std::size_t u = voff[ar.head] + i;
            lsys(row + i, u) = lsys(row + i, u) - F(1);
        }
        row += m.rows();
    }
    Matrix<F> lim_basis = kernel_basis(lsys);

    // colimit
    std::size_t tail_cols = 0;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) tail_cols += v.dim(q.arrow(a).tail);
    Matrix<F> csys(total, tail_cols);
    std::size_t colc = 0;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        const Matrix<F>& m = v.mat(a);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            for (std::size_t i = 0; i < m.rows(); ++i) {
                std::size_t r = voff[ar.head] + i;
                csys(r, colc + j) = csys(r, colc + j) + m(i, j);
            }
            std::size_t r = voff[ar.tail] + j;
            csys(r, colc + j) = csys(r, colc + j) - F(1);
        }
        colc += m.cols();
    }
    // canonical projection onto the cokernel: coordinates complementary to
    // the pivot rows of the canonical image basis
    Matrix<F> c = Subspace<F>::span(csys).basis();
    std::vector<std::size_t> pivot_rows;
    std::vector<bool> is_pivot(total, false);
    for (std::size_t j = 0; j < c.cols(); ++j)
        for (std::size_t i = 0; i < c.rows(); ++i)
            if (c(i, j) != F(0)) {
                pivot_rows.push_back(i);
                is_pivot[i] = true;
                break;
            }
    std::vector<std::size_t> free_rows;
    for (std::size_t i = 0; i < total; ++i)
        if (!is_pivot[i]) free_rows.push_back(i);
    // pi(v) = v[free] - C[free,:] * v[pivot]
    Matrix<F> pi(free_rows.size(), total);
    Matrix<F> cfree = c.select_rows(free_rows);
    for (std::size_t i = 0; i < free_rows.size(); ++i) {
        pi(i, free_rows[i]) = F(1);
        for (std::size_t j = 0; j < pivot_rows.size(); ++j)
            pi(i, pivot_rows[j]) = pi(i, pivot_rows[j]) - cfree(i, j);
    }

    LimitData<F> out;
    out.lim_dim = lim_basis.cols();
    out.colim_dim = free_rows.size();
    std::vector<std::size_t> rows;
    for (std::size_t x = 0; x < q.vertex_count(); ++x) {
        rows.clear();
        for (std::size_t i = 0; i < v.dim(x); ++i) rows.push_back(voff[x] + i);
        out.alpha.push_back(lim_basis.select_rows(rows));
        out.beta.push_back(pi.select_cols(rows));
    }
    // eta is vertex-independent whenever the quiver is connected
    out.eta = out.beta[0] * out.alpha[0];
    if (q.is_connected())
        for (std::size_t x = 1; x < q.vertex_count(); ++x)
            if (out.beta[x] * out.alpha[x] != out.eta)
                throw std::logic_error("limit: eta differs between vertices");
    return out;
}

}  // namespace qrep
