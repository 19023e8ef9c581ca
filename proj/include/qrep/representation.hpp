#pragma once

#include <string>
#include <vector>

#include "qrep/matrix.hpp"
#include "qrep/powers.hpp"
#include "qrep/quiver.hpp"

namespace qrep {

// A finite dimensional representation: a dimension for each vertex and a
// dims(head) x dims(tail) matrix for each arrow.
template <Field F>
class Representation {
public:
    Representation(Quiver quiver, std::vector<std::size_t> dims, std::vector<Matrix<F>> mats)
        : quiver_(std::move(quiver)), dims_(std::move(dims)), mats_(std::move(mats)) {
        if (dims_.size() != quiver_.vertex_count())
            throw PreconditionError("rep: dimension vector size mismatch");
        if (mats_.size() != quiver_.arrow_count())
            throw PreconditionError("rep: arrow matrix count mismatch");
        for (std::size_t a = 0; a < mats_.size(); ++a) {
            const Arrow& ar = quiver_.arrow(a);
            if (mats_[a].rows() != dims_[ar.head] || mats_[a].cols() != dims_[ar.tail])
                throw PreconditionError("rep: matrix for arrow '" + ar.name +
                                        "' has the wrong shape");
        }
    }

    const Quiver& quiver() const { return quiver_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(std::size_t vertex) const { return dims_[vertex]; }
    const std::vector<Matrix<F>>& mats() const { return mats_; }
    const Matrix<F>& mat(std::size_t arrow) const { return mats_[arrow]; }

    std::size_t total_dim() const {
        std::size_t t = 0;
        for (std::size_t d : dims_) t += d;
        return t;
    }

    bool is_zero() const { return total_dim() == 0; }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t x = 0; x < dims_.size(); ++x)
            if (dims_[x] > 0) s.push_back(x);
        return s;
    }

    bool operator==(const Representation& o) const {
        return quiver_ == o.quiver_ && dims_ == o.dims_ && mats_ == o.mats_;
    }
    bool operator!=(const Representation& o) const { return !(*this == o); }

private:
    Quiver quiver_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix<F>> mats_;
};

template <Field F>
std::string dim_vector_string(const Representation<F>& v) {
    std::string s = "(";
    for (std::size_t x = 0; x < v.dims().size(); ++x) {
        if (x) s += ',';
        s += std::to_string(v.dim(x));
    }
    return s + ")";
}

// One-dimensional space at every vertex, identity on every arrow: the tensor
// unit.
template <Field F>
Representation<F> identity_rep(const Quiver& q) {
    std::vector<Matrix<F>> mats(q.arrow_count(), Matrix<F>::identity(1));
    return Representation<F>(q, std::vector<std::size_t>(q.vertex_count(), 1), mats);
}

template <Field F>
Representation<F> zero_rep(const Quiver& q) {
    std::vector<Matrix<F>> mats;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) mats.emplace_back(0, 0);
    return Representation<F>(q, std::vector<std::size_t>(q.vertex_count(), 0), mats);
}

// Simple representation: K at one vertex, zero elsewhere.
template <Field F>
Representation<F> simple_rep(const Quiver& q, std::size_t vertex) {
    std::vector<std::size_t> dims(q.vertex_count(), 0);
    dims[vertex] = 1;
    std::vector<Matrix<F>> mats;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        mats.emplace_back(dims[q.arrow(a).head], dims[q.arrow(a).tail]);
    return Representation<F>(q, dims, mats);
}

// A morphism of representations over the same quiver: one matrix per vertex,
// commuting with every arrow matrix.  Validated on construction.
template <Field F>
class RepMorphism {
public:
    RepMorphism(Representation<F> source, Representation<F> target,
                std::vector<Matrix<F>> comps)
        : source_(std::move(source)), target_(std::move(target)), comps_(std::move(comps)) {
        const Quiver& q = source_.quiver();
        if (q != target_.quiver())
            throw PreconditionError("rep morphism: source and target quivers differ");
        if (comps_.size() != q.vertex_count())
            throw PreconditionError("rep morphism: component count mismatch");
        for (std::size_t x = 0; x < comps_.size(); ++x)
            if (comps_[x].rows() != target_.dim(x) || comps_[x].cols() != source_.dim(x))
                throw PreconditionError("rep morphism: component shape mismatch at vertex '" +
                                        q.vertex_name(x) + "'");
        for (std::size_t a = 0; a < q.arrow_count(); ++a) {
            const Arrow& ar = q.arrow(a);
            if (comps_[ar.head] * source_.mat(a) != target_.mat(a) * comps_[ar.tail])
                throw PreconditionError("rep morphism: does not intertwine arrow '" +
                                        ar.name + "'");
        }
    }

    const Representation<F>& source() const { return source_; }
    const Representation<F>& target() const { return target_; }
    const std::vector<Matrix<F>>& comps() const { return comps_; }
    const Matrix<F>& comp(std::size_t vertex) const { return comps_[vertex]; }

    bool is_invertible() const {
        for (const Matrix<F>& c : comps_)
            if (!qrep::is_invertible(c)) return false;
        return true;
    }

    bool is_zero() const {
        for (const Matrix<F>& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

    bool operator==(const RepMorphism& o) const {
        return source_ == o.source_ && target_ == o.target_ && comps_ == o.comps_;
    }

private:
    Representation<F> source_;
    Representation<F> target_;
    std::vector<Matrix<F>> comps_;
};

template <Field F>
RepMorphism<F> identity_morphism(const Representation<F>& v) {
    std::vector<Matrix<F>> comps;
    for (std::size_t d : v.dims()) comps.push_back(Matrix<F>::identity(d));
    return RepMorphism<F>(v, v, comps);
}

template <Field F>
RepMorphism<F> compose(const RepMorphism<F>& g, const RepMorphism<F>& f) {
    if (f.target() != g.source())
        throw PreconditionError("compose: morphisms do not meet");
    std::vector<Matrix<F>> comps;
    for (std::size_t x = 0; x < f.comps().size(); ++x) comps.push_back(g.comp(x) * f.comp(x));
    return RepMorphism<F>(f.source(), g.target(), comps);
}

// Pointwise sum of dimensions, block-diagonal arrow matrices, plus the four
// biproduct witnesses.
template <Field F>
struct DirectSum {
    Representation<F> rep;
    RepMorphism<F> incl_left, incl_right;  // summand -> sum
    RepMorphism<F> proj_left, proj_right;  // sum -> summand
};

template <Field F>
DirectSum<F> direct_sum_with_maps(const Representation<F>& v, const Representation<F>& w) {
    const Quiver& q = v.quiver();
    if (q != w.quiver()) throw PreconditionError("direct_sum: quiver mismatch");
    std::vector<std::size_t> dims(q.vertex_count());
    for (std::size_t x = 0; x < dims.size(); ++x) dims[x] = v.dim(x) + w.dim(x);
    std::vector<Matrix<F>> mats;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        mats.push_back(block_diag(v.mat(a), w.mat(a)));
    Representation<F> s(q, dims, std::move(mats));

    std::vector<Matrix<F>> il, ir, pl, pr;
    for (std::size_t x = 0; x < dims.size(); ++x) {
        std::size_t dv = v.dim(x), dw = w.dim(x);
        Matrix<F> i1(dv + dw, dv), i2(dv + dw, dw), p1(dv, dv + dw), p2(dw, dv + dw);
        for (std::size_t i = 0; i < dv; ++i) {
            i1(i, i) = F(1);
            p1(i, i) = F(1);
        }
        for (std::size_t i = 0; i < dw; ++i) {
            i2(dv + i, i) = F(1);
            p2(i, dv + i) = F(1);
        }
        il.push_back(std::move(i1));
        ir.push_back(std::move(i2));
        pl.push_back(std::move(p1));
        pr.push_back(std::move(p2));
    }
    return DirectSum<F>{s, RepMorphism<F>(v, s, il), RepMorphism<F>(w, s, ir),
                        RepMorphism<F>(s, v, pl), RepMorphism<F>(s, w, pr)};
}

template <Field F>
Representation<F> direct_sum(const Representation<F>& v, const Representation<F>& w) {
    const Quiver& q = v.quiver();
    if (q != w.quiver()) throw PreconditionError("direct_sum: quiver mismatch");
    std::vector<std::size_t> dims(q.vertex_count());
    for (std::size_t x = 0; x < dims.size(); ++x) dims[x] = v.dim(x) + w.dim(x);
    std::vector<Matrix<F>> mats;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        mats.push_back(block_diag(v.mat(a), w.mat(a)));
    return Representation<F>(q, dims, std::move(mats));
}

// Pointwise tensor product: dimensions multiply, arrow matrices are
// Kronecker products in left-major order.
template <Field F>
Representation<F> tensor(const Representation<F>& v, const Representation<F>& w) {
    const Quiver& q = v.quiver();
    if (q != w.quiver()) throw PreconditionError("tensor: quiver mismatch");
    std::vector<std::size_t> dims(q.vertex_count());
    for (std::size_t x = 0; x < dims.size(); ++x) dims[x] = v.dim(x) * w.dim(x);
    std::vector<Matrix<F>> mats;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        mats.push_back(kronecker(v.mat(a), w.mat(a)));
    return Representation<F>(q, dims, std::move(mats));
}

// Duality: same dimensions over the opposite quiver, each arrow matrix
// transposed onto the reversed arrow.  An involution on the nose.
template <Field F>
Representation<F> dual(const Representation<F>& v) {
    Quiver qop = opposite(v.quiver());
    std::vector<Matrix<F>> mats;
    for (std::size_t a = 0; a < qop.arrow_count(); ++a) mats.push_back(v.mat(a).transpose());
    return Representation<F>(qop, v.dims(), std::move(mats));
}

// Composite matrix along a path; the trivial path gives the identity.
template <Field F>
Matrix<F> path_map(const Representation<F>& v, const Path& p) {
    const Quiver& q = v.quiver();
    if (p.vertex >= q.vertex_count()) throw PreconditionError("path_map: bad base vertex");
    Matrix<F> m = Matrix<F>::identity(v.dim(p.vertex));
    std::size_t at = p.vertex;
    for (std::size_t a : p.arrows) {
        if (a >= q.arrow_count() || q.arrow(a).tail != at)
            throw PreconditionError("path_map: path does not lie in the quiver");
        m = v.mat(a) * m;
        at = q.arrow(a).head;
    }
    return m;
}

// Pullback along a quiver morphism: composition of the representation with
// the map, so spaces and matrices are reused verbatim.
template <Field F>
Representation<F> pullback(const QuiverMorphism& alpha, const Representation<F>& v) {
    alpha.validate();
    if (v.quiver() != alpha.target)
        throw PreconditionError("pullback: representation is not over the morphism target");
    std::vector<std::size_t> dims(alpha.source.vertex_count());
    for (std::size_t x = 0; x < dims.size(); ++x) dims[x] = v.dim(alpha.vertex_map[x]);
    std::vector<Matrix<F>> mats;
    for (std::size_t a = 0; a < alpha.source.arrow_count(); ++a)
        mats.push_back(v.mat(alpha.arrow_map[a]));
    return Representation<F>(alpha.source, dims, std::move(mats));
}

template <Field F>
Representation<F> restrict_to(const Representation<F>& v, const Subquiver& p) {
    return pullback(p.inclusion, v);
}

// Pointwise exterior power of spaces and maps.
template <Field F>
Representation<F> exterior(const Representation<F>& v, std::size_t k) {
    const Quiver& q = v.quiver();
    std::vector<std::size_t> dims(q.vertex_count());
    for (std::size_t x = 0; x < dims.size(); ++x) dims[x] = binomial_sz(v.dim(x), k);
    std::vector<Matrix<F>> mats;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        mats.push_back(exterior_power(v.mat(a), k));
    return Representation<F>(q, dims, std::move(mats));
}

// Pointwise symmetric power of spaces and maps.
template <Field F>
Representation<F> symmetric(const Representation<F>& v, std::size_t k) {
    const Quiver& q = v.quiver();
    std::vector<std::size_t> dims(q.vertex_count());
    for (std::size_t x = 0; x < dims.size(); ++x)
        dims[x] = v.dim(x) == 0 && k > 0 ? 0 : binomial_sz(v.dim(x) + k - 1, k);
    std::vector<Matrix<F>> mats;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        mats.push_back(symmetric_power(v.mat(a), k));
    return Representation<F>(q, dims, std::move(mats));
}

}  // namespace qrep
