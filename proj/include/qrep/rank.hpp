#pragma once

#include <vector>

#include "qrep/hom.hpp"
#include "qrep/representation.hpp"
#include "qrep/subspace.hpp"

namespace qrep {

enum class SubQuotKind { sub, quotient };

// A subrepresentation or quotient with its witness morphism: an inclusion
// (full column rank at each vertex) or a projection (full row rank).
template <Field F>
struct SubQuot {
    Representation<F> carrier;
    RepMorphism<F> witness;
    SubQuotKind kind;
};

// All arrow maps surjective / injective.
template <Field F>
bool is_epimorphic(const Representation<F>& v) {
    for (std::size_t a = 0; a < v.quiver().arrow_count(); ++a)
        if (rank(v.mat(a)) != v.dim(v.quiver().arrow(a).head)) return false;
    return true;
}

template <Field F>
bool is_monomorphic(const Representation<F>& v) {
    for (std::size_t a = 0; a < v.quiver().arrow_count(); ++a)
        if (rank(v.mat(a)) != v.dim(v.quiver().arrow(a).tail)) return false;
    return true;
}

namespace detail {

// Carrier of a family of subspaces U_x with V_a(U_ta) contained in U_ha:
// induced arrow matrices in the canonical bases, plus the inclusion witness.
template <Field F>
SubQuot<F> induced_subrep(const Representation<F>& v, const std::vector<Subspace<F>>& u) {
    const Quiver& q = v.quiver();
    std::vector<std::size_t> dims(q.vertex_count());
    for (std::size_t x = 0; x < dims.size(); ++x) dims[x] = u[x].dim();
    std::vector<Matrix<F>> mats;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        auto m = solve(u[ar.head].basis(), v.mat(a) * u[ar.tail].basis());
        if (!m) throw std::logic_error("induced_subrep: family is not arrow-stable");
        mats.push_back(std::move(*m));
    }
    Representation<F> carrier(q, dims, std::move(mats));
    std::vector<Matrix<F>> inc;
    for (std::size_t x = 0; x < dims.size(); ++x) inc.push_back(u[x].basis());
    return SubQuot<F>{carrier, RepMorphism<F>(carrier, v, inc), SubQuotKind::sub};
}

}  // namespace detail

// Maximal epimorphic subrepresentation: greatest family (U_x) with
// V_a(U_ta) = U_ha on every arrow.  Computed as the greatest fixed point of
//   U_x <- U_x  ∩  (∩_{a: ha=x} V_a(U_ta))  ∩  (∩_{a: ta=x} V_a^{-1}(U_ha)),
// sweeping arrows in input order from U = V; each unstable sweep strictly
// drops the total dimension, so it terminates.
template <Field F>
SubQuot<F> max_epi_sub(const Representation<F>& v) {
    const Quiver& q = v.quiver();
    std::vector<Subspace<F>> u;
    u.reserve(q.vertex_count());
    for (std::size_t x = 0; x < q.vertex_count(); ++x) u.push_back(Subspace<F>::full(v.dim(x)));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < q.arrow_count(); ++a) {
            const Arrow& ar = q.arrow(a);
            Subspace<F> nh = intersect(u[ar.head], apply_map(v.mat(a), u[ar.tail]));
            if (nh != u[ar.head]) {
                u[ar.head] = std::move(nh);
                changed = true;
            }
            Subspace<F> nt = intersect(u[ar.tail], preimage(v.mat(a), u[ar.head]));
            if (nt != u[ar.tail]) {
                u[ar.tail] = std::move(nt);
                changed = true;
            }
        }
    }
    return detail::induced_subrep(v, u);
}

// Maximal monomorphic quotient, derived by duality from the maximal
// epimorphic subrepresentation over the opposite quiver.
template <Field F>
SubQuot<F> max_mono_quot(const Representation<F>& v) {
    SubQuot<F> d = max_epi_sub(dual(v));
    const Quiver& q = v.quiver();
    std::vector<Matrix<F>> mats;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        mats.push_back(d.carrier.mat(a).transpose());
    Representation<F> carrier(q, d.carrier.dims(), std::move(mats));
    std::vector<Matrix<F>> proj;
    for (std::size_t x = 0; x < q.vertex_count(); ++x)
        proj.push_back(d.witness.comp(x).transpose());
    return SubQuot<F>{carrier, RepMorphism<F>(v, carrier, proj), SubQuotKind::quotient};
}

// Image of the canonical map from the maximal epimorphic subrepresentation
// to the maximal monomorphic quotient.  Every arrow matrix of gamma is
// invertible, so its dimension is constant across the (connected) quiver;
// that constant is the global rank.
template <Field F>
struct GammaResult {
    Representation<F> gamma;
    RepMorphism<F> from_delta;   // delta carrier ->> gamma
    RepMorphism<F> into_nabla;   // gamma >-> nabla carrier
    std::size_t global_rank = 0;
};

template <Field F>
GammaResult<F> global_tensor(const Representation<F>& v) {
    const Quiver& q = v.quiver();
    if (!q.is_connected()) throw PreconditionError("global_tensor: quiver is not connected");
    SubQuot<F> delta = max_epi_sub(v);
    SubQuot<F> nabla = max_mono_quot(v);

    // composite delta_x >-> V_x ->> nabla_x and its image
    std::vector<Matrix<F>> comp(q.vertex_count());
    std::vector<Subspace<F>> img;
    img.reserve(q.vertex_count());
    for (std::size_t x = 0; x < q.vertex_count(); ++x) {
        comp[x] = nabla.witness.comp(x) * delta.witness.comp(x);
        img.push_back(image(comp[x]));
    }
    std::size_t r = img[0].dim();
    for (const Subspace<F>& s : img)
        if (s.dim() != r) throw std::logic_error("global_tensor: non-constant gamma dimension");

    // gamma as a subrepresentation of nabla
    std::vector<Matrix<F>> gmats;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        auto m = solve(img[ar.head].basis(), nabla.carrier.mat(a) * img[ar.tail].basis());
        if (!m) throw std::logic_error("global_tensor: image family not arrow-stable");
        if (rank(*m) != r) throw std::logic_error("global_tensor: gamma arrow not invertible");
        gmats.push_back(std::move(*m));
    }
    Representation<F> gamma(q, std::vector<std::size_t>(q.vertex_count(), r), std::move(gmats));

    std::vector<Matrix<F>> fd(q.vertex_count()), in(q.vertex_count());
    for (std::size_t x = 0; x < q.vertex_count(); ++x) {
        auto d = solve(img[x].basis(), comp[x]);
        if (!d) throw std::logic_error("global_tensor: cannot factor through image");
        fd[x] = std::move(*d);
        in[x] = img[x].basis();
    }
    return GammaResult<F>{gamma, RepMorphism<F>(delta.carrier, gamma, fd),
                          RepMorphism<F>(gamma, nabla.carrier, in), r};
}

template <Field F>
std::size_t global_rank(const Representation<F>& v) {
    return global_tensor(v).global_rank;
}

// Rank of the restriction to a connected subquiver.
template <Field F>
std::size_t subquiver_rank(const Representation<F>& v, const Subquiver& p) {
    p.quiver.validate();
    return global_rank(restrict_to(v, p));
}

// Global rank of the pullback along a map of directed graphs.
template <Field F>
std::size_t pushforward_rank(const QuiverMorphism& alpha, const Representation<F>& v) {
    if (!alpha.source.is_connected())
        throw PreconditionError("pushforward_rank: source quiver is not connected");
    return global_rank(pullback(alpha, v));
}

}  // namespace qrep
