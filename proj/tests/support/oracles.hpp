#pragma once

// Brute-force oracles, independent of the implementation paths they check.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "qrep/qrep.hpp"

namespace oracle {

using qrep::Matrix;
using qrep::Quiver;
using qrep::Representation;
using qrep::Subspace;
using F2 = qrep::Fp<2>;

// --- exhaustive subspace enumeration over F2, d <= 5 ---------------------
//
// A subspace of F2^d is stored as a 2^d-bit membership mask over the vector
// bitmasks 0..2^d-1.

inline std::vector<std::uint32_t> all_subspace_masks(std::size_t d) {
    const std::uint32_t zero_only = 1u;  // just the zero vector
    std::set<std::uint32_t> seen{zero_only};
    std::vector<std::uint32_t> work{zero_only};
    const std::uint32_t nvecs = 1u << d;
    while (!work.empty()) {
        std::uint32_t s = work.back();
        work.pop_back();
        for (std::uint32_t v = 1; v < nvecs; ++v) {
            if (s & (1u << v)) continue;
            std::uint32_t bigger = 0;
            for (std::uint32_t u = 0; u < nvecs; ++u)
                if (s & (1u << u)) bigger |= (1u << u) | (1u << (u ^ v));
            if (seen.insert(bigger).second) work.push_back(bigger);
        }
    }
    return std::vector<std::uint32_t>(seen.begin(), seen.end());
}

inline Subspace<F2> mask_to_subspace(std::uint32_t mask, std::size_t d) {
    std::vector<std::uint32_t> members;
    for (std::uint32_t v = 1; v < (1u << d); ++v)
        if (mask & (1u << v)) members.push_back(v);
    Matrix<F2> cols(d, members.size());
    for (std::size_t j = 0; j < members.size(); ++j)
        for (std::size_t i = 0; i < d; ++i)
            cols(i, j) = F2((members[j] >> i) & 1u);
    return Subspace<F2>::span(cols);
}

// All subspaces of F2^d, cached per dimension.
inline const std::vector<Subspace<F2>>& cached_subspaces(std::size_t d) {
    static std::map<std::size_t, std::vector<Subspace<F2>>> cache;
    auto it = cache.find(d);
    if (it == cache.end()) {
        std::vector<Subspace<F2>> subs;
        for (std::uint32_t m : all_subspace_masks(d)) subs.push_back(mask_to_subspace(m, d));
        it = cache.emplace(d, std::move(subs)).first;
    }
    return it->second;
}

// All families (U_x) with V_a(U_ta) = U_ha on every arrow; returns the one
// of maximal total dimension (the maximum is unique).  Images are matched to
// subspace indices up front so the family scan is pure integer work.
inline std::vector<Subspace<F2>> brute_max_epi_family(const Representation<F2>& v) {
    const Quiver& q = v.quiver();
    std::vector<const std::vector<Subspace<F2>>*> choices;
    for (std::size_t x = 0; x < q.vertex_count(); ++x)
        choices.push_back(&cached_subspaces(v.dim(x)));
    // image_index[a][k]: position of V_a(choices[ta][k]) in choices[ha]
    std::vector<std::vector<std::size_t>> image_index(q.arrow_count());
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const qrep::Arrow& ar = q.arrow(a);
        for (const Subspace<F2>& s : *choices[ar.tail]) {
            Subspace<F2> img = qrep::apply_map(v.mat(a), s);
            std::size_t at = 0;
            while ((*choices[ar.head])[at] != img) ++at;
            image_index[a].push_back(at);
        }
    }
    std::vector<std::size_t> pick(q.vertex_count(), 0);
    std::vector<std::size_t> best_pick;
    std::size_t best_total = 0;
    bool found = false;
    while (true) {
        bool ok = true;
        for (std::size_t a = 0; a < q.arrow_count() && ok; ++a) {
            const qrep::Arrow& ar = q.arrow(a);
            ok = image_index[a][pick[ar.tail]] == pick[ar.head];
        }
        if (ok) {
            std::size_t total = 0;
            for (std::size_t x = 0; x < pick.size(); ++x)
                total += (*choices[x])[pick[x]].dim();
            if (!found || total > best_total) {
                best_pick = pick;
                best_total = total;
                found = true;
            }
        }
        std::size_t x = 0;
        while (x < pick.size() && ++pick[x] == choices[x]->size()) pick[x++] = 0;
        if (x == pick.size()) break;
    }
    std::vector<Subspace<F2>> best;
    for (std::size_t x = 0; x < best_pick.size(); ++x)
        best.push_back((*choices[x])[best_pick[x]]);
    return best;  // the empty family never fails, so found is always true
}

// --- independent construction of the maximal monomorphic quotient --------
//
// Least family (U_x) with V_a(U_ta) in U_ha and V_a^{-1}(U_ha) in U_ta; the
// quotient by it is the maximal monomorphic quotient.
template <qrep::Field F>
std::vector<Subspace<F>> nabla_kernel_family_direct(const Representation<F>& v) {
    const Quiver& q = v.quiver();
    std::vector<Subspace<F>> u;
    for (std::size_t x = 0; x < q.vertex_count(); ++x) u.push_back(Subspace<F>::zero(v.dim(x)));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < q.arrow_count(); ++a) {
            const qrep::Arrow& ar = q.arrow(a);
            Subspace<F> nt = qrep::sum(u[ar.tail], qrep::preimage(v.mat(a), u[ar.head]));
            if (nt != u[ar.tail]) {
                u[ar.tail] = std::move(nt);
                changed = true;
            }
            Subspace<F> nh = qrep::sum(u[ar.head], qrep::apply_map(v.mat(a), u[ar.tail]));
            if (nh != u[ar.head]) {
                u[ar.head] = std::move(nh);
                changed = true;
            }
        }
    }
    return u;
}

// --- decomposability over F2 by exhaustive search -------------------------

// Enumerate the finite algebra End(v) lazily; stops when pred holds.
template <typename Pred>
bool any_endomorphism(const Representation<F2>& v, Pred pred) {
    std::vector<qrep::RepMorphism<F2>> basis = qrep::end_algebra(v);
    if (basis.size() >= 22) throw std::runtime_error("End algebra too large to enumerate");
    const std::size_t count = std::size_t(1) << basis.size();
    std::vector<long long> coeff(basis.size());
    for (std::size_t mask = 1; mask < count; ++mask) {
        for (std::size_t i = 0; i < basis.size(); ++i) coeff[i] = (mask >> i) & 1;
        if (pred(qrep::combine(basis, coeff))) return true;
    }
    return false;
}

// Nontrivial idempotent endomorphism exists <=> decomposable.
inline bool decomposable_by_idempotent(const Representation<F2>& v) {
    qrep::RepMorphism<F2> id = qrep::identity_morphism(v);
    return any_endomorphism(v, [&](const qrep::RepMorphism<F2>& e) {
        return !e.is_zero() && !(e == id) && qrep::compose(e, e) == e;
    });
}

// Some endomorphism admits a Fitting split.
inline bool decomposable_by_fitting(const Representation<F2>& v) {
    return any_endomorphism(v, [&](const qrep::RepMorphism<F2>& e) {
        return qrep::fitting_split(v, e).has_value();
    });
}

// --- enumeration helpers ---------------------------------------------------

// All matrices over F2 of a given shape (shape bit count must stay small).
inline std::vector<Matrix<F2>> all_f2_matrices(std::size_t rows, std::size_t cols) {
    const std::size_t bits = rows * cols;
    std::vector<Matrix<F2>> out;
    out.reserve(std::size_t(1) << bits);
    for (std::size_t mask = 0; mask < (std::size_t(1) << bits); ++mask) {
        Matrix<F2> m(rows, cols);
        for (std::size_t k = 0; k < bits; ++k)
            if ((mask >> k) & 1) m(k / cols, k % cols) = F2(1);
        out.push_back(std::move(m));
    }
    return out;
}

// All dimension vectors with the given total bound.
inline std::vector<std::vector<std::size_t>> dim_vectors(std::size_t nverts,
                                                         std::size_t max_total) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(nverts, 0);
    while (true) {
        std::size_t total = 0;
        for (std::size_t d : cur) total += d;
        if (total <= max_total) out.push_back(cur);
        std::size_t x = 0;
        while (x < nverts && ++cur[x] > max_total) cur[x++] = 0;
        if (x == nverts) break;
    }
    return out;
}

// Visit every representation of q over F2 with total dimension <= max_total.
// Dimension vectors whose matrix entries exceed max_bits are skipped (keeps
// multi-loop shapes enumerable).
template <typename Fn>
void for_each_f2_rep(const Quiver& q, std::size_t max_total, Fn&& fn,
                     std::size_t max_bits = SIZE_MAX) {
    for (const auto& dims : dim_vectors(q.vertex_count(), max_total)) {
        std::size_t bits = 0;
        for (std::size_t a = 0; a < q.arrow_count(); ++a)
            bits += dims[q.arrow(a).tail] * dims[q.arrow(a).head];
        if (bits > max_bits) continue;
        std::vector<std::vector<Matrix<F2>>> per_arrow;
        for (std::size_t a = 0; a < q.arrow_count(); ++a)
            per_arrow.push_back(
                all_f2_matrices(dims[q.arrow(a).head], dims[q.arrow(a).tail]));
        std::vector<std::size_t> pick(q.arrow_count(), 0);
        while (true) {
            std::vector<Matrix<F2>> mats;
            for (std::size_t a = 0; a < q.arrow_count(); ++a)
                mats.push_back(per_arrow[a][pick[a]]);
            fn(Representation<F2>(q, dims, std::move(mats)));
            std::size_t a = 0;
            while (a < pick.size() && ++pick[a] == per_arrow[a].size()) pick[a++] = 0;
            if (a == pick.size()) break;
        }
    }
}

}  // namespace oracle
