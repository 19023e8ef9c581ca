#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "qrep/hom.hpp"
#include "qrep/polynomial.hpp"
#include "qrep/rank.hpp"
#include "qrep/representation.hpp"

namespace qrep {

// Seed for the pseudo-random phase of the splitting and isomorphism
// searches; fixed so identical inputs always explore identical candidates.
inline constexpr std::uint32_t kSearchSeed = 0x51C2E5u;

// Candidates tried per split level before giving up.
inline constexpr std::size_t kSearchBudget = 64;

// Fitting decomposition along an endomorphism: with n the total dimension,
// V = ker(phi^n) (+) im(phi^n) vertexwise.  Returns the two induced
// representations when both are nonzero.
template <Field F>
std::optional<std::pair<Representation<F>, Representation<F>>> fitting_split(
    const Representation<F>& v, const RepMorphism<F>& phi) {
    if (phi.source() != v || phi.target() != v)
        throw PreconditionError("fitting_split: not an endomorphism of the representation");
    const std::size_t n = v.total_dim();
    std::vector<Subspace<F>> ker_fam, im_fam;
    std::size_t ker_total = 0, im_total = 0;
    for (std::size_t x = 0; x < v.quiver().vertex_count(); ++x) {
        Matrix<F> p = pow(phi.comp(x), n);
        ker_fam.push_back(kernel(p));
        im_fam.push_back(image(p));
        ker_total += ker_fam.back().dim();
        im_total += im_fam.back().dim();
    }
    if (ker_total == 0 || im_total == 0) return std::nullopt;
    return std::make_pair(detail::induced_subrep(v, ker_fam).carrier,
                          detail::induced_subrep(v, im_fam).carrier);
}

namespace detail {

// Coordinates of morphisms in a Hom basis, all in one elimination.
template <Field F>
Matrix<F> hom_coords(const std::vector<RepMorphism<F>>& basis,
                     const std::vector<RepMorphism<F>>& elems) {
    Matrix<F> b = vectorize_comps(basis[0].comps());
    for (std::size_t i = 1; i < basis.size(); ++i)
        b = hstack(b, vectorize_comps(basis[i].comps()));
    Matrix<F> e = vectorize_comps(elems[0].comps());
    for (std::size_t i = 1; i < elems.size(); ++i)
        e = hstack(e, vectorize_comps(elems[i].comps()));
    auto x = solve(b, e);
    if (!x) throw std::logic_error("hom_coords: element outside the span");
    return *x;
}

// Dimension of the radical of End(v): kernel of the trace bilinear form
// (x, y) -> trace of left multiplication by x.y on End(v).  Valid in
// characteristic zero.
template <Field F>
std::size_t radical_dim(const std::vector<RepMorphism<F>>& end_basis) {
    static_assert(field_traits<F>::char_zero, "radical via trace form needs char 0");
    const std::size_t d = end_basis.size();
    if (d == 0) return 0;
    std::vector<RepMorphism<F>> products;
    products.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            products.push_back(compose(end_basis[i], end_basis[j]));
    Matrix<F> c = hom_coords(end_basis, products);  // column i*d+j = coords of e_i e_j
    // s[k] = trace of left multiplication by e_k
    std::vector<F> s(d, F(0));
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t m = 0; m < d; ++m) s[k] = s[k] + c(m, k * d + m);
    Matrix<F> gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            F t(0);
            for (std::size_t k = 0; k < d; ++k) t = t + c(k, i * d + j) * s[k];
            gram(i, j) = t;
        }
    return d - rank(gram);
}

// Splitting search.  Candidates are tried in a fixed order: End-basis
// elements, pairwise sums and differences, eigenvalue shifts of the failed
// candidates so far, then seeded small-integer combinations, kSearchBudget
// attempts in all.  Each phase is capped below the full budget so the later
// phases always get a turn, and the shift phase only computes characteristic
// polynomials once the cheap phases have failed.
template <Field F>
std::optional<std::pair<Representation<F>, Representation<F>>> find_split(
    const Representation<F>& v, const std::vector<RepMorphism<F>>& end_basis) {
    using Split = std::optional<std::pair<Representation<F>, Representation<F>>>;
    const std::size_t d = end_basis.size();
    std::vector<RepMorphism<F>> failed;  // eligible for the shift phase
    auto attempt = [&](RepMorphism<F> phi) -> Split {
        Split parts = fitting_split(v, phi);
        if (!parts) failed.push_back(std::move(phi));
        return parts;
    };
    for (std::size_t i = 0; i < d && failed.size() < 28; ++i)
        if (Split p = attempt(end_basis[i])) return p;
    std::vector<long long> coeff(d, 0);
    for (std::size_t i = 0; i < d && failed.size() < 40; ++i)
        for (std::size_t j = i + 1; j < d && failed.size() < 40; ++j) {
            coeff.assign(d, 0);
            coeff[i] = 1;
            coeff[j] = 1;
            if (Split p = attempt(combine(end_basis, coeff))) return p;
            if (failed.size() >= 40) break;
            coeff[j] = -1;
            if (Split p = attempt(combine(end_basis, coeff))) return p;
        }
    std::size_t tried = failed.size();
    if constexpr (field_traits<F>::char_zero) {
        RepMorphism<F> id = identity_morphism(v);
        const std::size_t base = failed.size();
        for (std::size_t ci = 0; ci < base && tried < 56; ++ci) {
            Matrix<F> total;
            for (std::size_t x = 0; x < v.quiver().vertex_count(); ++x)
                total = block_diag(total, failed[ci].comp(x));
            for (const F& lam : rational_roots(char_poly(total))) {
                if (tried >= 56) break;
                std::vector<Matrix<F>> comps;
                for (std::size_t x = 0; x < v.quiver().vertex_count(); ++x)
                    comps.push_back(failed[ci].comp(x) - lam * id.comp(x));
                ++tried;
                if (Split p = fitting_split(v, RepMorphism<F>(v, v, std::move(comps))))
                    return p;
            }
        }
    }
    std::mt19937 rng(kSearchSeed);
    while (tried < kSearchBudget) {
        bool nonzero = false;
        for (std::size_t i = 0; i < d; ++i) {
            coeff[i] = static_cast<long long>(rng() % 5) - 2;
            nonzero = nonzero || coeff[i] != 0;
        }
        ++tried;
        if (!nonzero) continue;
        if (Split p = fitting_split(v, combine(end_basis, coeff))) return p;
    }
    return std::nullopt;
}

}  // namespace detail

// Indecomposability certificate: true iff End(v) modulo its radical is
// one-dimensional.  When the quotient is larger, a split is searched for;
// finding one proves decomposability, and failure to find one is reported as
// undecided rather than guessed.
template <Field F>
bool is_indec(const Representation<F>& v) {
    static_assert(field_traits<F>::char_zero, "is_indec requires rational scalars");
    if (v.is_zero()) throw PreconditionError("is_indec: zero representation");
    std::vector<RepMorphism<F>> e = end_algebra(v);
    if (e.size() - detail::radical_dim(e) == 1) return true;
    if (detail::find_split(v, e)) return false;
    throw UndecidedError("is_indec: End/rad is not one-dimensional but no split was found");
}

// Canonical indecomposable class: a certified representative plus an
// isomorphism-invariant fingerprint used to cut down iso tests.
struct IndecClass {
    Representation<Rational> representative;
    std::vector<std::size_t> dim_vector;
    std::vector<std::size_t> subquiver_ranks;  // sorted
};

template <Field F>
bool iso(const Representation<F>& v, const Representation<F>& w);

// Registry of indecomposable classes of one quiver.  Reads are concurrent;
// inserts are serialized.  Ids are stable (insertion order); ordered_ids()
// sorts by (dimension vector, fingerprint, insertion order) for output.
class ClassRegistry {
public:
    explicit ClassRegistry(const Quiver& q)
        : quiver_(q), subquivers_(connected_subquivers(q)) {}

    const Quiver& quiver() const { return quiver_; }

    std::size_t size() const {
        std::shared_lock lock(mu_);
        return classes_.size();
    }

    IndecClass at(std::size_t id) const {
        std::shared_lock lock(mu_);
        return classes_.at(id);
    }

    Representation<Rational> representative(std::size_t id) const {
        std::shared_lock lock(mu_);
        return classes_.at(id).representative;
    }

    // Find the class of a certified-indecomposable representation,
    // registering it if new.
    std::size_t insert(const Representation<Rational>& rep) {
        std::vector<std::size_t> fp = fingerprint(rep);
        std::unique_lock lock(mu_);
        for (std::size_t id = 0; id < classes_.size(); ++id) {
            if (classes_[id].dim_vector != rep.dims() ||
                classes_[id].subquiver_ranks != fp)
                continue;
            if (iso(rep, classes_[id].representative)) return id;
        }
        classes_.push_back(IndecClass{rep, rep.dims(), fp});
        return classes_.size() - 1;
    }

    std::vector<std::size_t> ordered_ids() const {
        std::shared_lock lock(mu_);
        std::vector<std::size_t> ids(classes_.size());
        std::iota(ids.begin(), ids.end(), 0);
        std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
            if (classes_[a].dim_vector != classes_[b].dim_vector)
                return classes_[a].dim_vector < classes_[b].dim_vector;
            if (classes_[a].subquiver_ranks != classes_[b].subquiver_ranks)
                return classes_[a].subquiver_ranks < classes_[b].subquiver_ranks;
            return a < b;
        });
        return ids;
    }

private:
    std::vector<std::size_t> fingerprint(const Representation<Rational>& rep) const {
        std::vector<std::size_t> fp;
        fp.reserve(subquivers_.size());
        for (const Subquiver& p : subquivers_) fp.push_back(subquiver_rank(rep, p));
        std::sort(fp.begin(), fp.end());
        return fp;
    }

    Quiver quiver_;
    std::vector<Subquiver> subquivers_;
    std::vector<IndecClass> classes_;
    mutable std::shared_mutex mu_;
};

// Krull-Schmidt decomposition: recursive Fitting splits until every part is
// certified indecomposable; the resulting multiset of classes is independent
// of the splitting order.
inline std::map<std::size_t, std::size_t> decompose(const Representation<Rational>& v,
                                                    ClassRegistry& registry) {
    if (v.quiver() != registry.quiver())
        throw PreconditionError("decompose: representation is not over the registry quiver");
    if (!v.quiver().is_connected())
        throw PreconditionError("decompose: quiver is not connected");
    std::map<std::size_t, std::size_t> out;
    if (v.is_zero()) return out;
    std::vector<RepMorphism<Rational>> e = end_algebra(v);
    if (e.size() - detail::radical_dim(e) == 1) {
        out[registry.insert(v)] = 1;
        return out;
    }
    if (auto parts = detail::find_split(v, e)) {
        for (auto& [id, mult] : decompose(parts->first, registry)) out[id] += mult;
        for (auto& [id, mult] : decompose(parts->second, registry)) out[id] += mult;
        return out;
    }
    throw UndecidedError("decompose: part of total dimension " +
                         std::to_string(v.total_dim()) +
                         " has End/rad of dimension > 1 but no split was found");
}

// Isomorphism test.  Dimension vectors must match; then Hom(v,w) is searched
// for an invertible element (basis sweep, small sums and differences, seeded
// random combinations).  For certified-indecomposable inputs with trivial
// End/rad the basis sweep is conclusive, so a miss is a sound "false";
// otherwise a miss with both Hom spaces nonzero is reported as undecided.
template <Field F>
bool iso(const Representation<F>& v, const Representation<F>& w) {
    if (v.quiver() != w.quiver()) throw PreconditionError("iso: quiver mismatch");
    if (v.dims() != w.dims()) return false;
    if (v.total_dim() == 0) return true;
    std::vector<RepMorphism<F>> h = hom_space(v, w);
    if (h.empty()) return false;
    const std::size_t d = h.size();
    for (const RepMorphism<F>& m : h)
        if (m.is_invertible()) return true;
    std::vector<long long> coeff(d, 1);
    if (combine(h, coeff).is_invertible()) return true;
    std::size_t tried = 0;
    for (std::size_t i = 0; i < d && tried < 16; ++i)
        for (std::size_t j = i + 1; j < d && tried < 16; ++j) {
            coeff.assign(d, 0);
            coeff[i] = 1;
            coeff[j] = 1;
            if (combine(h, coeff).is_invertible()) return true;
            ++tried;
            if (tried >= 16) break;
            coeff[j] = -1;
            if (combine(h, coeff).is_invertible()) return true;
            ++tried;
        }
    std::mt19937 rng(kSearchSeed);
    for (; tried < kSearchBudget; ++tried) {
        bool nonzero = false;
        for (std::size_t i = 0; i < d; ++i) {
            coeff[i] = static_cast<long long>(rng() % 5) - 2;
            nonzero = nonzero || coeff[i] != 0;
        }
        if (nonzero && combine(h, coeff).is_invertible()) return true;
    }
    if (hom_space(w, v).size() != d) return false;
    if constexpr (field_traits<F>::char_zero) {
        std::vector<RepMorphism<F>> ev = end_algebra(v);
        std::vector<RepMorphism<F>> ew = end_algebra(w);
        if (ev.size() - detail::radical_dim(ev) == 1 &&
            ew.size() - detail::radical_dim(ew) == 1)
            return false;
    }
    throw UndecidedError("iso: no invertible morphism found within the budget");
}

}  // namespace qrep
