#pragma once

#include <map>
#include <mutex>
#include <string>
#include <variant>
#include <vector>

#include "qrep/decompose.hpp"
#include "qrep/rank.hpp"

namespace qrep {

// Element of the representation ring: an integer combination of canonical
// indecomposable classes (ids of a ClassRegistry).  Zero coefficients are
// never stored.
struct RingElement {
    std::map<std::size_t, long long> coeffs;

    bool is_zero() const { return coeffs.empty(); }

    bool operator==(const RingElement& o) const { return coeffs == o.coeffs; }
};

inline RingElement ring_add(const RingElement& a, const RingElement& b) {
    RingElement r = a;
    for (const auto& [id, c] : b.coeffs) {
        long long n = (r.coeffs[id] += c);
        if (n == 0) r.coeffs.erase(id);
    }
    return r;
}

inline RingElement ring_neg(const RingElement& a) {
    RingElement r = a;
    for (auto& [id, c] : r.coeffs) c = -c;
    return r;
}

inline RingElement ring_sub(const RingElement& a, const RingElement& b) {
    return ring_add(a, ring_neg(b));
}

inline RingElement ring_scale(long long k, const RingElement& a) {
    RingElement r;
    if (k == 0) return r;
    for (const auto& [id, c] : a.coeffs) r.coeffs[id] = k * c;
    return r;
}

// A rank function: the global rank of the restriction to a connected
// subquiver, or the pushforward of a global rank along a quiver morphism.
struct RankFunctionDescriptor {
    std::variant<Subquiver, QuiverMorphism> fn;
    std::string label;

    static RankFunctionDescriptor restriction(const Subquiver& p) {
        return RankFunctionDescriptor{p, subquiver_label(p)};
    }
    static RankFunctionDescriptor pushforward(const QuiverMorphism& alpha,
                                              const std::string& name) {
        return RankFunctionDescriptor{alpha, "via:" + name};
    }
};

inline long long rank_function_value(const RankFunctionDescriptor& fn,
                                     const Representation<Rational>& v) {
    if (const Subquiver* p = std::get_if<Subquiver>(&fn.fn))
        return static_cast<long long>(subquiver_rank(v, *p));
    return static_cast<long long>(pushforward_rank(std::get<QuiverMorphism>(fn.fn), v));
}

// The representation ring of one quiver: sums and tensor products of
// decompositions, with class-by-class products memoized.
class RepRing {
public:
    explicit RepRing(const Quiver& q) : registry_(q) {}

    ClassRegistry& registry() { return registry_; }
    const ClassRegistry& registry() const { return registry_; }
    const Quiver& quiver() const { return registry_.quiver(); }

    RingElement from(const Representation<Rational>& v) {
        RingElement r;
        for (const auto& [id, mult] : decompose(v, registry_))
            r.coeffs[id] = static_cast<long long>(mult);
        return r;
    }

    RingElement one() { return from(identity_rep<Rational>(quiver())); }

    // Bilinear extension of [V].[W] = [V (x) W] on class representatives.
    RingElement mul(const RingElement& a, const RingElement& b) {
        RingElement r;
        for (const auto& [ia, ca] : a.coeffs)
            for (const auto& [ib, cb] : b.coeffs)
                r = ring_add(r, ring_scale(ca * cb, class_product(ia, ib)));
        return r;
    }

    // Each component of the result is the value of one rank function,
    // extended linearly over the coefficients.
    std::vector<long long> rank_vector(const RingElement& x,
                                       const std::vector<RankFunctionDescriptor>& fns) {
        std::vector<long long> out;
        out.reserve(fns.size());
        for (const RankFunctionDescriptor& fn : fns) {
            long long acc = 0;
            for (const auto& [id, c] : x.coeffs)
                acc += c * rank_function_value(fn, registry_.representative(id));
            out.push_back(acc);
        }
        return out;
    }

private:
    RingElement class_product(std::size_t ia, std::size_t ib) {
        std::pair<std::size_t, std::size_t> key = std::minmax(ia, ib);
        {
            std::lock_guard lock(cache_mu_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        RingElement p = from(tensor(registry_.representative(key.first),
                                    registry_.representative(key.second)));
        std::lock_guard lock(cache_mu_);
        cache_.emplace(key, p);
        return p;
    }

    ClassRegistry registry_;
    std::map<std::pair<std::size_t, std::size_t>, RingElement> cache_;
    std::mutex cache_mu_;
};

}  // namespace qrep
