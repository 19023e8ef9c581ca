#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "qrep/errors.hpp"

namespace qrep {

struct Arrow {
    std::string name;
    std::size_t tail;
    std::size_t head;

    bool operator==(const Arrow&) const = default;
};

// Finite directed multigraph.  Loops and parallel arrows are allowed.
// Vertex and arrow identity is by name; input order induces the index order
// used for every matrix layout downstream.
class Quiver {
public:
    Quiver(std::vector<std::string> vertices,
           const std::vector<std::tuple<std::string, std::string, std::string>>& arrows)
        : vertices_(std::move(vertices)) {
        if (vertices_.empty()) throw PreconditionError("quiver: needs at least one vertex");
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (!vindex_.emplace(vertices_[i], i).second)
                throw PreconditionError("quiver: duplicate vertex name '" + vertices_[i] + "'");
        for (const auto& [name, tail, head] : arrows) {
            auto t = vindex_.find(tail);
            auto h = vindex_.find(head);
            if (t == vindex_.end())
                throw PreconditionError("quiver: arrow '" + name + "' has unknown tail '" + tail + "'");
            if (h == vindex_.end())
                throw PreconditionError("quiver: arrow '" + name + "' has unknown head '" + head + "'");
            if (!aindex_.emplace(name, arrows_.size()).second)
                throw PreconditionError("quiver: duplicate arrow name '" + name + "'");
            arrows_.push_back({name, t->second, h->second});
        }
    }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }

    const std::string& vertex_name(std::size_t i) const { return vertices_[i]; }
    const std::vector<std::string>& vertex_names() const { return vertices_; }
    const Arrow& arrow(std::size_t a) const { return arrows_[a]; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::size_t vertex_index(const std::string& name) const {
        auto it = vindex_.find(name);
        if (it == vindex_.end())
            throw PreconditionError("quiver: unknown vertex '" + name + "'");
        return it->second;
    }

    std::size_t arrow_index(const std::string& name) const {
        auto it = aindex_.find(name);
        if (it == aindex_.end())
            throw PreconditionError("quiver: unknown arrow '" + name + "'");
        return it->second;
    }

    bool has_vertex(const std::string& name) const { return vindex_.count(name) != 0; }
    bool has_arrow(const std::string& name) const { return aindex_.count(name) != 0; }

    // Connectedness of the underlying undirected graph.
    bool is_connected() const {
        std::vector<std::size_t> comp(vertex_count());
        std::iota(comp.begin(), comp.end(), 0);
        auto root = [&](std::size_t x) {
            while (comp[x] != x) x = comp[x] = comp[comp[x]];
            return x;
        };
        for (const Arrow& a : arrows_) comp[root(a.tail)] = root(a.head);
        for (std::size_t x = 0; x < vertex_count(); ++x)
            if (root(x) != root(0)) return false;
        return true;
    }

    // Names and incidences are enforced at construction, so this only has
    // connectedness left to check.
    void validate() const {
        if (!is_connected()) throw PreconditionError("quiver: not connected");
    }

    bool operator==(const Quiver& o) const {
        return vertices_ == o.vertices_ && arrows_ == o.arrows_;
    }
    bool operator!=(const Quiver& o) const { return !(*this == o); }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, std::size_t> vindex_;
    std::map<std::string, std::size_t> aindex_;
};

// Same vertices and arrow names, tail and head swapped.  An involution.
inline Quiver opposite(const Quiver& q) {
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    arrows.reserve(q.arrow_count());
    for (const Arrow& a : q.arrows())
        arrows.emplace_back(a.name, q.vertex_name(a.head), q.vertex_name(a.tail));
    return Quiver(q.vertex_names(), arrows);
}

// Either the trivial path at `vertex` (no arrows) or a composable arrow
// sequence listed in application order: arrows[0] acts first.
struct Path {
    std::size_t vertex = 0;  // tail of the path
    std::vector<std::size_t> arrows;

    static Path trivial(std::size_t v) { return Path{v, {}}; }
};

inline Path make_path(const Quiver& q, const std::vector<std::size_t>& arrows) {
    if (arrows.empty()) throw PreconditionError("path: empty arrow list; use trivial()");
    Path p{q.arrow(arrows.front()).tail, arrows};
    for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
        if (q.arrow(arrows[i]).head != q.arrow(arrows[i + 1]).tail)
            throw PreconditionError("path: arrows are not composable");
    return p;
}

inline std::size_t path_tail(const Quiver&, const Path& p) { return p.vertex; }

inline std::size_t path_head(const Quiver& q, const Path& p) {
    return p.arrows.empty() ? p.vertex : q.arrow(p.arrows.back()).head;
}

// p after r: requires head(r) = tail(p).
inline Path compose_paths(const Quiver& q, const Path& p, const Path& r) {
    if (path_head(q, r) != path_tail(q, p))
        throw PreconditionError("compose_paths: head of first does not meet tail of second");
    Path out{r.vertex, r.arrows};
    out.arrows.insert(out.arrows.end(), p.arrows.begin(), p.arrows.end());
    if (out.arrows.empty()) out.vertex = r.vertex;
    return out;
}

// Structure-preserving map of directed graphs.
struct QuiverMorphism {
    Quiver source;
    Quiver target;
    std::vector<std::size_t> vertex_map;  // source vertex -> target vertex
    std::vector<std::size_t> arrow_map;   // source arrow -> target arrow

    void validate() const {
        if (vertex_map.size() != source.vertex_count() ||
            arrow_map.size() != source.arrow_count())
            throw PreconditionError("morphism: map sizes do not match source");
        for (std::size_t v : vertex_map)
            if (v >= target.vertex_count())
                throw PreconditionError("morphism: vertex image out of range");
        for (std::size_t i = 0; i < arrow_map.size(); ++i) {
            if (arrow_map[i] >= target.arrow_count())
                throw PreconditionError("morphism: arrow image out of range");
            const Arrow& a = source.arrow(i);
            const Arrow& b = target.arrow(arrow_map[i]);
            if (b.tail != vertex_map[a.tail] || b.head != vertex_map[a.head])
                throw PreconditionError("morphism: arrow '" + a.name +
                                        "' does not preserve incidence");
        }
    }
};

inline QuiverMorphism identity_morphism(const Quiver& q) {
    QuiverMorphism m{q, q, {}, {}};
    m.vertex_map.resize(q.vertex_count());
    std::iota(m.vertex_map.begin(), m.vertex_map.end(), 0);
    m.arrow_map.resize(q.arrow_count());
    std::iota(m.arrow_map.begin(), m.arrow_map.end(), 0);
    return m;
}

// A connected quiver together with its inclusion into a parent quiver.
struct Subquiver {
    Quiver quiver;
    QuiverMorphism inclusion;  // quiver -> parent, injective

    const Quiver& parent() const { return inclusion.target; }
};

inline Subquiver full_subquiver(const Quiver& q) {
    return Subquiver{q, identity_morphism(q)};
}

// Build the subquiver on the given vertex and arrow index sets (ascending).
inline Subquiver make_subquiver(const Quiver& q, const std::vector<std::size_t>& verts,
                                const std::vector<std::size_t>& arrows) {
    std::vector<std::string> vnames;
    std::vector<std::size_t> vpos(q.vertex_count(), SIZE_MAX);
    for (std::size_t v : verts) {
        vpos[v] = vnames.size();
        vnames.push_back(q.vertex_name(v));
    }
    std::vector<std::tuple<std::string, std::string, std::string>> adecl;
    for (std::size_t a : arrows) {
        const Arrow& ar = q.arrow(a);
        if (vpos[ar.tail] == SIZE_MAX || vpos[ar.head] == SIZE_MAX)
            throw PreconditionError("subquiver: arrow endpoint not included");
        adecl.emplace_back(ar.name, q.vertex_name(ar.tail), q.vertex_name(ar.head));
    }
    Quiver sub(vnames, adecl);
    sub.validate();
    QuiverMorphism inc{sub, q, std::vector<std::size_t>(verts), std::vector<std::size_t>(arrows)};
    inc.validate();
    return Subquiver{sub, inc};
}

// All connected subquivers: any vertex subset with any arrow subset whose
// endpoints are included, connected as an undirected graph.  Deterministic
// order: by vertex index set, then arrow index set, lexicographically.
inline std::vector<Subquiver> connected_subquivers(const Quiver& q) {
    const std::size_t nv = q.vertex_count();
    const std::size_t na = q.arrow_count();
    if (nv >= 20 || na >= 20)
        throw PreconditionError("connected_subquivers: quiver too large to enumerate");
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> found;
    for (std::size_t vmask = 1; vmask < (std::size_t(1) << nv); ++vmask) {
        std::vector<std::size_t> verts;
        for (std::size_t v = 0; v < nv; ++v)
            if (vmask & (std::size_t(1) << v)) verts.push_back(v);
        std::vector<std::size_t> cand;
        for (std::size_t a = 0; a < na; ++a) {
            const Arrow& ar = q.arrow(a);
            if ((vmask >> ar.tail & 1) && (vmask >> ar.head & 1)) cand.push_back(a);
        }
        for (std::size_t amask = 0; amask < (std::size_t(1) << cand.size()); ++amask) {
            std::vector<std::size_t> arrows;
            for (std::size_t i = 0; i < cand.size(); ++i)
                if (amask & (std::size_t(1) << i)) arrows.push_back(cand[i]);
            // union-find over the chosen vertices
            std::map<std::size_t, std::size_t> comp;
            for (std::size_t v : verts) comp[v] = v;
            auto root = [&](std::size_t x) {
                while (comp[x] != x) x = comp[x] = comp[comp[x]];
                return x;
            };
            for (std::size_t a : arrows) comp[root(q.arrow(a).tail)] = root(q.arrow(a).head);
            bool connected = true;
            for (std::size_t v : verts)
                if (root(v) != root(verts[0])) {
                    connected = false;
                    break;
                }
            if (connected) found.emplace_back(verts, arrows);
        }
    }
    std::sort(found.begin(), found.end());
    std::vector<Subquiver> out;
    out.reserve(found.size());
    for (const auto& [verts, arrows] : found) out.push_back(make_subquiver(q, verts, arrows));
    return out;
}

inline std::string subquiver_label(const Subquiver& s) {
    std::string out = "P[";
    for (std::size_t i = 0; i < s.quiver.vertex_count(); ++i) {
        if (i) out += ',';
        out += s.quiver.vertex_name(i);
    }
    out += '|';
    for (std::size_t i = 0; i < s.quiver.arrow_count(); ++i) {
        if (i) out += ',';
        out += s.quiver.arrow(i).name;
    }
    out += ']';
    return out;
}

}  // namespace qrep
