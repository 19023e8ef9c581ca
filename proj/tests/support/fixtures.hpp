#pragma once

// Canonical quivers and representations used across the test suites.  These
// mirror the shipped fixture files in fixtures/.

#include <vector>

#include "qrep/qrep.hpp"

namespace fx {

using qrep::Matrix;
using qrep::Quiver;
using qrep::QuiverMorphism;
using qrep::Representation;
using Q = qrep::Rational;

inline Quiver q3() {
    return Quiver({"c", "1", "2", "3"}, {{"a1", "1", "c"}, {"a2", "2", "c"}, {"a3", "3", "c"}});
}

inline Representation<Q> v3() {
    return Representation<Q>(q3(), {2, 1, 1, 1},
                             {Matrix<Q>{{1}, {0}}, Matrix<Q>{{0}, {1}}, Matrix<Q>{{1}, {1}}});
}

inline Quiver qa() {
    return Quiver({"1", "2", "3", "4"}, {{"a", "1", "3"}, {"b", "2", "3"}, {"c", "3", "4"}});
}

inline Representation<Q> w() {
    return Representation<Q>(qa(), {1, 1, 2, 1},
                             {Matrix<Q>{{1}, {0}}, Matrix<Q>{{0}, {1}}, Matrix<Q>{{1, 1}}});
}

// simple at the branch vertex of qa()
inline Representation<Q> s3() { return qrep::simple_rep<Q>(qa(), 2); }

inline Quiver a3() {
    return Quiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
}

inline Quiver twosub() {
    return Quiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "3", "2"}});
}

inline Quiver a4alt() {
    return Quiver({"1", "2", "3", "4"}, {{"a", "1", "2"}, {"b", "3", "2"}, {"c", "3", "4"}});
}

inline Quiver k2() {
    return Quiver({"x", "y"}, {{"a", "x", "y"}, {"b", "x", "y"}});
}

inline Representation<Q> k2_v() {
    return Representation<Q>(k2(), {1, 1}, {Matrix<Q>{{1}}, Matrix<Q>{{0}}});
}

inline Representation<Q> k2_w() {
    return Representation<Q>(k2(), {1, 1}, {Matrix<Q>{{0}}, Matrix<Q>{{1}}});
}

inline Quiver k4() {
    return Quiver({"x", "y"},
                  {{"a", "x", "y"}, {"b", "x", "y"}, {"c", "x", "y"}, {"d", "x", "y"}});
}

inline Representation<Q> k4_v() {
    return Representation<Q>(k4(), {2, 3},
                             {Matrix<Q>{{1, 1}, {0, 1}, {0, 0}}, Matrix<Q>{{1, 0}, {0, 1}, {0, 0}},
                              Matrix<Q>{{1, 0}, {0, 0}, {0, 1}}, Matrix<Q>{{1, 1}, {0, 1}, {0, 1}}});
}

inline Quiver loop_q() { return Quiver({"v"}, {{"l", "v", "v"}}); }

inline Representation<Q> loop_invertible() {
    return Representation<Q>(loop_q(), {2}, {Matrix<Q>{{1, 1}, {0, 1}}});
}

inline Representation<Q> loop_nilpotent() {
    return Representation<Q>(loop_q(), {2}, {Matrix<Q>{{0, 1}, {0, 0}}});
}

inline Quiver qp() {
    return Quiver({"1", "2", "3a", "3b", "4"},
                  {{"a", "1", "3a"}, {"b", "2", "3b"}, {"c1", "3a", "4"}, {"c2", "3b", "4"}});
}

// the fold QP -> QA identifying 3a,3b with 3 and both middle arrows with c
inline QuiverMorphism alpha() {
    QuiverMorphism m{qp(), qa(), {0, 1, 2, 2, 3}, {0, 1, 2, 2}};
    m.validate();
    return m;
}

// The twelve indecomposable classes of qa(): the four simples, the six
// thin classes supported on subtrees, the identity representation, and w().
inline std::vector<Representation<Q>> qa_classes() {
    Quiver q = qa();
    std::vector<Representation<Q>> out;
    for (std::size_t x = 0; x < 4; ++x) out.push_back(qrep::simple_rep<Q>(q, x));
    auto thin = [&](bool d1, bool d2, bool d4) {
        std::vector<std::size_t> dims{d1 ? 1u : 0u, d2 ? 1u : 0u, 1u, d4 ? 1u : 0u};
        std::vector<Matrix<Q>> mats{Matrix<Q>(1, dims[0]), Matrix<Q>(1, dims[1]),
                                    Matrix<Q>(dims[3], 1)};
        if (d1) mats[0] = Matrix<Q>{{1}};
        if (d2) mats[1] = Matrix<Q>{{1}};
        if (d4) mats[2] = Matrix<Q>{{1}};
        out.push_back(Representation<Q>(q, dims, mats));
    };
    thin(true, false, false);
    thin(false, true, false);
    thin(false, false, true);
    thin(true, true, false);
    thin(true, false, true);
    thin(false, true, true);
    thin(true, true, true);  // the identity representation
    out.push_back(w());
    return out;
}

// The twelve indecomposable classes of q3(): four simples, seven thin
// classes indexed by which leaves are present, and v3().
inline std::vector<Representation<Q>> q3_classes() {
    Quiver q = q3();
    std::vector<Representation<Q>> out;
    for (std::size_t x = 0; x < 4; ++x) out.push_back(qrep::simple_rep<Q>(q, x));
    auto thin = [&](bool l1, bool l2, bool l3) {
        std::vector<std::size_t> dims{1u, l1 ? 1u : 0u, l2 ? 1u : 0u, l3 ? 1u : 0u};
        std::vector<Matrix<Q>> mats{Matrix<Q>(1, dims[1]), Matrix<Q>(1, dims[2]),
                                    Matrix<Q>(1, dims[3])};
        if (l1) mats[0] = Matrix<Q>{{1}};
        if (l2) mats[1] = Matrix<Q>{{1}};
        if (l3) mats[2] = Matrix<Q>{{1}};
        out.push_back(Representation<Q>(q, dims, mats));
    };
    thin(true, false, false);
    thin(false, true, false);
    thin(false, false, true);
    thin(true, true, false);
    thin(true, false, true);
    thin(false, true, true);
    thin(true, true, true);  // the identity representation
    out.push_back(v3());
    return out;
}

// All fixture quivers that are trees.
inline std::vector<Quiver> tree_quivers() {
    return {q3(), qa(), a3(), twosub(), a4alt(), qp()};
}

// Every fixture quiver.
inline std::vector<Quiver> all_quivers() {
    return {q3(), qa(), a3(), twosub(), a4alt(), k2(), k4(), loop_q(), qp()};
}

}  // namespace fx
