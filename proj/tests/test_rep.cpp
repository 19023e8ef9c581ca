#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qrep/hom.hpp"
#include "qrep/limits.hpp"
#include "qrep/representation.hpp"
#include "support/fixtures.hpp"
#include "support/random_gen.hpp"

using namespace qrep;
using Q = Rational;

TEST_CASE("identity representation") {
    Representation<Q> one = identity_rep<Q>(fx::a3());
    CHECK(one.dims() == std::vector<std::size_t>{1, 1, 1});
    CHECK(one.mat(0) == Matrix<Q>{{1}});
    Representation<Q> loop_one = identity_rep<Q>(fx::loop_q());
    CHECK(loop_one.total_dim() == 1);
    CHECK(loop_one.mat(0).is_identity());
}

TEST_CASE("shape validation") {
    CHECK_THROWS_AS(
        Representation<Q>(fx::a3(), {1, 1, 1},
                          {Matrix<Q>{{1}, {1}}, Matrix<Q>{{1}}}),
        PreconditionError);
}

TEST_CASE("direct sum is a biproduct") {
    Representation<Q> w = fx::w();
    CHECK(direct_sum(w, zero_rep<Q>(fx::qa())).dims() == w.dims());
    CHECK(direct_sum(w, w).dims() == std::vector<std::size_t>{2, 2, 4, 2});

    std::mt19937 rng(31);
    for (int t = 0; t < 20; ++t) {
        Representation<Q> v = rg::random_rep(rng, fx::qa(), 2);
        Representation<Q> u = rg::random_rep(rng, fx::qa(), 2);
        DirectSum<Q> s = direct_sum_with_maps(v, u);
        CHECK(compose(s.proj_left, s.incl_left) == identity_morphism(v));
        CHECK(compose(s.proj_right, s.incl_right) == identity_morphism(u));
        CHECK(compose(s.proj_left, s.incl_right).is_zero());
        CHECK(compose(s.proj_right, s.incl_left).is_zero());
    }
}

TEST_CASE("tensor product") {
    Representation<Q> v3 = fx::v3();
    CHECK(tensor(v3, v3).dims() == std::vector<std::size_t>{4, 1, 1, 1});
    Representation<Q> one = identity_rep<Q>(fx::q3());
    CHECK(tensor(one, one) == one);
    CHECK_THROWS_AS(tensor(fx::v3(), identity_rep<Q>(fx::qa())), PreconditionError);
}

TEST_CASE("duality") {
    Representation<Q> w = fx::w();
    Representation<Q> dw = dual(w);
    CHECK(dw.quiver() == opposite(fx::qa()));
    CHECK(dw.dims() == w.dims());
    CHECK(dw.mat(2) == Matrix<Q>{{1}, {1}});
    CHECK(dual(dw) == w);
    CHECK(dual(identity_rep<Q>(fx::q3())) == identity_rep<Q>(opposite(fx::q3())));

    SECTION("dual of a tensor product is the tensor product of duals") {
        std::mt19937 rng(32);
        for (int t = 0; t < 25; ++t) {
            Representation<Q> v = rg::random_rep(rng, fx::twosub(), 2);
            Representation<Q> u = rg::random_rep(rng, fx::twosub(), 2);
            CHECK(dual(tensor(v, u)) == tensor(dual(v), dual(u)));
        }
    }

    SECTION("dual dual is the identity on every fixture quiver") {
        std::mt19937 rng(33);
        for (const Quiver& q : fx::all_quivers()) {
            Representation<Q> v = rg::random_rep(rng, q, 3);
            CHECK(dual(dual(v)) == v);
        }
    }
}

TEST_CASE("path maps") {
    std::mt19937 rng(34);
    Representation<Q> v = rg::random_rep(rng, fx::a3(), 3);
    CHECK(path_map(v, Path::trivial(1)) == Matrix<Q>::identity(v.dim(1)));
    CHECK(path_map(v, make_path(fx::a3(), {0, 1})) == v.mat(1) * v.mat(0));
    // a path through a zero vertex is a zero matrix
    Representation<Q> s = simple_rep<Q>(fx::a3(), 0);
    CHECK(path_map(s, make_path(fx::a3(), {0, 1})).is_zero());
}

TEST_CASE("hom spaces") {
    Representation<Q> one3 = identity_rep<Q>(fx::q3());
    CHECK(hom_space(one3, one3).size() == 1);
    Representation<Q> w = fx::w();
    Representation<Q> oneA = identity_rep<Q>(fx::qa());
    CHECK(hom_space(oneA, w).empty());
    CHECK(hom_space(w, oneA).size() == 1);
    CHECK(hom_space(fx::v3(), fx::v3()).size() == 1);

    SECTION("every basis element intertwines") {
        std::mt19937 rng(35);
        for (const Quiver& q : fx::all_quivers()) {
            Representation<Q> v = rg::random_rep(rng, q, 2);
            Representation<Q> u = rg::random_rep(rng, q, 2);
            for (const RepMorphism<Q>& f : hom_space(v, u))
                for (std::size_t a = 0; a < q.arrow_count(); ++a)
                    CHECK(f.comp(q.arrow(a).head) * v.mat(a) ==
                          u.mat(a) * f.comp(q.arrow(a).tail));
        }
    }
}

TEST_CASE("pullback") {
    Representation<Q> w = fx::w();
    CHECK(pullback(identity_morphism(fx::qa()), w) == w);
    Representation<Q> pw = pullback(fx::alpha(), w);
    CHECK(pw.dims() == std::vector<std::size_t>{1, 1, 2, 2, 1});
    CHECK(pw.mat(2) == w.mat(2));
    CHECK(pw.mat(3) == w.mat(2));

    SECTION("pullback commutes with tensor and direct sum on the nose") {
        std::mt19937 rng(36);
        for (int t = 0; t < 25; ++t) {
            Representation<Q> v = rg::random_rep(rng, fx::qa(), 2);
            Representation<Q> u = rg::random_rep(rng, fx::qa(), 2);
            CHECK(pullback(fx::alpha(), tensor(v, u)) ==
                  tensor(pullback(fx::alpha(), v), pullback(fx::alpha(), u)));
            CHECK(pullback(fx::alpha(), direct_sum(v, u)) ==
                  direct_sum(pullback(fx::alpha(), v), pullback(fx::alpha(), u)));
        }
    }
}

TEST_CASE("restriction") {
    Representation<Q> w = fx::w();
    auto subs = connected_subquivers(fx::qa());
    CHECK(restrict_to(w, full_subquiver(fx::qa())) == w);
    for (const Subquiver& s : subs) {
        if (s.quiver.arrow_count() == 1 && s.quiver.vertex_count() == 2 &&
            s.quiver.arrow(0).name == "c") {
            Representation<Q> r = restrict_to(w, s);
            CHECK(r.mat(0) == Matrix<Q>{{1, 1}});
        }
        if (s.quiver.vertex_count() == 1 && s.quiver.arrow_count() == 0 &&
            s.quiver.vertex_name(0) == "3")
            CHECK(restrict_to(w, s).dims() == std::vector<std::size_t>{2});
    }
}

TEST_CASE("pointwise exterior and symmetric powers") {
    Representation<Q> v3 = fx::v3();
    CHECK(exterior(v3, 2).dims() == std::vector<std::size_t>{1, 0, 0, 0});
    CHECK(symmetric(v3, 2).dims() == std::vector<std::size_t>{3, 1, 1, 1});
    CHECK(exterior(v3, 0) == identity_rep<Q>(fx::q3()));
    CHECK(symmetric(v3, 1) == v3);
}

TEST_CASE("limits and colimits") {
    Representation<Q> oneA = identity_rep<Q>(fx::qa());
    LimitData<Q> l1 = limit(oneA);
    CHECK(l1.lim_dim == 1);
    CHECK(l1.colim_dim == 1);
    CHECK(rank(l1.eta) == 1);

    LimitData<Q> lw = limit(fx::w());
    CHECK(lw.lim_dim == 0);
    CHECK(lw.colim_dim == 1);
    CHECK(rank(lw.eta) == 0);

    SECTION("limit and colimit dimensions equal Hom dimensions") {
        std::mt19937 rng(37);
        for (const Quiver& q : fx::all_quivers()) {
            Representation<Q> one = identity_rep<Q>(q);
            for (int t = 0; t < 6; ++t) {
                Representation<Q> v = rg::random_rep(rng, q, 2);
                LimitData<Q> l = limit(v);
                CHECK(l.lim_dim == hom_space(one, v).size());
                CHECK(l.colim_dim == hom_space(v, one).size());
                // alpha and beta really are structure maps of the diagram
                for (std::size_t a = 0; a < q.arrow_count(); ++a) {
                    const Arrow& ar = q.arrow(a);
                    CHECK(l.alpha[ar.head] == v.mat(a) * l.alpha[ar.tail]);
                    CHECK(l.beta[ar.tail] == l.beta[ar.head] * v.mat(a));
                }
            }
        }
    }
}
