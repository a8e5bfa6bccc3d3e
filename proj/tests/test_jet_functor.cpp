#include <doctest.h>

#include "dpva/catalog.hpp"
#include "dpva/errors.hpp"
#include "dpva/jet_functor.hpp"
#include "dpva/random.hpp"
#include "fixtures.hpp"

using namespace fx;

TEST_CASE("J of ku(1,0,0)") {
    DPVAlgebra V = jet_of_dpa(make_ku(1, 0, 0), 5);
    const QuiverPtr& q = V.quiver();
    NCPoly a = X(q, "a"), o = one(q);
    CHECK(lb_eval(V, a, a) == LTensor2(t2_pure(a, o) - t2_pure(o, a)));
    // the kuPVA rule at eps = 0 carries the opposite sign
    DPVAlgebra K = make_kupva(Scalar(0));
    NCPoly u = X(K.quiver(), "u"), ok = one(K.quiver());
    CHECK(lb_eval(K, u, u) == LTensor2(t2_pure(ok, u) - t2_pure(u, ok)));
    // higher letters: <<a^(1)_l a>> = -l (a(x)1 - 1(x)a)
    LTensor2 e;
    e.add(1, -(t2_pure(a, o) - t2_pure(o, a)));
    CHECK(lb_eval(V, X(q, "a", 1), a) == e);
    // <<a_l a^(1)>> = (d + l)(a(x)1 - 1(x)a)
    LTensor2 f;
    f.add(0, t2_pure(X(q, "a", 1), o) - t2_pure(o, X(q, "a", 1)));
    f.add(1, t2_pure(a, o) - t2_pure(o, a));
    CHECK(lb_eval(V, a, X(q, "a", 1)) == f);
}

TEST_CASE("J of zero bracket") {
    DPVAlgebra V = jet_of_dpa(make_zero(2), 3);
    for (Letter x : all_letters(*V.quiver(), 3))
        for (Letter y : all_letters(*V.quiver(), 3))
            CHECK(lb_eval(V, nc_letter(V.quiver(), x), nc_letter(V.quiver(), y)).is_zero());
}

TEST_CASE("Q functor") {
    DPAlgebra S = make_symp();
    DPAlgebra B = quotient_Q(jet_of_dpa(S, 4));
    CHECK(B.rule_value(1, 0) == S.rule_value(1, 0));
    CHECK(B.rule_value(0, 1) == S.rule_value(0, 1));
    CHECK(B.rule_value(0, 0).is_zero());
    CHECK_FALSE(B.quiver()->jet());
    for (Scalar eps : {Scalar(0), Scalar(1), Scalar(-5, 2)}) {
        DPAlgebra K = quotient_Q(make_kupva(eps));
        const QuiverPtr& q = K.quiver();
        NCPoly a = X(q, "u"), o = one(q);
        CHECK(K.rule_value(0, 0) == t2_pure(o, a) - t2_pure(a, o));
        CHECK(db_check_jacobi(K, 0).passed());
    }
    DPAlgebra Z = quotient_Q(jet_of_dpa(make_zero(1), 2));
    CHECK(Z.rule_value(0, 0).is_zero());
    // kill_jets drops jet terms only
    auto m = loops({"x"});
    m->set_jet(3);
    QuiverPtr q = m;
    NCPoly p = X(q, "x") * X(q, "x", 1) + X(q, "x") * X(q, "x") + X(q, "x", 2);
    QuiverPtr bq = base_quiver(*q);
    CHECK(kill_jets(p, bq) == X(bq, "x") * X(bq, "x"));
}

TEST_CASE("QJ round trip on the catalog") {
    for (const auto& A : {make_ku(1, 0, 0), make_ku(1, 1, 1), make_ku(1, 1, 0), make_symp(), make_qpq(2, 2, 2),
                          make_qpq(3, 2, 2), make_qpq(1, 1, 1), make_zero(2)}) {
        auto r = check_QJ_roundtrip(A);
        INFO(A.name());
        CHECK(r.passed());
        CHECK(r.cases > 0);
    }
    CHECK_THROWS_AS(check_QJ_roundtrip(make_symp_gl()), InversesNotJettable);
}

namespace {

LTensor2 dl_pow(LTensor2 P, int l) {
    for (int i = 0; i < l; ++i) {
        LTensor2 r = P.shifted(1);
        for (int n = 0; n <= P.degree(); ++n) r.add(n, t2_del(P.at(n), DelSide::Full, 1));
        P = r;
    }
    return P;
}

}  // namespace

TEST_CASE("jet rule is compatible with the jet relations") {
    // <<v_l d^l(gh)>> with d^l(gh) expanded first equals (d+l)^l <<v_l gh>>
    for (const auto& A : {make_ku(1, 1, 1), make_symp(), make_qpq(2, 2, 2)}) {
        DPVAlgebra V = jet_of_dpa(A, 12);
        const QuiverPtr& q = V.quiver();
        Rng rng(23);
        auto gens = all_letters(*q, 0);
        for (Letter g : gens)
            for (Letter h : gens) {
                NCPoly gh = nc_letter(q, g) * nc_letter(q, h);
                if (gh.is_zero()) continue;
                for (int t = 0; t < 3; ++t) {
                    NCPoly v = random_poly(q, rng, 2, 2, 1);
                    for (int l = 0; l <= 3; ++l) {
                        INFO(A.name(), " l=", l);
                        CHECK(lb_eval(V, v, apply_del(gh, l)) == dl_pow(lb_eval(V, v, gh), l));
                    }
                }
            }
    }
}

TEST_CASE("J preserves the Poisson property") {
    for (const auto& A : {make_symp(), make_ku(1, 1, 1), make_qpq(2, 2, 2)}) {
        REQUIRE(db_check_jacobi(A, 0).passed());
        REQUIRE(db_check_skew(A, 3, 0).passed());
        INFO(A.name());
        CHECK(dpva_check(jet_of_dpa(A, 10), 0).passed());
    }
    CHECK_FALSE(db_check_jacobi(make_ku(1, 1, 0), 0).passed());
    CHECK(dpva_check(jet_of_dpa(make_ku(1, 1, 0), 10), 0).verdict == Verdict::Fail);
}
