#include <doctest.h>

#include "dpva/catalog.hpp"
#include "dpva/errors.hpp"
#include "dpva/jet_functor.hpp"
#include "dpva/random.hpp"
#include "dpva/rep_algebra.hpp"
#include "fixtures.hpp"

using namespace fx;

namespace {

CommDiffPoly C(const Scalar& c) { return CommDiffPoly::constant(c); }
CommDiffPoly V_(const QuiverPtr& q, const char* a, int i, int j, int k = 0) {
    return CommDiffPoly::var(make_var(q->arrow(a), k, i - 1, j - 1));
}
int delta(int a, int b) { return a == b ? 1 : 0; }

// (lambda + d)^n f, one step at a time
LCPoly shift_pow(const CommDiffPoly& f, int n) {
    LCPoly Q(f);
    for (int s = 0; s < n; ++s) {
        LCPoly nxt = Q.shifted(1);
        for (int t = 0; t <= Q.degree(); ++t) nxt.add(t, cdel(Q.at(t)));
        Q = nxt;
    }
    return Q;
}

LCPoly mul_l(const LCPoly& P, const CommDiffPoly& f) {
    LCPoly r;
    for (int n = 0; n <= P.degree(); ++n) r.add(n, P.at(n) * f);
    return r;
}

// {P_{l+d}}_-> f
LCPoly arrow_apply(const LCPoly& P, const CommDiffPoly& f) {
    LCPoly r;
    for (int n = 0; n <= P.degree(); ++n) {
        LCPoly s = shift_pow(f, n);
        for (int t = 0; t <= s.degree(); ++t) r.add(t, P.at(n) * s.at(t));
    }
    return r;
}

// recursion on monomials: left Leibniz in G, right Leibniz in F
LCPoly oracle_mono(const CommPVA& W, const CommDiffPoly::Mono& f, const CommDiffPoly::Mono& g) {
    if (f.empty() || g.empty()) return {};
    if (g.size() > 1) {
        CommDiffPoly::Mono rest(g.begin() + 1, g.end());
        CommDiffPoly::Mono y{g[0]};
        return mul_l(oracle_mono(W, f, y), cmono(rest)) + mul_l(oracle_mono(W, f, rest), cmono(y));
    }
    if (f.size() > 1) {
        CommDiffPoly::Mono rest(f.begin() + 1, f.end());
        CommDiffPoly::Mono x{f[0]};
        return arrow_apply(oracle_mono(W, x, g), cmono(rest)) + arrow_apply(oracle_mono(W, rest, g), cmono(x));
    }
    return W.pair(f[0], g[0]);
}

LCPoly oracle_eval(const CommPVA& W, const CommDiffPoly& F, const CommDiffPoly& G) {
    LCPoly r;
    for (const auto& [mf, cf] : F.terms())
        for (const auto& [mg, cg] : G.terms()) {
            LCPoly t = oracle_mono(W, mf, mg);
            t *= cf * cg;
            r += t;
        }
    return r;
}

CommDiffPoly rand_poly(const std::vector<Var>& vars, Rng& rng, int terms, int deg) {
    CommDiffPoly p;
    for (int t = 0; t < terms; ++t) {
        CommDiffPoly::Mono m;
        int d = 1 + static_cast<int>(rng() % deg);
        for (int i = 0; i < d; ++i) m.push_back(vars[rng() % vars.size()]);
        std::sort(m.begin(), m.end());
        p.add(m, random_scalar(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("CommDiffPoly basics") {
    auto q = loops({"a"});
    QuiverPtr qp = q;
    CommDiffPoly x = V_(qp, "a", 1, 2), y = V_(qp, "a", 2, 1);
    CommDiffPoly p = x * x * y + C(3);
    CHECK(p.partial(make_var(0, 0, 0, 1)) == x * y * Scalar(2));
    CHECK(p.partial(make_var(0, 0, 1, 1)).is_zero());
    // d(x^2 y) = 2 x x' y + x^2 y'
    CommDiffPoly x1 = V_(qp, "a", 1, 2, 1), y1 = V_(qp, "a", 2, 1, 1);
    CHECK(cdel(p) == x * x1 * y * Scalar(2) + x * x * y1);
    CHECK(cdel(C(5)).is_zero());
    // Leibniz of cdel on random products
    Rng rng(1);
    RepSpace R{qp, DimVector{{2}}};
    auto vars = R.vars(2);
    for (int t = 0; t < 20; ++t) {
        CommDiffPoly f = rand_poly(vars, rng, 3, 2), g = rand_poly(vars, rng, 3, 2);
        CHECK(cdel(f * g) == cdel(f) * g + f * cdel(g));
        CHECK(f * g == g * f);
    }
    CHECK(parse_dims("2,1").n == std::vector<int>{2, 1});
    CHECK_THROWS_AS(parse_dims("2,x"), std::exception);
}

TEST_CASE("rep_matrix and trace") {
    auto m = qpq(1, 1);
    QuiverPtr q = m;
    RepSpace R{q, DimVector{{2, 1}}};
    PolyMatrix e1 = rep_matrix(R, E(q, 0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(e1.at(i, j) == C(i == j && i < 2 ? 1 : 0));
    CHECK(rep_matrix(R, X(q, "v1") * X(q, "w1")) ==
          letter_matrix(R, L(*q, "v1")) * letter_matrix(R, L(*q, "w1")));
    // entries of vw: sum_k v_ik w_kj (k ranges over the 1-dim second block)
    PolyMatrix vw = rep_matrix(R, X(q, "v1") * X(q, "w1"));
    CHECK(vw.at(0, 1) == V_(q, "v1", 1, 3) * V_(q, "w1", 3, 2));
    CHECK(trace(R, E(q, 0)) == C(2));
    CHECK(trace(R, E(q, 1)) == C(1));
    CHECK(trace(R, X(q, "v1") * X(q, "w1")) == trace(R, X(q, "w1") * X(q, "v1")));
    CHECK(trace(R, X(q, "v1")).is_zero());

    auto k = loops({"a", "b"});
    k->set_jet(4);
    QuiverPtr kq = k;
    RepSpace K{kq, DimVector{{2}}};
    PolyMatrix d = rep_matrix(K, X(kq, "a"), 1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(d.at(i, j) == cdel(rep_matrix(K, X(kq, "a")).at(i, j)));
    CHECK(rep_matrix(K, apply_del(X(kq, "a") * X(kq, "b"))) == rep_matrix(K, X(kq, "a") * X(kq, "b"), 1));
    Rng rng(3);
    for (int t = 0; t < 15; ++t) {
        NCPoly p = random_poly(kq, rng, 2, 3, 1), r = random_poly(kq, rng, 2, 3, 1);
        CHECK(trace(K, p * r - r * p).is_zero());
        CHECK(trace(K, p, 1) == cdel(trace(K, p)));
        CHECK(trace(K, apply_del(p)) == cdel(trace(K, p)));
    }
}

TEST_CASE("induced Poisson bracket: KKS and Q_pq") {
    DPAlgebra A = make_ku(1, 0, 0);
    const QuiverPtr& q = A.quiver();
    DimVector d{{2}};
    CHECK(cpoisson_eval(A, d, V_(q, "a", 1, 2), V_(q, "a", 2, 1)) == V_(q, "a", 2, 2) - V_(q, "a", 1, 1));
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l) {
                    CommDiffPoly e = V_(q, "a", k, j) * Scalar(delta(i, l)) - V_(q, "a", i, l) * Scalar(delta(k, j));
                    CHECK(cpoisson_eval(A, d, V_(q, "a", i, j), V_(q, "a", k, l)) == e);
                }
    CHECK(cpoisson_eval(A, d, V_(q, "a", 1, 2), C(7)).is_zero());
    auto J = jet_of_dpa(A, 2);
    CHECK_THROWS_AS(cpoisson_eval(A, d, V_(J.quiver(), "a", 1, 2, 1), V_(q, "a", 1, 1)), JetVarInPoissonContext);

    for (int n : {1, 2, 3}) {
        DPAlgebra Q = make_qpq(3, 2, 1);
        const QuiverPtr& qq = Q.quiver();
        DimVector dn{{n, 1}};
        for (int p1 = 1; p1 <= 3; ++p1)
            for (int q1 = 1; q1 <= 2; ++q1)
                for (int j = 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k) {
                        std::string vn = "v" + std::to_string(p1), wn = "w" + std::to_string(q1);
                        CommDiffPoly Vj = V_(qq, vn.c_str(), j, n + 1), Wk = V_(qq, wn.c_str(), n + 1, k);
                        int e = delta(p1, q1) * (p1 <= 1 ? 1 : 0) * delta(k, j);
                        CHECK(cpoisson_eval(Q, dn, Vj, Wk) == C(e));
                    }
    }
}

TEST_CASE("induced lambda-bracket examples") {
    DPVAlgebra J = jet_of_dpa(make_ku(1, 0, 0), 4);
    const QuiverPtr& q = J.quiver();
    DimVector d{{2}};
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l) {
                    CommDiffPoly e = V_(q, "a", k, j) * Scalar(delta(i, l)) - V_(q, "a", i, l) * Scalar(delta(k, j));
                    CHECK(clambda_eval(J, d, V_(q, "a", i, j), V_(q, "a", k, l)) == LCPoly(e));
                }
    for (Scalar eps : {Scalar(0), Scalar(1), Scalar(-5, 2)}) {
        DPVAlgebra K = make_kupva(eps);
        const QuiverPtr& kq = K.quiver();
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                for (int k = 1; k <= 2; ++k)
                    for (int l = 1; l <= 2; ++l) {
                        LCPoly e;
                        e.add(0, V_(kq, "u", i, l) * Scalar(delta(k, j)) - V_(kq, "u", k, j) * Scalar(delta(i, l)));
                        e.add(1, C(eps * delta(k, j) * delta(i, l)));
                        CHECK(clambda_eval(K, d, V_(kq, "u", i, j), V_(kq, "u", k, l)) == e);
                    }
    }
    // jet Q_pq at (n,1)
    DPVAlgebra Q = jet_of_dpa(make_qpq(2, 2, 1), 6);
    const QuiverPtr& qq = Q.quiver();
    int n = 2;
    DimVector dn{{n, 1}};
    for (int l = 0; l <= 2; ++l)
        for (int m = 0; m <= 2; ++m)
            for (int p1 = 1; p1 <= 2; ++p1)
                for (int q1 = 1; q1 <= 2; ++q1)
                    for (int j = 1; j <= n; ++j)
                        for (int k = 1; k <= n; ++k) {
                            std::string vn = "v" + std::to_string(p1), wn = "w" + std::to_string(q1);
                            LCPoly e;
                            int c = delta(p1, q1) * (p1 <= 1) * delta(k, j) * (l % 2 ? -1 : 1);
                            e.add(l + m, C(c));
                            CHECK(clambda_eval(Q, dn, V_(qq, vn.c_str(), j, n + 1, l), V_(qq, wn.c_str(), n + 1, k, m)) ==
                                  e);
                        }
}

TEST_CASE("master formula agrees with the Leibniz recursion") {
    std::vector<std::pair<DPVAlgebra, DimVector>> cases = {
        {make_kupva(Scalar(3, 2)), DimVector{{2}}},
        {jet_of_dpa(make_ku(1, 1, 1), 8), DimVector{{2}}},
        {jet_of_dpa(make_qpq(2, 2, 2), 8), DimVector{{1, 1}}},
    };
    for (const auto& [V, d] : cases) {
        CommPVA W = rep_pva(V, d);
        auto vars = W.space().vars(1);
        Rng rng(8);
        for (int t = 0; t < 12; ++t) {
            CommDiffPoly F = rand_poly(vars, rng, 2, 3), G = rand_poly(vars, rng, 2, 3);
            CHECK(W.eval(F, G) == oracle_eval(W, F, G));
        }
    }
}

TEST_CASE("entries of products: representation relations are respected") {
    std::vector<std::pair<DPVAlgebra, DimVector>> cases = {
        {make_kupva(Scalar(2)), DimVector{{2}}},
        {make_kupva(Scalar(-1)), DimVector{{3}}},
        {jet_of_dpa(make_ku(1, 1, 1), 8), DimVector{{2}}},
        {jet_of_dpa(make_symp(), 8), DimVector{{2}}},
        {jet_of_dpa(make_qpq(2, 2, 2), 8), DimVector{{2, 1}}},
    };
    for (const auto& [V, d] : cases) {
        CommPVA W = rep_pva(V, d);
        const RepSpace& R = W.space();
        const QuiverPtr& q = V.quiver();
        auto letters = all_letters(*q, 1);
        Rng rng(4);
        for (int t = 0; t < 6; ++t) {
            Letter g = letters[rng() % letters.size()], h = letters[rng() % letters.size()],
                   c = letters[rng() % letters.size()];
            NCPoly gh = nc_letter(q, g) * nc_letter(q, h), cc = nc_letter(q, c);
            if (gh.is_zero()) continue;
            PolyMatrix M = rep_matrix(R, gh), Cm = rep_matrix(R, cc);
            int N = R.N();
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    for (int k = 0; k < N; ++k)
                        for (int l = 0; l < N; ++l) {
                            LCPoly lhs = W.eval(M.at(i, j), Cm.at(k, l));
                            CHECK(lhs == induced_entry_bracket(V, R, gh, cc, i, j, k, l));
                            // and in the other slot
                            CHECK(W.eval(Cm.at(k, l), M.at(i, j)) == induced_entry_bracket(V, R, cc, gh, k, l, i, j));
                        }
        }
    }
}

TEST_CASE("products then representation equals representation then products") {
    for (const auto& V : {make_kupva(Scalar(5)), jet_of_dpa(make_qpq(2, 2, 2), 6)}) {
        DimVector d;
        d.n.assign(static_cast<std::size_t>(V.quiver()->num_vertices()), 2);
        if (d.n.size() == 1) d.n = {2};
        CommPVA W = rep_pva(V, d);
        const RepSpace& R = W.space();
        auto vars = R.vars(1);
        for (Var x : vars)
            for (Var y : vars) {
                Letter g = make_letter(var_arrow(x), var_order(x)), h = make_letter(var_arrow(y), var_order(y));
                auto prods = lb_to_products(V.letter_bracket(g, h));
                LCPoly br = W.pair(x, y);
                int top = std::max(br.degree(), static_cast<int>(prods.size()) - 1);
                for (int n = 0; n <= top; ++n) {
                    Tensor2 pn = n < static_cast<int>(prods.size()) ? prods[n] : Tensor2();
                    CommDiffPoly via_products =
                        entry_pattern(R, pn, var_row(x), var_col(x), var_row(y), var_col(y));
                    CHECK(via_products == br.at(n) * factorial(n));
                }
            }
    }
}

TEST_CASE("induced bracket axioms at N = 2") {
    std::vector<DPVAlgebra> algs = {make_kupva(Scalar(1)), jet_of_dpa(make_ku(1, 1, 1), 8), jet_of_dpa(make_symp(), 8)};
    for (const auto& V : algs) {
        DimVector d{{2}};
        CommPVA W = rep_pva(V, d);
        auto vars = W.space().vars(0);
        // skewsymmetry {y_l x} = -{x_{-l-d} y}
        for (Var x : vars)
            for (Var y : vars) {
                LCPoly P = W.pair(x, y), r;
                for (int n = 0; n <= P.degree(); ++n) {
                    // (-l-d)^n P_n
                    LCPoly s = shift_pow(P.at(n), n);
                    for (int t = 0; t <= s.degree(); ++t) r.add(t, s.at(t) * Scalar((n % 2) ? 1 : -1));
                }
                CHECK(W.pair(y, x) == r);
            }
        // Jacobi on generator triples
        Rng rng(2);
        for (int t = 0; t < 25; ++t) {
            CommDiffPoly a = CommDiffPoly::var(vars[rng() % vars.size()]),
                         b = CommDiffPoly::var(vars[rng() % vars.size()]),
                         c = CommDiffPoly::var(vars[rng() % vars.size()]);
            LMPoly<CommDiffPoly> J;
            LCPoly bc = W.eval(b, c);
            for (int m = 0; m <= bc.degree(); ++m) {
                LCPoly x = W.eval(a, bc.at(m));
                for (int n = 0; n <= x.degree(); ++n) J.add(n, m, x.at(n));
            }
            LCPoly ac = W.eval(a, c);
            for (int n = 0; n <= ac.degree(); ++n) {
                LCPoly x = W.eval(b, ac.at(n));
                for (int m = 0; m <= x.degree(); ++m) J.mut(n, m) -= x.at(m);
            }
            LCPoly ab = W.eval(a, b);
            for (int n = 0; n <= ab.degree(); ++n) {
                LCPoly R = W.eval(ab.at(n), c);
                for (int e = 0; e <= R.degree(); ++e)
                    for (int s = 0; s <= e; ++s) J.mut(n + s, e - s) -= R.at(e) * binomial(e, s);
            }
            J.trim();
            CHECK(J.is_zero());
        }
    }
}

TEST_CASE("gl action") {
    auto k = loops({"a"});
    k->set_jet(4);
    QuiverPtr q = k;
    RepSpace R{q, DimVector{{2}}};
    ScalarMatrix x = {Scalar(1), Scalar(2), Scalar(-1), Scalar(3)};
    auto xe = [&](int i, int j) { return x[static_cast<std::size_t>(i * 2 + j)]; };
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            CommDiffPoly e;
            for (int t = 1; t <= 2; ++t)
                e += V_(q, "a", i, t) * xe(t - 1, j - 1) - V_(q, "a", t, j) * xe(i - 1, t - 1);
            CHECK(gl_act(R, x, 0, V_(q, "a", i, j)) == e);
            // x_(1) d(a_ij) = (ax - xa)_ij
            CHECK(gl_act(R, x, 1, V_(q, "a", i, j, 1)) == e);
            // x_(2) d^3 a = 3!/1! d(x.a)
            CHECK(gl_act(R, x, 2, V_(q, "a", i, j, 3)) == cdel(e) * Scalar(6));
            CHECK(gl_act(R, x, 2, V_(q, "a", i, j, 1)).is_zero());
            CHECK(gl_act(R, x, 1, V_(q, "a", i, j)).is_zero());
        }
    CHECK(elementary_block_matrices(DimVector{{2, 1}}).size() == 5u);
}

TEST_CASE("commutative J and Q") {
    DPAlgebra A = make_ku(1, 0, 0);
    CommPA P = rep_pa(A, DimVector{{2}});
    CommPVA W = comm_jet(P);
    auto jq = jet_of_dpa(A, 3).quiver();
    // {d(a12) _l a21} = -l (a22 - a11)
    LCPoly e;
    e.add(1, -(V_(jq, "a", 2, 2) - V_(jq, "a", 1, 1)));
    CHECK(W.eval(V_(jq, "a", 1, 2, 1), V_(jq, "a", 2, 1)) == e);
    CommPA back = comm_quotient(W);
    for (Var x : P.space().vars(0))
        for (Var y : P.space().vars(0)) CHECK(back.pair(x, y) == P.pair(x, y));
    CommPVA Z = comm_jet(rep_pa(make_zero(1), DimVector{{2}}));
    for (Var x : Z.space().vars(2))
        for (Var y : Z.space().vars(2)) CHECK(Z.pair(x, y).is_zero());
}

TEST_CASE("phi iso, invariance, lemma identities") {
    CHECK(phi_iso_check(make_ku(1, 0, 0), DimVector{{2}}, 2).passed());
    CHECK(phi_iso_check(make_qpq(2, 2, 2), DimVector{{2, 1}}, 2).passed());
    CHECK(phi_iso_check(make_zero(2), DimVector{{2}}, 2).passed());
    CHECK(phi_iso_check(make_ku(1, 1, 1), DimVector{{2}}, 2).passed());

    CHECK(invariance_check(jet_of_dpa(make_ku(1, 0, 0), 4), DimVector{{2}}).passed());
    for (Scalar eps : {Scalar(0), Scalar(1), Scalar(-5, 2)})
        CHECK(invariance_check(make_kupva(eps), DimVector{{2}}).passed());
    CHECK(invariance_check(jet_of_dpa(make_qpq(2, 2, 2), 4), DimVector{{2, 1}}).passed());

    auto r = lemma_identities_check(make_ku(1, 0, 0), DimVector{{2}}, 4, 0, 100);
    for (const auto& w : r.witnesses) INFO(w.input, " | ", w.lhs, " | ", w.rhs);
    CHECK(r.passed());
    CHECK(r.cases == 100u);
    REQUIRE(!r.notes.empty());
    MESSAGE(r.notes.back());
    CHECK(std::stoi(r.notes.back()) > 200);
}
