#include "dpva/reduction.hpp"

#include <array>

#include "dpva/catalog.hpp"
#include "dpva/cases.hpp"
#include "dpva/errors.hpp"
#include "dpva/h0.hpp"
#include "dpva/jet_functor.hpp"
#include "dpva/random.hpp"

namespace dpva {

MomentDatum make_moment(const NCPoly& mu, std::vector<Scalar> zeta) {
    const QuiverPtr& qp = mu.quiver();
    if (!qp) throw Error("moment map without a quiver");
    const int nv = qp->num_vertices();
    MomentDatum m;
    m.mu = mu;
    NCPoly sum(qp);
    for (int s = 0; s < nv; ++s) {
        NCPoly e = nc_idem(qp, s);
        m.parts.push_back(e * mu * e);
        sum += m.parts.back();
    }
    if (!(sum == mu)) throw Error("moment map must be a sum of closed paths: " + tensor_str(mu));
    if (zeta.empty()) zeta.assign(static_cast<std::size_t>(nv), Scalar(0));
    if (static_cast<int>(zeta.size()) != nv) throw Error("zeta needs one value per vertex");
    m.zeta = std::move(zeta);
    return m;
}

MomentDatum rehome_moment(const MomentDatum& m, const QuiverPtr& q) {
    MomentDatum r;
    r.mu = rehome(m.mu, q);
    for (const auto& p : m.parts) r.parts.push_back(rehome(p, q));
    r.zeta = m.zeta;
    return r;
}

MomentDatum quiver_moment(const QuiverPtr& qp) {
    const Quiver& q = *qp;
    if (!q.is_double()) throw Error("quiver_moment needs a double quiver with every arrow starred");
    NCPoly mu(qp);
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& A = q.arrow_at(a);
        mu += nc_letter(qp, make_letter(a), Scalar(A.epsilon)) * nc_letter(qp, make_letter(A.star));
    }
    return make_moment(mu);
}

namespace {

Tensor2 moment_target(const QuiverPtr& qp, const NCPoly& g, int s) {
    NCPoly e = nc_idem(qp, s);
    return t2_pure(g * e, e) - t2_pure(e, e * g);
}

std::string gen_label(const Quiver& q, int s, Letter g) {
    return "s=" + q.vertex_name(s) + "; g=" + q.letter_name(g);
}

}  // namespace

CheckReport nc_moment_check(const DPAlgebra& A, const MomentDatum& m) {
    const QuiverPtr& qp = A.quiver();
    const Quiver& q = *qp;
    auto gens = all_letters(q, 0);
    const std::size_t ns = m.parts.size();
    auto label = [&](std::size_t i) { return gen_label(q, static_cast<int>(i / gens.size()), gens[i % gens.size()]); };
    return run_cases("nc_moment:" + A.name(), 0, ns * gens.size(), Exec::Serial, label,
                     [&](std::size_t i, CheckReport& part) {
                         int s = static_cast<int>(i / gens.size());
                         NCPoly g = nc_letter(qp, gens[i % gens.size()]);
                         Tensor2 lhs = db_eval(A, rehome(m.parts[s], qp), g), rhs = moment_target(qp, g, s);
                         if (!(lhs == rhs)) part.fail({label(i), tensor_str(lhs), tensor_str(rhs)});
                     });
}

CheckReport vertex_moment_check(const DPVAlgebra& V, const MomentDatum& m, int max_order) {
    const QuiverPtr& qp = V.quiver();
    const Quiver& q = *qp;
    auto gens = all_letters(q, V.has_derivation() ? max_order : 0);
    const std::size_t ns = m.parts.size();
    std::vector<int> exact(ns * gens.size(), 0), degree(ns * gens.size(), -1);
    auto label = [&](std::size_t i) { return gen_label(q, static_cast<int>(i / gens.size()), gens[i % gens.size()]); };
    CheckReport rep = run_cases(
        "vertex_moment:" + V.name(), 0, ns * gens.size(), Exec::Serial, label, [&](std::size_t i, CheckReport& part) {
            int s = static_cast<int>(i / gens.size());
            NCPoly g = nc_letter(qp, gens[i % gens.size()]);
            LTensor2 P = lb_eval(V, rehome(m.parts[s], qp), g);
            degree[i] = P.degree();
            Tensor2 excess = P.at(0) - moment_target(qp, g, s);
            exact[i] = excess.is_zero() ? 1 : 0;
            NCPoly f = t2_fuse(excess, Twist::Sigma);
            if (!f.is_zero()) part.fail({"lambda^0 excess " + label(i), tensor_str(excess), "m o sigma = " + tensor_str(f)});
            for (int n = 1; n <= P.degree(); ++n) {
                NCPoly fn = t2_fuse(P.at(n), Twist::Sigma);
                if (!fn.is_zero())
                    part.fail({"lambda^" + std::to_string(n) + " " + label(i), tensor_str(P.at(n)),
                               "m o sigma = " + tensor_str(fn)});
            }
        });
    int ex = 0, top = -1;
    for (std::size_t i = 0; i < exact.size(); ++i) {
        ex += exact[i];
        top = std::max(top, degree[i]);
    }
    rep.note("lambda^0 value exact on " + std::to_string(ex) + " of " + std::to_string(exact.size()) +
             " (vertex, generator) instances; highest lambda-degree " + std::to_string(top));
    return rep;
}

namespace {

// tr(xi X(mu)) = sum_ij xi_ij X(mu)_ji
CommDiffPoly moment_pairing(const RepSpace& R, const MomentDatum& m, const ScalarMatrix& xi) {
    PolyMatrix M(R.N());
    for (const auto& p : m.parts) M += rep_matrix(R, rehome(p, R.q));
    CommDiffPoly t;
    for (int i = 0; i < R.N(); ++i)
        for (int j = 0; j < R.N(); ++j) {
            const Scalar& x = xi[static_cast<std::size_t>(i * R.N() + j)];
            if (sgn(x) != 0) t += M.at(j, i) * x;
        }
    return t;
}

std::string matrix_str(const ScalarMatrix& x, int N) {
    std::string s = "[";
    for (int i = 0; i < N; ++i) {
        if (i) s += "; ";
        for (int j = 0; j < N; ++j) s += (j ? " " : "") + scalar_str(x[static_cast<std::size_t>(i * N + j)]);
    }
    return s + "]";
}

}  // namespace

CheckReport comm_comoment_check(const DPAlgebra& A, const MomentDatum& m, const DimVector& dims) {
    RepSpace R{A.quiver(), dims};
    const Quiver& q = *R.q;
    CommPA P = rep_pa(A, dims);
    RepEquality eq(R);
    auto xs = elementary_block_matrices(dims);
    auto vars = R.vars(0);
    auto label = [&](std::size_t i) {
        return "xi=" + matrix_str(xs[i / vars.size()], R.N()) + "; g=" + var_str(q, vars[i % vars.size()]);
    };
    CheckReport rep = run_cases("comm_comoment:" + A.name() + "@" + dims.str(), 0, xs.size() * vars.size(),
                                Exec::Parallel, label, [&](std::size_t i, CheckReport& part) {
                                    const ScalarMatrix& xi = xs[i / vars.size()];
                                    CommDiffPoly g = CommDiffPoly::var(vars[i % vars.size()]);
                                    CommDiffPoly lhs = P.eval(moment_pairing(R, m, xi), g);
                                    eq.check(part, label(i), q, lhs, gl_act(R, xi, 0, g));
                                });
    if (eq.active()) rep.note("compared modulo X(g)X(g^-1) = 1");
    return rep;
}

CheckReport comm_comoment_jet_check(const DPAlgebra& A, const MomentDatum& m, const DimVector& dims, int cap) {
    if (A.quiver()->has_inverses()) throw InversesNotJettable();
    RepSpace R{A.quiver(), dims};
    const Quiver& q = *R.q;
    CommPVA W = comm_jet(rep_pa(A, dims));
    auto xs = elementary_block_matrices(dims);
    std::vector<CommDiffPoly> fs;
    auto vars = R.vars(cap);
    for (Var v : vars) fs.push_back(CommDiffPoly::var(v));
    // a few products, so the derivation property is exercised
    for (std::size_t i = 0; i < vars.size(); i += 3)
        for (std::size_t j = i; j < vars.size(); j += 5) fs.push_back(CommDiffPoly::var(vars[i]) * CommDiffPoly::var(vars[j]));
    auto label = [&](std::size_t i) {
        return "xi=" + matrix_str(xs[i / fs.size()], R.N()) + "; F=" + cpoly_str(q, fs[i % fs.size()]);
    };
    return run_cases("comm_comoment_jet:" + A.name() + "@" + dims.str(), 0, xs.size() * fs.size(), Exec::Parallel,
                     label, [&](std::size_t i, CheckReport& part) {
                         const ScalarMatrix& xi = xs[i / fs.size()];
                         const CommDiffPoly& F = fs[i % fs.size()];
                         LCPoly lhs = W.eval(moment_pairing(R, m, xi), F);
                         LCPoly rhs;
                         for (int k = 0; k <= F.max_order(); ++k) rhs.add(k, gl_act(R, xi, k, F) * (1 / factorial(k)));
                         if (!(lhs == rhs)) part.fail({label(i), lcpoly_str(q, lhs), lcpoly_str(q, rhs)});
                     });
}

IdealBasis reduction_ideal(const QuiverPtr& qp, const MomentDatum& m, const DimVector& dims, int jets, int degree_cap) {
    RepSpace R{qp, dims};
    IdealBasis b;
    b.degree_cap = degree_cap;
    for (std::size_t s = 0; s < m.parts.size(); ++s) {
        PolyMatrix M = rep_matrix(R, rehome(m.parts[s], qp));
        PolyMatrix Z = projector(R, static_cast<int>(s));
        for (std::size_t t = 0; t < M.a.size(); ++t) {
            CommDiffPoly g = M.a[t] - Z.a[t] * m.zeta[s];
            if (g.is_zero()) continue;
            for (int k = 0; k <= jets; ++k) b.generators.push_back(cdel(g, k));
        }
    }
    b.slice = jets > 0;
    return b;
}

CommDiffPoly reduced_bracket(const CommPA& P, const CommDiffPoly& F, const CommDiffPoly& G, const IdealBasis& b) {
    const IdealBasis& gb = b.status == BasisStatus::Raw ? groebner(b) : b;
    return normal_form(P.eval(F, G), gb.basis);
}

LCPoly reduced_bracket(const CommPVA& W, const CommDiffPoly& F, const CommDiffPoly& G, const IdealBasis& b) {
    IdealBasis gb = b.status == BasisStatus::Raw ? groebner(b) : b;
    return W.eval(F, G).map([&](const CommDiffPoly& c) { return normal_form(c, gb.basis); });
}

CheckReport hamred_commute_check(const DPAlgebra& A, const MomentDatum& m, const DimVector& dims, int cap,
                                 int degree_cap, int word_len, Exec ex) {
    Stopwatch sw;
    const QuiverPtr& qp = A.quiver();
    RepSpace R{qp, dims};
    CommPA P = rep_pa(A, dims);
    DPVAlgebra J = jet_of_dpa(A, 2 * cap + word_len + 2);
    const Quiver& q = *J.quiver();
    CommPVA W = rep_pva(J, dims);
    IdealBasis I0 = groebner(reduction_ideal(qp, m, dims, 0, degree_cap));
    IdealBasis ID = groebner(reduction_ideal(qp, m, dims, 2 * cap, degree_cap));
    std::vector<CommDiffPoly> traces;
    std::vector<std::string> names;
    for (const Word& w : necklaces(*qp, word_len)) {
        CommDiffPoly t = trace(R, nc_word(qp, w));
        if (t.is_constant()) continue;
        traces.push_back(t);
        names.push_back("tr(" + word_str(*qp, w) + ")");
    }
    const auto& gens = I0.generators;
    const std::size_t nt = traces.size(), o = static_cast<std::size_t>(cap + 1);
    const std::size_t n_commute = nt * nt * o * o, n_stable = nt * gens.size() * o * o, n_lift = nt * nt;
    std::vector<std::array<int, 3>> tally(n_commute + n_stable + n_lift, {0, 0, 0});
    auto split = [&](std::size_t i, std::size_t outer) {
        return std::array<std::size_t, 4>{i / (outer * o * o), (i / (o * o)) % outer, (i / o) % o, i % o};
    };
    auto label = [&](std::size_t i) -> std::string {
        if (i < n_commute) {
            auto [x, y, r, s] = split(i, nt);
            return "commute F=" + names[x] + "; G=" + names[y] + "; r=" + std::to_string(r) + "; s=" + std::to_string(s);
        }
        i -= n_commute;
        if (i < n_stable) {
            auto [x, g, r, s] = split(i, gens.size());
            return "stability F=" + names[x] + "; ideal generator " + cpoly_str(q, gens[g]) + "; r=" + std::to_string(r) +
                   "; s=" + std::to_string(s);
        }
        i -= n_stable;
        return "lift change F=" + names[i / nt] + "; G=" + names[i % nt];
    };
    auto record = [&](std::size_t i, CheckReport& part, const std::string& what, const CommDiffPoly& f,
                      const IdealBasis& b) {
        Membership mb = ideal_member(f, b);
        tally[i][static_cast<int>(mb)] += 1;
        if (mb == Membership::No) part.fail({label(i) + " " + what, cpoly_str(q, f), "not in the ideal"});
        if (mb == Membership::Inconclusive)
            part.inconclusive({label(i) + " " + what + " (degree cap " + std::to_string(b.degree_cap) + ", " +
                                   basis_status_str(b.status) + ")",
                               cpoly_str(q, f), "membership undecided"});
    };
    CheckReport rep = run_cases(
        "hamred_commute:" + A.name() + "@" + dims.str(), 0, tally.size(), ex, label,
        [&](std::size_t i, CheckReport& part) {
            if (i < n_commute) {
                auto [x, y, r, s] = split(i, nt);
                // jet, represent, then reduce
                LCPoly l1 = W.eval(cdel(traces[x], static_cast<int>(r)), cdel(traces[y], static_cast<int>(s)));
                // reduce, then take jets of the reduced bracket
                CommDiffPoly red = reduced_bracket(P, traces[x], traces[y], I0);
                LCPoly l2 = clam_sesqui(LCPoly(red), static_cast<int>(r), static_cast<int>(s));
                int top = std::max(l1.degree(), l2.degree());
                for (int n = 0; n <= top; ++n)
                    record(i, part, "lambda^" + std::to_string(n), l1.at(n) - l2.at(n), ID);
                return;
            }
            std::size_t k = i - n_commute;
            if (k < n_stable) {
                auto [x, g, r, s] = split(k, gens.size());
                if (r == 0 && s == 0) record(i, part, "Poisson", P.eval(traces[x], gens[g]), I0);
                LCPoly v = W.eval(cdel(traces[x], static_cast<int>(r)), cdel(gens[g], static_cast<int>(s)));
                for (int n = 0; n <= v.degree(); ++n) record(i, part, "lambda^" + std::to_string(n), v.at(n), ID);
                return;
            }
            k -= n_stable;
            std::size_t x = k / nt, y = k % nt;
            for (const auto& g : gens) {
                CommDiffPoly lifted = traces[x] + g * traces[y];
                record(i, part, "", P.eval(lifted, traces[y]) - P.eval(traces[x], traces[y]), I0);
            }
        });
    int cnt[3] = {0, 0, 0};
    for (const auto& t : tally)
        for (int c = 0; c < 3; ++c) cnt[c] += t[c];
    rep.note("memberships: " + std::to_string(cnt[0]) + " yes, " + std::to_string(cnt[1]) + " no, " +
             std::to_string(cnt[2]) + " inconclusive");
    rep.note(std::string("ideal basis ") + basis_status_str(I0.status) + ", jet slice basis " +
             basis_status_str(ID.status) + " at degree cap " + std::to_string(degree_cap));
    rep.millis = sw.millis();
    return rep;
}

CheckReport appendix_catalog_check() {
    Stopwatch sw;
    CheckReport rep("appendix_catalog");
    DPAlgebra G = make_symp_gl();
    const QuiverPtr& qp = G.quiver();
    const Quiver& q = *qp;
    NCPoly a = nc_letter(qp, make_letter(q.arrow("a"))), b = nc_letter(qp, make_letter(q.arrow("b")));
    NCPoly bi = nc_letter(qp, make_letter(q.arrow("b^-1"))), one = nc_one(qp);
    NCPoly muL = a, muR = Scalar(-1) * (b * a * bi);
    auto cmp = [&](const std::string& what, const Tensor2& l, const Tensor2& r) {
        ++rep.cases;
        if (!(l == r)) rep.fail({what, tensor_str(l), tensor_str(r)});
    };
    cmp("<<mu_L, b>> = b (x) 1", db_eval(G, muL, b), t2_pure(b, one));
    cmp("<<mu_L, a>> = a (x) 1 - 1 (x) a", db_eval(G, muL, a), t2_pure(a, one) - t2_pure(one, a));
    cmp("<<mu_R, b>> = -1 (x) b", db_eval(G, muR, b), Scalar(-1) * t2_pure(one, b));
    cmp("<<mu_R, a>> = 0", db_eval(G, muR, a), Tensor2(qp));
    rep.note("<<mu_R, b>> checked as -1 (x) b, not -b (x) 1");
    // commutative patterns at N = 2
    DimVector d = parse_dims("2");
    RepSpace R{qp, d};
    CommPA P = rep_pa(G, d);
    RepEquality eq(R);
    PolyMatrix XL = rep_matrix(R, muL), XR = rep_matrix(R, muR);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    CommDiffPoly bkl = CommDiffPoly::var(make_var(q.arrow("b"), 0, k, l));
                    std::string idx = std::to_string(i + 1) + std::to_string(j + 1) + "," + std::to_string(k + 1) +
                                      std::to_string(l + 1);
                    CommDiffPoly wantL, wantR;
                    if (i == l) wantL = CommDiffPoly::var(make_var(q.arrow("b"), 0, k, j));
                    if (k == j) wantR = -CommDiffPoly::var(make_var(q.arrow("b"), 0, i, l));
                    ++rep.cases;
                    eq.check(rep, "{(mu_L)_" + idx + "}", q, P.eval(XL.at(i, j), bkl), wantL);
                    ++rep.cases;
                    eq.check(rep, "{(mu_R)_" + idx + "}", q, P.eval(XR.at(i, j), bkl), wantR);
                }
    // the sum is the moment map of the example
    MomentDatum m = make_moment(muL + muR);
    ++rep.cases;
    if (!(m.mu == a - b * a * bi)) rep.fail({"mu_L + mu_R", tensor_str(m.mu), tensor_str(a - b * a * bi)});
    rep.absorb(nc_moment_check(G, m));
    rep.millis = sw.millis();
    return rep;
}

}  // namespace dpva
