#include "dpva/h0.hpp"

#include <set>

#include "dpva/cases.hpp"
#include "dpva/errors.hpp"
#include "dpva/groebner.hpp"
#include "dpva/jet_functor.hpp"
#include "dpva/random.hpp"

namespace dpva {

namespace {

// Booth: start index of the lexicographically least rotation
std::size_t least_rotation(const Letters& s) {
    const long n = static_cast<long>(s.size());
    std::vector<long> f(static_cast<std::size_t>(2 * n), -1);
    long k = 0;
    for (long j = 1; j < 2 * n; ++j) {
        Letter sj = s[j % n];
        long i = f[j - k - 1];
        while (i != -1 && sj != s[(k + i + 1) % n]) {
            if (sj < s[(k + i + 1) % n]) k = j - i - 1;
            i = f[i];
        }
        if (sj != s[(k + i + 1) % n]) {
            if (sj < s[k % n]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return static_cast<std::size_t>(k % n);
}

}  // namespace

Word necklace_of(const Quiver& q, const Word& w) {
    if (!is_closed(q, w)) throw Error("necklace of an open path: " + word_str(q, w));
    if (w.empty()) return w;
    Letters s = w.letters;
    int anchor = q.tail(s.front());
    std::size_t lo = 0, hi = s.size();
    while (hi - lo >= 2 && q.cancels(s[hi - 1], s[lo])) {
        anchor = q.tail(s[lo + 1]);
        ++lo;
        --hi;
    }
    if (lo == hi) return Word::idem(anchor);
    Letters core(s.begin() + static_cast<long>(lo), s.begin() + static_cast<long>(hi));
    std::size_t k = least_rotation(core);
    Word r{q.tail(core[k]), {}};
    for (std::size_t t = 0; t < core.size(); ++t) r.letters.push_back(core[(k + t) % core.size()]);
    return r;
}

H0Elem h0_project(const NCPoly& p) {
    H0Elem r(p.quiver());
    if (!p.quiver()) return r;
    const Quiver& q = *p.quiver();
    for (const auto& [k, c] : p.terms())
        if (is_closed(q, k[0])) r.add({necklace_of(q, k[0])}, c);
    return r;
}

H0Elem h0_del(const H0Elem& h, int k) { return h0_project(apply_del(h, k)); }

LH0 h0_sesqui(const LH0& P, int k, int l) {
    LH0 r;
    Scalar sk = (k % 2) ? Scalar(-1) : Scalar(1);
    for (int n = 0; n <= P.degree(); ++n) {
        if (P.at(n).is_zero()) continue;
        for (int t = 0; t <= l; ++t) {
            H0Elem d = h0_del(P.at(n), t);
            if (d.is_zero()) continue;
            r.mut(n + l - t + k) += (binomial(l, t) * sk) * d;
        }
    }
    r.trim();
    return r;
}

H0Elem h0_lie(const DPAlgebra& A, const NCPoly& x, const NCPoly& y) {
    return h0_project(t2_fuse(db_eval(A, x, y), Twist::Plain));
}

LH0 h0v_lie(const DPVAlgebra& V, const NCPoly& x, const NCPoly& y) {
    return lb_eval(V, x, y).map([](const Tensor2& t) { return h0_project(t2_fuse(t, Twist::Plain)); });
}

CommDiffPoly trace_of_h0(const RepSpace& R, const H0Elem& h) { return trace(R, h); }

LCPoly trace_of_h0(const RepSpace& R, const LH0& h) {
    return h.map([&](const H0Elem& c) { return trace(R, c); });
}

std::vector<Word> necklaces(const Quiver& q, int max_len, int max_order, bool with_idems) {
    std::set<Word> seen;
    std::vector<Word> out;
    for (const Word& w : all_words(q, max_len, true, max_order, with_idems)) {
        Word n = necklace_of(q, w);
        if (seen.insert(n).second) out.push_back(n);
    }
    return out;
}

std::string lh0_str(const LH0& h) {
    if (h.is_zero()) return "0";
    std::string s;
    for (int n = 0; n <= h.degree(); ++n) {
        if (h.at(n).is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + tensor_str(h.at(n)) + ")";
        if (n > 0) s += " l^" + std::to_string(n);
    }
    return s;
}

namespace {

std::string wstr(const Quiver& q, const Word& w) { return word_str(q, w); }

// -sum_n (-1)^n sum_k C(n,k) lambda^{n-k} d^k c_n
LH0 h0_skew(const LH0& P) {
    LH0 r;
    for (int n = 0; n <= P.degree(); ++n) {
        if (P.at(n).is_zero()) continue;
        Scalar sn = (n % 2) ? Scalar(1) : Scalar(-1);
        for (int k = 0; k <= n; ++k) r.mut(n - k) += (sn * binomial(n, k)) * h0_del(P.at(n), k);
    }
    r.trim();
    return r;
}

std::string lmh0_str(const LMH0& J) {
    if (J.is_zero()) return "0";
    std::string s;
    for (int i = 0; i <= J.lambda_degree(); ++i)
        for (int j = 0; j <= J.mu_degree(); ++j) {
            if (J.at(i, j).is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + tensor_str(J.at(i, j)) + ") l^" + std::to_string(i) + " m^" + std::to_string(j);
        }
    return s;
}

// [a_l [b_m c]] - [b_m [a_l c]] - [[a_l b]_{l+m} c]
LMH0 h0v_jacobiator(const DPVAlgebra& V, const NCPoly& a, const NCPoly& b, const NCPoly& c) {
    LMH0 J;
    LH0 bc = h0v_lie(V, b, c);
    for (int j = 0; j <= bc.degree(); ++j) {
        if (bc.at(j).is_zero()) continue;
        LH0 t = h0v_lie(V, a, bc.at(j));
        for (int i = 0; i <= t.degree(); ++i) J.add(i, j, t.at(i));
    }
    LH0 ac = h0v_lie(V, a, c);
    for (int i = 0; i <= ac.degree(); ++i) {
        if (ac.at(i).is_zero()) continue;
        LH0 t = h0v_lie(V, b, ac.at(i));
        for (int j = 0; j <= t.degree(); ++j) J.add(i, j, -t.at(j));
    }
    LH0 ab = h0v_lie(V, a, b);
    for (int e = 0; e <= ab.degree(); ++e) {
        if (ab.at(e).is_zero()) continue;
        LH0 t = h0v_lie(V, ab.at(e), c);
        for (int f = 0; f <= t.degree(); ++f)
            for (int s = 0; s <= f; ++s) J.add(e + s, f - s, Scalar(-binomial(f, s)) * t.at(f));
    }
    J.trim();
    return J;
}

NCPoly lift(const QuiverPtr& q, const Word& w) { return nc_word(q, w); }

}  // namespace

CheckReport h0_axioms_check(const DPAlgebra& A, int max_len, Exec ex) {
    const QuiverPtr& qp = A.quiver();
    const Quiver& q = *qp;
    auto ns = necklaces(q, max_len, 0, true);
    const std::size_t n = ns.size();
    auto label = [&](std::size_t idx) {
        std::size_t i = idx / (n * n), j = (idx / n) % n, k = idx % n;
        return "x=" + wstr(q, ns[i]) + "; y=" + wstr(q, ns[j]) + "; z=" + wstr(q, ns[k]);
    };
    CheckReport rep = run_cases("h0_axioms:" + A.name(), 0, n * n * n, ex, label, [&](std::size_t idx, CheckReport& part) {
        std::size_t i = idx / (n * n), j = (idx / n) % n, k = idx % n;
        NCPoly x = lift(qp, ns[i]), y = lift(qp, ns[j]), z = lift(qp, ns[k]);
        if (k == 0) {
            H0Elem s = h0_lie(A, x, y) + h0_lie(A, y, x);
            if (!s.is_zero()) part.fail({"antisymmetry x=" + wstr(q, ns[i]) + "; y=" + wstr(q, ns[j]), tensor_str(s), "0"});
        }
        if (i > j || j > k) return;  // Jacobi is symmetric up to sign
        H0Elem jac = h0_lie(A, x, h0_lie(A, y, z)) + h0_lie(A, y, h0_lie(A, z, x)) + h0_lie(A, z, h0_lie(A, x, y));
        if (!jac.is_zero()) part.fail({"Jacobi " + label(idx), tensor_str(jac), "0"});
    });
    return rep;
}

CheckReport h0v_axioms_check(const DPVAlgebra& V, int max_len, int max_order, Exec ex) {
    const QuiverPtr& qp = V.quiver();
    const Quiver& q = *qp;
    auto ns = necklaces(q, max_len, V.has_derivation() ? max_order : 0, true);
    const std::size_t n = ns.size();
    auto label = [&](std::size_t idx) {
        std::size_t i = idx / (n * n), j = (idx / n) % n, k = idx % n;
        return "a=" + wstr(q, ns[i]) + "; b=" + wstr(q, ns[j]) + "; c=" + wstr(q, ns[k]);
    };
    std::vector<int> nz(n * n * n, 0);
    CheckReport rep = run_cases("h0v_axioms:" + V.name(), 0, n * n * n, ex, label, [&](std::size_t idx, CheckReport& part) {
        std::size_t i = idx / (n * n), j = (idx / n) % n, k = idx % n;
        NCPoly a = lift(qp, ns[i]), b = lift(qp, ns[j]), c = lift(qp, ns[k]);
        if (k == 0) {
            std::string pl = "a=" + wstr(q, ns[i]) + "; b=" + wstr(q, ns[j]);
            LH0 P = h0v_lie(V, a, b);
            if (V.has_derivation()) {
                LH0 l1 = h0v_lie(V, apply_del(a), b), r1 = h0_sesqui(P, 1, 0);
                if (!(l1 == r1)) part.fail({"sesquilinearity (first) " + pl, lh0_str(l1), lh0_str(r1)});
                LH0 l2 = h0v_lie(V, a, apply_del(b)), r2 = h0_sesqui(P, 0, 1);
                if (!(l2 == r2)) part.fail({"sesquilinearity (second) " + pl, lh0_str(l2), lh0_str(r2)});
            }
            LH0 l3 = h0v_lie(V, b, a), r3 = h0_skew(P);
            if (!(l3 == r3)) part.fail({"skewsymmetry " + pl, lh0_str(l3), lh0_str(r3)});
        }
        LMH0 J = h0v_jacobiator(V, a, b, c);
        if (!J.is_zero()) part.fail({"Jacobi " + label(idx), lmh0_str(J), "0"});
        if (!h0v_lie(V, b, c).is_zero() || !h0v_lie(V, a, c).is_zero()) nz[idx] = 1;
    });
    std::size_t cnt = 0;
    for (int v : nz) cnt += v;
    rep.note(std::to_string(n) + " necklaces; " + std::to_string(cnt) + " of " + std::to_string(nz.size()) +
             " Jacobi triples have a nonzero inner bracket");
    return rep;
}

// ---------- faces ----------

namespace {

int jet_cap_for(int cap, int word_len) { return 2 * cap + word_len + 2; }

}  // namespace

CheckReport face_front_check(const DPAlgebra& A, const DimVector& dims, int word_len, Exec ex) {
    const QuiverPtr& qp = A.quiver();
    const Quiver& q = *qp;
    RepSpace R{qp, dims};
    CommPA P = rep_pa(A, dims);
    RepEquality cmp(R);
    auto ws = all_words(q, word_len, true, 0, true);
    const std::size_t n = ws.size();
    auto label = [&](std::size_t idx) { return "x=" + wstr(q, ws[idx / n]) + "; y=" + wstr(q, ws[idx % n]); };
    CheckReport rep = run_cases("face_front:" + A.name() + "@" + dims.str(), 0, n * n, ex, label,
                                [&](std::size_t idx, CheckReport& part) {
                                    NCPoly x = lift(qp, ws[idx / n]), y = lift(qp, ws[idx % n]);
                                    CommDiffPoly l = P.eval(trace(R, x), trace(R, y));
                                    CommDiffPoly r = trace_of_h0(R, h0_lie(A, x, y));
                                    cmp.check(part, label(idx), q, l, r);
                                });
    if (cmp.active())
        rep.note("compared modulo X(g)X(g^-1) = 1; relation basis " + std::string(basis_status_str(cmp.basis().status)));
    return rep;
}

CheckReport face_left_check(const DPAlgebra& A, int cap, int word_len, Exec ex) {
    DPVAlgebra J = jet_of_dpa(A, jet_cap_for(cap, word_len));
    const QuiverPtr& jq = J.quiver();
    const Quiver& q = *jq;
    auto ns = necklaces(*A.quiver(), word_len, 0, true);
    const std::size_t n = ns.size(), o = static_cast<std::size_t>(cap + 1);
    auto label = [&](std::size_t idx) {
        std::size_t ab = idx / (o * o), rs = idx % (o * o);
        return "a=" + wstr(q, ns[ab / n]) + "; b=" + wstr(q, ns[ab % n]) + "; r=" + std::to_string(rs / o) +
               "; s=" + std::to_string(rs % o);
    };
    std::vector<H0Elem> base(n * n);
    for_each_index(base.size(), ex, [&](std::size_t ab) {
        base[ab] = rehome(h0_lie(A, lift(A.quiver(), ns[ab / n]), lift(A.quiver(), ns[ab % n])), jq);
    });
    return run_cases("face_left:" + A.name(), 0, n * n * o * o, ex, label, [&](std::size_t idx, CheckReport& part) {
        std::size_t ab = idx / (o * o), rs = idx % (o * o);
        int r = static_cast<int>(rs / o), s = static_cast<int>(rs % o);
        NCPoly a = lift(jq, ns[ab / n]), b = lift(jq, ns[ab % n]);
        LH0 lhs = h0v_lie(J, apply_del(a, r), apply_del(b, s));
        LH0 rhs = h0_sesqui(LH0(base[ab]), r, s);
        if (!(lhs == rhs)) part.fail({label(idx), lh0_str(lhs), lh0_str(rhs)});
    });
}

CheckReport face_bottom_check(const DPAlgebra& A, const DimVector& dims, int cap, int word_len, Exec ex) {
    DPVAlgebra J = jet_of_dpa(A, jet_cap_for(cap, word_len));
    const QuiverPtr& jq = J.quiver();
    const Quiver& q = *jq;
    RepSpace RA{A.quiver(), dims}, RJ{jq, dims};
    CommPA P = rep_pa(A, dims);
    CommPVA W = comm_jet(P);
    auto ns = necklaces(*A.quiver(), word_len, 0, true);
    const std::size_t n = ns.size(), o = static_cast<std::size_t>(cap + 1);
    auto label = [&](std::size_t idx) {
        std::size_t ab = idx / (o * o), rs = idx % (o * o);
        return "a=" + wstr(q, ns[ab / n]) + "; b=" + wstr(q, ns[ab % n]) + "; r=" + std::to_string(rs / o) +
               "; s=" + std::to_string(rs % o);
    };
    return run_cases("face_bottom:" + A.name() + "@" + dims.str(), 0, n * n * o * o, ex, label,
                     [&](std::size_t idx, CheckReport& part) {
                         std::size_t ab = idx / (o * o), rs = idx % (o * o);
                         int r = static_cast<int>(rs / o), s = static_cast<int>(rs % o);
                         NCPoly a = lift(jq, ns[ab / n]), b = lift(jq, ns[ab % n]);
                         // trace rule on the vertex H0 side
                         LCPoly lhs = trace_of_h0(RJ, h0v_lie(J, apply_del(a, r), apply_del(b, s)));
                         CommDiffPoly ta = trace(RA, lift(A.quiver(), ns[ab / n]));
                         CommDiffPoly tb = trace(RA, lift(A.quiver(), ns[ab % n]));
                         LCPoly scaled = clam_sesqui(LCPoly(P.eval(ta, tb)), r, s);
                         LCPoly jet_route = W.eval(cdel(ta, r), cdel(tb, s));
                         if (!(lhs == scaled))
                             part.fail({"scaled " + label(idx), lcpoly_str(q, lhs), lcpoly_str(q, scaled)});
                         if (!(lhs == jet_route))
                             part.fail({"jet route " + label(idx), lcpoly_str(q, lhs), lcpoly_str(q, jet_route)});
                     });
}

CheckReport face_back_check(const DPAlgebra& A, const DimVector& dims, int cap, int word_len, Exec ex) {
    DPVAlgebra J = jet_of_dpa(A, jet_cap_for(cap, word_len));
    const QuiverPtr& jq = J.quiver();
    const Quiver& q = *jq;
    RepSpace RJ{jq, dims};
    CommPVA W = rep_pva(J, dims);
    auto ns = necklaces(*A.quiver(), word_len, 0, true);
    const std::size_t n = ns.size(), o = static_cast<std::size_t>(cap + 1);
    auto label = [&](std::size_t idx) {
        std::size_t ab = idx / (o * o), rs = idx % (o * o);
        return "a=" + wstr(q, ns[ab / n]) + "; b=" + wstr(q, ns[ab % n]) + "; r=" + std::to_string(rs / o) +
               "; s=" + std::to_string(rs % o);
    };
    return run_cases("face_back:" + A.name() + "@" + dims.str(), 0, n * n * o * o, ex, label,
                     [&](std::size_t idx, CheckReport& part) {
                         std::size_t ab = idx / (o * o), rs = idx % (o * o);
                         int r = static_cast<int>(rs / o), s = static_cast<int>(rs % o);
                         NCPoly a = apply_del(lift(jq, ns[ab / n]), r), b = apply_del(lift(jq, ns[ab % n]), s);
                         LCPoly lhs = W.eval(trace(RJ, a), trace(RJ, b));
                         LCPoly rhs = trace_of_h0(RJ, h0v_lie(J, a, b));
                         if (!(lhs == rhs)) part.fail({label(idx), lcpoly_str(q, lhs), lcpoly_str(q, rhs)});
                     });
}

// ---------- lift independence ----------

namespace {

NCPoly random_closed(const QuiverPtr& qp, const std::vector<Word>& closed, Rng& rng) {
    NCPoly x(qp);
    std::uniform_int_distribution<std::size_t> pick(0, closed.size() - 1);
    for (int t = 0; t < 3; ++t) x += nc_word(qp, closed[pick(rng)], random_scalar(rng));
    return x;
}

}  // namespace

CheckReport lift_independence_check(const DPAlgebra& A, std::uint64_t seed, int samples) {
    const QuiverPtr& qp = A.quiver();
    auto closed = all_words(*qp, 3, true);
    auto label = [&](std::size_t i) { return "sample " + std::to_string(i); };
    return run_cases("lift_independence:" + A.name(), seed, static_cast<std::size_t>(samples), Exec::Serial, label,
                     [&](std::size_t i, CheckReport& part) {
                         Rng rng(seed * 7919u + i);
                         NCPoly x = random_closed(qp, closed, rng), y = random_closed(qp, closed, rng);
                         NCPoly p = random_poly(qp, rng, 2, 2), r = random_poly(qp, rng, 2, 2);
                         NCPoly c = p * r - r * p;
                         std::string in = "x=" + tensor_str(x) + "; y=" + tensor_str(y) + "; c=" + tensor_str(c);
                         H0Elem base = h0_lie(A, x, y);
                         H0Elem s1 = h0_lie(A, x + c, y), s2 = h0_lie(A, x, y + c);
                         if (!(s1 == base)) part.fail({"slot 1 " + in, tensor_str(s1), tensor_str(base)});
                         if (!(s2 == base)) part.fail({"slot 2 " + in, tensor_str(s2), tensor_str(base)});
                     });
}

CheckReport lift_independence_check(const DPVAlgebra& V, std::uint64_t seed, int samples) {
    const QuiverPtr& qp = V.quiver();
    int ord = V.has_derivation() ? 1 : 0;
    auto closed = all_words(*qp, 3, true, ord);
    auto label = [&](std::size_t i) { return "sample " + std::to_string(i); };
    return run_cases("lift_independence:" + V.name(), seed, static_cast<std::size_t>(samples), Exec::Serial, label,
                     [&](std::size_t i, CheckReport& part) {
                         Rng rng(seed * 7919u + i);
                         NCPoly x = random_closed(qp, closed, rng), y = random_closed(qp, closed, rng);
                         NCPoly p = random_poly(qp, rng, 2, 2, ord), r = random_poly(qp, rng, 2, 2, ord);
                         NCPoly c = p * r - r * p;
                         std::string in = "x=" + tensor_str(x) + "; y=" + tensor_str(y) + "; c=" + tensor_str(c);
                         LH0 base = h0v_lie(V, x, y);
                         LH0 s1 = h0v_lie(V, x + c, y), s2 = h0v_lie(V, x, y + c);
                         if (!(s1 == base)) part.fail({"slot 1 " + in, lh0_str(s1), lh0_str(base)});
                         if (!(s2 == base)) part.fail({"slot 2 " + in, lh0_str(s2), lh0_str(base)});
                     });
}

}  // namespace dpva
