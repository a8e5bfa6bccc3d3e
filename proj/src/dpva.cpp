#include "dpva/dpva.hpp"

#include <functional>
#include <mutex>
#include <unordered_map>

#include "dpva/cases.hpp"
#include "dpva/errors.hpp"
#include "dpva/random.hpp"

namespace dpva {

struct DPVAlgebra::Cache {
    std::mutex m;
    std::unordered_map<std::uint64_t, LTensor2> map;
};

namespace {

void check_component(const Quiver& q, int g, int h, const Tensor2& d) {
    const Arrow& G = q.arrow_at(g);
    const Arrow& H = q.arrow_at(h);
    for (const auto& [k, c] : d.terms()) {
        bool ok = word_tail(q, k[0]) == H.tail && word_head(q, k[0]) == G.head &&
                  word_tail(q, k[1]) == G.tail && word_head(q, k[1]) == H.head;
        if (!ok)
            throw Error("lambda-rule <<" + G.name + "," + H.name + ">> has a term outside its bimodule component: " +
                        word_str(q, k[0]) + " (x) " + word_str(q, k[1]));
    }
}

Tensor2 del_full(const Tensor2& d, int k) { return k == 0 ? d : t2_del(d, DelSide::Full, k); }
NCPoly del_poly(const NCPoly& p, int k) { return k == 0 ? p : apply_del(p, k); }

// d^0 w, d^1 w, ..., d^n w
std::vector<NCPoly> derivs(const QuiverPtr& q, const Word& w, int n) {
    std::vector<NCPoly> out;
    out.push_back(nc_word(q, w));
    for (int k = 1; k <= n; ++k) out.push_back(out.back().is_zero() ? out.back() : apply_del(out.back(), 1));
    return out;
}

LTensor2 rehome_l(LTensor2 P, const QuiverPtr& q) {
    for (int n = 0; n <= P.degree(); ++n) P.mut(n).set_quiver(q);
    return P;
}

}  // namespace

DPVAlgebra::DPVAlgebra(std::string name, QuiverPtr q, RuleMap rules)
    : name_(std::move(name)), q_(std::move(q)), rules_(std::move(rules)), cache_(std::make_shared<Cache>()) {
    const Quiver& Q = *q_;
    Q.validate();
    if (Q.has_inverses()) throw InversesNotJettable();
    for (auto& [gh, P] : rules_) {
        auto [g, h] = gh;
        if (g < 0 || h < 0 || g >= Q.num_arrows() || h >= Q.num_arrows())
            throw UnknownArrow("lambda-rule on an unknown arrow");
        P = rehome_l(std::move(P), q_);
        P.trim();
        for (int n = 0; n <= P.degree(); ++n) check_component(Q, g, h, P.at(n));
    }
    for (const auto& [gh, P] : rules_) {
        auto [g, h] = gh;
        if (g > h) continue;
        auto it = rules_.find({h, g});
        if (it == rules_.end()) continue;
        if (!(P == lb_skew_transform(it->second)))
            throw Error("lambda-rules <<" + Q.arrow_at(g).name + "," + Q.arrow_at(h).name +
                        ">> and its reverse break skewsymmetry");
    }
}

LTensor2 DPVAlgebra::rule_value(int g, int h) const {
    auto it = rules_.find({g, h});
    if (it != rules_.end()) return it->second;
    auto jt = rules_.find({h, g});
    if (jt != rules_.end()) return lb_skew_transform(jt->second);
    return {};
}

LTensor2 DPVAlgebra::letter_bracket(Letter g, Letter h) const {
    std::uint64_t key = (static_cast<std::uint64_t>(g) << 32) | h;
    {
        std::lock_guard<std::mutex> lk(cache_->m);
        auto it = cache_->map.find(key);
        if (it != cache_->map.end()) return it->second;
    }
    LTensor2 v = lb_sesqui(rule_value(arrow_of(g), arrow_of(h)), order_of(g), order_of(h));
    std::lock_guard<std::mutex> lk(cache_->m);
    return cache_->map.emplace(key, std::move(v)).first->second;
}

LTensor2 lb_sesqui(const LTensor2& P, int k, int l) {
    LTensor2 r;
    for (int n = 0; n <= P.degree(); ++n) {
        if (P.at(n).is_zero()) continue;
        for (int t = 0; t <= l; ++t) {
            Tensor2 d = del_full(P.at(n), t);
            if (d.is_zero()) continue;
            d *= binomial(l, t) * ((k % 2) ? Scalar(-1) : Scalar(1));
            r.mut(n + l - t + k) += d;
        }
    }
    r.trim();
    return r;
}

LTensor2 lb_shift_inner(const LTensor2& P, const NCPoly& b, Side side) {
    LTensor2 r;
    for (int n = 0; n <= P.degree(); ++n) {
        const Tensor2& c = P.at(n);
        if (c.is_zero()) continue;
        for (int k = 0; k <= n; ++k) {
            NCPoly db = del_poly(b, k);
            if (db.is_zero()) continue;
            Tensor2 t = side == Side::Right ? t2_act_right(c, db, ActMode::Inner) : t2_act_left(db, c, ActMode::Inner);
            if (t.is_zero()) continue;
            r.mut(n - k) += t * binomial(n, k);
        }
    }
    r.trim();
    return r;
}

LTensor2 lb_skew_transform(const LTensor2& P) {
    LTensor2 r;
    for (int n = 0; n <= P.degree(); ++n) {
        if (P.at(n).is_zero()) continue;
        Tensor2 s = t2_sigma(P.at(n));
        Scalar sign = (n % 2) ? Scalar(1) : Scalar(-1);
        for (int k = 0; k <= n; ++k) {
            Tensor2 d = del_full(s, k);
            if (d.is_zero()) continue;
            r.mut(n - k) += d * (sign * binomial(n, k));
        }
    }
    r.trim();
    return r;
}

std::vector<Tensor2> lb_to_products(const LTensor2& P) {
    std::vector<Tensor2> out;
    for (int n = 0; n <= P.degree(); ++n) out.push_back(P.at(n) * factorial(n));
    return out;
}

LTensor2 products_to_lb(const std::vector<Tensor2>& prods) {
    LTensor2 r;
    for (std::size_t n = 0; n < prods.size(); ++n) {
        if (prods[n].is_zero()) continue;
        r.mut(static_cast<int>(n)) = prods[n] * (Scalar(1) / factorial(static_cast<int>(n)));
    }
    r.trim();
    return r;
}

LTensor2 lb_eval_words(const DPVAlgebra& V, const Word& u, const Word& v) {
    const QuiverPtr& qp = V.quiver();
    const Quiver& q = *qp;
    LTensor2 r;
    // letter u_i against v_j: lambda shifted by d acting on the u-blocks around u_i
    //   sum_{a+b+s=n} n!/(a!b!s!) lambda^a  v_<j c' d^s(u_>i) (x) d^b(u_<i) c'' v_>j
    for (std::size_t j = 0; j < v.size(); ++j) {
        NCPoly pre_v = nc_word(qp, subword(q, v, 0, j));
        NCPoly suf_v = nc_word(qp, subword(q, v, j + 1, v.size()));
        for (std::size_t i = 0; i < u.size(); ++i) {
            LTensor2 P = V.letter_bracket(u.letters[i], v.letters[j]);
            if (P.is_zero()) continue;
            int top = P.degree();
            std::vector<NCPoly> dpre = derivs(qp, subword(q, u, 0, i), top);
            std::vector<NCPoly> dsuf = derivs(qp, subword(q, u, i + 1, u.size()), top);
            for (int n = 0; n <= top; ++n) {
                for (const auto& [k, c] : P.at(n).terms()) {
                    NCPoly left0 = pre_v * nc_word(qp, k[0]);
                    NCPoly right0 = nc_word(qp, k[1]) * suf_v;
                    if (left0.is_zero() || right0.is_zero()) continue;
                    for (int s = 0; s <= n; ++s) {
                        if (dsuf[s].is_zero()) continue;
                        NCPoly left = left0 * dsuf[s];
                        if (left.is_zero()) continue;
                        for (int b = 0; b + s <= n; ++b) {
                            if (dpre[b].is_zero()) continue;
                            NCPoly right = dpre[b] * right0;
                            if (right.is_zero()) continue;
                            int a = n - s - b;
                            Scalar coef = c * factorial(n) / (factorial(a) * factorial(b) * factorial(s));
                            r.mut(a) += t2_pure(left, right) * coef;
                        }
                    }
                }
            }
        }
    }
    for (int n = 0; n <= r.degree(); ++n) r.mut(n).set_quiver(qp);
    r.trim();
    return r;
}

LTensor2 lb_eval(const DPVAlgebra& V, const NCPoly& p, const NCPoly& q) {
    LTensor2 r;
    for (const auto& [ku, cu] : p.terms())
        for (const auto& [kv, cv] : q.terms()) {
            LTensor2 t = lb_eval_words(V, ku[0], kv[0]);
            if (!t.is_zero()) r += (cu * cv) * t;
        }
    return r;
}

LMTensor3 lb_jacobiator(const DPVAlgebra& V, const NCPoly& a, const NCPoly& b, const NCPoly& c) {
    const QuiverPtr& qp = V.quiver();
    LMTensor3 J;
    // <<a_l <<b_m c>>>>_L
    LTensor2 X = lb_eval(V, b, c);
    for (int m = 0; m <= X.degree(); ++m)
        for (const auto& [k, s] : X.at(m).terms()) {
            LTensor2 Y = lb_eval(V, a, nc_word(qp, k[0], s));
            NCPoly tail = nc_word(qp, k[1]);
            for (int n = 0; n <= Y.degree(); ++n) J.add(n, m, t2_append(Y.at(n), tail));
        }
    // - <<b_m <<a_l c>>>>_R
    LTensor2 Y = lb_eval(V, a, c);
    for (int n = 0; n <= Y.degree(); ++n)
        for (const auto& [k, s] : Y.at(n).terms()) {
            LTensor2 Z = lb_eval(V, b, nc_word(qp, k[1], s));
            NCPoly head = nc_word(qp, k[0]);
            for (int m = 0; m <= Z.degree(); ++m)
                if (!Z.at(m).is_zero()) J.mut(n, m) -= t2_prepend(head, Z.at(m));
        }
    // - <<<<a_l b>>_nu c>>_L, nu = l + m:  sum_e sum_j C(e,j) nu^{e-j} R_e' (x) d^j z'' (x) R_e''
    LTensor2 Z = lb_eval(V, a, b);
    for (int n = 0; n <= Z.degree(); ++n)
        for (const auto& [k, s] : Z.at(n).terms()) {
            LTensor2 R = lb_eval(V, nc_word(qp, k[0], s), c);
            if (R.is_zero()) continue;
            std::vector<NCPoly> dz = derivs(qp, k[1], R.degree());
            for (int e = 0; e <= R.degree(); ++e) {
                if (R.at(e).is_zero()) continue;
                for (int j = 0; j <= e; ++j) {
                    if (dz[j].is_zero()) continue;
                    Tensor3 base = t2_otimes1(dz[j], R.at(e));
                    if (base.is_zero()) continue;
                    int f = e - j;
                    for (int t = 0; t <= f; ++t) J.mut(n + t, f - t) -= base * (binomial(e, j) * binomial(f, t));
                }
            }
        }
    J.trim();
    return J;
}

Tensor2 nprod(const DPVAlgebra& V, const NCPoly& a, const NCPoly& b, int n) {
    return lb_eval(V, a, b).at(n) * factorial(n);
}

Tensor3 nprod_ext_left(const DPVAlgebra& V, const NCPoly& a, int n, const Tensor2& t) {
    const QuiverPtr& qp = V.quiver();
    Tensor3 r(qp);
    for (const auto& [k, s] : t.terms()) r += t2_append(nprod(V, a, nc_word(qp, k[0], s), n), nc_word(qp, k[1]));
    return r;
}

Tensor3 nprod_ext_right(const DPVAlgebra& V, const NCPoly& a, int n, const Tensor2& t) {
    const QuiverPtr& qp = V.quiver();
    Tensor3 r(qp);
    for (const auto& [k, s] : t.terms()) r += t2_prepend(nc_word(qp, k[0]), nprod(V, a, nc_word(qp, k[1], s), n));
    return r;
}

Tensor3 nprod_ext_outer(const DPVAlgebra& V, const Tensor2& t, int n, const NCPoly& c) {
    const QuiverPtr& qp = V.quiver();
    Tensor3 r(qp);
    for (const auto& [k, s] : t.terms()) {
        LTensor2 L = lb_eval(V, nc_word(qp, k[0], s), c);
        if (L.degree() < n) continue;
        std::vector<NCPoly> dz = derivs(qp, k[1], L.degree() - n);
        for (int p = n; p <= L.degree(); ++p) {
            int j = p - n;
            if (L.at(p).is_zero() || dz[j].is_zero()) continue;
            r += t2_otimes1(dz[j], L.at(p)) * (factorial(p) / factorial(j));
        }
    }
    return r;
}

AltJacobiDefects nprod_jacobi_defects(const DPVAlgebra& V, const NCPoly& a, const NCPoly& b, const NCPoly& c,
                                      int m, int n) {
    const QuiverPtr& qp = V.quiver();
    Tensor3 lhs = nprod_ext_left(V, a, m, nprod(V, b, c, n));
    lhs -= nprod_ext_right(V, b, n, nprod(V, a, c, m));
    AltJacobiDefects d{lhs, lhs};
    d.plain.set_quiver(qp);
    d.equiv.set_quiver(qp);
    LTensor2 ab = lb_eval(V, a, b), ba = lb_eval(V, b, a);
    for (int i = 0; i <= m; ++i) {
        if (ab.at(i).is_zero()) continue;
        d.plain -= nprod_ext_outer(V, ab.at(i) * factorial(i), m + n - i, c) * binomial(m, i);
    }
    for (int j = 0; j <= n; ++j) {
        if (ba.at(j).is_zero()) continue;
        d.equiv += nprod_ext_outer(V, t2_sigma(ba.at(j) * factorial(j)), m + n - j, c) * binomial(n, j);
    }
    return d;
}

std::vector<Triple> generator_triples(const DPVAlgebra& V) {
    const QuiverPtr& qp = V.quiver();
    auto letters = all_letters(*qp, 0);
    std::vector<Triple> out;
    for (Letter x : letters)
        for (Letter y : letters)
            for (Letter z : letters) out.push_back({nc_letter(qp, x), nc_letter(qp, y), nc_letter(qp, z)});
    return out;
}

namespace {

std::string lstr(const LTensor2& P) {
    if (P.is_zero()) return "0";
    std::string s;
    for (int n = 0; n <= P.degree(); ++n) {
        if (P.at(n).is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + tensor_str(P.at(n)) + ")";
        if (n > 0) s += " l^" + std::to_string(n);
    }
    return s;
}

std::string lmstr(const LMTensor3& J) {
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

std::vector<std::pair<Word, Word>> pair_cases(const Quiver& q, std::uint64_t seed, int samples, int gen_order) {
    std::vector<std::pair<Word, Word>> cases;
    auto letters = all_letters(q, gen_order);
    for (Letter g : letters)
        for (Letter h : letters) cases.emplace_back(Word::of(q, g), Word::of(q, h));
    Rng rng(seed);
    std::uniform_int_distribution<int> len(1, 2);
    int ord = q.jet() ? 1 : 0;
    for (int s = 0; s < samples; ++s)
        cases.emplace_back(random_word(q, rng, len(rng), ord), random_word(q, rng, len(rng), ord));
    return cases;
}

}  // namespace

CheckReport nprod_jacobi_alt_check(const DPVAlgebra& V, const std::vector<Triple>& triples, int max_mn, Exec ex) {
    const int span = max_mn + 1;
    std::vector<int> nonzero(triples.size() * span * span, 0);
    auto label = [&](std::size_t idx) {
        std::size_t t = idx / (span * span), mn = idx % (span * span);
        return "a=" + tensor_str(triples[t][0]) + "; b=" + tensor_str(triples[t][1]) + "; c=" +
               tensor_str(triples[t][2]) + "; m=" + std::to_string(mn / span) + "; n=" + std::to_string(mn % span);
    };
    CheckReport rep = run_cases("nprod_jacobi_alt:" + V.name(), 0, nonzero.size(), ex, label,
                                [&](std::size_t idx, CheckReport& part) {
                                    std::size_t t = idx / (span * span), mn = idx % (span * span);
                                    int m = static_cast<int>(mn / span), n = static_cast<int>(mn % span);
                                    auto d = nprod_jacobi_defects(V, triples[t][0], triples[t][1], triples[t][2], m, n);
                                    if (!(d.plain == d.equiv))
                                        part.fail({label(idx), tensor_str(d.plain), tensor_str(d.equiv)});
                                    else if (!d.plain.is_zero())
                                        nonzero[idx] = 1;
                                });
    std::size_t nz = 0;
    for (int x : nonzero) nz += x;
    rep.note(nz == 0 ? "both forms vanish on every case"
                     : "both forms agree; nonzero defect in " + std::to_string(nz) + " case(s)");
    return rep;
}

CheckReport dpva_check_sesqui(const DPVAlgebra& V, std::uint64_t seed, Exec ex, int samples) {
    const QuiverPtr& qp = V.quiver();
    const Quiver& q = *qp;
    auto cases = pair_cases(q, seed, samples, q.jet() ? 1 : 0);
    auto label = [&](std::size_t i) { return "a=" + word_str(q, cases[i].first) + "; b=" + word_str(q, cases[i].second); };
    return run_cases("dpva_sesqui:" + V.name(), seed, cases.size(), ex, label, [&](std::size_t i, CheckReport& part) {
        NCPoly a = nc_word(qp, cases[i].first), b = nc_word(qp, cases[i].second);
        LTensor2 P = lb_eval(V, a, b);
        LTensor2 l1 = lb_eval(V, apply_del(a, 1), b), r1 = lb_sesqui(P, 1, 0);
        if (!(l1 == r1)) part.fail({"first slot " + label(i), lstr(l1), lstr(r1)});
        LTensor2 l2 = lb_eval(V, a, apply_del(b, 1)), r2 = lb_sesqui(P, 0, 1);
        if (!(l2 == r2)) part.fail({"second slot " + label(i), lstr(l2), lstr(r2)});
    });
}

CheckReport dpva_check_skew(const DPVAlgebra& V, std::uint64_t seed, Exec ex, int samples) {
    const QuiverPtr& qp = V.quiver();
    const Quiver& q = *qp;
    auto cases = pair_cases(q, seed, samples, 0);
    auto label = [&](std::size_t i) { return "a=" + word_str(q, cases[i].first) + "; b=" + word_str(q, cases[i].second); };
    return run_cases("dpva_skew:" + V.name(), seed, cases.size(), ex, label, [&](std::size_t i, CheckReport& part) {
        LTensor2 lhs = lb_eval_words(V, cases[i].first, cases[i].second);
        LTensor2 rhs = lb_skew_transform(lb_eval_words(V, cases[i].second, cases[i].first));
        if (!(lhs == rhs)) part.fail({label(i), lstr(lhs), lstr(rhs)});
    });
}

CheckReport dpva_check_jacobi(const DPVAlgebra& V, std::uint64_t seed, Exec ex, int samples) {
    const QuiverPtr& qp = V.quiver();
    const Quiver& q = *qp;
    std::vector<std::array<Word, 3>> cases;
    auto letters = all_letters(q, 0);
    for (Letter a : letters)
        for (Letter b : letters)
            for (Letter c : letters) cases.push_back({Word::of(q, a), Word::of(q, b), Word::of(q, c)});
    Rng rng(seed);
    std::uniform_int_distribution<int> len(1, 2);
    int ord = q.jet() ? 1 : 0;
    for (int s = 0; s < samples; ++s)
        cases.push_back({random_word(q, rng, len(rng), ord), random_word(q, rng, len(rng), ord),
                         random_word(q, rng, len(rng), ord)});
    auto label = [&](std::size_t i) {
        return "a=" + word_str(q, cases[i][0]) + "; b=" + word_str(q, cases[i][1]) + "; c=" + word_str(q, cases[i][2]);
    };
    return run_cases("dpva_jacobi:" + V.name(), seed, cases.size(), ex, label, [&](std::size_t i, CheckReport& part) {
        const auto& t = cases[i];
        LMTensor3 J = lb_jacobiator(V, nc_word(qp, t[0]), nc_word(qp, t[1]), nc_word(qp, t[2]));
        if (!J.is_zero()) part.fail({label(i), lmstr(J), "0"});
    });
}

CheckReport dpva_check(const DPVAlgebra& V, std::uint64_t seed, Exec ex) {
    Stopwatch sw;
    CheckReport rep("dpva_check:" + V.name(), seed);
    for (auto sub : {dpva_check_sesqui(V, seed, ex), dpva_check_skew(V, seed, ex), dpva_check_jacobi(V, seed, ex)}) {
        rep.note(sub.check + ": " + verdict_str(sub.verdict));
        rep.absorb(sub);
    }
    rep.millis = sw.millis();
    return rep;
}

}  // namespace dpva
