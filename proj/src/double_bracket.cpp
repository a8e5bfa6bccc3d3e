#include "dpva/double_bracket.hpp"

#include "dpva/errors.hpp"
#include "dpva/random.hpp"

namespace dpva {

namespace {

// rule for <<g,h>> must live in e_t(h) A e_h(g) (x) e_t(g) A e_h(h)
void check_component(const Quiver& q, int g, int h, const Tensor2& d) {
    const Arrow& G = q.arrow_at(g);
    const Arrow& H = q.arrow_at(h);
    for (const auto& [k, c] : d.terms()) {
        bool ok = word_tail(q, k[0]) == H.tail && word_head(q, k[0]) == G.head &&
                  word_tail(q, k[1]) == G.tail && word_head(q, k[1]) == H.head;
        if (!ok)
            throw Error("rule <<" + G.name + "," + H.name + ">> has a term outside e_t(" + H.name + ")Ae_h(" +
                        G.name + ") (x) e_t(" + G.name + ")Ae_h(" + H.name + "): " + word_str(q, k[0]) +
                        " (x) " + word_str(q, k[1]));
    }
}

}  // namespace

DPAlgebra::DPAlgebra(std::string name, QuiverPtr q, RuleMap rules)
    : name_(std::move(name)), q_(std::move(q)), rules_(std::move(rules)) {
    const Quiver& Q = *q_;
    if (Q.jet()) throw Error("a double Poisson algebra lives on a non-jet quiver");
    Q.validate();
    for (auto& [gh, d] : rules_) {
        auto [g, h] = gh;
        if (g < 0 || h < 0 || g >= Q.num_arrows() || h >= Q.num_arrows())
            throw UnknownArrow("rule on an unknown arrow");
        if (Q.arrow_at(g).is_inverse || Q.arrow_at(h).is_inverse)
            throw Error("rules on inverse arrows are derived, not given");
        d.set_quiver(q_);
        check_component(Q, g, h, d);
    }
    for (const auto& [gh, d] : rules_) {
        auto [g, h] = gh;
        if (g >= h) continue;
        auto it = rules_.find({h, g});
        if (it != rules_.end() && !(d == -t2_sigma(it->second)))
            throw Error("rules <<" + Q.arrow_at(g).name + "," + Q.arrow_at(h).name + ">> and its reverse break cyclic skewsymmetry");
    }

    n_ = Q.num_arrows();
    table_.assign(static_cast<std::size_t>(n_ * n_), Tensor2(q_));
    auto base = [&](int g, int h) { return rule_value(g, h); };
    for (int g = 0; g < n_; ++g)
        for (int h = 0; h < n_; ++h) {
            const Arrow& G = Q.arrow_at(g);
            const Arrow& H = Q.arrow_at(h);
            Tensor2 v(q_);
            auto inv_right = [&](int x, int hinv) {
                // <<x, b^-1>> = - b^-1 <<x,b>> b^-1
                NCPoly bi = nc_letter(q_, make_letter(hinv));
                return -t2_act(bi, base(x, Q.arrow_at(hinv).inverse), bi, ActMode::Outer);
            };
            if (!G.is_inverse && !H.is_inverse) {
                v = base(g, h);
            } else if (H.is_inverse && !G.is_inverse) {
                v = inv_right(g, h);
            } else if (G.is_inverse && !H.is_inverse) {
                v = -t2_sigma(inv_right(h, g));
            } else {
                // <<a^-1, b^-1>> = -(<<b^-1, a^-1>>)^sigma, with <<b^-1,a^-1>> = -a^-1 <<b^-1,a>> a^-1
                NCPoly ai = nc_letter(q_, make_letter(g));
                Tensor2 binv_a = -t2_sigma(inv_right(G.inverse, h));
                Tensor2 binv_ainv = -t2_act(ai, binv_a, ai, ActMode::Outer);
                v = -t2_sigma(binv_ainv);
            }
            v.set_quiver(q_);
            table_[static_cast<std::size_t>(g * n_ + h)] = std::move(v);
        }
}

Tensor2 DPAlgebra::rule_value(int g, int h) const {
    auto it = rules_.find({g, h});
    if (it != rules_.end()) return it->second;
    auto jt = rules_.find({h, g});
    if (jt != rules_.end()) return -t2_sigma(jt->second);
    return Tensor2(q_);
}

const Tensor2& DPAlgebra::letter_bracket(Letter g, Letter h) const {
    return table_[static_cast<std::size_t>(arrow_of(g) * n_ + arrow_of(h))];
}

DPAlgebra::RuleMap double_quiver_rules(const QuiverPtr& qp) {
    const Quiver& q = *qp;
    DPAlgebra::RuleMap rules;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& A = q.arrow_at(a);
        if (A.epsilon != 1) continue;
        rules[{a, A.star}] = t2_pure(qp, Word::idem(A.head), Word::idem(A.tail), Scalar(1));
    }
    return rules;
}

Tensor2 db_eval_words(const DPAlgebra& A, const Word& u, const Word& v) {
    const QuiverPtr& qp = A.quiver();
    const Quiver& q = *qp;
    Tensor2 r(qp);
    // <<u,v>> = sum_{i,j} v_<j d' u_>i (x) u_<i d'' v_>j with d = <<u_i, v_j>>
    for (std::size_t j = 0; j < v.size(); ++j) {
        Word pre_v = subword(q, v, 0, j), suf_v = subword(q, v, j + 1, v.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            const Tensor2& d = A.letter_bracket(u.letters[i], v.letters[j]);
            if (d.is_zero()) continue;
            Word pre_u = subword(q, u, 0, i), suf_u = subword(q, u, i + 1, u.size());
            for (const auto& [k, c] : d.terms()) {
                auto l1 = concat(q, pre_v, k[0]);
                if (!l1) continue;
                auto l2 = concat(q, *l1, suf_u);
                if (!l2) continue;
                auto r1 = concat(q, pre_u, k[1]);
                if (!r1) continue;
                auto r2 = concat(q, *r1, suf_v);
                if (!r2) continue;
                r.add({std::move(*l2), std::move(*r2)}, c);
            }
        }
    }
    return r;
}

Tensor2 db_eval(const DPAlgebra& A, const NCPoly& p, const NCPoly& q) {
    Tensor2 r(A.quiver());
    for (const auto& [ku, cu] : p.terms())
        for (const auto& [kv, cv] : q.terms()) {
            Tensor2 t = db_eval_words(A, ku[0], kv[0]);
            if (!t.is_zero()) r += t * (cu * cv);
        }
    return r;
}

Tensor3 db_ext_left(const DPAlgebra& A, const NCPoly& a, const Tensor2& t) {
    Tensor3 r(A.quiver());
    for (const auto& [k, c] : t.terms()) {
        Tensor2 br = db_eval(A, a, nc_word(A.quiver(), k[0], c));
        r += t2_append(br, nc_word(A.quiver(), k[1]));
    }
    return r;
}

Tensor3 db_ext_right(const DPAlgebra& A, const NCPoly& a, const Tensor2& t) {
    Tensor3 r(A.quiver());
    for (const auto& [k, c] : t.terms()) {
        Tensor2 br = db_eval(A, a, nc_word(A.quiver(), k[1], c));
        r += t2_prepend(nc_word(A.quiver(), k[0]), br);
    }
    return r;
}

Tensor3 db_ext_outer(const DPAlgebra& A, const Tensor2& t, const NCPoly& c) {
    Tensor3 r(A.quiver());
    for (const auto& [k, s] : t.terms()) {
        Tensor2 br = db_eval(A, nc_word(A.quiver(), k[0], s), c);
        r += t2_otimes1(nc_word(A.quiver(), k[1]), br);
    }
    return r;
}

Tensor3 db_jacobiator(const DPAlgebra& A, const NCPoly& a, const NCPoly& b, const NCPoly& c) {
    Tensor3 j = db_ext_left(A, a, db_eval(A, b, c));
    j -= db_ext_right(A, b, db_eval(A, a, c));
    j -= db_ext_outer(A, db_eval(A, a, b), c);
    return j;
}

namespace {

std::string pair_str(const Quiver& q, const Word& a, const Word& b) {
    return "a=" + word_str(q, a) + "; b=" + word_str(q, b);
}

}  // namespace

CheckReport db_check_skew(const DPAlgebra& A, int sample_len, std::uint64_t seed, Exec ex, int samples) {
    Stopwatch sw;
    CheckReport rep("db_check_skew:" + A.name(), seed);
    const QuiverPtr& qp = A.quiver();
    const Quiver& q = *qp;
    std::vector<std::pair<Word, Word>> cases;
    auto letters = all_letters(q);
    for (Letter g : letters)
        for (Letter h : letters) cases.emplace_back(Word::of(q, g), Word::of(q, h));
    std::size_t gen_cases = cases.size();
    Rng rng(seed);
    std::uniform_int_distribution<int> len(1, std::max(1, sample_len));
    for (int s = 0; s < samples; ++s) cases.emplace_back(random_word(q, rng, len(rng)), random_word(q, rng, len(rng)));

    std::vector<CheckReport> parts(cases.size());
    for_each_index(cases.size(), ex, [&](std::size_t i) {
        const auto& [a, b] = cases[i];
        Tensor2 lhs = db_eval_words(A, a, b);
        Tensor2 rhs = -t2_sigma(db_eval_words(A, b, a));
        parts[i].cases = 1;
        if (!(lhs == rhs))
            parts[i].fail({(i < gen_cases ? "generators " : "words ") + pair_str(q, a, b), tensor_str(lhs),
                           tensor_str(rhs)});
    });
    for (const auto& p : parts) rep.absorb(p);
    rep.millis = sw.millis();
    return rep;
}

CheckReport db_check_jacobi(const DPAlgebra& A, std::uint64_t seed, Exec ex, int samples) {
    Stopwatch sw;
    CheckReport rep("db_check_jacobi:" + A.name(), seed);
    const QuiverPtr& qp = A.quiver();
    const Quiver& q = *qp;
    auto letters = all_letters(q);
    std::vector<std::array<Word, 3>> cases;
    for (Letter a : letters)
        for (Letter b : letters)
            for (Letter c : letters) cases.push_back({Word::of(q, a), Word::of(q, b), Word::of(q, c)});
    std::size_t gen_cases = cases.size();
    Rng rng(seed);
    std::uniform_int_distribution<int> len(1, 2);
    for (int s = 0; s < samples; ++s)
        cases.push_back({random_word(q, rng, len(rng)), random_word(q, rng, len(rng)), random_word(q, rng, len(rng))});

    std::vector<CheckReport> parts(cases.size());
    for_each_index(cases.size(), ex, [&](std::size_t i) {
        const auto& t = cases[i];
        Tensor3 j = db_jacobiator(A, nc_word(qp, t[0]), nc_word(qp, t[1]), nc_word(qp, t[2]));
        parts[i].cases = 1;
        if (!j.is_zero())
            parts[i].fail({std::string(i < gen_cases ? "generators " : "words ") + "a=" + word_str(q, t[0]) +
                               "; b=" + word_str(q, t[1]) + "; c=" + word_str(q, t[2]),
                           tensor_str(j), "0"});
    });
    for (const auto& p : parts) rep.absorb(p);
    rep.millis = sw.millis();
    return rep;
}

}  // namespace dpva
