#include "dpva/groebner.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>

namespace dpva {

using Mono = CommDiffPoly::Mono;

bool grevlex_less(const Mono& a, const Mono& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    // walk from the smallest variable; the first one with a larger exponent loses
    auto ia = a.rbegin(), ib = b.rbegin();
    for (; ia != a.rend(); ++ia, ++ib)
        if (*ia != *ib) return *ia > *ib;
    return false;
}

const char* basis_status_str(BasisStatus s) {
    switch (s) {
        case BasisStatus::Raw: return "raw";
        case BasisStatus::Exact: return "exact";
        case BasisStatus::Truncated: return "truncated";
    }
    return "?";
}

const char* membership_str(Membership m) {
    switch (m) {
        case Membership::Yes: return "yes";
        case Membership::No: return "no";
        case Membership::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

struct Greater {
    bool operator()(const Mono& a, const Mono& b) const { return grevlex_less(b, a); }
};
using GPoly = std::map<Mono, Scalar, Greater>;

GPoly to_g(const CommDiffPoly& p) {
    GPoly g;
    for (const auto& [m, c] : p.terms()) g.emplace(m, c);
    return g;
}

CommDiffPoly from_g(const GPoly& g) {
    CommDiffPoly p;
    for (const auto& [m, c] : g) p.add(m, c);
    return p;
}

bool divides(const Mono& a, const Mono& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Mono mono_div(const Mono& b, const Mono& a) {
    Mono r;
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(r));
    return r;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool coprime(const Mono& a, const Mono& b) {
    auto i = a.begin(), j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return false;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return true;
}

// p -= c * m * g
void sub_mul(GPoly& p, const Scalar& c, const Mono& m, const GPoly& g) {
    for (const auto& [gm, gc] : g) {
        Mono t = mono_mul(m, gm);
        auto [it, fresh] = p.try_emplace(std::move(t), -c * gc);
        if (!fresh) {
            it->second -= c * gc;
            if (sgn(it->second) == 0) p.erase(it);
        }
    }
}

void make_monic(GPoly& g) {
    if (g.empty()) return;
    Scalar inv = 1 / g.begin()->second;
    for (auto& kv : g) kv.second *= inv;
}

GPoly reduce(GPoly p, const std::vector<GPoly>& G, std::size_t skip = static_cast<std::size_t>(-1)) {
    GPoly r;
    while (!p.empty()) {
        auto lead = p.begin();
        const GPoly* div = nullptr;
        for (std::size_t i = 0; i < G.size(); ++i) {
            if (i == skip || G[i].empty()) continue;
            if (divides(G[i].begin()->first, lead->first)) {
                div = &G[i];
                break;
            }
        }
        if (!div) {
            r.insert(*lead);
            p.erase(lead);
            continue;
        }
        Mono q = mono_div(lead->first, div->begin()->first);
        Scalar c = lead->second;  // divisor is monic
        sub_mul(p, c, q, *div);
    }
    return r;
}

}  // namespace

CommDiffPoly normal_form(const CommDiffPoly& f, const std::vector<CommDiffPoly>& basis) {
    std::vector<GPoly> G;
    G.reserve(basis.size());
    for (const auto& b : basis) {
        G.push_back(to_g(b));
        make_monic(G.back());
    }
    return from_g(reduce(to_g(f), G));
}

IdealBasis groebner(IdealBasis b) {
    std::vector<GPoly> G;
    for (const auto& g : b.generators) {
        GPoly r = reduce(to_g(g), G);
        if (r.empty()) continue;
        make_monic(r);
        G.push_back(std::move(r));
    }
    using Pair = std::pair<std::size_t, std::size_t>;
    std::set<Pair> pending;
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});
    bool truncated = false;
    auto lm = [&](std::size_t i) -> const Mono& { return G[i].begin()->first; };
    auto treated = [&](std::size_t x, std::size_t y) {
        Pair p{std::min(x, y), std::max(x, y)};
        return !pending.count(p);
    };
    while (!pending.empty()) {
        // normal strategy: smallest lcm first
        auto best = pending.begin();
        Mono best_l = mono_lcm(lm(best->first), lm(best->second));
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Mono l = mono_lcm(lm(it->first), lm(it->second));
            if (grevlex_less(l, best_l)) {
                best = it;
                best_l = std::move(l);
            }
        }
        Pair pr = *best;
        pending.erase(best);
        auto [i, j] = pr;
        if (coprime(lm(i), lm(j))) continue;
        bool chain = false;
        for (std::size_t k = 0; k < G.size() && !chain; ++k)
            chain = k != i && k != j && divides(lm(k), best_l) && treated(i, k) && treated(j, k);
        if (chain) continue;
        if (static_cast<int>(best_l.size()) > b.degree_cap) {
            truncated = true;
            continue;
        }
        GPoly s;
        sub_mul(s, Scalar(-1), mono_div(best_l, lm(i)), G[i]);
        sub_mul(s, Scalar(1), mono_div(best_l, lm(j)), G[j]);
        GPoly r = reduce(std::move(s), G);
        if (r.empty()) continue;
        make_monic(r);
        G.push_back(std::move(r));
        std::size_t n = G.size() - 1;
        for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
    }
    // reduced basis: drop redundant leads, then tail-reduce
    std::vector<GPoly> keep;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool red = false;
        for (std::size_t k = 0; k < G.size() && !red; ++k)
            red = k != i && divides(lm(k), lm(i)) && (lm(k) != lm(i) || k < i);
        if (!red) keep.push_back(G[i]);
    }
    for (std::size_t i = 0; i < keep.size(); ++i) {
        keep[i] = reduce(keep[i], keep, i);
        make_monic(keep[i]);
    }
    std::sort(keep.begin(), keep.end(),
              [](const GPoly& x, const GPoly& y) { return grevlex_less(x.begin()->first, y.begin()->first); });
    b.basis.clear();
    for (const auto& g : keep) b.basis.push_back(from_g(g));
    b.status = truncated ? BasisStatus::Truncated : BasisStatus::Exact;
    return b;
}

Membership ideal_member(const CommDiffPoly& f, const IdealBasis& b) {
    if (b.status == BasisStatus::Raw) return ideal_member(f, groebner(b));
    if (normal_form(f, b.basis).is_zero()) return Membership::Yes;
    if (b.status == BasisStatus::Exact && !b.slice) return Membership::No;
    return Membership::Inconclusive;
}

std::vector<CommDiffPoly> inverse_relations(const RepSpace& R) {
    std::vector<CommDiffPoly> out;
    const Quiver& Q = *R.q;
    for (int a = 0; a < Q.num_arrows(); ++a) {
        const Arrow& A = Q.arrow_at(a);
        if (A.inverse < 0 || A.is_inverse) continue;
        PolyMatrix g = letter_matrix(R, make_letter(a)), h = letter_matrix(R, make_letter(A.inverse));
        PolyMatrix gh = g * h, hg = h * g;
        PolyMatrix pt = projector(R, A.tail), ph = projector(R, A.head);
        for (std::size_t i = 0; i < gh.a.size(); ++i) {
            CommDiffPoly x = gh.a[i] - pt.a[i], y = hg.a[i] - ph.a[i];
            if (!x.is_zero()) out.push_back(std::move(x));
            if (!y.is_zero()) out.push_back(std::move(y));
        }
    }
    return out;
}

RepEquality::RepEquality(const RepSpace& R, int degree_cap) {
    auto gens = inverse_relations(R);
    if (gens.empty()) return;
    active_ = true;
    basis_.generators = std::move(gens);
    basis_.degree_cap = degree_cap;
    basis_ = groebner(basis_);
}

Membership RepEquality::equal(const CommDiffPoly& l, const CommDiffPoly& r) const {
    if (l == r) return Membership::Yes;
    if (!active_) return Membership::No;
    return ideal_member(l - r, basis_);
}

void RepEquality::check(CheckReport& part, const std::string& input, const Quiver& q, const CommDiffPoly& l,
                        const CommDiffPoly& r) const {
    switch (equal(l, r)) {
        case Membership::Yes: return;
        case Membership::No: part.fail({input, cpoly_str(q, l), cpoly_str(q, r)}); return;
        case Membership::Inconclusive:
            part.inconclusive({input + " (degree cap " + std::to_string(basis_.degree_cap) + ")", cpoly_str(q, l),
                               cpoly_str(q, r)});
            return;
    }
}

}  // namespace dpva
