#include "dpva/tensor.hpp"

#include "dpva/errors.hpp"

namespace dpva {

const QuiverPtr& pick_quiver(const QuiverPtr& a, const QuiverPtr& b) { return a ? a : b; }

NCPoly nc_word(QuiverPtr q, const Word& w, const Scalar& c) {
    NCPoly p(std::move(q));
    p.add({w}, c);
    return p;
}

NCPoly nc_letter(QuiverPtr q, Letter l, const Scalar& c) {
    Word w = Word::of(*q, l);
    return nc_word(std::move(q), w, c);
}

NCPoly nc_idem(QuiverPtr q, int v) { return nc_word(std::move(q), Word::idem(v)); }

NCPoly nc_one(QuiverPtr q) {
    NCPoly p(q);
    for (int v = 0; v < q->num_vertices(); ++v) p.add({Word::idem(v)}, Scalar(1));
    return p;
}

NCPoly nc_scalar(QuiverPtr q, const Scalar& c) { return nc_one(std::move(q)) * c; }

Tensor2 t2_pure(QuiverPtr q, const Word& a, const Word& b, const Scalar& c) {
    Tensor2 t(std::move(q));
    t.add({a, b}, c);
    return t;
}

Tensor2 t2_pure(const NCPoly& a, const NCPoly& b) {
    Tensor2 t(pick_quiver(a.quiver(), b.quiver()));
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) t.add({ka[0], kb[0]}, ca * cb);
    return t;
}

Tensor3 t3_pure(const NCPoly& a, const NCPoly& b, const NCPoly& c) {
    Tensor3 t(pick_quiver(pick_quiver(a.quiver(), b.quiver()), c.quiver()));
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            for (const auto& [kc, cc] : c.terms()) t.add({ka[0], kb[0], kc[0]}, ca * cb * cc);
    return t;
}

NCPoly nc_normalize(QuiverPtr q, const std::vector<RawTerm>& raw) {
    NCPoly p(q);
    for (const auto& t : raw) {
        auto w = normalize_word(*q, t.word);
        if (w) p.add({std::move(*w)}, t.coeff);
    }
    return p;
}

NCPoly nc_mul(const NCPoly& a, const NCPoly& b) {
    const QuiverPtr& q = pick_quiver(a.quiver(), b.quiver());
    NCPoly r(q);
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            auto w = concat(*q, ka[0], kb[0]);
            if (w) r.add({std::move(*w)}, ca * cb);
        }
    return r;
}

Word del_shift(const Word& w, std::size_t pos, int by) {
    Word r = w;
    Letter l = r.letters[pos];
    r.letters[pos] = make_letter(arrow_of(l), order_of(l) + by);
    return r;
}

namespace {

void check_jettable(const Quiver& q) {
    if (q.has_inverses()) throw InversesNotJettable();
}

// one application of the derivation on a single word
template <class Sink>
void del_word(const Quiver& q, const Word& w, Sink&& sink) {
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        int k = order_of(w.letters[i]) + 1;
        if (k > q.jet_cap())
            throw CapExceeded("derivation needs jet order " + std::to_string(k) + " > cap " +
                              std::to_string(q.jet_cap()));
        sink(del_shift(w, i));
    }
}

}  // namespace

NCPoly apply_del(const NCPoly& p, int k) {
    if (k == 0 || p.is_zero()) return p;
    const Quiver& q = *p.quiver();
    check_jettable(q);
    if (!q.jet()) return NCPoly(p.quiver());
    NCPoly cur = p;
    for (int s = 0; s < k; ++s) {
        NCPoly nxt(p.quiver());
        for (const auto& [key, c] : cur.terms())
            del_word(q, key[0], [&](Word w) { nxt.add({std::move(w)}, c); });
        cur = std::move(nxt);
        if (cur.is_zero()) break;
    }
    return cur;
}

Tensor2 t2_act(const NCPoly& a, const Tensor2& d, const NCPoly& b, ActMode mode) {
    return t2_act_right(t2_act_left(a, d, mode), b, mode);
}

Tensor2 t2_act_left(const NCPoly& a, const Tensor2& d, ActMode mode) {
    const QuiverPtr& qp = pick_quiver(d.quiver(), a.quiver());
    Tensor2 r(qp);
    if (d.is_zero() || a.is_zero()) return r;
    const Quiver& q = *qp;
    std::size_t slot = mode == ActMode::Outer ? 0 : 1;
    for (const auto& [k, c] : d.terms())
        for (const auto& [ka, ca] : a.terms()) {
            auto w = concat(q, ka[0], k[slot]);
            if (!w) continue;
            Tensor2::Key nk = k;
            nk[slot] = std::move(*w);
            r.add(std::move(nk), c * ca);
        }
    return r;
}

Tensor2 t2_act_right(const Tensor2& d, const NCPoly& b, ActMode mode) {
    const QuiverPtr& qp = pick_quiver(d.quiver(), b.quiver());
    Tensor2 r(qp);
    if (d.is_zero() || b.is_zero()) return r;
    const Quiver& q = *qp;
    std::size_t slot = mode == ActMode::Outer ? 1 : 0;
    for (const auto& [k, c] : d.terms())
        for (const auto& [kb, cb] : b.terms()) {
            auto w = concat(q, k[slot], kb[0]);
            if (!w) continue;
            Tensor2::Key nk = k;
            nk[slot] = std::move(*w);
            r.add(std::move(nk), c * cb);
        }
    return r;
}

Tensor2 t2_sigma(const Tensor2& d) {
    Tensor2 r(d.quiver());
    for (const auto& [k, c] : d.terms()) r.add({k[1], k[0]}, c);
    return r;
}

Tensor3 t3_sigma(const Tensor3& t) {
    Tensor3 r(t.quiver());
    for (const auto& [k, c] : t.terms()) r.add({k[2], k[0], k[1]}, c);
    return r;
}

namespace {

template <std::size_t N>
Tensor<N> del_slots(const Tensor<N>& t, const std::array<bool, N>& on, int k) {
    if (k == 0 || t.is_zero()) return t;
    const Quiver& q = *t.quiver();
    check_jettable(q);
    if (!q.jet()) return Tensor<N>(t.quiver());
    Tensor<N> cur = t;
    for (int s = 0; s < k; ++s) {
        Tensor<N> nxt(t.quiver());
        for (const auto& [key, c] : cur.terms())
            for (std::size_t i = 0; i < N; ++i) {
                if (!on[i]) continue;
                del_word(q, key[i], [&](Word w) {
                    auto nk = key;
                    nk[i] = std::move(w);
                    nxt.add(std::move(nk), c);
                });
            }
        cur = std::move(nxt);
        if (cur.is_zero()) break;
    }
    return cur;
}

}  // namespace

Tensor2 t2_del(const Tensor2& d, DelSide side, int k) {
    std::array<bool, 2> on{side != DelSide::R, side != DelSide::L};
    return del_slots<2>(d, on, k);
}

Tensor3 t3_del(const Tensor3& t, int k) { return del_slots<3>(t, {true, true, true}, k); }

Tensor3 t2_otimes1(const NCPoly& a, const Tensor2& d) {
    Tensor3 r(pick_quiver(d.quiver(), a.quiver()));
    for (const auto& [k, c] : d.terms())
        for (const auto& [ka, ca] : a.terms()) r.add({k[0], ka[0], k[1]}, c * ca);
    return r;
}

NCPoly t2_fuse(const Tensor2& d, Twist twist) {
    NCPoly r(d.quiver());
    if (d.is_zero()) return r;
    const Quiver& q = *d.quiver();
    for (const auto& [k, c] : d.terms()) {
        auto w = twist == Twist::Plain ? concat(q, k[0], k[1]) : concat(q, k[1], k[0]);
        if (w) r.add({std::move(*w)}, c);
    }
    return r;
}

Tensor3 t2_append(const Tensor2& t, const NCPoly& p) {
    Tensor3 r(pick_quiver(t.quiver(), p.quiver()));
    for (const auto& [k, c] : t.terms())
        for (const auto& [kp, cp] : p.terms()) r.add({k[0], k[1], kp[0]}, c * cp);
    return r;
}

Tensor3 t2_prepend(const NCPoly& p, const Tensor2& t) {
    Tensor3 r(pick_quiver(t.quiver(), p.quiver()));
    for (const auto& [k, c] : t.terms())
        for (const auto& [kp, cp] : p.terms()) r.add({kp[0], k[0], k[1]}, c * cp);
    return r;
}

template <std::size_t N>
std::string tensor_str(const Tensor<N>& t) {
    if (t.is_zero()) return "0";
    const Quiver& q = *t.quiver();
    std::string s;
    bool first = true;
    for (const auto& [k, c] : t.terms()) {
        if (!first) s += " + ";
        first = false;
        s += scalar_str(c);
        s += " * ";
        for (std::size_t i = 0; i < N; ++i) {
            if (i) s += " (x) ";
            s += word_str(q, k[i]);
        }
    }
    return s;
}

template std::string tensor_str<1>(const Tensor<1>&);
template std::string tensor_str<2>(const Tensor<2>&);
template std::string tensor_str<3>(const Tensor<3>&);

}  // namespace dpva
