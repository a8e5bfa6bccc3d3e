#include "dpva/random.hpp"

namespace dpva {

std::vector<Letter> all_letters(const Quiver& q, int max_order) {
    std::vector<Letter> out;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int top = q.arrow_at(a).inverse >= 0 ? 0 : max_order;
        for (int k = 0; k <= top; ++k) out.push_back(make_letter(a, k));
    }
    return out;
}

Scalar random_scalar(Rng& rng, int span) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 3);
    int n = 0;
    while (n == 0) n = num(rng);
    Scalar s(n, den(rng));
    s.canonicalize();
    return s;
}

Word random_word(const Quiver& q, Rng& rng, int len, int max_order) {
    std::vector<Letter> letters = all_letters(q, max_order);
    Word w;
    std::uniform_int_distribution<int> vpick(0, q.num_vertices() - 1);
    int cur = vpick(rng);
    w.anchor = cur;
    for (int i = 0; i < len; ++i) {
        std::vector<Letter> opts;
        for (Letter l : letters) {
            if (q.tail(l) != cur) continue;
            if (!w.letters.empty() && q.cancels(w.letters.back(), l)) continue;
            opts.push_back(l);
        }
        if (opts.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, opts.size() - 1);
        Letter l = opts[pick(rng)];
        w.letters.push_back(l);
        cur = q.head(l);
    }
    if (!w.letters.empty()) w.anchor = q.tail(w.letters.front());
    return w;
}

NCPoly random_poly(QuiverPtr q, Rng& rng, int terms, int max_len, int max_order) {
    NCPoly p(q);
    std::uniform_int_distribution<int> lpick(1, max_len);
    for (int t = 0; t < terms; ++t) p.add({random_word(*q, rng, lpick(rng), max_order)}, random_scalar(rng));
    return p;
}

std::vector<Word> all_words(const Quiver& q, int max_len, bool closed_only, int max_order, bool with_idems) {
    std::vector<Letter> letters = all_letters(q, max_order);
    std::vector<Word> out, frontier;
    if (with_idems)
        for (int v = 0; v < q.num_vertices(); ++v) out.push_back(Word::idem(v));
    for (Letter l : letters) frontier.push_back(Word::of(q, l));
    for (int len = 1; len <= max_len; ++len) {
        for (const Word& w : frontier)
            if (!closed_only || is_closed(q, w)) out.push_back(w);
        if (len == max_len) break;
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (Letter l : letters) {
                if (q.tail(l) != q.head(w.letters.back())) continue;
                if (q.cancels(w.letters.back(), l)) continue;
                Word x = w;
                x.letters.push_back(l);
                next.push_back(std::move(x));
            }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace dpva
