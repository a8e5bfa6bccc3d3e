#include "dpva/word.hpp"

#include <algorithm>

#include "dpva/errors.hpp"

namespace dpva {

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() <=> b.letters.size();
    for (std::size_t i = 0; i < a.letters.size(); ++i)
        if (a.letters[i] != b.letters[i]) return a.letters[i] <=> b.letters[i];
    return a.anchor <=> b.anchor;
}

bool operator==(const Word& a, const Word& b) {
    return a.anchor == b.anchor && a.letters == b.letters;
}

int word_tail(const Quiver& q, const Word& w) {
    return w.empty() ? w.anchor : q.tail(w.letters.front());
}

int word_head(const Quiver& q, const Word& w) {
    return w.empty() ? w.anchor : q.head(w.letters.back());
}

bool is_closed(const Quiver& q, const Word& w) { return word_tail(q, w) == word_head(q, w); }

std::optional<Word> concat(const Quiver& q, const Word& a, const Word& b) {
    if (word_head(q, a) != word_tail(q, b)) return std::nullopt;
    if (a.empty()) return b;
    if (b.empty()) return a;
    Word r;
    r.letters = a.letters;
    for (Letter l : b.letters) {
        if (!r.letters.empty() && q.cancels(r.letters.back(), l))
            r.letters.pop_back();
        else
            r.letters.push_back(l);
    }
    r.anchor = r.letters.empty() ? q.tail(a.letters.front()) : q.tail(r.letters.front());
    return r;
}

std::optional<Word> normalize_word(const Quiver& q, const std::vector<Token>& raw) {
    if (raw.empty()) throw Error("empty word");
    int start = -1, cur = -1;
    Word r;
    for (const Token& t : raw) {
        if (t.idem) {
            if (t.id < 0 || t.id >= q.num_vertices()) throw Error("unknown vertex id");
            if (cur >= 0 && cur != t.id) return std::nullopt;
            cur = t.id;
            if (start < 0) start = t.id;
            continue;
        }
        if (t.id < 0 || t.id >= q.num_arrows()) throw UnknownArrow("unknown arrow id " + std::to_string(t.id));
        if (t.order < 0 || t.order > kMaxJetOrder) throw CapExceeded("jet order out of range");
        if (t.order > 0) {
            if (q.arrow_at(t.id).inverse >= 0) throw InversesNotJettable();
            if (!q.jet()) throw Error("jet letter " + q.arrow_at(t.id).name + " in a non-jet quiver");
            if (t.order > q.jet_cap()) throw CapExceeded("jet order " + std::to_string(t.order) + " exceeds cap");
        }
        Letter l = make_letter(t.id, t.order);
        if (cur >= 0 && cur != q.tail(l)) return std::nullopt;
        if (start < 0) start = q.tail(l);
        if (!r.letters.empty() && q.cancels(r.letters.back(), l))
            r.letters.pop_back();
        else
            r.letters.push_back(l);
        cur = q.head(l);
    }
    r.anchor = r.letters.empty() ? start : q.tail(r.letters.front());
    return r;
}

std::string word_str(const Quiver& q, const Word& w) {
    if (w.empty()) return "e_" + q.vertex_name(w.anchor);
    std::string s;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) s += '.';
        s += q.letter_name(w.letters[i]);
    }
    return s;
}

Word subword(const Quiver& q, const Word& w, std::size_t from, std::size_t to) {
    Word r;
    if (from < to) {
        r.letters.assign(w.letters.begin() + static_cast<long>(from), w.letters.begin() + static_cast<long>(to));
        r.anchor = q.tail(r.letters.front());
        return r;
    }
    if (w.empty())
        r.anchor = w.anchor;
    else if (from < w.size())
        r.anchor = q.tail(w.letters[from]);
    else
        r.anchor = q.head(w.letters.back());
    return r;
}

}  // namespace dpva
