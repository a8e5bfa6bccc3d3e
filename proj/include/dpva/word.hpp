#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <optional>
#include <vector>

#include "dpva/quiver.hpp"

namespace dpva {

using Letters = boost::container::small_vector<Letter, 8>;

// A path; when empty it is the trivial path e_anchor.
struct Word {
    int anchor = 0;
    Letters letters;

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    static Word idem(int v) { return Word{v, {}}; }
    static Word of(const Quiver& q, Letter l) { return Word{q.tail(l), {l}}; }
};

// (length, lex over letters, anchor)
std::strong_ordering operator<=>(const Word& a, const Word& b);
bool operator==(const Word& a, const Word& b);

int word_tail(const Quiver& q, const Word& w);
int word_head(const Quiver& q, const Word& w);
bool is_closed(const Quiver& q, const Word& w);

// product of two normal-form words; nullopt when the product is 0
std::optional<Word> concat(const Quiver& q, const Word& a, const Word& b);

// a raw token: idempotent or letter
struct Token {
    bool idem = false;
    int id = 0;  // vertex id or arrow id
    int order = 0;
};

// full rewriting: idempotent absorption, composability, inverse cancellation
std::optional<Word> normalize_word(const Quiver& q, const std::vector<Token>& raw);

std::string word_str(const Quiver& q, const Word& w);

// subword [from, to); an empty result is anchored at the vertex the cut passes through
Word subword(const Quiver& q, const Word& w, std::size_t from, std::size_t to);

}  // namespace dpva
