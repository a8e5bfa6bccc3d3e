#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dpva/tensor.hpp"

namespace dpva {

using Rng = std::mt19937_64;

// composable random walk of up to len letters (shorter at a sink); never a cancelling pair
Word random_word(const Quiver& q, Rng& rng, int len, int max_order = 0);
NCPoly random_poly(QuiverPtr q, Rng& rng, int terms, int max_len, int max_order = 0);
Scalar random_scalar(Rng& rng, int span = 5);

// all normal-form words of length 1..max_len (plus trivial paths when with_idems)
std::vector<Word> all_words(const Quiver& q, int max_len, bool closed_only, int max_order = 0,
                            bool with_idems = false);

// letters of order <= max_order, all arrows including inverses
std::vector<Letter> all_letters(const Quiver& q, int max_order = 0);

}  // namespace dpva
