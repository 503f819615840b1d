#pragma once

#include <cstddef>
#include <random>

#include "braidrep/rewriting.hpp"
#include "braidrep/word.hpp"

namespace braidrep {

// Uniform length in [0, max_length], letters uniform over generators and signs.
// The result is reduced, so it may be shorter than the drawn length.
Word random_word(const Alphabet& alphabet, std::size_t max_length, std::mt19937_64& rng);

// Exactly `length` ±1 letters, no letter followed by its inverse.
Word random_reduced_word(const Alphabet& alphabet, std::size_t length, std::mt19937_64& rng);

// u * overline{u}^{-1} for a random u: uniformly lands in D_n.
Word random_subgroup_word(const Transversal& t, std::size_t max_length, std::mt19937_64& rng);

} // namespace braidrep
