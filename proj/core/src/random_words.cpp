#include "braidrep/random_words.hpp"

#include "braidrep/errors.hpp"

namespace braidrep {

Word random_word(const Alphabet& alphabet, std::size_t max_length, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::size_t> len(0, max_length);
    WordBuilder b(alphabet);
    if (alphabet.rank() == 0) return std::move(b).finish();
    std::uniform_int_distribution<std::uint32_t> gen(0, alphabet.rank() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    for (auto k = len(rng); k > 0; --k) b.push(gen(rng), sign(rng) ? 1 : -1);
    return std::move(b).finish();
}

Word random_reduced_word(const Alphabet& alphabet, std::size_t length, std::mt19937_64& rng)
{
    WordBuilder b(alphabet);
    if (alphabet.rank() == 0 || length == 0) return std::move(b).finish();
    std::uniform_int_distribution<std::uint32_t> gen(0, alphabet.rank() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    Letter prev{0, 0};
    for (std::size_t k = 0; k < length;) {
        Letter l{gen(rng), sign(rng) ? 1 : -1};
        if (prev.exp != 0 && l.gen == prev.gen && l.exp == -prev.exp) continue;
        b.push(l);
        prev = l;
        ++k;
    }
    return std::move(b).finish();
}

Word random_subgroup_word(const Transversal& t, std::size_t max_length, std::mt19937_64& rng)
{
    auto u = random_word(t.presentation().generators(), max_length, rng);
    return u * invert(coset_representative(t, u));
}

} // namespace braidrep
