#pragma once

// Reference implementations used as test oracles.  They work on plain
// letter-by-letter vectors (+/-(gen+1)) and share no code with the library.

#include <cstdlib>
#include <random>
#include <vector>

#include "braidrep/endomorphism.hpp"
#include "braidrep/word.hpp"

namespace oracle {

using Flat = std::vector<int>;

inline Flat reduce(const Flat& in)
{
    Flat st;
    for (int c : in) {
        if (!st.empty() && st.back() == -c)
            st.pop_back();
        else
            st.push_back(c);
    }
    return st;
}

inline Flat flatten(const braidrep::Word& w)
{
    Flat out;
    for (auto l : w.letters())
        for (int k = 0; k < std::abs(l.exp); ++k)
            out.push_back(l.exp > 0 ? static_cast<int>(l.gen) + 1 : -static_cast<int>(l.gen) - 1);
    return out;
}

inline braidrep::Word unflatten(const braidrep::Alphabet& A, const Flat& f)
{
    braidrep::WordBuilder b(A);
    for (int c : f) b.push(static_cast<std::uint32_t>(std::abs(c) - 1), c > 0 ? 1 : -1);
    return std::move(b).finish();
}

inline Flat inverse(const Flat& f)
{
    Flat out(f.rbegin(), f.rend());
    for (auto& c : out) c = -c;
    return out;
}

inline Flat concat(std::initializer_list<Flat> parts)
{
    Flat out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// Substitute images letter by letter, then reduce.
inline Flat apply(const std::vector<Flat>& images, const Flat& u)
{
    Flat out;
    for (int c : u) {
        const auto& im = images[static_cast<std::size_t>(std::abs(c) - 1)];
        auto piece = c > 0 ? im : inverse(im);
        out.insert(out.end(), piece.begin(), piece.end());
    }
    return reduce(out);
}

inline std::vector<Flat> images_of(const braidrep::FreeEndo& f)
{
    std::vector<Flat> out;
    for (const auto& w : f.images()) out.push_back(flatten(w));
    return out;
}

// Unreduced random letters; the library must reduce them itself.
inline Flat random_flat(std::uint32_t rank, std::size_t max_len, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> gen(1, static_cast<int>(rank));
    std::uniform_int_distribution<int> sign(0, 1);
    Flat out(len(rng));
    for (auto& c : out) c = sign(rng) ? gen(rng) : -gen(rng);
    return out;
}

} // namespace oracle
