#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidrep/alphabet.hpp"

namespace braidrep {

struct Letter {
    std::uint32_t gen;
    std::int32_t exp;

    bool operator==(const Letter&) const = default;
};

/// Freely reduced word in run-length form.  No unreduced Word exists: every
/// constructor reduces, and adjacent letters never share a generator.
class Word {
public:
    explicit Word(const Alphabet& alphabet) : alphabet_(&alphabet) {}
    Word(const Alphabet& alphabet, std::span<const Letter> letters);

    static Word generator(const Alphabet& alphabet, std::uint32_t gen, std::int32_t exp = 1);
    static Word generator(const Alphabet& alphabet, Family f, std::uint32_t index,
                          std::int32_t exp = 1);

    const Alphabet& alphabet() const { return *alphabet_; }
    std::span<const Letter> letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    // Number of runs.
    std::size_t size() const { return letters_.size(); }
    // Sum of |exponent|, the usual word length.
    std::size_t length() const;

    bool operator==(const Word& other) const {
        return alphabet_ == other.alphabet_ && letters_ == other.letters_;
    }

private:
    friend class WordBuilder;
    Word(const Alphabet* alphabet, std::vector<Letter> reduced)
        : alphabet_(alphabet), letters_(std::move(reduced)) {}

    const Alphabet* alphabet_;
    std::vector<Letter> letters_;
};

/// Incremental free reduction, used by apply() and the multiply family.
class WordBuilder {
public:
    explicit WordBuilder(const Alphabet& alphabet) : alphabet_(&alphabet) {}

    void push(Letter l);
    void push(std::uint32_t gen, std::int32_t exp) { push(Letter{gen, exp}); }
    // Appends w, or its inverse, `times` times.
    void push(const Word& w, bool inverted = false, std::uint32_t times = 1);
    void reserve(std::size_t n) { letters_.reserve(n); }

    Word finish() &&;

private:
    const Alphabet* alphabet_;
    std::vector<Letter> letters_;
};

Word multiply(const Word& u, const Word& v);
Word operator*(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, std::int64_t k);
// b^{-1} a b
Word conjugate(const Word& a, const Word& b);
// a^{-1} b^{-1} a b
Word commutator(const Word& a, const Word& b);

struct CyclicReduction {
    Word core;
    Word conjugator;
};

// u == conjugator^{-1} * core * conjugator with core cyclically reduced.
CyclicReduction cyclic_reduce(const Word& u);

// Grammar: tokens `name index (^ signed-int)?`, whitespace separated.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string to_string(const Word& w);

} // namespace braidrep
