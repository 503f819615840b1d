#pragma once

#include <utility>
#include <vector>

#include "braidrep/alphabet.hpp"
#include "braidrep/word.hpp"

namespace braidrep {

/// Homomorphism between free groups given by generator images.  Used for
/// the letter substitutions (pi_D, s_D, expansions into an ambient group);
/// FreeEndo is the same-alphabet case.
class Substitution {
public:
    Substitution(const Alphabet& source, const Alphabet& target, std::vector<Word> images);

    const Alphabet& source() const { return *source_; }
    const Alphabet& target() const { return *target_; }
    const Word& image(std::uint32_t gen) const { return images_[gen]; }
    const std::vector<Word>& images() const { return images_; }

private:
    const Alphabet* source_;
    const Alphabet* target_;
    std::vector<Word> images_;
};

Word apply(const Substitution& s, const Word& u);

class FreeEndo {
public:
    FreeEndo(const Alphabet& alphabet, std::vector<Word> images);

    static FreeEndo identity(const Alphabet& alphabet);
    // Identity except on the listed generators.
    static FreeEndo with_images(const Alphabet& alphabet,
                                std::vector<std::pair<std::uint32_t, Word>> changes);

    const Alphabet& alphabet() const { return *alphabet_; }
    const Word& image(std::uint32_t gen) const { return images_[gen]; }
    const std::vector<Word>& images() const { return images_; }
    FreeEndo replaced(std::uint32_t gen, Word image) const;

    bool operator==(const FreeEndo& other) const {
        return alphabet_ == other.alphabet_ && images_ == other.images_;
    }

private:
    const Alphabet* alphabet_;
    std::vector<Word> images_;
};

Word apply(const FreeEndo& f, const Word& u);
// f then g: apply(compose(f, g), u) == apply(g, apply(f, u)).
FreeEndo compose(const FreeEndo& f, const FreeEndo& g);
// g -> w^{-1} g w
FreeEndo inner(const Alphabet& alphabet, const Word& w);

bool is_identity(const FreeEndo& f);
bool endo_equal(const FreeEndo& f, const FreeEndo& g);
// Both composites are the identity, so f and g are mutually inverse automorphisms.
bool verify_inverse(const FreeEndo& f, const FreeEndo& g);
// compose(f, inner(c)) == g
bool equal_mod_inner_by(const FreeEndo& f, const FreeEndo& g, const Word& c);

} // namespace braidrep
