#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace braidrep {

/// Permutation of {1..n}, stored as its image list.
class Permutation {
public:
    // Throws InvalidParameter unless images is a bijection of 1..n.
    explicit Permutation(std::vector<std::uint32_t> images);

    static Permutation identity(std::uint32_t n);
    static Permutation transposition(std::uint32_t i, std::uint32_t j, std::uint32_t n);

    std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
    std::uint32_t operator()(std::uint32_t i) const { return images_[i - 1]; }
    const std::vector<std::uint32_t>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<std::uint32_t> images_;
};

// (p ∘ q)(i) = p(q(i)); throws InvalidParameter on degree mismatch.
Permutation perm_compose(const Permutation& p, const Permutation& q);
// The adjacent transposition (i, i+1) in S_n.
Permutation perm_of_transposition(std::uint32_t i, std::uint32_t n);

// Cycle notation, "()" for the identity.
std::string to_string(const Permutation& p);

} // namespace braidrep
