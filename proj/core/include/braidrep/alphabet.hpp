#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace braidrep {

enum class Family : std::uint8_t { sigma, x, z, a, tau, w, xi, delta, lambda };

std::string_view family_name(Family f);
// Token prefix used by the word grammar: s x z a t w xi d l.
std::string_view family_prefix(Family f);
std::optional<Family> family_from_name(std::string_view name);
std::optional<Family> family_from_prefix(std::string_view prefix);

struct FamilySpec {
    Family family;
    std::uint32_t count = 0;
    // Subscript of the first generator; V-type bases start at tau_2.
    std::uint32_t first_index = 1;

    bool operator==(const FamilySpec&) const = default;
};

struct GeneratorRef {
    Family family;
    std::uint32_t index;
};

/// Ordered list of generator families.  Instances are interned, so two
/// alphabets are equal exactly when they are the same object and a Word can
/// hold a plain pointer.  Generators are numbered 0..rank-1 in family order.
class Alphabet {
public:
    // Empty families are dropped; duplicate families are rejected.
    static const Alphabet& get(std::vector<FamilySpec> families);

    Alphabet(const Alphabet&) = delete;
    Alphabet& operator=(const Alphabet&) = delete;

    const std::vector<FamilySpec>& families() const { return families_; }
    std::uint32_t rank() const { return rank_; }
    std::uint32_t count(Family f) const;
    bool has(Family f) const { return count(f) > 0; }

    std::optional<std::uint32_t> find(Family f, std::uint32_t index) const;
    // Throws InvalidParameter when (f, index) is not in the alphabet.
    std::uint32_t gen(Family f, std::uint32_t index) const;
    GeneratorRef ref(std::uint32_t gen) const;
    std::string name(std::uint32_t gen) const;
    std::optional<std::uint32_t> find_name(std::string_view name) const;

    // "tau:2 w:2" style summary, first index shown as tau[2..3].
    std::string describe() const;

private:
    explicit Alphabet(std::vector<FamilySpec> families);

    std::vector<FamilySpec> families_;
    std::vector<std::uint32_t> offsets_;
    std::uint32_t rank_ = 0;
};

} // namespace braidrep
