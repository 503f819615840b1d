#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidrep/assignment.hpp"
#include "braidrep/endomorphism.hpp"
#include "braidrep/presentation.hpp"

namespace braidrep {

/// Schreier transversal m_l = σ_{n-1} σ_{n-2} ... σ_l (l < n), m_n = ε of
/// D_n = π^{-1}(S_{n-1}) inside the group of a braid-type presentation.
class Transversal {
public:
    // The presentation needs σ_1..σ_{n-1} with σ_i -> (i i+1), n = strands.
    explicit Transversal(Presentation ambient);

    const Presentation& presentation() const { return ambient_; }
    std::uint32_t n() const { return ambient_.strands(); }
    // m_l for l = 1..n
    const Word& representative(std::uint32_t l) const { return reps_[l - 1]; }
    // l with u m_l^{-1} in D_n
    std::uint32_t coset_index(const Word& u) const;
    bool in_subgroup(const Word& u) const { return coset_index(u) == n(); }

private:
    Presentation ambient_;
    std::vector<Word> reps_;
};

struct RewriteSymbol {
    std::uint32_t lambda;  // l of λ = m_l
    std::uint32_t gen;     // ambient generator a
    std::optional<std::string> name; // τ_k / w_r / ξ_j (or σ_i, x_r, z_j, a_r) when it matches
    Word expansion;        // λ a (overline{λ a})^{-1}
    bool trivial = false;

    std::string label(const Alphabet& ambient) const; // "s[m3,s2]"
};

struct SignedSymbol {
    std::size_t index; // into subgroup_generators()
    int exponent;      // +1 or -1
};

Word coset_representative(const Transversal& t, const Word& u);

// One symbol per (λ, a), lambda-major, generator-minor; symbol index is
// (l-1) * rank + gen.
std::vector<RewriteSymbol> subgroup_generators(const Transversal& t);

// τ(u) with trivial symbols dropped; throws NotInSubgroup when u ∉ D_n.
std::vector<SignedSymbol> rewrite(const Transversal& t, const Word& u);
Word expand(const Transversal& t, const std::vector<SignedSymbol>& seq);

// expand(rewrite(u)) agrees with u under the witness (evaluated endomorphisms
// and permutation images).
bool roundtrip_check(const Transversal& t, const Assignment& witness, const Word& u);

// Product of the witness images of the symbols, one symbol at a time.
FreeEndo induced_automorphism(const Transversal& t, const Assignment& witness,
                              const std::vector<SignedSymbol>& seq);

std::string to_string(const Transversal& t, const std::vector<SignedSymbol>& seq);

struct RewrittenRelator {
    std::size_t relator_id;
    std::string schema;
    std::string instance;
    std::uint32_t lambda;
    std::vector<SignedSymbol> sequence;
    bool identity; // induced automorphism is the identity
};

// τ(λ r_μ λ^{-1}) for every relator r_μ and every λ ∈ M_n.
std::vector<RewrittenRelator> rewrite_relator_table(const Transversal& t, const Assignment& witness);

// Sends each generator of a D_n presentation (dn_orientable / dn_nonorientable
// / dn_closed with parameter n) to its ambient word: σ_i, x_r, z_j, a_r to
// themselves, τ_k, w_r, ξ_j to their normal forms.
Substitution dn_ambient_expansion(const Presentation& dn, const Presentation& ambient);

} // namespace braidrep
