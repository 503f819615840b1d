#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidrep/alphabet.hpp"
#include "braidrep/permutation.hpp"
#include "braidrep/word.hpp"

namespace braidrep {

struct Relator {
    std::size_t id = 0;
    std::string schema;   // "R2", "B5", "braid", ...
    std::string instance; // "r=1", "i=2,j=4", ...
    Word lhs;
    Word rhs;
    Word relator; // lhs * rhs^{-1}
};

class Presentation {
public:
    // Throws InvalidParameter if some relator has non-identity permutation image.
    Presentation(std::string name, const Alphabet& generators, std::uint32_t strands,
                 std::vector<Permutation> perm_images, std::vector<Relator> relators,
                 bool degenerate = false);

    const std::string& name() const { return name_; }
    const Alphabet& generators() const { return *generators_; }
    std::uint32_t strands() const { return strands_; }
    const Permutation& perm_image(std::uint32_t gen) const { return perm_images_[gen]; }
    const std::vector<Permutation>& perm_images() const { return perm_images_; }
    const std::vector<Relator>& relators() const { return relators_; }
    // Small-n instance where several schemas have collapsed.
    bool degenerate() const { return degenerate_; }

    // Copy without the relators of one schema (used for the TR5-free closed-surface source).
    Presentation without_schema(const std::string& schema, std::string new_name) const;

private:
    std::string name_;
    const Alphabet* generators_;
    std::uint32_t strands_;
    std::vector<Permutation> perm_images_;
    std::vector<Relator> relators_;
    bool degenerate_;
};

Permutation permutation_image(const Presentation& pres, const Word& u);

Presentation braid_presentation(int n);
Presentation surface_braid_presentation(int n, int g, int p);
Presentation nonorientable_presentation(int n, int g, int p);
Presentation closed_surface_presentation(int n, int g);
Presentation dn_orientable_presentation(int n, int g, int p);
Presentation dn_nonorientable_presentation(int n, int g, int p);
Presentation dn_closed_presentation(int n, int g);
Presentation artin_tits_d_presentation(int n);

// Generator alphabets of the builders above, exposed for the representation
// and rewriting modules.
const Alphabet& braid_alphabet(int n);
const Alphabet& surface_alphabet(int n, int g, int p);
const Alphabet& nonorientable_alphabet(int n, int g, int p);
const Alphabet& dn_orientable_alphabet(int n, int g, int p);
const Alphabet& dn_nonorientable_alphabet(int n, int g, int p);
const Alphabet& dn_closed_alphabet(int n, int g);
const Alphabet& artin_tits_d_alphabet(int n);

} // namespace braidrep
