#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "braidrep/endomorphism.hpp"
#include "braidrep/presentation.hpp"

namespace braidrep {

/// How a word of the source group is turned into an automorphism.
///   right:  rho(uv) = compose(rho(u), rho(v))   (superscript action u^{g})
///   left:   rho(uv) = rho(u) o rho(v)          (functional action g(u))
enum class ActionSide : std::uint8_t { left, right };

std::string_view action_side_name(ActionSide side);

class Assignment {
public:
    // Throws CertificationError unless verify_inverse holds for every generator.
    static Assignment certified(std::string name, Presentation source, const Alphabet& target,
                                std::vector<FreeEndo> images, std::vector<FreeEndo> inverses,
                                ActionSide side);
    // No certification; for deliberately corrupted fixtures.
    static Assignment unchecked(std::string name, Presentation source, const Alphabet& target,
                                std::vector<FreeEndo> images, std::vector<FreeEndo> inverses,
                                ActionSide side);

    const std::string& name() const { return name_; }
    const Presentation& source() const { return source_; }
    const Alphabet& target() const { return *target_; }
    const FreeEndo& image(std::uint32_t gen) const { return images_[gen]; }
    const FreeEndo& inverse_image(std::uint32_t gen) const { return inverses_[gen]; }
    const std::vector<FreeEndo>& images() const { return images_; }
    const std::vector<FreeEndo>& inverse_images() const { return inverses_; }
    ActionSide side() const { return side_; }

private:
    Assignment(std::string name, Presentation source, const Alphabet& target,
               std::vector<FreeEndo> images, std::vector<FreeEndo> inverses, ActionSide side);

    std::string name_;
    Presentation source_;
    const Alphabet* target_;
    std::vector<FreeEndo> images_;
    std::vector<FreeEndo> inverses_;
    ActionSide side_;
};

FreeEndo evaluate(const Assignment& asgn, const Word& u);

// The automorphism "conjugation by w" as written in a left action,
// y -> w y w^{-1}; for a right action it is inner(w), y -> w^{-1} y w.
FreeEndo conjugation_by(ActionSide side, const Alphabet& alphabet, const Word& w);

struct RelatorResult {
    std::size_t id = 0;
    std::string schema;
    std::string instance;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

struct Report {
    std::string presentation;
    std::string assignment;
    std::vector<RelatorResult> relators; // sorted by id
    bool pass = true;
    bool degenerate = false;
};

// Checks every relator of the source; runs on a worker pool capped by
// BRAIDREP_THREADS.
Report verify_representation(const Assignment& asgn);

// Worker count for `tasks` independent jobs.
unsigned worker_count(std::size_t tasks);

// Appends one random letter (random target generator, random sign) to one
// image of one generator's FreeEndo.  Inverse images are left as they were.
Assignment perturb_assignment(const Assignment& asgn, std::mt19937_64& rng);

} // namespace braidrep
