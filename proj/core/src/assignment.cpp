#include "braidrep/assignment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "braidrep/errors.hpp"

namespace braidrep {

std::string_view action_side_name(ActionSide side)
{
    return side == ActionSide::left ? "left" : "right";
}

Assignment::Assignment(std::string name, Presentation source, const Alphabet& target,
                       std::vector<FreeEndo> images, std::vector<FreeEndo> inverses,
                       ActionSide side)
    : name_(std::move(name)), source_(std::move(source)), target_(&target),
      images_(std::move(images)), inverses_(std::move(inverses)), side_(side)
{
    const auto rank = source_.generators().rank();
    if (images_.size() != rank || inverses_.size() != rank)
        throw InvalidParameter(name_ + ": one image and one inverse image per generator required");
    for (std::uint32_t g = 0; g < rank; ++g)
        if (&images_[g].alphabet() != target_ || &inverses_[g].alphabet() != target_)
            throw AlphabetMismatch(name_ + ": image not over the target alphabet");
}

Assignment Assignment::certified(std::string name, Presentation source, const Alphabet& target,
                                 std::vector<FreeEndo> images, std::vector<FreeEndo> inverses,
                                 ActionSide side)
{
    Assignment a(std::move(name), std::move(source), target, std::move(images),
                 std::move(inverses), side);
    for (std::uint32_t g = 0; g < a.images_.size(); ++g)
        if (!verify_inverse(a.images_[g], a.inverses_[g]))
            throw CertificationError(a.name_ + ": inverse of " +
                                     a.source_.generators().name(g) + " failed certification");
    return a;
}

Assignment Assignment::unchecked(std::string name, Presentation source, const Alphabet& target,
                                 std::vector<FreeEndo> images, std::vector<FreeEndo> inverses,
                                 ActionSide side)
{
    return Assignment(std::move(name), std::move(source), target, std::move(images),
                      std::move(inverses), side);
}

FreeEndo evaluate(const Assignment& asgn, const Word& u)
{
    if (&u.alphabet() != &asgn.source().generators())
        throw AlphabetMismatch("evaluate: word over " + u.alphabet().describe() + ", " +
                               asgn.name() + " expects " + asgn.source().generators().describe());
    auto acc = FreeEndo::identity(asgn.target());
    for (const auto& l : u.letters()) {
        const auto& f = l.exp > 0 ? asgn.image(l.gen) : asgn.inverse_image(l.gen);
        for (int k = 0; k < std::abs(l.exp); ++k)
            acc = asgn.side() == ActionSide::right ? compose(acc, f) : compose(f, acc);
    }
    return acc;
}

FreeEndo conjugation_by(ActionSide side, const Alphabet& alphabet, const Word& w)
{
    return side == ActionSide::right ? inner(alphabet, w) : inner(alphabet, invert(w));
}

unsigned worker_count(std::size_t tasks)
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("BRAIDREP_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) n = std::min(n, static_cast<unsigned>(v));
    }
    return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(n, tasks)));
}

Report verify_representation(const Assignment& asgn)
{
    const auto& rels = asgn.source().relators();
    Report rep;
    rep.presentation = asgn.source().name();
    rep.assignment = asgn.name();
    rep.degenerate = asgn.source().degenerate();
    rep.relators.resize(rels.size());

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k = next++; k < rels.size(); k = next++) {
            const auto& r = rels[k];
            rep.relators[k] = RelatorResult{r.id, r.schema, r.instance, to_string(r.lhs),
                                            to_string(r.rhs), is_identity(evaluate(asgn, r.relator))};
        }
    };
    const unsigned workers = worker_count(rels.size());
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    }

    std::sort(rep.relators.begin(), rep.relators.end(),
              [](const RelatorResult& a, const RelatorResult& b) { return a.id < b.id; });
    rep.pass = std::all_of(rep.relators.begin(), rep.relators.end(),
                           [](const RelatorResult& r) { return r.pass; });
    return rep;
}

Assignment perturb_assignment(const Assignment& asgn, std::mt19937_64& rng)
{
    const auto src_rank = asgn.source().generators().rank();
    const auto tgt_rank = asgn.target().rank();
    if (src_rank == 0 || tgt_rank == 0)
        throw InvalidParameter("perturb_assignment: nothing to perturb");
    std::uniform_int_distribution<std::uint32_t> pick_src(0, src_rank - 1);
    std::uniform_int_distribution<std::uint32_t> pick_tgt(0, tgt_rank - 1);
    std::uniform_int_distribution<int> pick_sign(0, 1);

    const auto g = pick_src(rng);
    const auto v = pick_tgt(rng);
    const auto y = pick_tgt(rng);
    const int e = pick_sign(rng) ? 1 : -1;

    auto images = asgn.images();
    const auto& old = images[g].image(v);
    images[g] = images[g].replaced(v, old * Word::generator(asgn.target(), y, e));
    return Assignment::unchecked(asgn.name() + " (perturbed)", asgn.source(), asgn.target(),
                                 std::move(images), asgn.inverse_images(), asgn.side());
}

} // namespace braidrep
