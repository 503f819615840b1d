#include "braidrep/endomorphism.hpp"

#include <cstdlib>

#include "braidrep/errors.hpp"

namespace braidrep {

namespace {

void check_images(const Alphabet& source, const Alphabet& target, const std::vector<Word>& images)
{
    if (images.size() != source.rank())
        throw InvalidParameter("expected " + std::to_string(source.rank()) + " images, got " +
                               std::to_string(images.size()));
    for (const auto& w : images)
        if (&w.alphabet() != &target)
            throw AlphabetMismatch("image over " + w.alphabet().describe() + ", expected " +
                                   target.describe());
}

Word substitute(const Alphabet& source, const Alphabet& target, const std::vector<Word>& images,
                const Word& u)
{
    if (&u.alphabet() != &source)
        throw AlphabetMismatch("apply: word over " + u.alphabet().describe() + ", map expects " +
                               source.describe());
    WordBuilder b(target);
    for (const auto& l : u.letters())
        b.push(images[l.gen], l.exp < 0, static_cast<std::uint32_t>(std::abs(l.exp)));
    return std::move(b).finish();
}

void require_same(const FreeEndo& f, const FreeEndo& g, const char* what)
{
    if (&f.alphabet() != &g.alphabet())
        throw AlphabetMismatch(std::string(what) + ": alphabet mismatch");
}

} // namespace

Substitution::Substitution(const Alphabet& source, const Alphabet& target, std::vector<Word> images)
    : source_(&source), target_(&target), images_(std::move(images))
{
    check_images(source, target, images_);
}

Word apply(const Substitution& s, const Word& u)
{
    return substitute(s.source(), s.target(), s.images(), u);
}

FreeEndo::FreeEndo(const Alphabet& alphabet, std::vector<Word> images)
    : alphabet_(&alphabet), images_(std::move(images))
{
    check_images(alphabet, alphabet, images_);
}

FreeEndo FreeEndo::identity(const Alphabet& alphabet)
{
    std::vector<Word> im;
    im.reserve(alphabet.rank());
    for (std::uint32_t g = 0; g < alphabet.rank(); ++g) im.push_back(Word::generator(alphabet, g));
    return FreeEndo(alphabet, std::move(im));
}

FreeEndo FreeEndo::with_images(const Alphabet& alphabet,
                               std::vector<std::pair<std::uint32_t, Word>> changes)
{
    auto f = identity(alphabet);
    for (auto& [g, w] : changes) {
        if (&w.alphabet() != &alphabet) throw AlphabetMismatch("with_images: alphabet mismatch");
        f.images_.at(g) = std::move(w);
    }
    return f;
}

FreeEndo FreeEndo::replaced(std::uint32_t gen, Word image) const
{
    auto im = images_;
    im.at(gen) = std::move(image);
    return FreeEndo(*alphabet_, std::move(im));
}

Word apply(const FreeEndo& f, const Word& u)
{
    return substitute(f.alphabet(), f.alphabet(), f.images(), u);
}

FreeEndo compose(const FreeEndo& f, const FreeEndo& g)
{
    require_same(f, g, "compose");
    std::vector<Word> im;
    im.reserve(f.images().size());
    for (const auto& w : f.images()) im.push_back(apply(g, w));
    return FreeEndo(f.alphabet(), std::move(im));
}

FreeEndo inner(const Alphabet& alphabet, const Word& w)
{
    std::vector<Word> im;
    im.reserve(alphabet.rank());
    for (std::uint32_t g = 0; g < alphabet.rank(); ++g)
        im.push_back(conjugate(Word::generator(alphabet, g), w));
    return FreeEndo(alphabet, std::move(im));
}

bool is_identity(const FreeEndo& f)
{
    for (std::uint32_t g = 0; g < f.images().size(); ++g) {
        auto ls = f.image(g).letters();
        if (ls.size() != 1 || ls[0].gen != g || ls[0].exp != 1) return false;
    }
    return true;
}

bool endo_equal(const FreeEndo& f, const FreeEndo& g)
{
    require_same(f, g, "endo_equal");
    return f.images() == g.images();
}

bool verify_inverse(const FreeEndo& f, const FreeEndo& g)
{
    require_same(f, g, "verify_inverse");
    return is_identity(compose(f, g)) && is_identity(compose(g, f));
}

bool equal_mod_inner_by(const FreeEndo& f, const FreeEndo& g, const Word& c)
{
    require_same(f, g, "equal_mod_inner_by");
    return endo_equal(compose(f, inner(f.alphabet(), c)), g);
}

} // namespace braidrep
