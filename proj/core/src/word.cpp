#include "braidrep/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>

#include "braidrep/errors.hpp"

namespace braidrep {

Word::Word(const Alphabet& alphabet, std::span<const Letter> letters) : alphabet_(&alphabet)
{
    WordBuilder b(alphabet);
    b.reserve(letters.size());
    for (const auto& l : letters) {
        if (l.gen >= alphabet.rank())
            throw AlphabetMismatch("letter index " + std::to_string(l.gen) +
                                   " outside alphabet " + alphabet.describe());
        b.push(l);
    }
    letters_ = std::move(b).finish().letters_;
}

Word Word::generator(const Alphabet& alphabet, std::uint32_t gen, std::int32_t exp)
{
    Letter l{gen, exp};
    return Word(alphabet, std::span<const Letter>(&l, 1));
}

Word Word::generator(const Alphabet& alphabet, Family f, std::uint32_t index, std::int32_t exp)
{
    return generator(alphabet, alphabet.gen(f, index), exp);
}

std::size_t Word::length() const
{
    std::size_t n = 0;
    for (const auto& l : letters_) n += static_cast<std::size_t>(std::abs(l.exp));
    return n;
}

void WordBuilder::push(Letter l)
{
    if (l.exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == l.gen) {
        letters_.back().exp += l.exp;
        if (letters_.back().exp == 0) letters_.pop_back();
        return;
    }
    letters_.push_back(l);
}

void WordBuilder::push(const Word& w, bool inverted, std::uint32_t times)
{
    if (w.alphabet_ != alphabet_)
        throw AlphabetMismatch("word over " + w.alphabet().describe() + " used with " +
                               alphabet_->describe());
    auto ls = w.letters();
    for (std::uint32_t t = 0; t < times; ++t) {
        if (!inverted) {
            for (const auto& l : ls) push(l);
        } else {
            for (auto it = ls.rbegin(); it != ls.rend(); ++it) push(Letter{it->gen, -it->exp});
        }
    }
}

Word WordBuilder::finish() &&
{
    return Word(alphabet_, std::move(letters_));
}

Word multiply(const Word& u, const Word& v)
{
    WordBuilder b(u.alphabet());
    b.reserve(u.size() + v.size());
    b.push(u);
    b.push(v);
    return std::move(b).finish();
}

Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

Word invert(const Word& u)
{
    WordBuilder b(u.alphabet());
    b.push(u, true);
    return std::move(b).finish();
}

Word power(const Word& u, std::int64_t k)
{
    WordBuilder b(u.alphabet());
    auto times = static_cast<std::uint64_t>(k < 0 ? -k : k);
    for (std::uint64_t i = 0; i < times; ++i) b.push(u, k < 0);
    return std::move(b).finish();
}

Word conjugate(const Word& a, const Word& b)
{
    if (&a.alphabet() != &b.alphabet()) throw AlphabetMismatch("conjugate: alphabet mismatch");
    WordBuilder out(a.alphabet());
    out.push(b, true);
    out.push(a);
    out.push(b);
    return std::move(out).finish();
}

Word commutator(const Word& a, const Word& b)
{
    if (&a.alphabet() != &b.alphabet()) throw AlphabetMismatch("commutator: alphabet mismatch");
    WordBuilder out(a.alphabet());
    out.push(a, true);
    out.push(b, true);
    out.push(a);
    out.push(b);
    return std::move(out).finish();
}

CyclicReduction cyclic_reduce(const Word& u)
{
    const auto& alpha = u.alphabet();
    std::vector<Letter> ls(u.letters().begin(), u.letters().end());
    std::size_t lo = 0, hi = ls.size();
    // Stripped outer pieces p1 p2 ...; u = (p1 p2 ...) core (p1 p2 ...)^{-1}.
    WordBuilder outer(alpha);
    while (hi - lo >= 2) {
        Letter& f = ls[lo];
        Letter& l = ls[hi - 1];
        if (f.gen != l.gen || (f.exp > 0) == (l.exp > 0)) break;
        auto sgn = f.exp > 0 ? 1 : -1;
        auto k = std::min(std::abs(f.exp), std::abs(l.exp));
        outer.push(f.gen, sgn * k);
        f.exp -= sgn * k;
        l.exp += sgn * k;
        if (f.exp == 0) ++lo;
        if (l.exp == 0) --hi;
    }
    Word core(alpha, std::span<const Letter>(ls.data() + lo, hi - lo));
    return {std::move(core), invert(std::move(outer).finish())};
}

Word parse_word(std::string_view text, const Alphabet& alphabet)
{
    WordBuilder b(alphabet);
    std::size_t i = 0;
    auto fail = [&](const std::string& what) {
        throw ParseError("word '" + std::string(text) + "': " + what + " at offset " +
                         std::to_string(i));
    };
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail("expected generator name");
        auto prefix = text.substr(start, i - start);
        auto fam = family_from_prefix(prefix);
        if (!fam) fail("unknown generator name '" + std::string(prefix) + "'");
        std::size_t dstart = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == dstart) fail("missing index");
        std::uint32_t index = 0;
        auto [p1, e1] = std::from_chars(text.data() + dstart, text.data() + i, index);
        if (e1 != std::errc{}) fail("index out of range");
        auto gen = alphabet.find(*fam, index);
        if (!gen)
            fail("generator " + std::string(prefix) + std::to_string(index) +
                 " not in alphabet " + alphabet.describe());
        std::int32_t exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t estart = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            auto etext = text.substr(estart, i - estart);
            if (!etext.empty() && etext[0] == '+') etext.remove_prefix(1);
            if (etext.empty() || etext == "-") fail("malformed exponent");
            long long e = 0;
            auto [p2, e2] = std::from_chars(etext.data(), etext.data() + etext.size(), e);
            if (e2 != std::errc{} || p2 != etext.data() + etext.size() ||
                e > std::numeric_limits<std::int32_t>::max() / 2 ||
                e < -(std::numeric_limits<std::int32_t>::max() / 2))
                fail("malformed exponent");
            exp = static_cast<std::int32_t>(e);
        }
        if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
            !std::isalpha(static_cast<unsigned char>(text[i])))
            fail("unexpected character '" + std::string(1, text[i]) + "'");
        b.push(*gen, exp);
    }
    return std::move(b).finish();
}

std::string to_string(const Word& w)
{
    std::string out;
    for (const auto& l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += w.alphabet().name(l.gen);
        if (l.exp != 1) out += '^' + std::to_string(l.exp);
    }
    return out;
}

} // namespace braidrep
