#include "braidrep/rewriting.hpp"

#include <cstdlib>

#include "braidrep/errors.hpp"

namespace braidrep {

namespace {

Word sigma(const Alphabet& A, std::uint32_t i, int e = 1)
{
    return Word::generator(A, Family::sigma, i, e);
}

// σ_{n-1} ... σ_{k+1} σ_k^2 σ_{k+1}^{-1} ... σ_{n-1}^{-1}
Word tau_normal_form(const Alphabet& A, std::uint32_t n, std::uint32_t k)
{
    WordBuilder b(A);
    for (auto i = n - 1; i > k; --i) b.push(sigma(A, i));
    b.push(sigma(A, k, 2));
    for (auto i = k + 1; i <= n - 1; ++i) b.push(sigma(A, i, -1));
    return std::move(b).finish();
}

// m_1 a m_1^{-1}
Word m1_conjugate(const Transversal& t, const Word& a)
{
    const auto& m1 = t.representative(1);
    return m1 * a * invert(m1);
}

} // namespace

Transversal::Transversal(Presentation ambient) : ambient_(std::move(ambient))
{
    const auto& A = ambient_.generators();
    const auto n = ambient_.strands();
    if (n < 2 || A.count(Family::sigma) != n - 1)
        throw InvalidParameter("Transversal: presentation needs sigma_1..sigma_{n-1}, n >= 2");
    for (std::uint32_t i = 1; i <= n - 1; ++i)
        if (!(ambient_.perm_image(A.gen(Family::sigma, i)) == perm_of_transposition(i, n)))
            throw InvalidParameter("Transversal: sigma_i must map to (i i+1)");
    for (std::uint32_t l = 1; l <= n; ++l) {
        WordBuilder b(A);
        for (auto i = n - 1; i >= l && i >= 1; --i) b.push(sigma(A, i));
        reps_.push_back(std::move(b).finish());
    }
}

std::uint32_t Transversal::coset_index(const Word& u) const
{
    // u m_l^{-1} fixes n  <=>  l = π(u)^{-1}(n), since π(m_l) sends l to n.
    return permutation_image(ambient_, u).inverse()(n());
}

Word coset_representative(const Transversal& t, const Word& u)
{
    return t.representative(t.coset_index(u));
}

std::string RewriteSymbol::label(const Alphabet& ambient) const
{
    return "s[m" + std::to_string(lambda) + "," + ambient.name(gen) + "]";
}

std::vector<RewriteSymbol> subgroup_generators(const Transversal& t)
{
    const auto& P = t.presentation();
    const auto& A = P.generators();
    const auto n = t.n();

    // Normal forms that carry a derived name.
    std::vector<std::pair<Word, std::string>> named;
    for (std::uint32_t k = 1; k <= n - 1; ++k)
        named.emplace_back(tau_normal_form(A, n, k), "t" + std::to_string(k));
    for (auto fam : {Family::x, Family::a}) {
        for (std::uint32_t r = 1; r <= A.count(fam); ++r)
            named.emplace_back(m1_conjugate(t, Word::generator(A, fam, r)), "w" + std::to_string(r));
    }
    for (std::uint32_t j = 1; j <= A.count(Family::z); ++j)
        named.emplace_back(m1_conjugate(t, Word::generator(A, Family::z, j)), "xi" + std::to_string(j));

    std::vector<RewriteSymbol> out;
    out.reserve(n * A.rank());
    for (std::uint32_t l = 1; l <= n; ++l) {
        const auto& lam = t.representative(l);
        for (std::uint32_t gen = 0; gen < A.rank(); ++gen) {
            auto la = lam * Word::generator(A, gen);
            RewriteSymbol s{l, gen, std::nullopt, la * invert(coset_representative(t, la)), false};
            s.trivial = s.expansion.empty();
            if (!s.trivial) {
                for (const auto& [w, name] : named)
                    if (w == s.expansion) {
                        s.name = name;
                        break;
                    }
                auto ls = s.expansion.letters();
                if (!s.name && ls.size() == 1 && ls[0].exp == 1) s.name = A.name(ls[0].gen);
            }
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<SignedSymbol> rewrite(const Transversal& t, const Word& u)
{
    const auto& P = t.presentation();
    const auto& A = P.generators();
    if (&u.alphabet() != &A) throw AlphabetMismatch("rewrite: word not over " + P.name());
    if (!t.in_subgroup(u))
        throw NotInSubgroup("rewrite: " + to_string(u) + " is not in D_" + std::to_string(t.n()));

    // Coset index of the current prefix, updated letter by letter:
    // l(u a) = π(a)^{-1}(l(u)).
    const auto rank = A.rank();
    std::vector<SignedSymbol> out;
    std::uint32_t l = t.n();
    for (const auto& letter : u.letters()) {
        const auto& pa = P.perm_image(letter.gen);
        for (int k = 0; k < std::abs(letter.exp); ++k) {
            if (letter.exp > 0) {
                out.push_back({(l - 1) * rank + letter.gen, +1});
                l = pa.inverse()(l);
            } else {
                l = pa(l);
                out.push_back({(l - 1) * rank + letter.gen, -1});
            }
        }
    }
    // Drop symbols whose expansion is trivial.
    std::vector<SignedSymbol> kept;
    for (const auto& s : out) {
        auto lam = static_cast<std::uint32_t>(s.index / rank) + 1;
        auto gen = static_cast<std::uint32_t>(s.index % rank);
        auto la = t.representative(lam) * Word::generator(A, gen);
        if (!(la * invert(coset_representative(t, la))).empty()) kept.push_back(s);
    }
    return kept;
}

Word expand(const Transversal& t, const std::vector<SignedSymbol>& seq)
{
    const auto& A = t.presentation().generators();
    const auto rank = A.rank();
    WordBuilder b(A);
    for (const auto& s : seq) {
        auto lam = static_cast<std::uint32_t>(s.index / rank) + 1;
        auto gen = static_cast<std::uint32_t>(s.index % rank);
        auto la = t.representative(lam) * Word::generator(A, gen);
        b.push(la * invert(coset_representative(t, la)), s.exponent < 0);
    }
    return std::move(b).finish();
}

bool roundtrip_check(const Transversal& t, const Assignment& witness, const Word& u)
{
    const auto& P = t.presentation();
    if (&witness.source().generators() != &P.generators())
        throw AlphabetMismatch("roundtrip_check: witness is not a representation of " + P.name());
    auto back = expand(t, rewrite(t, u));
    return endo_equal(evaluate(witness, back), evaluate(witness, u)) &&
           permutation_image(P, back) == permutation_image(P, u);
}

FreeEndo induced_automorphism(const Transversal& t, const Assignment& witness,
                              const std::vector<SignedSymbol>& seq)
{
    const auto& A = t.presentation().generators();
    const auto rank = A.rank();
    auto acc = FreeEndo::identity(witness.target());
    for (const auto& s : seq) {
        auto lam = static_cast<std::uint32_t>(s.index / rank) + 1;
        auto gen = static_cast<std::uint32_t>(s.index % rank);
        auto la = t.representative(lam) * Word::generator(A, gen);
        auto e = la * invert(coset_representative(t, la));
        auto f = evaluate(witness, s.exponent > 0 ? e : invert(e));
        acc = witness.side() == ActionSide::right ? compose(acc, f) : compose(f, acc);
    }
    return acc;
}

std::string to_string(const Transversal& t, const std::vector<SignedSymbol>& seq)
{
    auto syms = subgroup_generators(t);
    const auto& A = t.presentation().generators();
    std::string out;
    for (const auto& s : seq) {
        if (!out.empty()) out += ' ';
        const auto& sym = syms[s.index];
        out += sym.name ? *sym.name : sym.label(A);
        if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
    }
    return out;
}

std::vector<RewrittenRelator> rewrite_relator_table(const Transversal& t, const Assignment& witness)
{
    std::vector<RewrittenRelator> out;
    for (const auto& r : t.presentation().relators()) {
        for (std::uint32_t l = 1; l <= t.n(); ++l) {
            const auto& lam = t.representative(l);
            auto seq = rewrite(t, lam * r.relator * invert(lam));
            bool id = is_identity(induced_automorphism(t, witness, seq));
            out.push_back({r.id, r.schema, r.instance, l, std::move(seq), id});
        }
    }
    return out;
}

Substitution dn_ambient_expansion(const Presentation& dn, const Presentation& ambient)
{
    Transversal t(ambient);
    const auto& D = dn.generators();
    const auto& A = ambient.generators();
    const auto n = t.n();
    if (dn.strands() != n) throw InvalidParameter("dn_ambient_expansion: strand counts differ");
    const Family handle = A.has(Family::a) ? Family::a : Family::x;
    std::vector<Word> im;
    for (std::uint32_t gen = 0; gen < D.rank(); ++gen) {
        auto r = D.ref(gen);
        switch (r.family) {
        case Family::tau: im.push_back(tau_normal_form(A, n, r.index)); break;
        case Family::w: im.push_back(m1_conjugate(t, Word::generator(A, handle, r.index))); break;
        case Family::xi: im.push_back(m1_conjugate(t, Word::generator(A, Family::z, r.index))); break;
        default: im.push_back(Word::generator(A, r.family, r.index)); break;
        }
    }
    return Substitution(D, A, std::move(im));
}

} // namespace braidrep
