#include "braidrep/representations.hpp"

#include <utility>

#include "braidrep/errors.hpp"

namespace braidrep {

namespace {

std::uint32_t u32(int v) { return static_cast<std::uint32_t>(v); }

// Word helpers over one target alphabet.
class Basis {
public:
    explicit Basis(const Alphabet& a) : a_(a) {}

    const Alphabet& alphabet() const { return a_; }
    Word one() const { return Word(a_); }
    Word g(Family f, int i, int e = 1) const { return Word::generator(a_, f, u32(i), e); }
    Word t(int i, int e = 1) const { return g(Family::tau, i, e); }
    Word w(int i, int e = 1) const { return g(Family::w, i, e); }
    Word xi(int i, int e = 1) const { return g(Family::xi, i, e); }
    Word x(int i, int e = 1) const { return g(Family::x, i, e); }
    std::uint32_t id(Family f, int i) const { return a_.gen(f, u32(i)); }

    template <class... Ws>
    Word cat(const Ws&... ws) const
    {
        WordBuilder b(a_);
        (b.push(ws), ...);
        return std::move(b).finish();
    }

private:
    const Alphabet& a_;
};

using Changes = std::vector<std::pair<std::uint32_t, Word>>;

struct Endo2 {
    FreeEndo forward;
    FreeEndo backward;
};

// v -> alpha v beta with alpha, beta inside the block.
struct OffBlock {
    std::uint32_t gen;
    Word alpha;
    Word beta;
};

// f acts on a block H by an automorphism whose inverse h is `block_inverse`,
// and on every other listed generator v by v -> alpha v beta with alpha, beta
// in H.  Then f^{-1}(v) = h(alpha)^{-1} v h(beta)^{-1}.
FreeEndo triangular_inverse(const Alphabet& A, const Changes& block_inverse,
                            const std::vector<OffBlock>& parts)
{
    auto h = FreeEndo::with_images(A, block_inverse);
    Changes all = block_inverse;
    for (const auto& p : parts) {
        auto v = Word::generator(A, p.gen);
        all.emplace_back(p.gen, invert(apply(h, p.alpha)) * v * invert(apply(h, p.beta)));
    }
    return FreeEndo::with_images(A, std::move(all));
}

// y_i -> y_i y_{i+1} y_i^{-1}, y_{i+1} -> y_i: the common shape of the Artin
// generators and of σ_i acting on the τ's.
Endo2 braid_pair(const Basis& B, Family f, int i)
{
    auto y = B.g(f, i);
    auto z = B.g(f, i + 1);
    auto fi = B.id(f, i);
    auto fz = B.id(f, i + 1);
    return {FreeEndo::with_images(B.alphabet(), {{fi, B.cat(y, z, invert(y))}, {fz, y}}),
            FreeEndo::with_images(B.alphabet(), {{fi, z}, {fz, B.cat(invert(z), y, z)}})};
}

bool odd_pair(int s, int r) { return s % 2 == 1 && r == s + 1; }

// ρ_U(x_r): the block <τ_1, w_r> is conjugated by P = w_r^{-1} τ_1.
Endo2 u_x(const Basis& B, int G, int p, int r)
{
    const auto& A = B.alphabet();
    auto t1 = B.t(1);
    auto wr = B.w(r);
    auto P = B.cat(invert(wr), t1);
    auto Q = commutator(invert(wr), t1);
    Changes fwd{{B.id(Family::tau, 1), conjugate(t1, P)}, {B.id(Family::w, r), conjugate(wr, t1)}};
    std::vector<OffBlock> parts;
    for (int s = 1; s < r; ++s) {
        if (odd_pair(s, r)) continue;
        fwd.emplace_back(B.id(Family::w, s), conjugate(B.w(s), Q));
        parts.push_back({B.id(Family::w, s), invert(Q), Q});
    }
    if (r % 2 == 0) {
        auto c = commutator(t1, invert(wr));
        fwd.emplace_back(B.id(Family::w, r - 1), B.cat(c, B.w(r - 1), t1));
        parts.push_back({B.id(Family::w, r - 1), c, t1});
    } else if (r + 1 <= G) {
        fwd.emplace_back(B.id(Family::w, r + 1), B.cat(invert(t1), B.w(r + 1)));
        parts.push_back({B.id(Family::w, r + 1), invert(t1), B.one()});
    }
    for (int j = 1; j <= p - 1; ++j) {
        fwd.emplace_back(B.id(Family::xi, j), conjugate(B.xi(j), Q));
        parts.push_back({B.id(Family::xi, j), invert(Q), Q});
    }
    auto Pi = invert(P);
    Changes block_inv{{B.id(Family::tau, 1), B.cat(P, t1, Pi)}, {B.id(Family::w, r), B.cat(P, wr, Pi)}};
    return {FreeEndo::with_images(A, std::move(fwd)), triangular_inverse(A, block_inv, parts)};
}

// ρ_U(z_j), also ρ_W(z_j): the block <τ_1, ξ_j> is conjugated by ξ_j^{-1} τ_1.
Endo2 u_z(const Basis& B, int j)
{
    const auto& A = B.alphabet();
    auto t1 = B.t(1);
    auto xj = B.xi(j);
    auto P = B.cat(invert(xj), t1);
    auto Q = commutator(invert(xj), t1);
    Changes fwd{{B.id(Family::tau, 1), conjugate(t1, P)}, {B.id(Family::xi, j), conjugate(xj, t1)}};
    std::vector<OffBlock> parts;
    for (int l = 1; l < j; ++l) {
        fwd.emplace_back(B.id(Family::xi, l), conjugate(B.xi(l), Q));
        parts.push_back({B.id(Family::xi, l), invert(Q), Q});
    }
    auto Pi = invert(P);
    Changes block_inv{{B.id(Family::tau, 1), B.cat(P, t1, Pi)}, {B.id(Family::xi, j), B.cat(P, xj, Pi)}};
    return {FreeEndo::with_images(A, std::move(fwd)), triangular_inverse(A, block_inv, parts)};
}

// ρ_W(a_r).  On <τ_1, w_r> this is not inner; τ_1 -> (τ_1^{-1})^{w_r^{-1} τ_1}.
Endo2 w_a(const Basis& B, int p, int r)
{
    const auto& A = B.alphabet();
    auto t1 = B.t(1);
    auto wr = B.w(r);
    auto c = B.cat(wr, t1, invert(wr), t1);
    Changes fwd{{B.id(Family::tau, 1), conjugate(invert(t1), B.cat(invert(wr), t1))},
                {B.id(Family::w, r), B.cat(invert(t1), wr)}};
    std::vector<OffBlock> parts;
    for (int s = 1; s < r; ++s) {
        fwd.emplace_back(B.id(Family::w, s), conjugate(B.w(s), c));
        parts.push_back({B.id(Family::w, s), invert(c), c});
    }
    for (int j = 1; j <= p - 1; ++j) {
        fwd.emplace_back(B.id(Family::xi, j), conjugate(B.xi(j), c));
        parts.push_back({B.id(Family::xi, j), invert(c), c});
    }
    Changes block_inv{{B.id(Family::tau, 1), B.cat(invert(wr), invert(t1), wr)},
                      {B.id(Family::w, r), B.cat(invert(wr), invert(t1), wr, wr)}};
    return {FreeEndo::with_images(A, std::move(fwd)), triangular_inverse(A, block_inv, parts)};
}

std::string params_string(std::initializer_list<int> ps)
{
    std::string out = "(";
    bool first = true;
    for (int p : ps) {
        if (!first) out += ',';
        out += std::to_string(p);
        first = false;
    }
    return out + ")";
}

void require(bool ok, const std::string& what)
{
    if (!ok) throw InvalidParameter(what);
}

} // namespace

std::string_view rep_family_name(RepFamily f)
{
    switch (f) {
    case RepFamily::artin: return "artin";
    case RepFamily::rho_u: return "rho-u";
    case RepFamily::rho_w: return "rho-w";
    case RepFamily::rho_v: return "rho-v";
    case RepFamily::rho_d: return "rho-d";
    case RepFamily::iota_d: return "iota-d";
    }
    return "?";
}

std::optional<RepFamily> rep_family_from_name(std::string_view name)
{
    for (auto f : {RepFamily::artin, RepFamily::rho_u, RepFamily::rho_w, RepFamily::rho_v,
                   RepFamily::rho_d, RepFamily::iota_d})
        if (rep_family_name(f) == name) return f;
    return std::nullopt;
}

void validate(const RepParams& q)
{
    const std::string who(rep_family_name(q.family));
    switch (q.family) {
    case RepFamily::artin:
    case RepFamily::rho_d:
    case RepFamily::iota_d: require(q.n >= 2, who + ": n >= 2 required"); break;
    case RepFamily::rho_u:
        require(q.n >= 3 && q.g >= 0 && q.p >= 1, who + ": need n >= 3, g >= 0, p >= 1");
        break;
    case RepFamily::rho_w:
        require(q.n >= 2 && q.g >= 1 && q.p >= 1, who + ": need n >= 2, g >= 1, p >= 1");
        break;
    case RepFamily::rho_v: require(q.n >= 3 && q.g >= 1, who + ": need n >= 3, g >= 1"); break;
    }
}

std::uint32_t target_rank(const RepParams& q)
{
    validate(q);
    switch (q.family) {
    case RepFamily::artin: return u32(q.n);
    case RepFamily::rho_u: return u32(q.n + q.p + 2 * q.g - 2);
    case RepFamily::rho_w: return u32(q.n + q.g + q.p - 2);
    case RepFamily::rho_v: return u32(q.n - 2 + 2 * q.g);
    case RepFamily::rho_d: return u32(q.n - 1);
    case RepFamily::iota_d: return u32(q.n);
    }
    return 0;
}

std::string describe(const RepParams& q)
{
    std::string name(rep_family_name(q.family));
    switch (q.family) {
    case RepFamily::rho_u:
    case RepFamily::rho_w: return name + params_string({q.n, q.g, q.p});
    case RepFamily::rho_v: return name + params_string({q.n, q.g});
    default: return name + params_string({q.n});
    }
}

Assignment make_representation(const RepParams& q)
{
    validate(q);
    switch (q.family) {
    case RepFamily::artin: return artin_rep(q.n);
    case RepFamily::rho_u: return rho_u(q.n, q.g, q.p);
    case RepFamily::rho_w: return rho_w(q.n, q.g, q.p);
    case RepFamily::rho_v: return rho_v(q.n, q.g);
    case RepFamily::rho_d: return rho_d(q.n);
    case RepFamily::iota_d: return iota_d(q.n);
    }
    throw InvalidParameter("unknown representation family");
}

const Alphabet& free_alphabet(int n) { return Alphabet::get({{Family::x, u32(n)}}); }

const Alphabet& u_alphabet(int n, int g, int p)
{
    return Alphabet::get({{Family::tau, u32(n - 1)}, {Family::w, u32(2 * g)}, {Family::xi, u32(p - 1)}});
}

const Alphabet& w_alphabet(int n, int g, int p)
{
    return Alphabet::get({{Family::tau, u32(n - 1)}, {Family::w, u32(g)}, {Family::xi, u32(p - 1)}});
}

const Alphabet& v_alphabet(int n, int g)
{
    return Alphabet::get({{Family::tau, u32(n - 2), 2}, {Family::w, u32(2 * g)}});
}

Assignment artin_rep(int n)
{
    validate({RepFamily::artin, n});
    Basis B(free_alphabet(n));
    std::vector<FreeEndo> fwd, bwd;
    for (int i = 1; i <= n - 1; ++i) {
        auto e = braid_pair(B, Family::x, i);
        fwd.push_back(std::move(e.forward));
        bwd.push_back(std::move(e.backward));
    }
    return Assignment::certified("artin" + params_string({n}), braid_presentation(n), B.alphabet(),
                                 std::move(fwd), std::move(bwd), ActionSide::left);
}

Assignment rho_u(int n, int g, int p)
{
    validate({RepFamily::rho_u, n, g, p});
    auto src = surface_braid_presentation(n - 1, g, p);
    Basis B(u_alphabet(n, g, p));
    std::vector<FreeEndo> fwd, bwd;
    const auto& S = src.generators();
    for (std::uint32_t gen = 0; gen < S.rank(); ++gen) {
        auto r = S.ref(gen);
        int k = static_cast<int>(r.index);
        Endo2 e = r.family == Family::sigma ? braid_pair(B, Family::tau, k)
                  : r.family == Family::x   ? u_x(B, 2 * g, p, k)
                                            : u_z(B, k);
        fwd.push_back(std::move(e.forward));
        bwd.push_back(std::move(e.backward));
    }
    return Assignment::certified("rho-u" + params_string({n, g, p}), std::move(src), B.alphabet(),
                                 std::move(fwd), std::move(bwd), ActionSide::right);
}

Assignment rho_w(int n, int g, int p)
{
    validate({RepFamily::rho_w, n, g, p});
    auto src = nonorientable_presentation(n - 1, g, p);
    Basis B(w_alphabet(n, g, p));
    std::vector<FreeEndo> fwd, bwd;
    const auto& S = src.generators();
    for (std::uint32_t gen = 0; gen < S.rank(); ++gen) {
        auto r = S.ref(gen);
        int k = static_cast<int>(r.index);
        Endo2 e = r.family == Family::sigma ? braid_pair(B, Family::tau, k)
                  : r.family == Family::a   ? w_a(B, p, k)
                                            : u_z(B, k);
        fwd.push_back(std::move(e.forward));
        bwd.push_back(std::move(e.backward));
    }
    return Assignment::certified("rho-w" + params_string({n, g, p}), std::move(src), B.alphabet(),
                                 std::move(fwd), std::move(bwd), ActionSide::right);
}

Word tau1_word(int n, int g)
{
    validate({RepFamily::rho_v, n, g});
    Basis B(v_alphabet(n, g));
    WordBuilder b(B.alphabet());
    for (int m = 1; m <= g; ++m) b.push(commutator(B.w(2 * m - 1, -1), B.w(2 * m)));
    for (int i = n - 1; i >= 2; --i) b.push(B.t(i, -1));
    return std::move(b).finish();
}

Assignment rho_v(int n, int g)
{
    validate({RepFamily::rho_v, n, g});
    // ρ_U(n, g, 1) pushed through τ_1 := tau1_word; V is the span of the other generators.
    auto ru = rho_u(n, g, 1);
    const auto& U = ru.target();
    const auto& V = v_alphabet(n, g);
    auto T = tau1_word(n, g);

    std::vector<Word> embed, phi;
    for (std::uint32_t v = 0; v < V.rank(); ++v) {
        auto r = V.ref(v);
        embed.push_back(Word::generator(U, r.family, r.index));
    }
    for (std::uint32_t u = 0; u < U.rank(); ++u) {
        auto r = U.ref(u);
        if (r.family == Family::tau && r.index == 1)
            phi.push_back(T);
        else
            phi.push_back(Word::generator(V, r.family, r.index));
    }
    Substitution into_u(V, U, std::move(embed));
    Substitution onto_v(U, V, std::move(phi));
    auto restrict = [&](const FreeEndo& f) {
        std::vector<Word> im;
        for (std::uint32_t v = 0; v < V.rank(); ++v)
            im.push_back(apply(onto_v, apply(f, into_u.image(v))));
        return FreeEndo(V, std::move(im));
    };
    std::vector<FreeEndo> fwd, bwd;
    for (std::uint32_t gen = 0; gen < ru.source().generators().rank(); ++gen) {
        fwd.push_back(restrict(ru.image(gen)));
        bwd.push_back(restrict(ru.inverse_image(gen)));
    }
    auto src = closed_surface_presentation(n - 1, g)
                   .without_schema("TR5", "closed_surface_braid" + params_string({n - 1, g}) +
                                              " without TR5");
    return Assignment::certified("rho-v" + params_string({n, g}), std::move(src), V,
                                 std::move(fwd), std::move(bwd), ActionSide::right);
}

Report rho_v_outer_check(int n, int g) { return rho_v_outer_check(rho_v(n, g), n, g); }

Report rho_v_outer_check(const Assignment& rv, int n, int g)
{
    auto rep = verify_representation(rv);
    // (σ_1...σ_{n-3} σ_{n-2}^2 σ_{n-3}...σ_1)^{-1} [x_1^{-1},x_2]...[x_{2g-1}^{-1},x_{2g}]
    const auto& S = rv.source().generators();
    auto s = [&](int i, int e = 1) { return Word::generator(S, Family::sigma, u32(i), e); };
    auto x = [&](int i, int e = 1) { return Word::generator(S, Family::x, u32(i), e); };
    WordBuilder pal(S), word(S);
    for (int i = 1; i <= n - 3; ++i) pal.push(s(i));
    pal.push(s(n - 2, 2));
    for (int i = n - 3; i >= 1; --i) pal.push(s(i));
    word.push(std::move(pal).finish(), true);
    for (int m = 1; m <= g; ++m) word.push(commutator(x(2 * m - 1, -1), x(2 * m)));
    auto u = std::move(word).finish();
    auto T = tau1_word(n, g);
    bool ok = endo_equal(evaluate(rv, u), inner(rv.target(), T));
    std::size_t id = rep.relators.empty() ? 1 : rep.relators.back().id + 1;
    rep.relators.push_back(RelatorResult{id, "RT.1", "outer", to_string(u),
                                         "inner(" + to_string(T) + ")", ok});
    rep.pass = rep.pass && ok;
    rep.presentation = "closed_surface_braid" + params_string({n - 1, g});
    return rep;
}

Assignment rho_d(int n)
{
    validate({RepFamily::rho_d, n});
    Basis B(free_alphabet(n - 1));
    const auto& A = B.alphabet();
    std::vector<FreeEndo> fwd, bwd;
    {
        Changes f, b;
        for (int j = 2; j <= n - 1; ++j) {
            f.emplace_back(B.id(Family::x, j), B.cat(B.x(1, -1), B.x(j)));
            b.emplace_back(B.id(Family::x, j), B.cat(B.x(1), B.x(j)));
        }
        fwd.push_back(FreeEndo::with_images(A, std::move(f)));
        bwd.push_back(FreeEndo::with_images(A, std::move(b)));
    }
    for (int i = 2; i <= n - 1; ++i) {
        auto xp = B.x(i - 1);
        auto xi = B.x(i);
        fwd.push_back(FreeEndo::with_images(
            A, {{B.id(Family::x, i - 1), xi}, {B.id(Family::x, i), B.cat(xi, invert(xp), xi)}}));
        bwd.push_back(FreeEndo::with_images(
            A, {{B.id(Family::x, i), xp}, {B.id(Family::x, i - 1), B.cat(xp, invert(xi), xp)}}));
    }
    return Assignment::certified("rho-d" + params_string({n}), braid_presentation(n), A,
                                 std::move(fwd), std::move(bwd), ActionSide::left);
}

Assignment iota_d(int n)
{
    validate({RepFamily::iota_d, n});
    Basis B(free_alphabet(n));
    const auto& A = B.alphabet();
    auto x1 = B.x(1);
    std::vector<FreeEndo> fwd, bwd;
    {
        // δ_1: x_j -> x_j x_1^{-1}, x_n -> x_1 x_n x_1^{-1}
        Changes f, b;
        for (int j = 2; j <= n - 1; ++j) {
            f.emplace_back(B.id(Family::x, j), B.cat(B.x(j), invert(x1)));
            b.emplace_back(B.id(Family::x, j), B.cat(B.x(j), x1));
        }
        f.emplace_back(B.id(Family::x, n), B.cat(x1, B.x(n), invert(x1)));
        b.emplace_back(B.id(Family::x, n), B.cat(invert(x1), B.x(n), x1));
        fwd.push_back(FreeEndo::with_images(A, std::move(f)));
        bwd.push_back(FreeEndo::with_images(A, std::move(b)));
    }
    {
        // δ_2: x_j -> x_1^{-1} x_j, x_n fixed
        Changes f, b;
        for (int j = 2; j <= n - 1; ++j) {
            f.emplace_back(B.id(Family::x, j), B.cat(invert(x1), B.x(j)));
            b.emplace_back(B.id(Family::x, j), B.cat(x1, B.x(j)));
        }
        fwd.push_back(FreeEndo::with_images(A, std::move(f)));
        bwd.push_back(FreeEndo::with_images(A, std::move(b)));
    }
    for (int i = 3; i <= n; ++i) {
        // δ_i acts as ρ_D(σ_{i-1}) on x_{i-2}, x_{i-1}
        auto xp = B.x(i - 2);
        auto xi = B.x(i - 1);
        fwd.push_back(FreeEndo::with_images(
            A, {{B.id(Family::x, i - 2), xi}, {B.id(Family::x, i - 1), B.cat(xi, invert(xp), xi)}}));
        bwd.push_back(FreeEndo::with_images(
            A, {{B.id(Family::x, i - 1), xp}, {B.id(Family::x, i - 2), B.cat(xp, invert(xi), xp)}}));
    }
    return Assignment::certified("iota-d" + params_string({n}), artin_tits_d_presentation(n), A,
                                 std::move(fwd), std::move(bwd), ActionSide::left);
}

std::vector<Word> lambda_words(int n)
{
    if (n < 2) throw InvalidParameter("lambda_words: n >= 2 required");
    const auto& D = artin_tits_d_alphabet(n);
    auto d = [&](int i, int e = 1) { return Word::generator(D, Family::delta, u32(i), e); };
    const auto l1 = d(1) * d(2, -1);
    std::vector<Word> out{l1};
    for (int i = 2; i <= n - 1; ++i) {
        WordBuilder pre(D);
        for (int k = i + 1; k >= 3; --k) pre.push(d(k));
        auto c = std::move(pre).finish();
        out.push_back(c * l1 * invert(c));
    }
    return out;
}

Word pi_d_word(const Word& u)
{
    const auto& D = u.alphabet();
    const int n = static_cast<int>(D.count(Family::delta));
    if (n < 2 || D.families().size() != 1) throw AlphabetMismatch("pi_d_word: expected a delta alphabet");
    const auto& S = braid_alphabet(n);
    std::vector<Word> im;
    for (int i = 1; i <= n; ++i) im.push_back(Word::generator(S, Family::sigma, u32(i <= 2 ? 1 : i - 1)));
    return apply(Substitution(D, S, std::move(im)), u);
}

Word s_d_word(const Word& u)
{
    const auto& S = u.alphabet();
    const int m = static_cast<int>(S.count(Family::sigma));
    if (m == 0 || S.families().size() != 1) throw AlphabetMismatch("s_d_word: expected a braid alphabet");
    const auto& D = artin_tits_d_alphabet(m + 1);
    std::vector<Word> im;
    for (int i = 1; i <= m; ++i) im.push_back(Word::generator(D, Family::delta, u32(i + 1)));
    return apply(Substitution(S, D, std::move(im)), u);
}

Word fixed_product_orientable(int n, int g, int p)
{
    validate({RepFamily::rho_u, n, g, p});
    Basis B(u_alphabet(n, g, p));
    WordBuilder b(B.alphabet());
    for (int i = n - 1; i >= 1; --i) b.push(B.t(i, -1));
    for (int j = 1; j <= p - 1; ++j) b.push(B.xi(j));
    for (int m = 1; m <= g; ++m) b.push(commutator(B.w(2 * m - 1, -1), B.w(2 * m)));
    return std::move(b).finish();
}

Word fixed_product_nonorientable(int n, int g, int p)
{
    validate({RepFamily::rho_w, n, g, p});
    Basis B(w_alphabet(n, g, p));
    WordBuilder b(B.alphabet());
    for (int i = n - 1; i >= 1; --i) b.push(B.t(i, -1));
    for (int j = 1; j <= p - 1; ++j) b.push(B.xi(j));
    for (int r = 1; r <= g; ++r) b.push(B.w(r, 2));
    return std::move(b).finish();
}

Word generator_product(int n)
{
    const auto& A = free_alphabet(n);
    WordBuilder b(A);
    for (std::uint32_t g = 0; g < A.rank(); ++g) b.push(g, 1);
    return std::move(b).finish();
}

Word full_twist_word(int n)
{
    const auto& S = braid_alphabet(n);
    WordBuilder b(S);
    for (int k = 0; k < n; ++k)
        for (std::uint32_t g = 0; g < S.rank(); ++g) b.push(g, 1);
    return std::move(b).finish();
}

ArtinCheck artin_conditions(const FreeEndo& f, const Word& product)
{
    const auto& A = f.alphabet();
    if (&product.alphabet() != &A) throw AlphabetMismatch("artin_condition_check: product alphabet");
    const auto n = A.rank();
    std::vector<std::uint32_t> s(n);
    std::vector<Word> conj;
    std::vector<bool> hit(n, false);
    for (std::uint32_t i = 0; i < n; ++i) {
        auto cr = cyclic_reduce(f.image(i));
        auto ls = cr.core.letters();
        if (ls.size() != 1 || ls[0].exp != 1)
            return {std::nullopt, "image of " + A.name(i) + " (" + to_string(f.image(i)) +
                                      ") is not a conjugate of a generator"};
        if (hit[ls[0].gen])
            return {std::nullopt, "images of two generators are conjugates of " + A.name(ls[0].gen)};
        hit[ls[0].gen] = true;
        s[i] = ls[0].gen + 1;
        conj.push_back(std::move(cr.conjugator));
    }
    Permutation perm(std::move(s));
    for (std::uint32_t i = 0; i < n; ++i) {
        auto rebuilt = conjugate(Word::generator(A, perm(i + 1) - 1), conj[i]);
        if (!(rebuilt == f.image(i)))
            return {std::nullopt, "certificate does not reproduce the image of " + A.name(i)};
    }
    auto fp = apply(f, product);
    if (!(fp == product))
        return {std::nullopt, "product " + to_string(product) + " maps to " + to_string(fp)};
    return {ArtinCertificate{std::move(perm), std::move(conj)}, ""};
}

std::optional<ArtinCertificate> artin_condition_check(const FreeEndo& f, const Word& product)
{
    return artin_conditions(f, product).certificate;
}

Word fixed_product(const RepParams& q)
{
    switch (q.family) {
    case RepFamily::rho_u: return fixed_product_orientable(q.n, q.g, q.p);
    case RepFamily::rho_w: return fixed_product_nonorientable(q.n, q.g, q.p);
    case RepFamily::artin: validate(q); return generator_product(q.n);
    default: throw InvalidParameter("fixed product: supported for artin, rho-u, rho-w");
    }
}

Report fixed_product_report(const RepParams& q)
{
    Word A = fixed_product(q);
    Assignment asgn = make_representation(q);
    Report rep;
    rep.presentation = asgn.source().name();
    rep.assignment = asgn.name();
    const auto& S = asgn.source().generators();
    for (std::uint32_t gen = 0; gen < S.rank(); ++gen) {
        auto img = apply(asgn.image(gen), A);
        bool ok = img == A;
        rep.relators.push_back(
            RelatorResult{gen + 1, "fixed", S.name(gen), to_string(img), to_string(A), ok});
        rep.pass = rep.pass && ok;
    }
    return rep;
}

} // namespace braidrep
