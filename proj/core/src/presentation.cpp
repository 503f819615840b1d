#include "braidrep/presentation.hpp"

#include <initializer_list>
#include <utility>

#include "braidrep/errors.hpp"

namespace braidrep {

Presentation::Presentation(std::string name, const Alphabet& generators, std::uint32_t strands,
                           std::vector<Permutation> perm_images, std::vector<Relator> relators,
                           bool degenerate)
    : name_(std::move(name)), generators_(&generators), strands_(strands),
      perm_images_(std::move(perm_images)), relators_(std::move(relators)),
      degenerate_(degenerate)
{
    if (perm_images_.size() != generators.rank())
        throw InvalidParameter(name_ + ": one permutation per generator required");
    for (const auto& p : perm_images_)
        if (p.degree() != strands_) throw InvalidParameter(name_ + ": permutation degree mismatch");
    for (const auto& r : relators_) {
        if (&r.relator.alphabet() != generators_)
            throw AlphabetMismatch(name_ + ": relator over foreign alphabet");
        if (!permutation_image(*this, r.relator).is_identity())
            throw InvalidParameter(name_ + ": relator " + r.schema + "[" + r.instance +
                                   "] has non-trivial permutation image");
    }
}

Presentation Presentation::without_schema(const std::string& schema, std::string new_name) const
{
    std::vector<Relator> kept;
    for (const auto& r : relators_)
        if (r.schema != schema) kept.push_back(r);
    return Presentation(std::move(new_name), *generators_, strands_, perm_images_, std::move(kept),
                        degenerate_);
}

Permutation permutation_image(const Presentation& pres, const Word& u)
{
    if (&u.alphabet() != &pres.generators())
        throw AlphabetMismatch("permutation_image: word not over " + pres.name());
    auto result = Permutation::identity(pres.strands());
    for (const auto& l : u.letters()) {
        const auto& p = pres.perm_image(l.gen);
        auto step = l.exp > 0 ? p : p.inverse();
        for (int k = 0; k < std::abs(l.exp); ++k) result = perm_compose(result, step);
    }
    return result;
}

namespace {

std::string inst(std::initializer_list<std::pair<const char*, int>> kv)
{
    std::string out;
    for (const auto& [k, v] : kv) {
        if (!out.empty()) out += ',';
        out += k;
        out += '=';
        out += std::to_string(v);
    }
    return out;
}

std::string params(std::initializer_list<int> ps)
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

// Collects relators over one alphabet; generator helpers default to exponent 1.
class Relations {
public:
    explicit Relations(const Alphabet& a) : a_(a) {}

    Word one() const { return Word(a_); }
    Word g(Family f, int i, int e = 1) const
    {
        return Word::generator(a_, f, static_cast<std::uint32_t>(i), e);
    }
    Word s(int i, int e = 1) const { return g(Family::sigma, i, e); }
    Word x(int i, int e = 1) const { return g(Family::x, i, e); }
    Word z(int i, int e = 1) const { return g(Family::z, i, e); }
    Word a(int i, int e = 1) const { return g(Family::a, i, e); }
    Word t(int i, int e = 1) const { return g(Family::tau, i, e); }
    Word w(int i, int e = 1) const { return g(Family::w, i, e); }
    Word xi(int i, int e = 1) const { return g(Family::xi, i, e); }
    Word d(int i, int e = 1) const { return g(Family::delta, i, e); }

    template <class... Ws>
    Word cat(const Ws&... ws) const
    {
        WordBuilder b(a_);
        (b.push(ws), ...);
        return std::move(b).finish();
    }

    void add(std::string schema, std::string instance, Word lhs, Word rhs)
    {
        Word r = lhs * invert(rhs);
        rels_.push_back(Relator{rels_.size() + 1, std::move(schema), std::move(instance),
                                std::move(lhs), std::move(rhs), std::move(r)});
    }

    // σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1} for i < m-1, far commutation for i, j <= m-1.
    void braid_block(int m, const char* braid_schema, const char* commute_schema, Family f)
    {
        for (int i = 1; i + 1 <= m - 1; ++i)
            add(braid_schema, inst({{"i", i}}), cat(g(f, i), g(f, i + 1), g(f, i)),
                cat(g(f, i + 1), g(f, i), g(f, i + 1)));
        for (int i = 1; i <= m - 1; ++i)
            for (int j = i + 2; j <= m - 1; ++j)
                add(commute_schema, inst({{"i", i}, {"j", j}}), cat(g(f, i), g(f, j)),
                    cat(g(f, j), g(f, i)));
    }

    // (u) v = v (u)
    void commute(const char* schema, std::string instance, const Word& u, const Word& v)
    {
        add(schema, std::move(instance), cat(u, v), cat(v, u));
    }

    std::vector<Relator> take() { return std::move(rels_); }

private:
    const Alphabet& a_;
    std::vector<Relator> rels_;
};

std::vector<Permutation> sigma_perms(const Alphabet& a, std::uint32_t strands)
{
    std::vector<Permutation> out;
    for (std::uint32_t gen = 0; gen < a.rank(); ++gen) {
        auto r = a.ref(gen);
        if (r.family == Family::sigma)
            out.push_back(perm_of_transposition(r.index, strands));
        else
            out.push_back(Permutation::identity(strands));
    }
    return out;
}

bool odd_pair(int s, int r) { return s % 2 == 1 && r == s + 1; }

std::uint32_t u32(int v) { return static_cast<std::uint32_t>(v); }

} // namespace

const Alphabet& braid_alphabet(int n)
{
    if (n < 1) throw InvalidParameter("braid group needs n >= 1");
    return Alphabet::get({{Family::sigma, u32(n - 1)}});
}

const Alphabet& surface_alphabet(int n, int g, int p)
{
    return Alphabet::get(
        {{Family::sigma, u32(n - 1)}, {Family::x, u32(2 * g)}, {Family::z, u32(p - 1)}});
}

const Alphabet& nonorientable_alphabet(int n, int g, int p)
{
    return Alphabet::get(
        {{Family::sigma, u32(n - 1)}, {Family::a, u32(g)}, {Family::z, u32(p - 1)}});
}

const Alphabet& dn_orientable_alphabet(int n, int g, int p)
{
    return Alphabet::get({{Family::sigma, u32(n - 2)},
                          {Family::x, u32(2 * g)},
                          {Family::z, u32(p - 1)},
                          {Family::tau, u32(n - 1)},
                          {Family::w, u32(2 * g)},
                          {Family::xi, u32(p - 1)}});
}

const Alphabet& dn_nonorientable_alphabet(int n, int g, int p)
{
    return Alphabet::get({{Family::sigma, u32(n - 2)},
                          {Family::a, u32(g)},
                          {Family::z, u32(p - 1)},
                          {Family::tau, u32(n - 1)},
                          {Family::w, u32(g)},
                          {Family::xi, u32(p - 1)}});
}

const Alphabet& dn_closed_alphabet(int n, int g)
{
    return Alphabet::get({{Family::sigma, u32(n - 2)},
                          {Family::x, u32(2 * g)},
                          {Family::tau, u32(n - 1)},
                          {Family::w, u32(2 * g)}});
}

const Alphabet& artin_tits_d_alphabet(int n)
{
    return Alphabet::get({{Family::delta, u32(n)}});
}

Presentation braid_presentation(int n)
{
    if (n < 2) throw InvalidParameter("braid_presentation: n >= 2 required");
    const auto& A = braid_alphabet(n);
    Relations R(A);
    R.braid_block(n, "braid", "commute", Family::sigma);
    return Presentation("braid" + params({n}), A, u32(n), sigma_perms(A, u32(n)), R.take());
}

Presentation surface_braid_presentation(int n, int g, int p)
{
    if (n < 1 || g < 0 || p < 1)
        throw InvalidParameter("surface_braid_presentation: need n >= 1, g >= 0, p >= 1");
    const auto& A = surface_alphabet(n, g, p);
    Relations R(A);
    R.braid_block(n, "braid", "commute", Family::sigma);
    if (n >= 2) {
        const int G = 2 * g;
        for (int r = 1; r <= G; ++r)
            for (int i = 2; i <= n - 1; ++i)
                R.commute("R1", inst({{"r", r}, {"i", i}}), R.x(r), R.s(i));
        for (int r = 1; r <= G; ++r)
            R.commute("R2", inst({{"r", r}}), R.cat(R.s(1, -1), R.x(r), R.s(1, -1)), R.x(r));
        for (int s = 1; s <= G; ++s)
            for (int r = s + 1; r <= G; ++r) {
                if (odd_pair(s, r)) continue;
                R.commute("R3", inst({{"s", s}, {"r", r}}), R.cat(R.s(1, -1), R.x(s), R.s(1)),
                          R.x(r));
            }
        for (int m = 1; m <= g; ++m)
            R.add("R4", inst({{"m", m}}), R.cat(R.s(1, -1), R.x(2 * m - 1), R.s(1, -1), R.x(2 * m)),
                  R.cat(R.x(2 * m), R.s(1, -1), R.x(2 * m - 1), R.s(1)));
        for (int j = 1; j <= p - 1; ++j)
            for (int i = 2; i <= n - 1; ++i)
                R.commute("R5", inst({{"j", j}, {"i", i}}), R.z(j), R.s(i));
        for (int r = 1; r <= G; ++r)
            for (int j = 1; j <= p - 1; ++j)
                R.commute("R6", inst({{"r", r}, {"j", j}}), R.cat(R.s(1, -1), R.z(j), R.s(1)),
                          R.x(r));
        for (int j = 1; j <= p - 1; ++j)
            for (int l = j + 1; l <= p - 1; ++l)
                R.commute("R7", inst({{"j", j}, {"l", l}}), R.cat(R.s(1, -1), R.z(j), R.s(1)),
                          R.z(l));
        // Symmetric form; see README "Conventions".
        for (int j = 1; j <= p - 1; ++j)
            R.commute("R8", inst({{"j", j}}), R.cat(R.s(1, -1), R.z(j), R.s(1, -1)), R.z(j));
    }
    return Presentation("surface_braid" + params({n, g, p}), A, u32(n), sigma_perms(A, u32(n)),
                        R.take());
}

Presentation nonorientable_presentation(int n, int g, int p)
{
    if (n < 1 || g < 1 || p < 1)
        throw InvalidParameter("nonorientable_presentation: need n >= 1, g >= 1, p >= 1");
    const auto& A = nonorientable_alphabet(n, g, p);
    Relations R(A);
    R.braid_block(n, "braid", "commute", Family::sigma);
    if (n >= 2) {
        for (int r = 1; r <= g; ++r)
            for (int i = 2; i <= n - 1; ++i)
                R.commute("R1", inst({{"r", r}, {"i", i}}), R.a(r), R.s(i));
        for (int r = 1; r <= g; ++r)
            R.add("R2", inst({{"r", r}}), R.cat(R.s(1, -1), R.a(r), R.s(1, -1), R.a(r)),
                  R.cat(R.a(r), R.s(1, -1), R.a(r), R.s(1)));
        for (int s = 1; s <= g; ++s)
            for (int r = s + 1; r <= g; ++r)
                R.commute("R3", inst({{"s", s}, {"r", r}}), R.cat(R.s(1, -1), R.a(s), R.s(1)),
                          R.a(r));
        for (int j = 1; j <= p - 1; ++j)
            for (int i = 2; i <= n - 1; ++i)
                R.commute("R4", inst({{"j", j}, {"i", i}}), R.z(j), R.s(i));
        for (int r = 1; r <= g; ++r)
            for (int j = 1; j <= p - 1; ++j)
                R.commute("R5", inst({{"r", r}, {"j", j}}), R.cat(R.s(1, -1), R.z(j), R.s(1)),
                          R.a(r));
        for (int j = 1; j <= p - 1; ++j)
            for (int l = j + 1; l <= p - 1; ++l)
                R.commute("R6", inst({{"j", j}, {"l", l}}), R.cat(R.s(1, -1), R.z(j), R.s(1)),
                          R.z(l));
        for (int j = 1; j <= p - 1; ++j)
            R.commute("R7", inst({{"j", j}}), R.cat(R.s(1, -1), R.z(j), R.s(1, -1)), R.z(j));
    }
    return Presentation("nonorientable_braid" + params({n, g, p}), A, u32(n),
                        sigma_perms(A, u32(n)), R.take());
}

Presentation closed_surface_presentation(int n, int g)
{
    if (n < 2 || g < 1) throw InvalidParameter("closed_surface_presentation: need n >= 2, g >= 1");
    const auto& A = surface_alphabet(n, g, 1);
    Relations R(A);
    R.braid_block(n, "braid", "commute", Family::sigma);
    const int G = 2 * g;
    for (int r = 1; r <= G; ++r)
        for (int i = 2; i <= n - 1; ++i)
            R.commute("R1", inst({{"r", r}, {"i", i}}), R.x(r), R.s(i));
    for (int r = 1; r <= G; ++r)
        R.commute("R2", inst({{"r", r}}), R.cat(R.s(1, -1), R.x(r), R.s(1, -1)), R.x(r));
    for (int s = 1; s <= G; ++s)
        for (int r = s + 1; r <= G; ++r) {
            if (odd_pair(s, r)) continue;
            R.commute("R3", inst({{"s", s}, {"r", r}}), R.cat(R.s(1, -1), R.x(s), R.s(1)), R.x(r));
        }
    for (int m = 1; m <= g; ++m)
        R.add("R4", inst({{"m", m}}), R.cat(R.s(1, -1), R.x(2 * m - 1), R.s(1, -1), R.x(2 * m)),
              R.cat(R.x(2 * m), R.s(1, -1), R.x(2 * m - 1), R.s(1)));
    WordBuilder lhs(A), rhs(A);
    for (int m = 1; m <= g; ++m) lhs.push(commutator(R.x(2 * m - 1, -1), R.x(2 * m)));
    for (int i = 1; i <= n - 2; ++i) rhs.push(R.s(i));
    rhs.push(R.s(n - 1, 2));
    for (int i = n - 2; i >= 1; --i) rhs.push(R.s(i));
    R.add("TR5", "", std::move(lhs).finish(), std::move(rhs).finish());
    return Presentation("closed_surface_braid" + params({n, g}), A, u32(n), sigma_perms(A, u32(n)),
                        R.take());
}

namespace {

// (B1)-(B5): σ_1..σ_{n-2} with the τ_1..τ_{n-1} conjugation rules.
void dn_braid_relations(Relations& R, int n)
{
    R.braid_block(n - 1, "B1", "B2", Family::sigma);
    for (int k = 1; k <= n - 2; ++k)
        for (int l = 1; l <= n - 1; ++l) {
            if (k == l - 1 || k == l) continue;
            R.add("B3", inst({{"k", k}, {"l", l}}), R.cat(R.s(k, -1), R.t(l), R.s(k)), R.t(l));
        }
    for (int l = 2; l <= n - 1; ++l)
        R.add("B4", inst({{"l", l}}), R.cat(R.s(l - 1, -1), R.t(l), R.s(l - 1)), R.t(l - 1));
    for (int l = 1; l <= n - 2; ++l)
        R.add("B5", inst({{"l", l}}), R.cat(R.s(l, -1), R.t(l), R.s(l)),
              R.cat(R.t(l), R.t(l + 1), R.t(l, -1)));
}

void check_dn(int n, const char* who)
{
    if (n < 2) throw InvalidParameter(std::string(who) + ": n >= 2 required");
}

} // namespace

Presentation dn_orientable_presentation(int n, int g, int p)
{
    check_dn(n, "dn_orientable_presentation");
    if (g < 0 || p < 1) throw InvalidParameter("dn_orientable_presentation: g >= 0, p >= 1");
    const auto& A = dn_orientable_alphabet(n, g, p);
    Relations R(A);
    const bool s1 = n >= 3; // schemas that mention σ_1
    const int G = 2 * g;
    dn_braid_relations(R, n);
    auto t1 = R.t(1);
    auto t1i = R.t(1, -1);
    for (int r = 1; r <= G; ++r) {
        for (int i = 2; i <= n - 2; ++i) R.commute("R1.1", inst({{"r", r}, {"i", i}}), R.x(r), R.s(i));
        for (int i = 2; i <= n - 1; ++i) R.commute("R1.2", inst({{"r", r}, {"i", i}}), R.x(r), R.t(i));
        for (int i = 1; i <= n - 2; ++i) R.commute("R1.3", inst({{"r", r}, {"i", i}}), R.w(r), R.s(i));
    }
    for (int r = 1; r <= G; ++r) {
        if (s1)
            R.commute("R2.1", inst({{"r", r}}), R.cat(R.s(1, -1), R.x(r), R.s(1, -1)), R.x(r));
        R.add("R2.2", inst({{"r", r}}), R.cat(R.x(r, -1), R.w(r), R.x(r)), R.cat(t1i, R.w(r), t1));
        R.add("R2.3", inst({{"r", r}}), R.cat(R.x(r, -1), t1, R.x(r)),
              R.cat(t1i, R.w(r), t1, R.w(r, -1), t1));
    }
    for (int s = 1; s <= G; ++s)
        for (int r = s + 1; r <= G; ++r) {
            if (odd_pair(s, r)) continue;
            auto k = inst({{"s", s}, {"r", r}});
            if (s1) R.commute("R3.1", k, R.cat(R.s(1, -1), R.x(s), R.s(1)), R.x(r));
            R.add("R3.2", k, R.cat(R.x(r, -1), t1i, R.w(s), t1, R.x(r)), R.cat(t1i, R.w(s), t1));
            R.commute("R3.3", k, R.x(s), R.w(r));
        }
    for (int m = 1; m <= g; ++m) {
        auto k = inst({{"m", m}});
        if (s1)
            R.add("R4.1", k, R.cat(R.s(1, -1), R.x(2 * m - 1), R.s(1, -1), R.x(2 * m)),
                  R.cat(R.x(2 * m), R.s(1, -1), R.x(2 * m - 1), R.s(1)));
        R.add("R4.2", k, R.cat(R.x(2 * m, -1), t1i, R.w(2 * m - 1), R.x(2 * m)),
              R.cat(t1i, R.w(2 * m - 1), t1));
        R.add("R4.3", k, R.cat(R.x(2 * m - 1, -1), R.w(2 * m), R.x(2 * m - 1)),
              R.cat(t1i, R.w(2 * m)));
    }
    for (int j = 1; j <= p - 1; ++j) {
        for (int i = 2; i <= n - 2; ++i) R.commute("R5.1", inst({{"j", j}, {"i", i}}), R.z(j), R.s(i));
        for (int i = 2; i <= n - 1; ++i) R.commute("R5.2", inst({{"j", j}, {"i", i}}), R.z(j), R.t(i));
        for (int i = 1; i <= n - 2; ++i) R.commute("R5.3", inst({{"j", j}, {"i", i}}), R.xi(j), R.s(i));
    }
    for (int r = 1; r <= G; ++r)
        for (int j = 1; j <= p - 1; ++j) {
            auto k = inst({{"r", r}, {"j", j}});
            if (s1) R.commute("R6.1", k, R.cat(R.s(1, -1), R.z(j), R.s(1)), R.x(r));
            R.add("R6.2", k, R.cat(R.x(r, -1), t1i, R.xi(j), t1, R.x(r)), R.cat(t1i, R.xi(j), t1));
            R.commute("R6.3", k, R.z(j), R.w(r));
        }
    for (int j = 1; j <= p - 1; ++j)
        for (int l = j + 1; l <= p - 1; ++l) {
            auto k = inst({{"j", j}, {"l", l}});
            if (s1) R.commute("R7.1", k, R.cat(R.s(1, -1), R.z(j), R.s(1)), R.z(l));
            R.add("R7.2", k, R.cat(R.z(l, -1), t1i, R.xi(j), t1, R.z(l)), R.cat(t1i, R.xi(j), t1));
            R.commute("R7.3", k, R.z(j), R.xi(l));
        }
    for (int j = 1; j <= p - 1; ++j) {
        auto k = inst({{"j", j}});
        if (s1) R.commute("R8.1", k, R.cat(R.s(1, -1), R.z(j), R.s(1, -1)), R.z(j));
        R.add("R8.2", k, R.cat(R.z(j, -1), t1i, R.xi(j), R.z(j)), R.cat(t1i, R.xi(j)));
        R.add("R8.3", k, R.cat(R.z(j, -1), R.xi(j), R.z(j)), R.cat(t1i, R.xi(j), t1));
    }
    return Presentation("dn_orientable" + params({n, g, p}), A, u32(n), sigma_perms(A, u32(n)),
                        R.take(), n == 2);
}

Presentation dn_nonorientable_presentation(int n, int g, int p)
{
    check_dn(n, "dn_nonorientable_presentation");
    if (g < 1 || p < 1) throw InvalidParameter("dn_nonorientable_presentation: g >= 1, p >= 1");
    const auto& A = dn_nonorientable_alphabet(n, g, p);
    Relations R(A);
    const bool s1 = n >= 3;
    dn_braid_relations(R, n);
    auto t1 = R.t(1);
    auto t1i = R.t(1, -1);
    for (int r = 1; r <= g; ++r) {
        for (int i = 2; i <= n - 2; ++i) R.commute("R1.1", inst({{"r", r}, {"i", i}}), R.a(r), R.s(i));
        for (int i = 2; i <= n - 1; ++i) R.commute("R1.2", inst({{"r", r}, {"i", i}}), R.a(r), R.t(i));
        for (int i = 1; i <= n - 2; ++i) R.commute("R1.3", inst({{"r", r}, {"i", i}}), R.w(r), R.s(i));
    }
    for (int r = 1; r <= g; ++r) {
        auto k = inst({{"r", r}});
        if (s1)
            R.add("R2.1", k, R.cat(R.s(1, -1), R.a(r), R.s(1, -1), R.a(r)),
                  R.cat(R.a(r), R.s(1, -1), R.a(r), R.s(1)));
        R.add("R2.2", k, R.cat(R.a(r, -1), t1i, R.w(r), R.a(r)), R.cat(t1i, R.w(r), t1));
        R.add("R2.3", k, R.cat(R.a(r, -1), R.w(r), R.a(r)), R.cat(t1i, R.w(r)));
    }
    for (int s = 1; s <= g; ++s)
        for (int r = s + 1; r <= g; ++r) {
            auto k = inst({{"s", s}, {"r", r}});
            if (s1) R.commute("R3.1", k, R.cat(R.s(1, -1), R.a(s), R.s(1)), R.a(r));
            R.add("R3.2", k, R.cat(R.a(r, -1), t1i, R.w(s), t1, R.a(r)), R.cat(t1i, R.w(s), t1));
            R.commute("R3.3", k, R.a(s), R.w(r));
        }
    for (int j = 1; j <= p - 1; ++j) {
        for (int i = 2; i <= n - 2; ++i) R.commute("R4.1", inst({{"j", j}, {"i", i}}), R.z(j), R.s(i));
        for (int i = 2; i <= n - 1; ++i) R.commute("R4.2", inst({{"j", j}, {"i", i}}), R.z(j), R.t(i));
        for (int i = 1; i <= n - 2; ++i) R.commute("R4.3", inst({{"j", j}, {"i", i}}), R.xi(j), R.s(i));
    }
    for (int r = 1; r <= g; ++r)
        for (int j = 1; j <= p - 1; ++j) {
            auto k = inst({{"r", r}, {"j", j}});
            if (s1) R.commute("R5.1", k, R.cat(R.s(1, -1), R.z(j), R.s(1)), R.a(r));
            R.add("R5.2", k, R.cat(R.a(r, -1), t1i, R.xi(j), t1, R.a(r)), R.cat(t1i, R.xi(j), t1));
            R.commute("R5.3", k, R.z(j), R.w(r));
        }
    for (int j = 1; j <= p - 1; ++j)
        for (int l = j + 1; l <= p - 1; ++l) {
            auto k = inst({{"j", j}, {"l", l}});
            if (s1) R.commute("R6.1", k, R.cat(R.s(1, -1), R.z(j), R.s(1)), R.z(l));
            R.add("R6.2", k, R.cat(R.z(l, -1), t1i, R.xi(j), t1, R.z(l)), R.cat(t1i, R.xi(j), t1));
            R.commute("R6.3", k, R.z(j), R.xi(l));
        }
    for (int j = 1; j <= p - 1; ++j) {
        auto k = inst({{"j", j}});
        if (s1) R.commute("R7.1", k, R.cat(R.s(1, -1), R.z(j), R.s(1, -1)), R.z(j));
        R.add("R7.2", k, R.cat(R.z(j, -1), t1i, R.xi(j), R.z(j)), R.cat(t1i, R.xi(j)));
        R.add("R7.3", k, R.cat(R.z(j, -1), R.xi(j), R.z(j)), R.cat(t1i, R.xi(j), t1));
    }
    return Presentation("dn_nonorientable" + params({n, g, p}), A, u32(n), sigma_perms(A, u32(n)),
                        R.take(), n == 2);
}

Presentation dn_closed_presentation(int n, int g)
{
    check_dn(n, "dn_closed_presentation");
    if (g < 1) throw InvalidParameter("dn_closed_presentation: g >= 1");
    const auto& A = dn_closed_alphabet(n, g);
    Relations R(A);
    const bool s1 = n >= 3;
    const int G = 2 * g;
    dn_braid_relations(R, n);
    auto t1 = R.t(1);
    auto t1i = R.t(1, -1);
    for (int r = 1; r <= G; ++r) {
        for (int i = 2; i <= n - 2; ++i) R.commute("R1.1", inst({{"r", r}, {"i", i}}), R.x(r), R.s(i));
        for (int i = 2; i <= n - 1; ++i) R.commute("R1.2", inst({{"r", r}, {"i", i}}), R.x(r), R.t(i));
        for (int i = 1; i <= n - 2; ++i) R.commute("R1.3", inst({{"r", r}, {"i", i}}), R.w(r), R.s(i));
    }
    for (int r = 1; r <= G; ++r) {
        if (s1)
            R.commute("R2.1", inst({{"r", r}}), R.cat(R.s(1, -1), R.x(r), R.s(1, -1)), R.x(r));
        R.add("R2.2", inst({{"r", r}}), R.cat(R.x(r, -1), R.w(r), R.x(r)), R.cat(t1i, R.w(r), t1));
        R.add("R2.3", inst({{"r", r}}), R.cat(R.x(r, -1), t1, R.x(r)),
              R.cat(t1i, R.w(r), t1, R.w(r, -1), t1));
    }
    for (int s = 1; s <= G; ++s)
        for (int r = s + 1; r <= G; ++r) {
            if (odd_pair(s, r)) continue;
            auto k = inst({{"s", s}, {"r", r}});
            if (s1) R.commute("R3.1", k, R.cat(R.s(1, -1), R.x(s), R.s(1)), R.x(r));
            R.add("R3.2", k, R.cat(R.x(r, -1), t1i, R.w(s), t1, R.x(r)), R.cat(t1i, R.w(s), t1));
            R.commute("R3.3", k, R.x(s), R.w(r));
        }
    for (int m = 1; m <= g; ++m) {
        auto k = inst({{"m", m}});
        if (s1)
            R.add("R4.1", k, R.cat(R.s(1, -1), R.x(2 * m - 1), R.s(1, -1), R.x(2 * m)),
                  R.cat(R.x(2 * m), R.s(1, -1), R.x(2 * m - 1), R.s(1)));
        R.add("R4.2", k, R.cat(R.x(2 * m, -1), t1i, R.w(2 * m - 1), R.x(2 * m)),
              R.cat(t1i, R.w(2 * m - 1), t1));
        R.add("R4.3", k, R.cat(R.x(2 * m - 1, -1), R.w(2 * m), R.x(2 * m - 1)),
              R.cat(t1i, R.w(2 * m)));
    }
    WordBuilder xc(A), wc(A), pal(A), tp(A);
    for (int m = 1; m <= g; ++m) {
        xc.push(commutator(R.x(2 * m - 1, -1), R.x(2 * m)));
        wc.push(commutator(R.w(2 * m - 1, -1), R.w(2 * m)));
    }
    if (s1) {
        for (int i = 1; i <= n - 3; ++i) pal.push(R.s(i));
        pal.push(R.s(n - 2, 2));
        for (int i = n - 3; i >= 1; --i) pal.push(R.s(i));
        pal.push(t1);
        R.add("RT.1", "", std::move(xc).finish(), std::move(pal).finish());
    }
    for (int i = 1; i <= n - 1; ++i) tp.push(R.t(i));
    R.add("RT.2", "", std::move(wc).finish(), std::move(tp).finish());
    return Presentation("dn_closed" + params({n, g}), A, u32(n), sigma_perms(A, u32(n)), R.take(),
                        n == 2);
}

Presentation artin_tits_d_presentation(int n)
{
    if (n < 2) throw InvalidParameter("artin_tits_d_presentation: n >= 2 required");
    const auto& A = artin_tits_d_alphabet(n);
    Relations R(A);
    auto edge = [](int i, int j) { return (i <= 2 && j == 3) || (i >= 3 && j == i + 1); };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto k = inst({{"i", i}, {"j", j}});
            if (edge(i, j))
                R.add("braid", k, R.cat(R.d(i), R.d(j), R.d(i)), R.cat(R.d(j), R.d(i), R.d(j)));
            else
                R.commute("commute", k, R.d(i), R.d(j));
        }
    // π_D: δ_1, δ_2 -> (1 2), δ_i -> (i-1 i).
    std::vector<Permutation> perms;
    for (int i = 1; i <= n; ++i)
        perms.push_back(perm_of_transposition(u32(i <= 2 ? 1 : i - 1), u32(n)));
    return Presentation("artin_tits_D" + params({n}), A, u32(n), std::move(perms), R.take());
}

} // namespace braidrep
