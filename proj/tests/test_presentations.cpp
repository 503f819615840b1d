#include <gtest/gtest.h>

#include <map>

#include "braidrep/assignment.hpp"
#include "braidrep/errors.hpp"
#include "braidrep/presentation.hpp"
#include "braidrep/representations.hpp"

using namespace braidrep;

namespace {

std::map<std::string, int> schema_counts(const Presentation& P)
{
    std::map<std::string, int> m;
    for (const auto& r : P.relators()) ++m[r.schema];
    return m;
}

int choose2(int k) { return k * (k - 1) / 2; }

// Relator counts read off the index ranges of each schema.
int braid_count(int n)
{
    int adjacent = std::max(0, n - 2);
    return adjacent + std::max(0, choose2(n - 1) - adjacent);
}

int surface_count(int n, int g, int p)
{
    int s1 = n >= 2 ? 1 : 0;
    int G = 2 * g, q = p - 1, m = std::max(0, n - 2);
    return braid_count(n) + G * m + s1 * (G + (choose2(G) - g) + g + G * q + choose2(q) + q) + q * m;
}

int nonorientable_count(int n, int g, int p)
{
    int s1 = n >= 2 ? 1 : 0;
    int q = p - 1, m = std::max(0, n - 2);
    return braid_count(n) + g * m + s1 * (g + choose2(g) + g * q + choose2(q) + q) + q * m;
}

int closed_count(int n, int g)
{
    int G = 2 * g, m = n - 2;
    return braid_count(n) + G * m + G + (choose2(G) - g) + g + 1;
}

Word S(const Presentation& P, const char* w) { return parse_word(w, P.generators()); }

void expect_identity_perms(const Presentation& P)
{
    for (const auto& r : P.relators())
        EXPECT_TRUE(permutation_image(P, r.relator).is_identity()) << P.name() << " " << r.schema;
}

} // namespace

TEST(Presentations, BraidExamples)
{
    auto b2 = braid_presentation(2);
    EXPECT_EQ(b2.generators().rank(), 1u);
    EXPECT_TRUE(b2.relators().empty());
    auto b3 = braid_presentation(3);
    ASSERT_EQ(b3.relators().size(), 1u);
    EXPECT_EQ(b3.relators()[0].relator, S(b3, "s1 s2 s1 s2^-1 s1^-1 s2^-1"));
    auto c = schema_counts(braid_presentation(4));
    EXPECT_EQ(c["braid"], 2);
    EXPECT_EQ(c["commute"], 1);
    EXPECT_THROW(braid_presentation(1), InvalidParameter);
    for (int n = 2; n <= 8; ++n) EXPECT_EQ(braid_presentation(n).relators().size(), static_cast<std::size_t>(braid_count(n)));
}

TEST(Presentations, RelatorsAreLhsTimesRhsInverse)
{
    for (const auto& P : {surface_braid_presentation(4, 2, 3), nonorientable_presentation(4, 2, 3),
                          closed_surface_presentation(4, 2), dn_closed_presentation(4, 1)})
        for (const auto& r : P.relators()) EXPECT_EQ(r.relator, r.lhs * invert(r.rhs));
}

TEST(Presentations, SurfaceExamples)
{
    auto p201 = surface_braid_presentation(2, 0, 1);
    EXPECT_EQ(&p201.generators(), &braid_alphabet(2));
    EXPECT_TRUE(p201.relators().empty());

    auto p211 = surface_braid_presentation(2, 1, 1);
    EXPECT_EQ(p211.generators().describe(), "sigma[1..1] x[1..2]");
    auto c = schema_counts(p211);
    EXPECT_EQ(c, (std::map<std::string, int>{{"R2", 2}, {"R4", 1}}));

    EXPECT_EQ(surface_braid_presentation(3, 1, 2).relators().size(), 10u);
    // n = 1: free group, no relators.
    EXPECT_TRUE(surface_braid_presentation(1, 2, 3).relators().empty());
}

TEST(Presentations, SurfaceR3Exclusion)
{
    // (s, r) = (2m-1, 2m) is excluded from R3.
    auto P = surface_braid_presentation(3, 2, 1);
    std::vector<std::string> inst;
    for (const auto& r : P.relators())
        if (r.schema == "R3") inst.push_back(r.instance);
    EXPECT_EQ(inst, (std::vector<std::string>{"s=1,r=3", "s=1,r=4", "s=2,r=3", "s=2,r=4"}));
}

TEST(Presentations, SurfaceR2AndR8Shapes)
{
    auto P = surface_braid_presentation(3, 1, 2);
    for (const auto& r : P.relators()) {
        if (r.schema == "R2" && r.instance == "r=1") {
            EXPECT_EQ(r.lhs, S(P, "s1^-1 x1 s1^-1 x1"));
            EXPECT_EQ(r.rhs, S(P, "x1 s1^-1 x1 s1^-1"));
        }
        if (r.schema == "R8") {
            EXPECT_EQ(r.lhs, S(P, "s1^-1 z1 s1^-1 z1"));
            EXPECT_EQ(r.rhs, S(P, "z1 s1^-1 z1 s1^-1"));
        }
    }
}

TEST(Presentations, NonorientableExamples)
{
    auto P = nonorientable_presentation(2, 1, 1);
    EXPECT_EQ(P.generators().describe(), "sigma[1..1] a[1..1]");
    ASSERT_EQ(P.relators().size(), 1u);
    EXPECT_EQ(P.relators()[0].lhs, S(P, "s1^-1 a1 s1^-1 a1"));
    EXPECT_EQ(P.relators()[0].rhs, S(P, "a1 s1^-1 a1 s1"));

    auto c = schema_counts(nonorientable_presentation(3, 1, 1));
    EXPECT_EQ(c["R1"], 1);
    auto P311 = nonorientable_presentation(3, 1, 1);
    for (const auto& r : P311.relators())
        if (r.schema == "R1") EXPECT_EQ(r.relator, S(P311, "a1 s2 a1^-1 s2^-1"));

    EXPECT_EQ(schema_counts(nonorientable_presentation(2, 2, 1)),
              (std::map<std::string, int>{{"R2", 2}, {"R3", 1}}));
}

TEST(Presentations, ClosedExamples)
{
    auto P21 = closed_surface_presentation(2, 1);
    const Relator* tr5 = nullptr;
    for (const auto& r : P21.relators())
        if (r.schema == "TR5") tr5 = &r;
    ASSERT_NE(tr5, nullptr);
    EXPECT_EQ(tr5->relator, commutator(S(P21, "x1^-1"), S(P21, "x2")) * S(P21, "s1^-2"));

    auto P31 = closed_surface_presentation(3, 1);
    for (const auto& r : P31.relators())
        if (r.schema == "TR5") EXPECT_EQ(r.rhs, S(P31, "s1 s2^2 s1"));
    EXPECT_EQ(P31.relators().size(), 7u);
    EXPECT_THROW(closed_surface_presentation(3, 0), InvalidParameter);
}

TEST(Presentations, CountOracleGrid)
{
    for (int n = 1; n <= 6; ++n)
        for (int g = 0; g <= 3; ++g)
            for (int p = 1; p <= 4; ++p) {
                auto P = surface_braid_presentation(n, g, p);
                EXPECT_EQ(P.relators().size(), static_cast<std::size_t>(surface_count(n, g, p))) << n << g << p;
                expect_identity_perms(P);
                if (g >= 1) {
                    auto N = nonorientable_presentation(n, g, p);
                    EXPECT_EQ(N.relators().size(), static_cast<std::size_t>(nonorientable_count(n, g, p)));
                    expect_identity_perms(N);
                }
                if (g >= 1 && n >= 2 && p == 1) {
                    auto C = closed_surface_presentation(n, g);
                    EXPECT_EQ(C.relators().size(), static_cast<std::size_t>(closed_count(n, g)));
                    expect_identity_perms(C);
                }
            }
}

TEST(Presentations, PermutationImages)
{
    auto P = surface_braid_presentation(3, 1, 2);
    EXPECT_EQ(permutation_image(P, S(P, "s1")), perm_of_transposition(1, 3));
    EXPECT_TRUE(permutation_image(P, S(P, "x1")).is_identity());
    EXPECT_TRUE(permutation_image(P, S(P, "z1")).is_identity());
    EXPECT_TRUE(permutation_image(P, S(P, "s1 s1")).is_identity());
    // Functional order: π(uv) = π(u) ∘ π(v).
    EXPECT_EQ(permutation_image(P, S(P, "s1 s2")),
              perm_compose(perm_of_transposition(1, 3), perm_of_transposition(2, 3)));
}

TEST(Presentations, DnExamples)
{
    auto D = dn_orientable_presentation(3, 0, 1);
    EXPECT_EQ(D.generators().describe(), "sigma[1..1] tau[1..2]");
    EXPECT_EQ(schema_counts(D), (std::map<std::string, int>{{"B4", 1}, {"B5", 1}}));
    for (const auto& r : D.relators())
        if (r.schema == "B5") EXPECT_EQ(r.relator, S(D, "s1^-1 t1 s1") * invert(S(D, "t1 t2 t1^-1")));

    auto C = dn_closed_presentation(3, 1);
    bool found = false;
    for (const auto& r : C.relators())
        if (r.schema == "RT.2") {
            found = true;
            EXPECT_EQ(r.relator, commutator(S(C, "w1^-1"), S(C, "w2")) * invert(S(C, "t1 t2")));
        }
    EXPECT_TRUE(found);

    EXPECT_TRUE(dn_orientable_presentation(2, 1, 2).degenerate());
    EXPECT_FALSE(dn_orientable_presentation(3, 1, 2).degenerate());
    for (const auto& r : dn_nonorientable_presentation(2, 1, 2).relators())
        EXPECT_EQ(r.schema.find(".1"), std::string::npos) << r.schema;
    for (int n = 2; n <= 5; ++n) {
        expect_identity_perms(dn_orientable_presentation(n, 2, 3));
        expect_identity_perms(dn_nonorientable_presentation(n, 2, 3));
        expect_identity_perms(dn_closed_presentation(n, 2));
    }
}

TEST(Presentations, ArtinTitsD)
{
    auto P = artin_tits_d_presentation(4);
    std::vector<std::string> braid, comm;
    for (const auto& r : P.relators()) (r.schema == "braid" ? braid : comm).push_back(r.instance);
    EXPECT_EQ(braid, (std::vector<std::string>{"i=1,j=3", "i=2,j=3", "i=3,j=4"}));
    EXPECT_EQ(comm, (std::vector<std::string>{"i=1,j=2", "i=1,j=4", "i=2,j=4"}));

    auto P2 = artin_tits_d_presentation(2);
    ASSERT_EQ(P2.relators().size(), 1u);
    EXPECT_EQ(P2.relators()[0].schema, "commute");
    auto c3 = schema_counts(artin_tits_d_presentation(3));
    EXPECT_EQ(c3["braid"], 2);
    EXPECT_EQ(c3["commute"], 1);

    EXPECT_EQ(P.perm_image(0), perm_of_transposition(1, 4));
    EXPECT_EQ(P.perm_image(1), perm_of_transposition(1, 4));
    EXPECT_EQ(P.perm_image(3), perm_of_transposition(3, 4));
    for (int n = 2; n <= 8; ++n) {
        auto Q = artin_tits_d_presentation(n);
        // Coxeter graph: n-1 edges, the rest commute.
        EXPECT_EQ(Q.relators().size(), static_cast<std::size_t>(choose2(n)));
        expect_identity_perms(Q);
    }
}

TEST(Presentations, WithoutSchema)
{
    auto C = closed_surface_presentation(3, 2);
    auto D = C.without_schema("TR5", "open");
    EXPECT_EQ(D.relators().size() + 1, C.relators().size());
    EXPECT_EQ(D.name(), "open");
}

TEST(Presentations, EvaluateAndVerify)
{
    auto artin = artin_rep(3);
    const auto& P = artin.source();
    EXPECT_TRUE(is_identity(evaluate(artin, S(P, ""))));
    EXPECT_EQ(evaluate(artin, S(P, "s1 s2 s1")), evaluate(artin, S(P, "s2 s1 s2")));
    for (std::uint32_t g = 0; g < P.generators().rank(); ++g)
        EXPECT_TRUE(is_identity(evaluate(artin, Word::generator(P.generators(), g) *
                                                    Word::generator(P.generators(), g, -1))));

    EXPECT_TRUE(verify_representation(artin_rep(4)).pass);

    // Swap the images of σ_1 and σ_2: the braid relation survives, the
    // commutation σ_1 σ_3 = σ_3 σ_1 does not.
    auto a4 = artin_rep(4);
    auto im = a4.images();
    auto inv = a4.inverse_images();
    std::swap(im[0], im[1]);
    std::swap(inv[0], inv[1]);
    auto bad = Assignment::unchecked("swapped", a4.source(), a4.target(), im, inv, a4.side());
    auto rep = verify_representation(bad);
    EXPECT_FALSE(rep.pass);
    EXPECT_EQ(rep.relators.size(), a4.source().relators().size());
    for (std::size_t i = 0; i < rep.relators.size(); ++i) EXPECT_EQ(rep.relators[i].id, i + 1);
}

TEST(Presentations, CertificationFailsLoudly)
{
    auto a3 = artin_rep(3);
    auto inv = a3.inverse_images();
    std::swap(inv[0], inv[1]);
    EXPECT_THROW(Assignment::certified("bad", a3.source(), a3.target(), a3.images(), inv, a3.side()),
                 CertificationError);
}
