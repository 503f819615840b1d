#include <gtest/gtest.h>

#include <json.hpp>

#include "braidrep/errors.hpp"
#include "braidrep/representations.hpp"
#include "braidrep/serialization.hpp"

using namespace braidrep;

TEST(Serialization, EndoRoundTrip)
{
    auto f = evaluate(rho_u(4, 1, 2), parse_word("s1 x2^-1 z1", surface_alphabet(3, 1, 2)));
    auto text = endo_to_json(f);
    auto back = endo_from_json(text);
    EXPECT_EQ(back, f);
    auto j = nlohmann::json::parse(text);
    EXPECT_EQ(j["alphabet"][0]["family"], "tau");
    EXPECT_EQ(j["images"]["t1"].get<std::string>(), to_string(f.image(0)));
}

TEST(Serialization, FirstIndexSurvives)
{
    auto f = rho_v(4, 1).image(0);
    auto back = endo_from_json(endo_to_json(f));
    EXPECT_EQ(&back.alphabet(), &v_alphabet(4, 1));
    EXPECT_EQ(back, f);
    EXPECT_EQ(&alphabet_from_json(alphabet_to_json(v_alphabet(4, 1))), &v_alphabet(4, 1));
}

TEST(Serialization, EndoDefaultsAndErrors)
{
    auto f = endo_from_json(R"({"alphabet":[{"family":"x","count":2}],"images":{"x2":"x1 x2 x1^-1"}})");
    EXPECT_EQ(to_string(f.image(0)), "x1");
    EXPECT_EQ(to_string(f.image(1)), "x1 x2 x1^-1");
    EXPECT_THROW(endo_from_json("{"), ParseError);
    EXPECT_THROW(endo_from_json(R"({"alphabet":[{"family":"q","count":2}],"images":{}})"), ParseError);
    EXPECT_THROW(endo_from_json(R"({"alphabet":[{"family":"x","count":2}],"images":{"x3":"x1"}})"), ParseError);
    EXPECT_THROW(endo_from_json(R"({"alphabet":[{"family":"x","count":2}],"images":{"x1":"x7"}})"), ParseError);
    EXPECT_THROW(endo_from_json(R"({"images":{}})"), ParseError);
}

TEST(Serialization, ReportRoundTrip)
{
    auto r = verify_representation(rho_w(4, 1, 2));
    auto text = report_to_json(r);
    auto back = report_from_json(text);
    EXPECT_EQ(back.presentation, r.presentation);
    EXPECT_EQ(back.assignment, r.assignment);
    EXPECT_EQ(back.pass, r.pass);
    ASSERT_EQ(back.relators.size(), r.relators.size());
    for (std::size_t i = 0; i < r.relators.size(); ++i) {
        EXPECT_EQ(back.relators[i].id, r.relators[i].id);
        EXPECT_EQ(back.relators[i].schema, r.relators[i].schema);
        EXPECT_EQ(back.relators[i].instance, r.relators[i].instance);
        EXPECT_EQ(back.relators[i].pass, r.relators[i].pass);
    }
    EXPECT_EQ(report_to_json(back), text);
    auto j = nlohmann::json::parse(text);
    for (const char* key : {"presentation", "assignment", "relators", "pass"}) EXPECT_TRUE(j.contains(key));
    for (const char* key : {"id", "schema", "instance", "pass"}) EXPECT_TRUE(j["relators"][0].contains(key));
}

TEST(Serialization, Presentation)
{
    auto P = closed_surface_presentation(3, 1);
    auto j = nlohmann::json::parse(presentation_to_json(P));
    EXPECT_EQ(j["name"], P.name());
    EXPECT_EQ(j["strands"], 3);
    EXPECT_EQ(j["relators"].size(), P.relators().size());
    EXPECT_EQ(j["perm_images"]["s2"], (std::vector<int>{1, 3, 2}));
    for (const auto& r : j["relators"])
        EXPECT_EQ(parse_word(r["relator"].get<std::string>(), P.generators()),
                  parse_word(r["lhs"].get<std::string>(), P.generators()) *
                      invert(parse_word(r["rhs"].get<std::string>(), P.generators())));
}
