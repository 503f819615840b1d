#include "braidrep/serialization.hpp"

#include <json.hpp>

#include "braidrep/errors.hpp"

namespace braidrep {

using json = nlohmann::ordered_json;

namespace {

json alphabet_json(const Alphabet& a)
{
    json fams = json::array();
    for (const auto& f : a.families()) {
        json e{{"family", family_name(f.family)}, {"count", f.count}};
        if (f.first_index != 1) e["first"] = f.first_index;
        fams.push_back(std::move(e));
    }
    return fams;
}

const Alphabet& alphabet_of(const json& j)
{
    if (!j.is_array()) throw ParseError("alphabet must be an array of families");
    std::vector<FamilySpec> specs;
    for (const auto& e : j) {
        auto fam = family_from_name(e.at("family").get<std::string>());
        if (!fam) throw ParseError("unknown family " + e.at("family").dump());
        auto count = e.at("count").get<std::int64_t>();
        auto first = e.value("first", std::int64_t{1});
        if (count < 0 || first < 1) throw ParseError("bad family count or first index");
        specs.push_back({*fam, static_cast<std::uint32_t>(count), static_cast<std::uint32_t>(first)});
    }
    try {
        return Alphabet::get(std::move(specs));
    } catch (const InvalidParameter& e) {
        throw ParseError(e.what());
    }
}

template <class F>
auto guarded(F&& f)
{
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
}

} // namespace

std::string endo_to_json(const FreeEndo& f, int indent)
{
    json images = json::object();
    for (std::uint32_t g = 0; g < f.alphabet().rank(); ++g)
        images[f.alphabet().name(g)] = to_string(f.image(g));
    json j{{"alphabet", alphabet_json(f.alphabet())}, {"images", std::move(images)}};
    return j.dump(indent);
}

FreeEndo endo_from_json(std::string_view text)
{
    return guarded([&] {
        auto j = json::parse(text);
        const auto& A = alphabet_of(j.at("alphabet"));
        auto f = FreeEndo::identity(A);
        for (const auto& [key, value] : j.at("images").items()) {
            auto gen = A.find_name(key);
            if (!gen) throw ParseError("image for unknown generator " + key);
            f = f.replaced(*gen, parse_word(value.get<std::string>(), A));
        }
        return f;
    });
}

std::string alphabet_to_json(const Alphabet& a) { return alphabet_json(a).dump(); }

const Alphabet& alphabet_from_json(std::string_view text)
{
    return *guarded([&] { return &alphabet_of(json::parse(text)); });
}

std::string presentation_to_json(const Presentation& p, int indent)
{
    json perms = json::object();
    for (std::uint32_t g = 0; g < p.generators().rank(); ++g)
        perms[p.generators().name(g)] = p.perm_image(g).images();
    json rels = json::array();
    for (const auto& r : p.relators())
        rels.push_back({{"id", r.id},
                        {"schema", r.schema},
                        {"instance", r.instance},
                        {"lhs", to_string(r.lhs)},
                        {"rhs", to_string(r.rhs)},
                        {"relator", to_string(r.relator)}});
    json j{{"name", p.name()},
           {"strands", p.strands()},
           {"generators", alphabet_json(p.generators())},
           {"perm_images", std::move(perms)},
           {"degenerate", p.degenerate()},
           {"relators", std::move(rels)}};
    return j.dump(indent);
}

std::string report_to_json(const Report& r, int indent)
{
    json rels = json::array();
    for (const auto& x : r.relators)
        rels.push_back({{"id", x.id},
                        {"schema", x.schema},
                        {"instance", x.instance},
                        {"lhs", x.lhs},
                        {"rhs", x.rhs},
                        {"pass", x.pass}});
    json j{{"presentation", r.presentation},
           {"assignment", r.assignment},
           {"degenerate", r.degenerate},
           {"relators", std::move(rels)},
           {"pass", r.pass}};
    return j.dump(indent);
}

Report report_from_json(std::string_view text)
{
    return guarded([&] {
        auto j = json::parse(text);
        Report r;
        r.presentation = j.at("presentation").get<std::string>();
        r.assignment = j.at("assignment").get<std::string>();
        r.degenerate = j.value("degenerate", false);
        r.pass = j.at("pass").get<bool>();
        for (const auto& x : j.at("relators"))
            r.relators.push_back(RelatorResult{x.at("id").get<std::size_t>(),
                                               x.at("schema").get<std::string>(),
                                               x.at("instance").get<std::string>(),
                                               x.value("lhs", std::string{}),
                                               x.value("rhs", std::string{}),
                                               x.at("pass").get<bool>()});
        return r;
    });
}

} // namespace braidrep
