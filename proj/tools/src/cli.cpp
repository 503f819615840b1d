#include "braidrep_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "braidrep/errors.hpp"
#include "braidrep/random_words.hpp"
#include "braidrep/representations.hpp"
#include "braidrep/rewriting.hpp"
#include "braidrep/serialization.hpp"

namespace braidrep::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t default_seed = 20240611;

struct RunConfig {
    std::string rep = "artin";
    int n = 3;
    int g = 0;
    int p = 1;
    std::optional<std::string> word;
    std::string endo_file;
    std::string format = "text";
    std::uint64_t seed = default_seed;
    int samples = 0;
    std::optional<std::uint64_t> mutate_seed;
    std::string surface = "orientable";
    std::string show;
    bool verbose = false;
};

// Printed words must parse back; the empty word is shown as "".
std::string show_word(const Word& w)
{
    return w.empty() ? std::string("\"\"") : to_string(w);
}

RepParams params_of(const RunConfig& c)
{
    auto fam = rep_family_from_name(c.rep);
    if (!fam) throw InvalidParameter("unknown representation '" + c.rep + "'");
    RepParams q{*fam, c.n, c.g, c.p};
    validate(q);
    return q;
}

bool json_out(const RunConfig& c) { return c.format == "json"; }

void print_endo_table(std::ostream& out, const FreeEndo& f)
{
    const auto& A = f.alphabet();
    for (std::uint32_t gen = 0; gen < A.rank(); ++gen)
        out << A.name(gen) << " -> " << show_word(f.image(gen)) << '\n';
}

void print_report(std::ostream& out, const Report& r, bool verbose)
{
    out << "presentation: " << r.presentation << '\n'
        << "assignment:   " << r.assignment << '\n';
    if (r.degenerate) out << "note: degenerate presentation\n";
    std::size_t passed = 0;
    for (const auto& x : r.relators) {
        passed += x.pass ? 1 : 0;
        if (verbose || !x.pass)
            out << (x.pass ? "  pass " : "  FAIL ") << x.schema << " #" << x.id << " [" << x.instance
                << "]  " << x.lhs << " = " << x.rhs << '\n';
    }
    out << "checks: " << passed << "/" << r.relators.size() << " pass\n"
        << "result: " << (r.pass ? "PASS" : "FAIL") << '\n';
}

int cmd_eval(const RunConfig& c, std::ostream& out)
{
    auto asgn = make_representation(params_of(c));
    auto u = parse_word(c.word.value_or(""), asgn.source().generators());
    auto f = evaluate(asgn, u);
    if (json_out(c)) {
        out << endo_to_json(f) << '\n';
    } else {
        out << asgn.name() << " at " << show_word(u) << '\n';
        print_endo_table(out, f);
    }
    return exit_pass;
}

int cmd_verify(const RunConfig& c, std::ostream& out)
{
    auto q = params_of(c);
    auto asgn = make_representation(q);
    if (c.mutate_seed) {
        std::mt19937_64 rng(*c.mutate_seed);
        asgn = perturb_assignment(asgn, rng);
    }
    auto report = q.family == RepFamily::rho_v ? rho_v_outer_check(asgn, q.n, q.g)
                                                : verify_representation(asgn);
    if (json_out(c))
        out << report_to_json(report) << '\n';
    else
        print_report(out, report, c.verbose);
    return report.pass ? exit_pass : exit_fail;
}

int cmd_fixed(const RunConfig& c, std::ostream& out)
{
    auto q = params_of(c);
    auto product = fixed_product(q);
    auto report = fixed_product_report(q);
    if (json_out(c)) {
        auto j = json::parse(report_to_json(report));
        j["product"] = to_string(product);
        out << j.dump(2) << '\n';
    } else {
        out << "A = " << show_word(product) << '\n';
        print_report(out, report, true);
    }
    return report.pass ? exit_pass : exit_fail;
}

json certificate_json(const ArtinCheck& chk)
{
    json j{{"accepted", chk.certificate.has_value()}};
    if (chk.certificate) {
        j["permutation"] = chk.certificate->permutation.images();
        json conj = json::array();
        for (const auto& a : chk.certificate->conjugators) conj.push_back(to_string(a));
        j["conjugators"] = std::move(conj);
    } else {
        j["reason"] = chk.reason;
    }
    return j;
}

void print_certificate(std::ostream& out, const ArtinCheck& chk)
{
    if (!chk.certificate) {
        out << "rejected: " << chk.reason << '\n';
        return;
    }
    const auto& cert = *chk.certificate;
    out << "accepted\n"
        << "permutation: " << to_string(cert.permutation) << '\n';
    for (std::size_t i = 0; i < cert.conjugators.size(); ++i)
        out << "a" << i + 1 << " = " << show_word(cert.conjugators[i]) << '\n';
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_artin_check(const RunConfig& c, std::ostream& out)
{
    if (c.n < 1) throw InvalidParameter("artin-check: n >= 1 required");
    const auto& F = free_alphabet(c.n);
    const auto product = generator_product(c.n);

    if (c.samples > 0) {
        if (c.n < 2) throw InvalidParameter("artin-check --samples: n >= 2 required");
        auto artin = artin_rep(c.n);
        std::mt19937_64 rng(c.seed);
        int accepted = 0, perm_ok = 0, rejected = 0;
        for (int k = 0; k < c.samples; ++k) {
            auto u = random_word(artin.source().generators(), 30, rng);
            auto f = evaluate(artin, u);
            auto cert = artin_condition_check(f, product);
            if (cert) {
                ++accepted;
                perm_ok += cert->permutation == permutation_image(artin.source(), u) ? 1 : 0;
            }
            std::uniform_int_distribution<std::uint32_t> gen(0, F.rank() - 1);
            std::uniform_int_distribution<int> sign(0, 1);
            auto target = gen(rng);
            auto mutated =
                f.replaced(target, f.image(target) * Word::generator(F, gen(rng), sign(rng) ? 1 : -1));
            rejected += artin_condition_check(mutated, product) ? 0 : 1;
        }
        bool pass = accepted == c.samples && perm_ok == c.samples && rejected * 100 >= 99 * c.samples;
        if (json_out(c)) {
            out << json{{"n", c.n},
                        {"seed", c.seed},
                        {"samples", c.samples},
                        {"genuine_accepted", accepted},
                        {"permutation_matches", perm_ok},
                        {"mutated_rejected", rejected},
                        {"pass", pass}}
                       .dump(2)
                << '\n';
        } else {
            out << "genuine accepted:    " << accepted << "/" << c.samples << '\n'
                << "permutation matches: " << perm_ok << "/" << c.samples << '\n'
                << "mutated rejected:    " << rejected << "/" << c.samples << '\n'
                << "result: " << (pass ? "PASS" : "FAIL") << '\n';
        }
        return pass ? exit_pass : exit_fail;
    }

    FreeEndo f = FreeEndo::identity(F);
    if (!c.endo_file.empty()) {
        f = endo_from_json(read_file(c.endo_file));
        if (&f.alphabet() != &F)
            throw AlphabetMismatch("artin-check: endomorphism must be over x1..x" + std::to_string(c.n));
    } else if (c.word) {
        f = evaluate(artin_rep(c.n), parse_word(*c.word, braid_alphabet(c.n)));
    } else {
        throw InvalidParameter("artin-check: give --endo-file, --word or --samples");
    }
    auto chk = artin_conditions(f, product);
    if (json_out(c))
        out << certificate_json(chk).dump(2) << '\n';
    else
        print_certificate(out, chk);
    return chk.certificate ? exit_pass : exit_fail;
}

Presentation ambient_of(const RunConfig& c)
{
    if (c.surface == "orientable") return surface_braid_presentation(c.n, c.g, c.p);
    if (c.surface == "nonorientable") return nonorientable_presentation(c.n, c.g, c.p);
    return closed_surface_presentation(c.n, c.g);
}

// A faithful witness of the ambient group, when one is available.
std::optional<Assignment> witness_of(const RunConfig& c)
{
    if (c.surface == "orientable") {
        if (c.g == 0 && c.p == 1) return artin_rep(c.n);
        return rho_u(c.n + 1, c.g, c.p);
    }
    if (c.surface == "nonorientable") return rho_w(c.n + 1, c.g, c.p);
    return std::nullopt;
}

json symbol_json(const RewriteSymbol& s, const Alphabet& A)
{
    json j{{"lambda", s.lambda}, {"generator", A.name(s.gen)}, {"label", s.label(A)}};
    j["name"] = s.name ? json(*s.name) : json(nullptr);
    j["expansion"] = to_string(s.expansion);
    return j;
}

int cmd_rewrite(const RunConfig& c, std::ostream& out)
{
    Transversal t(ambient_of(c));
    const auto& A = t.presentation().generators();
    const auto syms = subgroup_generators(t);

    if (c.samples > 0) {
        auto witness = witness_of(c);
        if (!witness) throw InvalidParameter("rewrite --samples: no faithful witness for closed surfaces");
        std::mt19937_64 rng(c.seed);
        int ok = 0;
        for (int k = 0; k < c.samples; ++k)
            ok += roundtrip_check(t, *witness, random_subgroup_word(t, 24, rng)) ? 1 : 0;
        bool pass = ok == c.samples;
        if (json_out(c))
            out << json{{"presentation", t.presentation().name()},
                        {"witness", witness->name()},
                        {"seed", c.seed},
                        {"samples", c.samples},
                        {"roundtrip_pass", ok},
                        {"pass", pass}}
                       .dump(2)
                << '\n';
        else
            out << "ambient: " << t.presentation().name() << '\n'
                << "witness: " << witness->name() << '\n'
                << "roundtrip: " << ok << "/" << c.samples << " pass\n"
                << "result: " << (pass ? "PASS" : "FAIL") << '\n';
        return pass ? exit_pass : exit_fail;
    }

    if (!c.word) {
        // Symbol table.
        if (json_out(c)) {
            json arr = json::array();
            for (const auto& s : syms)
                if (!s.trivial) arr.push_back(symbol_json(s, A));
            out << json{{"presentation", t.presentation().name()}, {"symbols", std::move(arr)}}.dump(2)
                << '\n';
        } else {
            out << "ambient: " << t.presentation().name() << '\n';
            for (const auto& s : syms) {
                if (s.trivial) continue;
                out << s.label(A) << "  " << (s.name ? *s.name : "-") << "  " << show_word(s.expansion)
                    << '\n';
            }
        }
        return exit_pass;
    }

    auto u = parse_word(*c.word, A);
    auto seq = rewrite(t, u);
    if (json_out(c)) {
        json arr = json::array();
        for (const auto& s : seq) {
            auto j = symbol_json(syms[s.index], A);
            j["exponent"] = s.exponent;
            arr.push_back(std::move(j));
        }
        out << json{{"presentation", t.presentation().name()},
                    {"word", to_string(u)},
                    {"sequence", std::move(arr)},
                    {"rewritten", to_string(t, seq)}}
                   .dump(2)
            << '\n';
    } else {
        out << "ambient: " << t.presentation().name() << '\n'
            << "word: " << show_word(u) << '\n'
            << "rewritten: [" << to_string(t, seq) << "]\n";
        for (const auto& s : seq) {
            const auto& sym = syms[s.index];
            out << "  " << sym.label(A) << (s.exponent < 0 ? "^-1" : "") << "  "
                << (sym.name ? *sym.name : "-") << "  " << show_word(sym.expansion) << '\n';
        }
    }
    return exit_pass;
}

struct PresentationKind {
    const char* name;
    const char* parameters;
    std::function<Presentation(const RunConfig&)> build;
};

const std::vector<PresentationKind>& presentation_kinds()
{
    static const std::vector<PresentationKind> kinds{
        {"braid", "n", [](const RunConfig& c) { return braid_presentation(c.n); }},
        {"surface", "n g p", [](const RunConfig& c) { return surface_braid_presentation(c.n, c.g, c.p); }},
        {"nonorientable", "n g p",
         [](const RunConfig& c) { return nonorientable_presentation(c.n, c.g, c.p); }},
        {"closed", "n g", [](const RunConfig& c) { return closed_surface_presentation(c.n, c.g); }},
        {"dn-orientable", "n g p",
         [](const RunConfig& c) { return dn_orientable_presentation(c.n, c.g, c.p); }},
        {"dn-nonorientable", "n g p",
         [](const RunConfig& c) { return dn_nonorientable_presentation(c.n, c.g, c.p); }},
        {"dn-closed", "n g", [](const RunConfig& c) { return dn_closed_presentation(c.n, c.g); }},
        {"artin-tits-d", "n", [](const RunConfig& c) { return artin_tits_d_presentation(c.n); }},
    };
    return kinds;
}

int cmd_list(const RunConfig& c, std::ostream& out)
{
    const auto& kinds = presentation_kinds();
    if (c.show.empty()) {
        if (json_out(c)) {
            json arr = json::array();
            for (const auto& k : kinds) arr.push_back({{"name", k.name}, {"parameters", k.parameters}});
            out << arr.dump(2) << '\n';
        } else {
            for (const auto& k : kinds) out << k.name << "  (" << k.parameters << ")\n";
        }
        return exit_pass;
    }
    for (const auto& k : kinds) {
        if (c.show != k.name) continue;
        auto P = k.build(c);
        if (json_out(c)) {
            out << presentation_to_json(P) << '\n';
        } else {
            out << P.name() << "  generators: " << P.generators().describe() << '\n';
            if (P.degenerate()) out << "note: degenerate\n";
            for (const auto& r : P.relators())
                out << "  #" << r.id << " " << r.schema << " [" << r.instance << "]  " << show_word(r.lhs)
                    << " = " << show_word(r.rhs) << '\n';
        }
        return exit_pass;
    }
    throw InvalidParameter("unknown presentation '" + c.show + "'");
}

void add_rep_options(CLI::App* sub, RunConfig& c)
{
    sub->add_option("--rep", c.rep, "artin | rho-u | rho-w | rho-v | rho-d | iota-d")->capture_default_str();
    sub->add_option("--g", c.g, "genus")->capture_default_str();
    sub->add_option("--p", c.p, "number of punctures / boundary parameter")->capture_default_str();
}

void add_common(CLI::App* sub, RunConfig& c)
{
    sub->add_option("--n", c.n, "number of strands / rank parameter")->capture_default_str();
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig c;
    CLI::App app{"Braid group representations on free groups"};
    app.name("braidrep");
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "image of a source word as a free-group automorphism");
    add_common(eval, c);
    add_rep_options(eval, c);
    eval->add_option("--word", c.word, "source word (empty = identity)")->required();

    auto* verify = app.add_subcommand("verify", "check every relator maps to the identity");
    add_common(verify, c);
    add_rep_options(verify, c);
    verify->add_option("--mutate-seed", c.mutate_seed, "corrupt one image with this seed first");
    verify->add_flag("-v,--verbose", c.verbose, "list passing relators too");

    auto* fixed = app.add_subcommand("fixed", "check every generator image fixes the product");
    add_common(fixed, c);
    add_rep_options(fixed, c);

    auto* artin = app.add_subcommand("artin-check", "test the Artin conditions on an endomorphism of F_n");
    add_common(artin, c);
    artin->add_option("--endo-file", c.endo_file, "JSON endomorphism over x1..xn");
    artin->add_option("--word", c.word, "braid word; checks its Artin image");
    artin->add_option("--samples", c.samples, "random genuine/mutated trials");
    artin->add_option("--seed", c.seed, "seed for --samples")->capture_default_str();

    auto* rewrite_cmd = app.add_subcommand("rewrite", "Reidemeister-Schreier rewriting into D_n");
    add_common(rewrite_cmd, c);
    rewrite_cmd->add_option("--g", c.g, "genus")->capture_default_str();
    rewrite_cmd->add_option("--p", c.p, "punctures")->capture_default_str();
    rewrite_cmd->add_option("--surface", c.surface, "ambient surface")
        ->check(CLI::IsMember({"orientable", "nonorientable", "closed"}))
        ->capture_default_str();
    rewrite_cmd->add_option("--word", c.word, "word of D_n to rewrite (omit for the symbol table)");
    rewrite_cmd->add_option("--samples", c.samples, "random round-trip checks");
    rewrite_cmd->add_option("--seed", c.seed, "seed for --samples")->capture_default_str();

    auto* list = app.add_subcommand("list-presentations", "list presentation builders");
    add_common(list, c);
    list->add_option("--g", c.g, "genus")->capture_default_str();
    list->add_option("--p", c.p, "punctures")->capture_default_str();
    list->add_option("--show", c.show, "print the relators of one presentation");

    std::vector<const char*> argv{"braidrep"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (eval->parsed()) return cmd_eval(c, out);
        if (verify->parsed()) return cmd_verify(c, out);
        if (fixed->parsed()) return cmd_fixed(c, out);
        if (artin->parsed()) return cmd_artin_check(c, out);
        if (rewrite_cmd->parsed()) return cmd_rewrite(c, out);
        if (list->parsed()) return cmd_list(c, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace braidrep::cli
