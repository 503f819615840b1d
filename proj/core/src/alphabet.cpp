#include "braidrep/alphabet.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <memory>
#include <mutex>

#include "braidrep/errors.hpp"

namespace braidrep {

namespace {

struct FamilyInfo {
    Family family;
    std::string_view name;
    std::string_view prefix;
};

constexpr std::array<FamilyInfo, 9> kFamilies{{
    {Family::sigma, "sigma", "s"},
    {Family::x, "x", "x"},
    {Family::z, "z", "z"},
    {Family::a, "a", "a"},
    {Family::tau, "tau", "t"},
    {Family::w, "w", "w"},
    {Family::xi, "xi", "xi"},
    {Family::delta, "delta", "d"},
    {Family::lambda, "lambda", "l"},
}};

const FamilyInfo& info(Family f) { return kFamilies[static_cast<std::size_t>(f)]; }

} // namespace

std::string_view family_name(Family f) { return info(f).name; }
std::string_view family_prefix(Family f) { return info(f).prefix; }

std::optional<Family> family_from_name(std::string_view name)
{
    for (const auto& fi : kFamilies)
        if (fi.name == name) return fi.family;
    return std::nullopt;
}

std::optional<Family> family_from_prefix(std::string_view prefix)
{
    for (const auto& fi : kFamilies)
        if (fi.prefix == prefix) return fi.family;
    return std::nullopt;
}

const Alphabet& Alphabet::get(std::vector<FamilySpec> families)
{
    std::erase_if(families, [](const FamilySpec& f) { return f.count == 0; });
    for (std::size_t i = 0; i < families.size(); ++i) {
        if (families[i].first_index == 0)
            throw InvalidParameter("alphabet: first index must be positive");
        for (std::size_t j = 0; j < i; ++j)
            if (families[i].family == families[j].family)
                throw InvalidParameter("alphabet: duplicate family " +
                                       std::string(family_name(families[i].family)));
    }

    // Interned for the process lifetime; the set stays small (one entry per
    // parameter point actually used).
    static std::mutex mutex;
    static std::vector<std::unique_ptr<Alphabet>> pool;
    std::lock_guard lock(mutex);
    for (const auto& a : pool)
        if (a->families_ == families) return *a;
    pool.push_back(std::unique_ptr<Alphabet>(new Alphabet(std::move(families))));
    return *pool.back();
}

Alphabet::Alphabet(std::vector<FamilySpec> families) : families_(std::move(families))
{
    for (const auto& f : families_) {
        offsets_.push_back(rank_);
        rank_ += f.count;
    }
}

std::uint32_t Alphabet::count(Family f) const
{
    for (const auto& spec : families_)
        if (spec.family == f) return spec.count;
    return 0;
}

std::optional<std::uint32_t> Alphabet::find(Family f, std::uint32_t index) const
{
    for (std::size_t k = 0; k < families_.size(); ++k) {
        const auto& spec = families_[k];
        if (spec.family != f) continue;
        if (index < spec.first_index || index >= spec.first_index + spec.count) return std::nullopt;
        return offsets_[k] + (index - spec.first_index);
    }
    return std::nullopt;
}

std::uint32_t Alphabet::gen(Family f, std::uint32_t index) const
{
    if (auto g = find(f, index)) return *g;
    throw InvalidParameter("generator " + std::string(family_prefix(f)) + std::to_string(index) +
                           " is not in alphabet " + describe());
}

GeneratorRef Alphabet::ref(std::uint32_t gen) const
{
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), gen);
    auto k = static_cast<std::size_t>(it - offsets_.begin()) - 1;
    return {families_[k].family, families_[k].first_index + (gen - offsets_[k])};
}

std::string Alphabet::name(std::uint32_t gen) const
{
    auto r = ref(gen);
    return std::string(family_prefix(r.family)) + std::to_string(r.index);
}

std::optional<std::uint32_t> Alphabet::find_name(std::string_view name) const
{
    auto split = name.find_first_of("0123456789");
    if (split == 0 || split == std::string_view::npos) return std::nullopt;
    auto fam = family_from_prefix(name.substr(0, split));
    if (!fam) return std::nullopt;
    std::uint32_t index = 0;
    auto digits = name.substr(split);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    return find(*fam, index);
}

std::string Alphabet::describe() const
{
    if (families_.empty()) return "{}";
    std::string out;
    for (const auto& f : families_) {
        if (!out.empty()) out += ' ';
        out += family_name(f.family);
        out += '[' + std::to_string(f.first_index) + ".." +
               std::to_string(f.first_index + f.count - 1) + ']';
    }
    return out;
}

} // namespace braidrep
