#pragma once

#include <string>
#include <string_view>

#include "braidrep/assignment.hpp"
#include "braidrep/endomorphism.hpp"
#include "braidrep/presentation.hpp"

namespace braidrep {

// {"alphabet": [{"family": "x", "count": 3}], "images": {"x1": "x1 x2 x1^-1", ...}}
std::string endo_to_json(const FreeEndo& f, int indent = 2);
// Throws ParseError on malformed input; missing images default to the generator.
FreeEndo endo_from_json(std::string_view text);

std::string alphabet_to_json(const Alphabet& a);
const Alphabet& alphabet_from_json(std::string_view text);

// {"name", "strands", "generators", "perm_images", "relators": [{id, schema, instance, lhs, rhs, relator}]}
std::string presentation_to_json(const Presentation& p, int indent = 2);

// {"presentation", "assignment", "relators": [{id, schema, instance, pass}], "pass"}
std::string report_to_json(const Report& r, int indent = 2);
Report report_from_json(std::string_view text);

} // namespace braidrep
