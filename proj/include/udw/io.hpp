#pragma once

#include "udw/cohom.hpp"
#include "udw/grp.hpp"
#include "udw/linalg.hpp"
#include "udw/reps.hpp"
#include "udw/talg.hpp"

#include <json.hpp>

#include <memory>
#include <string>

namespace udw {

using ordered_json = nlohmann::ordered_json;

// Throws BadInput on unreadable files or malformed JSON.
nlohmann::json read_json_file(const std::string& path);

// {"order", "cayley", "grading"} or {"permutation_generators", "generator_signs"}; optional "names".
std::shared_ptr<const GradedGroup> load_group(const nlohmann::json& j);
// {"twisted": true, "values": [{"pair": [i, j], "q": "a/b"}, ...]}, omitted pairs trivial.
TwistedCocycle load_cocycle(const nlohmann::json& j, std::shared_ptr<const GradedGroup> group);
// {"values": [{"element": i, "q": "a/b"}, ...]}, omitted elements trivial.
UCharacter load_lambda(const nlohmann::json& j, const GradedGroup& group);

ordered_json group_to_json(const GradedGroup& g);
ordered_json cocycle_to_json(const TwistedCocycle& c);

// Twelve significant digits; |x| < 1e-11 and negative zero become 0.
double round12(double x);
ordered_json complex_json(cplx z);
ordered_json alg_elem_json(const AlgElem& a);

}  // namespace udw
