#ifndef ELP_REPORT_HPP
#define ELP_REPORT_HPP

#include "elp/topdown.hpp"

#include <json.hpp>

#include <set>
#include <string>

namespace elp {

using Json = nlohmann::ordered_json;

Json to_json(const Interpretation& i);
Json to_json(const WorldView& w);
Json to_json(const std::set<WorldView>& c);
Json to_json(const std::set<SubjectiveLiteral>& e);

std::string to_string(const std::set<SubjectiveLiteral>& e);

/// Stable schema: program, semantics, splitting_set, the four world-view
/// collections, recomputed verdicts, and per-top-world-view traces.
Json report_to_json(const EquivalenceReport& rep);

} // namespace elp

#endif
