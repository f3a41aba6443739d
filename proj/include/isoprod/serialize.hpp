#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "isoprod/classify.hpp"

namespace isoprod {

using Json = nlohmann::ordered_json;

/// {"group", "b", "alphas", "betas", "gammas"} with element indices.
Json vector_to_json(const GeneratingVector& v);
/// Inverse of vector_to_json against an already built group; the "group" field, when
/// present, must match. Elements may be indices or labels. Throws UsageError on
/// malformed input.
GeneratingVector vector_from_json(const Json& j, const GroupPtr& group);
/// Compact form "a1,a2;b1,b2;g1,g2,..." (three ';' separated lists, possibly empty);
/// each entry is an element index or label. JSON objects are accepted as well.
GeneratingVector parse_vector(const std::string& text, const GroupPtr& group);

Json invariants_to_json(const SurfaceInvariants& inv);
Json surface_to_json(const UnmixedSurface& s);
/// Surface record plus "aut0", "conforms" and "reason" (the last two null when aut0 is
/// trivial).
Json record_to_json(const ClassificationRecord& rec);
Json summary_to_json(const ClassifySummary& s);
Json chartab_to_json(const CharacterTable& t);

std::string csv_header();
std::string record_to_csv(const ClassificationRecord& rec);
std::string record_to_text(const ClassificationRecord& rec);
std::string summary_to_text(const ClassifySummary& s);

/// Human-readable table: class representatives and sizes, then one row per character
/// with exact values as sums of roots of unity.
std::string chartab_to_text(const CharacterTable& t);
std::string chartab_to_csv(const CharacterTable& t);

}  // namespace isoprod
