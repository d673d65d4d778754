#pragma once

#include "json.hpp"

#include "csep/patterns.hpp"
#include "csep/separators.hpp"
#include "csep/testbed.hpp"
#include "csep/witness.hpp"

namespace csep {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "csep.report/1";
inline constexpr const char* kManifestSchema = "csep.manifest/1";

Json to_json(const VertexSet& set);
Json to_json(const Embedding& embedding);
Json to_json(const FamilyOptions& options);
/// Params, counts, bound checks and every partition with its provenance.
Json to_json(const SeparatorFamily& family);
Json to_json(const WitnessReport& report);
Json to_json(const CoverageReport& report);

}  // namespace csep
