#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "qpkit/braid.hpp"
#include "qpkit/lattice.hpp"
#include "qpkit/presentation.hpp"
#include "qpkit/qp_surface.hpp"
#include "qpkit/stein.hpp"

namespace qpkit {

using nlohmann::json;

std::string read_text_file(const std::filesystem::path& path);
// Parses JSON, mapping syntax errors to MalformedInput.
json parse_json(const std::string& text);

// Braid-word text, after the "i^k" expansion pass.
BraidWord read_braid(const std::string& text, std::optional<int> strands = std::nullopt);

// {"strands": n, "bands": [{"conjugator": "<braid word>", "generator": j}, ...]}
QuasipositiveFactorization factorization_from_json(const json& j);
json to_json(const QuasipositiveFactorization& f);

// {"generators": g, "relators": [[+-id, ...], ...]}
GroupPresentation presentation_from_json(const json& j);
json to_json(const GroupPresentation& p);

// {"matrix": [[...]], "c1": [...]}. c1 may be absent for callers that only
// enumerate classes. A stein-check report is accepted too: its
// details.lattice member is used.
struct LatticeData {
  IntersectionForm form;
  std::optional<ChernVector> c1;
};
LatticeData lattice_from_json(const json& j);
json to_json(const IntersectionForm& q, const ChernVector& c1);

// {"components": [{"writhe", "right_cusps", "left_cusps_down",
//   "right_cusps_up", "framing"}, ...], "linking": [[...]]}
SteinHandleDiagram stein_from_json(const json& j);

}  // namespace qpkit
