#include "qpkit/formats.hpp"

#include <fstream>
#include <sstream>

#include "qpkit/error.hpp"

namespace qpkit {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string(what) + ": " + e.what());
  }
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::MalformedInput, std::string("missing key '") + key + "'");
  return j.at(key);
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::MalformedInput, "matrix must be an array");
  IntMatrix m;
  for (const auto& row : j) m.push_back(row.get<std::vector<std::int64_t>>());
  return m;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  return guarded("json", [&] { return json::parse(text); });
}

BraidWord read_braid(const std::string& text, std::optional<int> strands) {
  return parse_word(expand_powers(text), strands);
}

QuasipositiveFactorization factorization_from_json(const json& j) {
  return guarded("factorization", [&] {
    const int n = member(j, "strands").get<int>();
    if (n < 1) throw Error(ErrorKind::MalformedInput, "strands must be at least 1");
    std::vector<QPBand> bands;
    for (const auto& b : member(j, "bands")) {
      auto conj = read_braid(member(b, "conjugator").get<std::string>(), n);
      bands.push_back({std::move(conj), member(b, "generator").get<int>()});
    }
    return QuasipositiveFactorization(n, std::move(bands));
  });
}

json to_json(const QuasipositiveFactorization& f) {
  json bands = json::array();
  for (const auto& b : f.bands())
    bands.push_back({{"conjugator", format_word(b.conjugator)}, {"generator", b.generator}});
  return {{"strands", f.strands()}, {"bands", bands}};
}

GroupPresentation presentation_from_json(const json& j) {
  return guarded("presentation", [&] {
    const int g = member(j, "generators").get<int>();
    std::vector<GroupWord> relators;
    for (const auto& r : member(j, "relators"))
      relators.push_back(word_from_ids(r.get<std::vector<int>>()));
    return GroupPresentation(g, std::move(relators));
  });
}

json to_json(const GroupPresentation& p) {
  json relators = json::array();
  for (const auto& r : p.relators()) relators.push_back(word_to_ids(r));
  return {{"generators", p.generator_count()}, {"relators", relators}};
}

LatticeData lattice_from_json(const json& j) {
  return guarded("lattice", [&] {
    if (j.is_object() && !j.contains("matrix") && j.contains("details") &&
        j["details"].contains("lattice"))
      return lattice_from_json(j["details"]["lattice"]);
    LatticeData out{IntersectionForm(matrix_from_json(member(j, "matrix"))), std::nullopt};
    if (j.contains("c1")) {
      ChernVector c1{j["c1"].get<std::vector<std::int64_t>>()};
      if (static_cast<int>(c1.pairings.size()) != out.form.rank())
        throw Error(ErrorKind::RankMismatch, "c1 length differs from matrix rank");
      out.c1 = std::move(c1);
    }
    return out;
  });
}

json to_json(const IntersectionForm& q, const ChernVector& c1) {
  return {{"matrix", q.matrix()}, {"c1", c1.pairings}};
}

SteinHandleDiagram stein_from_json(const json& j) {
  return guarded("stein", [&] {
    std::vector<SteinComponent> comps;
    for (const auto& c : member(j, "components")) {
      SteinComponent comp;
      comp.counts.writhe = member(c, "writhe").get<std::int64_t>();
      comp.counts.right_cusps = member(c, "right_cusps").get<std::int64_t>();
      comp.counts.left_cusps_down = member(c, "left_cusps_down").get<std::int64_t>();
      comp.counts.right_cusps_up = member(c, "right_cusps_up").get<std::int64_t>();
      comp.framing = member(c, "framing").get<std::int64_t>();
      comps.push_back(comp);
    }
    return SteinHandleDiagram(std::move(comps), matrix_from_json(member(j, "linking")));
  });
}

}  // namespace qpkit
