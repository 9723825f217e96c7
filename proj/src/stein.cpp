#include "qpkit/stein.hpp"

#include "qpkit/error.hpp"

namespace qpkit {

SteinHandleDiagram::SteinHandleDiagram(std::vector<SteinComponent> components,
                                       IntMatrix linking)
    : components_(std::move(components)), linking_(std::move(linking)) {
  if (linking_.size() != components_.size())
    throw Error(ErrorKind::RankMismatch, "linking matrix size differs from component count");
  for (const auto& row : linking_)
    if (row.size() != components_.size())
      throw Error(ErrorKind::RankMismatch, "linking matrix is not square");
  for (std::size_t i = 0; i < linking_.size(); ++i)
    for (std::size_t j = i + 1; j < linking_.size(); ++j)
      if (linking_[i][j] != linking_[j][i])
        throw Error(ErrorKind::MalformedInput, "linking matrix is not symmetric");
  for (const auto& c : components_) {
    const auto& k = c.counts;
    if (k.right_cusps < 0 || k.left_cusps_down < 0 || k.right_cusps_up < 0)
      throw Error(ErrorKind::MalformedInput, "cusp counts must be nonnegative");
    if (k.right_cusps_up > k.right_cusps)
      throw Error(ErrorKind::MalformedInput, "more upward right cusps than right cusps");
  }
}

std::int64_t tb(const LegendrianCounts& c) { return c.writhe - c.right_cusps; }

std::int64_t rotation(const LegendrianCounts& c) {
  return c.left_cusps_down - c.right_cusps_up;
}

bool parity_consistent(const LegendrianCounts& c) {
  return ((rotation(c) - tb(c) - 1) % 2) == 0;
}

SteinValidation validate_stein(const SteinHandleDiagram& d) {
  SteinValidation out;
  for (std::size_t i = 0; i < d.components().size(); ++i) {
    const auto& comp = d.components()[i];
    const int idx = static_cast<int>(i);
    if (comp.framing != tb(comp.counts) - 1)
      out.violations.push_back(
          {idx, "framing " + std::to_string(comp.framing) + " but tb - 1 = " +
                    std::to_string(tb(comp.counts) - 1)});
    if (d.linking()[i][i] != comp.framing)
      out.violations.push_back(
          {idx, "linking diagonal " + std::to_string(d.linking()[i][i]) +
                    " differs from framing " + std::to_string(comp.framing)});
  }
  return out;
}

std::pair<IntersectionForm, ChernVector> to_lattice(const SteinHandleDiagram& d) {
  auto check = validate_stein(d);
  if (!check.ok())
    throw Error(ErrorKind::NotStein, "component " +
                                         std::to_string(check.violations.front().component + 1) +
                                         ": " + check.violations.front().reason);
  ChernVector c1;
  for (const auto& comp : d.components()) c1.pairings.push_back(rotation(comp.counts));
  return {IntersectionForm(d.linking()), std::move(c1)};
}

}  // namespace qpkit
