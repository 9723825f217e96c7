#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qpkit/lattice.hpp"

namespace qpkit {

// Cusp and crossing counts of a Legendrian front, enough for tb and r.
struct LegendrianCounts {
  std::int64_t writhe = 0;
  std::int64_t right_cusps = 0;
  std::int64_t left_cusps_down = 0;
  std::int64_t right_cusps_up = 0;
};

struct SteinComponent {
  LegendrianCounts counts;
  std::int64_t framing = 0;
};

// Framed Legendrian link: one component per 2-handle, linking matrix with the
// framings on its diagonal.
class SteinHandleDiagram {
 public:
  SteinHandleDiagram(std::vector<SteinComponent> components, IntMatrix linking);

  const std::vector<SteinComponent>& components() const noexcept { return components_; }
  const IntMatrix& linking() const noexcept { return linking_; }

 private:
  std::vector<SteinComponent> components_;
  IntMatrix linking_;
};

std::int64_t tb(const LegendrianCounts& c);        // writhe - right cusps
std::int64_t rotation(const LegendrianCounts& c);  // left-down - right-up
// Front-diagram parity: r = tb + 1 (mod 2).
bool parity_consistent(const LegendrianCounts& c);

struct SteinViolation {
  int component = 0;  // 0-based
  std::string reason;
};

struct SteinValidation {
  std::vector<SteinViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Every 2-handle framed at tb - 1, diagonal of the linking matrix equal to
// the declared framings.
SteinValidation validate_stein(const SteinHandleDiagram& d);

// (linking matrix, rotation numbers). Throws NotStein if validation fails.
std::pair<IntersectionForm, ChernVector> to_lattice(const SteinHandleDiagram& d);

}  // namespace qpkit
