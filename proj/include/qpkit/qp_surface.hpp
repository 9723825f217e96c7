#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpkit/braid.hpp"

namespace qpkit {

// The band conjugator * sigma_generator * conjugator^{-1}.
struct QPBand {
  BraidWord conjugator;
  int generator = 1;

  friend bool operator==(const QPBand&, const QPBand&) = default;
};

// Ordered product of positive bands on a fixed number of strands. Zero bands
// is legal: n disjoint disks.
class QuasipositiveFactorization {
 public:
  explicit QuasipositiveFactorization(int strands, std::vector<QPBand> bands = {});

  int strands() const noexcept { return strands_; }
  const std::vector<QPBand>& bands() const noexcept { return bands_; }

  friend bool operator==(const QuasipositiveFactorization&,
                         const QuasipositiveFactorization&) = default;

 private:
  int strands_;
  std::vector<QPBand> bands_;
};

struct SurfaceType {
  int euler_characteristic = 0;
  int boundary_components = 0;
  int genus = 0;

  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

BraidWord expand(const QuasipositiveFactorization& f);
// Connected components of the surface (disks joined by bands).
int surface_components(const QuasipositiveFactorization& f);
// genus is the total genus, summed over connected components.
SurfaceType surface_type(const QuasipositiveFactorization& f);
// Throws GroupMismatch if the band lives on a different strand count.
QuasipositiveFactorization prepend_band(const QuasipositiveFactorization& f,
                                        const QPBand& band);
// f stacked above g (g's strands shifted down by f.strands()), joined by one
// extra band sigma_{f.strands()} between the two adjacent disks.
QuasipositiveFactorization boundary_sum(const QuasipositiveFactorization& f,
                                        const QuasipositiveFactorization& g);

// Re-embeds a word of B_m into B_{m+shift} (shift >= 0) with indices offset.
BraidWord shift_word(const BraidWord& w, int new_strands, int offset);

struct CatalogEntry {
  QuasipositiveFactorization factorization;
  std::string description;
};

// Named surfaces D, D', A, A', A0, T0.
const std::map<std::string, CatalogEntry>& builtin_factorizations();

}  // namespace qpkit
