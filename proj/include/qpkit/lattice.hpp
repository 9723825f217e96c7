#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qpkit/execution.hpp"

namespace qpkit {

using Rational = boost::multiprecision::cpp_rational;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Symmetric integer matrix of the intersection pairing on H_2.
class IntersectionForm {
 public:
  IntersectionForm() = default;
  explicit IntersectionForm(IntMatrix matrix);

  int rank() const noexcept { return static_cast<int>(matrix_.size()); }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  std::int64_t operator()(int i, int j) const { return matrix_[i][j]; }

  friend bool operator==(const IntersectionForm&, const IntersectionForm&) = default;

 private:
  IntMatrix matrix_;
};

// Entry i is <c_1, h_i>.
struct ChernVector {
  std::vector<std::int64_t> pairings;
  friend bool operator==(const ChernVector&, const ChernVector&) = default;
};

struct HomologyClass {
  std::vector<std::int64_t> coefficients;
  bool is_zero() const;
  friend auto operator<=>(const HomologyClass&, const HomologyClass&) = default;
};

// Throws RankMismatch unless forms and chern vectors pair up rank for rank.
std::pair<IntersectionForm, ChernVector> direct_sum(
    std::span<const IntersectionForm> forms, std::span<const ChernVector> chern);

std::int64_t evaluate(const IntersectionForm& q, const HomologyClass& v);
std::int64_t chern_pairing(const ChernVector& c1, const HomologyClass& v);

// Exact signs of the leading principal minors.
bool is_negative_definite(const IntersectionForm& q);

// Diagonal terms d_i and multipliers mu_ij (j > i) of the exact rational
// decomposition v^T G v = sum_i d_i (v_i + sum_{j>i} mu_ij v_j)^2 for a
// positive definite G.
struct RationalLdl {
  std::vector<Rational> diagonal;
  std::vector<std::vector<Rational>> mu;
};
RationalLdl rational_ldl(const IntMatrix& positive_definite);

// Every class with v^T Q v = square, one per +/- pair (first nonzero
// coefficient positive), sorted lexicographically. Throws NotNegativeDefinite.
std::vector<HomologyClass> classes_of_square(const IntersectionForm& q,
                                             std::int64_t square,
                                             Execution exec = Execution::Parallel);

enum class Adjunction { Satisfied, Violated };

// [S].[S] + |<c_1,[S]>| <= 2g - 2. Throws ZeroClass for v = 0.
Adjunction adjunction_bound(const IntersectionForm& q, const ChernVector& c1,
                            const HomologyClass& v, int genus);

enum class ObstructionVerdict { NoSphereInClassList, ObstructionInconclusive };
std::string to_string(ObstructionVerdict v);

struct ClassReport {
  HomologyClass cls;
  std::int64_t c1_pairing = 0;
  bool adjunction_satisfiable = false;
};

struct SphereObstructionReport {
  std::int64_t square = 0;
  int genus = 0;
  std::vector<ClassReport> classes;
  ObstructionVerdict verdict = ObstructionVerdict::ObstructionInconclusive;
};

// Enumerates the classes of the given square and checks each against the
// adjunction bound at `genus` (spheres by default). Never asserts that a
// surface exists: a class passing the bound only makes the result
// inconclusive.
SphereObstructionReport sphere_obstruction_report(const IntersectionForm& q,
                                                  const ChernVector& c1,
                                                  std::int64_t square,
                                                  int genus = 0);

}  // namespace qpkit
