#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qpkit {

struct GroupLetter {
  int generator = 1;  // 1-based
  int sign = 1;

  constexpr GroupLetter inverse() const { return {generator, -sign}; }
  friend constexpr bool operator==(GroupLetter, GroupLetter) = default;
};

using GroupWord = std::vector<GroupLetter>;

// Signed-id encoding shared with the presentation file format.
GroupWord word_from_ids(std::span<const int> ids);
std::vector<int> word_to_ids(const GroupWord& w);

GroupWord free_reduce(const GroupWord& w);
GroupWord cyclic_reduce(const GroupWord& w);
GroupWord invert(const GroupWord& w);
bool is_cyclically_reduced(const GroupWord& w);

// Generators 1..generator_count() and relators, each freely reduced on
// storage. labels() remembers which input generator each surviving generator
// came from once Tietze moves have removed some.
class GroupPresentation {
 public:
  GroupPresentation(int generator_count, std::vector<GroupWord> relators);
  GroupPresentation(int generator_count, std::vector<GroupWord> relators,
                    std::vector<int> labels);

  int generator_count() const noexcept { return generator_count_; }
  const std::vector<GroupWord>& relators() const noexcept { return relators_; }
  const std::vector<int>& labels() const noexcept { return labels_; }

  friend bool operator==(const GroupPresentation&,
                         const GroupPresentation&) = default;

 private:
  int generator_count_;
  std::vector<GroupWord> relators_;
  std::vector<int> labels_;
};

// Free rank plus invariant factors d_1 | d_2 | ... (all >= 2).
struct AbelianInvariants {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;

  bool is_infinite_cyclic() const { return free_rank == 1 && torsion.empty(); }
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants&,
                         const AbelianInvariants&) = default;
};

// Diagonal of the Smith normal form of an integer matrix (length min(rows,
// cols), nonnegative, each entry dividing the next among the nonzero ones).
std::vector<std::int64_t> smith_diagonal(
    const std::vector<std::vector<std::int64_t>>& matrix);

AbelianInvariants abelianization(const GroupPresentation& p);

struct TietzeResult {
  GroupPresentation presentation;
  int steps = 0;
  bool budget_exhausted = false;
};

// Conservative simplification: free and cyclic reduction, deletion of empty
// relators, and elimination of a generator occurring exactly once in some
// relator. One move per step; stops at a fixpoint or after step_budget moves.
TietzeResult tietze_simplify(const GroupPresentation& p, int step_budget);

enum class CyclicVerdict { CertifiedZ, NotZ, Inconclusive };
std::string to_string(CyclicVerdict v);

// CertifiedZ only with a Tietze certificate (one generator, no relators);
// NotZ when the abelianization already rules out Z.
CyclicVerdict is_infinite_cyclic_certificate(const GroupPresentation& p,
                                             int step_budget = 100);

enum class SubwordVerdict { Nontrivial, Inapplicable };
std::string to_string(SubwordVerdict v);

// One-relator proper-subword test on the linear relator word. Throws
// EmptyRelator for an empty relator.
SubwordVerdict weinbaum_subword_test(const GroupWord& relator,
                                     const GroupWord& candidate);

// Same test, also checking that p has two generators and one relator.
SubwordVerdict weinbaum_subword_test(const GroupPresentation& p,
                                     const GroupWord& candidate);

}  // namespace qpkit
