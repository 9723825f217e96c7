#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qpkit/braid.hpp"
#include "qpkit/execution.hpp"

namespace qpkit {

// A simple (permutation) braid: positive, every pair of strands crosses at
// most once. Stored by its strand arrangement, 0-based, in the convention of
// closure_permutation.
class PermutationFactor {
 public:
  explicit PermutationFactor(std::vector<int> arrangement);
  static PermutationFactor identity(int n);
  static PermutationFactor delta(int n);
  static PermutationFactor generator(int n, int index);

  int strands() const noexcept { return static_cast<int>(arrangement_.size()); }
  std::span<const int> arrangement() const noexcept { return arrangement_; }
  StrandPermutation permutation() const;

  bool is_identity() const;
  bool is_delta() const;
  // Number of crossings, i.e. the length of any positive word for it.
  int length() const;

  // Generators i such that the factor ends with sigma_i.
  bool has_final(int index) const;
  // Generators i such that the factor starts with sigma_i.
  bool has_initial(int index) const;

  // Positive word, left to right.
  std::vector<BraidLetter> word() const;

  // Conjugation by the half twist: sigma_i -> sigma_{n-i}.
  PermutationFactor flipped() const;

  void append_generator(int index);   // this * sigma_i
  void remove_initial(int index);     // sigma_i^{-1} * this

  friend bool operator==(const PermutationFactor&,
                         const PermutationFactor&) = default;

 private:
  std::vector<int> arrangement_;
};

// Left-greedy normal form Delta^delta_power * factors[0] * ... * factors[k-1].
struct CanonicalForm {
  int strands = 1;
  int delta_power = 0;
  std::vector<PermutationFactor> factors;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

// True when no generator can move from the start of `next` to the end of
// `prev`.
bool left_weighted(const PermutationFactor& prev, const PermutationFactor& next);

CanonicalForm canonical_form(const BraidWord& w);
// Word for the form: Delta^p spelled out, then each factor's positive word.
BraidWord to_word(const CanonicalForm& form);
// Throws GroupMismatch when strand counts differ.
bool words_equal(const BraidWord& u, const BraidWord& v);
bool is_trivial(const BraidWord& w);

using WordPair = std::pair<BraidWord, BraidWord>;

// words_equal over a batch; entry i is 1 iff pairs[i] are equal.
std::vector<char> words_equal_batch(std::span<const WordPair> pairs,
                                    Execution exec = Execution::Parallel);

}  // namespace qpkit
