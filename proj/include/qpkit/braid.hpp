#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qpkit {

// One Artin generator sigma_index raised to sign (+1 or -1). Indices are
// 1-based, matching sigma_1 ... sigma_{n-1}.
struct BraidLetter {
  int index = 1;
  int sign = 1;

  constexpr BraidLetter inverse() const { return {index, -sign}; }
  // Signed-integer encoding used by the text format: +k or -k.
  constexpr int token() const { return sign * index; }
  static constexpr BraidLetter from_token(int k) {
    return k > 0 ? BraidLetter{k, 1} : BraidLetter{-k, -1};
  }

  friend constexpr bool operator==(BraidLetter, BraidLetter) = default;
};

// A word in the Artin generators of B_n. Immutable once constructed; the
// empty word is the identity braid.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<BraidLetter> letters = {});

  static BraidWord from_tokens(int strands, std::span<const int> tokens);

  int strands() const noexcept { return strands_; }
  std::span<const BraidLetter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  std::vector<int> tokens() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

// Image of a braid in the symmetric group. images()[p-1] is the starting
// position of the strand that ends at position p, letters applied left to
// right. Under this convention sigma_1 sigma_2 ... sigma_{n-1} maps to the
// cycle (1 2 ... n).
class StrandPermutation {
 public:
  explicit StrandPermutation(std::vector<int> images);
  static StrandPermutation identity(int n);

  std::span<const int> images() const noexcept { return images_; }
  int size() const noexcept { return static_cast<int>(images_.size()); }

  // Cycles of the permutation, fixed points included.
  int cycle_count() const;

  friend bool operator==(const StrandPermutation&,
                         const StrandPermutation&) = default;

 private:
  std::vector<int> images_;
};

// Expands "i^k" tokens (k may be negative or zero) into runs of plain signed
// tokens; everything else, comments included, is passed through unchanged.
std::string expand_powers(std::string_view text);

// Strict parser for the braid-word text format: nonzero decimal integers
// separated by whitespace, '#' comments to end of line. When strands is not
// given it is inferred as max|k| + 1 (1 for the empty word).
BraidWord parse_word(std::string_view text,
                     std::optional<int> strands = std::nullopt);

// Space-separated signed tokens; round-trips through parse_word.
std::string format_word(const BraidWord& w);

BraidWord free_reduce(const BraidWord& w);
BraidWord invert(const BraidWord& w);
// Throws GroupMismatch on differing strand counts.
BraidWord concatenate(const BraidWord& u, const BraidWord& v);
int exponent_sum(const BraidWord& w);
StrandPermutation closure_permutation(const BraidWord& w);
int closure_components(const BraidWord& w);

}  // namespace qpkit
