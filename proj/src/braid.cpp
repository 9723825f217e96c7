#include "qpkit/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "qpkit/error.hpp"

namespace qpkit {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

// Splits on whitespace, dropping '#' comments.
std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (is_space(c)) {
      ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() && !is_space(text[j]) && text[j] != '#') ++j;
      out.push_back(text.substr(i, j - i));
      i = j;
    }
  }
  return out;
}

std::optional<long> parse_long(std::string_view tok) {
  long value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  // from_chars rejects a leading '+', which the format does not allow anyway
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1)
    throw Error(ErrorKind::MalformedInput,
                "strand count must be at least 1, got " +
                    std::to_string(strands_));
  for (const auto& l : letters_) {
    if (l.sign != 1 && l.sign != -1)
      throw Error(ErrorKind::MalformedToken, "letter sign must be +1 or -1");
    if (l.index < 1 || l.index >= strands_)
      throw Error(ErrorKind::IndexOutOfRange,
                  "generator " + std::to_string(l.index) + " not in B_" +
                      std::to_string(strands_));
  }
}

BraidWord BraidWord::from_tokens(int strands, std::span<const int> tokens) {
  std::vector<BraidLetter> letters;
  letters.reserve(tokens.size());
  for (int k : tokens) {
    if (k == 0) throw Error(ErrorKind::MalformedToken, "zero token");
    letters.push_back(BraidLetter::from_token(k));
  }
  return BraidWord(strands, std::move(letters));
}

std::vector<int> BraidWord::tokens() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.token());
  return out;
}

StrandPermutation::StrandPermutation(std::vector<int> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v - 1])
      throw Error(ErrorKind::MalformedInput, "not a permutation");
    seen[v - 1] = true;
  }
}

StrandPermutation StrandPermutation::identity(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  return StrandPermutation(std::move(images));
}

int StrandPermutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int cycles = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t p = start; !seen[p]; p = images_[p] - 1) seen[p] = true;
  }
  return cycles;
}

std::string expand_powers(std::string_view text) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      std::size_t j = i;
      while (j < text.size() && text[j] != '\n') ++j;
      out.append(text.substr(i, j - i));
      i = j;
      continue;
    }
    if (is_space(c)) {
      out.push_back(c);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j]) && text[j] != '#') ++j;
    std::string_view tok = text.substr(i, j - i);
    i = j;
    auto caret = tok.find('^');
    if (caret == std::string_view::npos) {
      out.append(tok);
      continue;
    }
    auto base = parse_long(tok.substr(0, caret));
    auto power = parse_long(tok.substr(caret + 1));
    if (!base || !power || *base == 0)
      throw Error(ErrorKind::MalformedToken, std::string(tok));
    long letter = *power < 0 ? -*base : *base;
    for (long r = 0; r < std::labs(*power); ++r) {
      if (r > 0) out.push_back(' ');
      out.append(std::to_string(letter));
    }
  }
  return out;
}

BraidWord parse_word(std::string_view text, std::optional<int> strands) {
  std::vector<int> tokens;
  int max_index = 0;
  for (auto tok : tokenize(text)) {
    auto value = parse_long(tok);
    if (!value || *value == 0)
      throw Error(ErrorKind::MalformedToken, "'" + std::string(tok) + "'");
    if (std::labs(*value) > 1'000'000)
      throw Error(ErrorKind::IndexOutOfRange, std::string(tok));
    int k = static_cast<int>(*value);
    max_index = std::max(max_index, std::abs(k));
    tokens.push_back(k);
  }
  int n = strands.value_or(max_index + 1);
  if (max_index >= n)
    throw Error(ErrorKind::IndexOutOfRange,
                "generator " + std::to_string(max_index) + " needs at least " +
                    std::to_string(max_index + 1) + " strands, got " +
                    std::to_string(n));
  return BraidWord::from_tokens(n, tokens);
}

std::string format_word(const BraidWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) os << ' ';
    os << l.token();
    first = false;
  }
  return os.str();
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<BraidLetter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(w.strands(), std::move(stack));
}

BraidWord invert(const BraidWord& w) {
  std::vector<BraidLetter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(it->inverse());
  return BraidWord(w.strands(), std::move(out));
}

BraidWord concatenate(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw Error(ErrorKind::GroupMismatch,
                "B_" + std::to_string(u.strands()) + " vs B_" +
                    std::to_string(v.strands()));
  std::vector<BraidLetter> out(u.letters().begin(), u.letters().end());
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(out));
}

int exponent_sum(const BraidWord& w) {
  int sum = 0;
  for (const auto& l : w.letters()) sum += l.sign;
  return sum;
}

StrandPermutation closure_permutation(const BraidWord& w) {
  std::vector<int> arrangement(w.strands());
  for (int p = 0; p < w.strands(); ++p) arrangement[p] = p + 1;
  for (const auto& l : w.letters())
    std::swap(arrangement[l.index - 1], arrangement[l.index]);
  return StrandPermutation(std::move(arrangement));
}

int closure_components(const BraidWord& w) {
  return closure_permutation(w).cycle_count();
}

}  // namespace qpkit
