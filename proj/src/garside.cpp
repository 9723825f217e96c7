#include "qpkit/garside.hpp"

#include <algorithm>
#include <string>

#include "qpkit/error.hpp"

namespace qpkit {

PermutationFactor::PermutationFactor(std::vector<int> arrangement)
    : arrangement_(std::move(arrangement)) {
  std::vector<bool> seen(arrangement_.size(), false);
  for (int v : arrangement_) {
    if (v < 0 || v >= strands() || seen[v])
      throw Error(ErrorKind::MalformedInput, "factor is not a permutation");
    seen[v] = true;
  }
}

PermutationFactor PermutationFactor::identity(int n) {
  std::vector<int> a(n);
  for (int p = 0; p < n; ++p) a[p] = p;
  return PermutationFactor(std::move(a));
}

PermutationFactor PermutationFactor::delta(int n) {
  std::vector<int> a(n);
  for (int p = 0; p < n; ++p) a[p] = n - 1 - p;
  return PermutationFactor(std::move(a));
}

PermutationFactor PermutationFactor::generator(int n, int index) {
  auto f = identity(n);
  f.append_generator(index);
  return f;
}

StrandPermutation PermutationFactor::permutation() const {
  std::vector<int> images(arrangement_.begin(), arrangement_.end());
  for (int& v : images) ++v;
  return StrandPermutation(std::move(images));
}

bool PermutationFactor::is_identity() const {
  for (int p = 0; p < strands(); ++p)
    if (arrangement_[p] != p) return false;
  return true;
}

bool PermutationFactor::is_delta() const {
  for (int p = 0; p < strands(); ++p)
    if (arrangement_[p] != strands() - 1 - p) return false;
  return true;
}

int PermutationFactor::length() const {
  int inversions = 0;
  for (int i = 0; i < strands(); ++i)
    for (int j = i + 1; j < strands(); ++j)
      if (arrangement_[i] > arrangement_[j]) ++inversions;
  return inversions;
}

bool PermutationFactor::has_final(int index) const {
  return arrangement_[index - 1] > arrangement_[index];
}

bool PermutationFactor::has_initial(int index) const {
  // strands index-1 and index (0-based starting positions) have crossed
  int pos_left = -1, pos_right = -1;
  for (int p = 0; p < strands(); ++p) {
    if (arrangement_[p] == index - 1) pos_left = p;
    if (arrangement_[p] == index) pos_right = p;
  }
  return pos_left > pos_right;
}

std::vector<BraidLetter> PermutationFactor::word() const {
  std::vector<BraidLetter> reversed;
  PermutationFactor rest = *this;
  for (bool progress = true; progress;) {
    progress = false;
    for (int i = 1; i < strands(); ++i) {
      if (rest.has_final(i)) {
        std::swap(rest.arrangement_[i - 1], rest.arrangement_[i]);
        reversed.push_back({i, 1});
        progress = true;
        break;
      }
    }
  }
  return {reversed.rbegin(), reversed.rend()};
}

PermutationFactor PermutationFactor::flipped() const {
  const int n = strands();
  std::vector<int> a(n);
  for (int p = 0; p < n; ++p) a[p] = n - 1 - arrangement_[n - 1 - p];
  return PermutationFactor(std::move(a));
}

void PermutationFactor::append_generator(int index) {
  std::swap(arrangement_[index - 1], arrangement_[index]);
}

void PermutationFactor::remove_initial(int index) {
  for (int& v : arrangement_) {
    if (v == index - 1)
      v = index;
    else if (v == index)
      v = index - 1;
  }
}

bool left_weighted(const PermutationFactor& prev,
                   const PermutationFactor& next) {
  for (int i = 1; i < prev.strands(); ++i)
    if (next.has_initial(i) && !prev.has_final(i)) return false;
  return true;
}

namespace {

// Moves generators from the front of `next` to the back of `prev` until the
// pair is left-weighted. Each move lengthens prev, so this terminates.
void make_left_weighted(PermutationFactor& prev, PermutationFactor& next) {
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i < prev.strands(); ++i) {
      if (next.has_initial(i) && !prev.has_final(i)) {
        prev.append_generator(i);
        next.remove_initial(i);
        moved = true;
      }
    }
  }
}

class NormalFormBuilder {
 public:
  explicit NormalFormBuilder(int n) { form_.strands = n; }

  void push(BraidLetter letter) {
    const int n = form_.strands;
    if (letter.sign > 0) {
      append(PermutationFactor::generator(n, letter.index));
      return;
    }
    // x sigma_i^{-1} = Delta^{p-1} tau(A_1)...tau(A_k) (Delta sigma_i^{-1})
    --form_.delta_power;
    for (auto& f : form_.factors) f = f.flipped();
    auto complement = PermutationFactor::delta(n);
    complement.append_generator(letter.index);
    append(std::move(complement));
  }

  CanonicalForm take() && { return std::move(form_); }

 private:
  void append(PermutationFactor factor) {
    auto& fs = form_.factors;
    fs.push_back(std::move(factor));
    for (std::size_t j = fs.size() - 1; j > 0; --j)
      make_left_weighted(fs[j - 1], fs[j]);
    auto first_non_delta =
        std::find_if(fs.begin(), fs.end(), [](const auto& f) { return !f.is_delta(); });
    form_.delta_power += static_cast<int>(first_non_delta - fs.begin());
    fs.erase(fs.begin(), first_non_delta);
    while (!fs.empty() && fs.back().is_identity()) fs.pop_back();
  }

  CanonicalForm form_;
};

}  // namespace

CanonicalForm canonical_form(const BraidWord& w) {
  NormalFormBuilder builder(w.strands());
  for (const auto& l : w.letters()) builder.push(l);
  return std::move(builder).take();
}

BraidWord to_word(const CanonicalForm& form) {
  const int n = form.strands;
  std::vector<BraidLetter> letters;
  auto delta_word = PermutationFactor::delta(n).word();
  if (form.delta_power >= 0) {
    for (int k = 0; k < form.delta_power; ++k)
      letters.insert(letters.end(), delta_word.begin(), delta_word.end());
  } else {
    for (int k = 0; k < -form.delta_power; ++k)
      for (auto it = delta_word.rbegin(); it != delta_word.rend(); ++it)
        letters.push_back(it->inverse());
  }
  for (const auto& f : form.factors) {
    auto w = f.word();
    letters.insert(letters.end(), w.begin(), w.end());
  }
  return BraidWord(n, std::move(letters));
}

bool words_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw Error(ErrorKind::GroupMismatch,
                "B_" + std::to_string(u.strands()) + " vs B_" +
                    std::to_string(v.strands()));
  return canonical_form(u) == canonical_form(v);
}

bool is_trivial(const BraidWord& w) {
  auto form = canonical_form(w);
  return form.delta_power == 0 && form.factors.empty();
}

std::vector<char> words_equal_batch(std::span<const WordPair> pairs,
                                    Execution exec) {
  for (const auto& [u, v] : pairs)
    if (u.strands() != v.strands())
      throw Error(ErrorKind::GroupMismatch, "batch contains mixed strand counts");
  std::vector<char> out(pairs.size(), 0);
  const auto count = static_cast<long>(pairs.size());
  if (exec == Execution::Serial) {
    for (long i = 0; i < count; ++i)
      out[i] = canonical_form(pairs[i].first) == canonical_form(pairs[i].second);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < count; ++i)
    out[i] = canonical_form(pairs[i].first) == canonical_form(pairs[i].second);
  return out;
}

}  // namespace qpkit
