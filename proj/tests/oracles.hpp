#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qpkit/braid.hpp"
#include "qpkit/presentation.hpp"

namespace qpkit::oracle {

// Follows each strand through the word and inverts the result: entry p-1 is
// the starting position of the strand ending at p.
inline std::vector<int> strand_arrangement(int strands, const std::vector<int>& tokens) {
  std::vector<int> dest(strands);
  for (int s = 0; s < strands; ++s) {
    int pos = s + 1;
    for (int k : tokens) {
      int i = k < 0 ? -k : k;
      if (pos == i)
        pos = i + 1;
      else if (pos == i + 1)
        pos = i;
    }
    dest[s] = pos;
  }
  std::vector<int> out(strands);
  for (int s = 0; s < strands; ++s) out[dest[s] - 1] = s + 1;
  return out;
}

inline int cycle_count(const std::vector<int>& images) {
  std::vector<bool> seen(images.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = images[j] - 1) seen[j] = true;
  }
  return cycles;
}

// ---------------------------------------------------------------------------
// Random braid words and relation rewrites.

inline std::vector<int> random_tokens(std::mt19937& rng, int strands, int length) {
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution neg(0.5);
  std::vector<int> out;
  for (int k = 0; k < length; ++k) out.push_back(neg(rng) ? -gen(rng) : gen(rng));
  return out;
}

// Applies one randomly chosen move that preserves the braid: a braid or
// commutation relation at some matching site, or insertion of an inverse pair.
// Returns false when the chosen move found no site.
inline bool random_rewrite(std::mt19937& rng, int strands, std::vector<int>& w) {
  std::uniform_int_distribution<int> move(0, 5);
  const int kind = move(rng);
  const auto n = static_cast<int>(w.size());
  auto abs_ = [](int x) { return x < 0 ? -x : x; };
  auto sgn = [](int x) { return x < 0 ? -1 : 1; };
  std::vector<int> sites;
  switch (kind) {
    case 0: {  // insert s s^-1
      std::uniform_int_distribution<int> pos(0, n);
      auto t = random_tokens(rng, strands, 1)[0];
      int at = pos(rng);
      w.insert(w.begin() + at, {t, -t});
      return true;
    }
    case 1: {  // cancel an adjacent inverse pair
      for (int i = 0; i + 1 < n; ++i)
        if (w[i] == -w[i + 1]) sites.push_back(i);
      if (sites.empty()) return false;
      int at = sites[std::uniform_int_distribution<int>(0, sites.size() - 1)(rng)];
      w.erase(w.begin() + at, w.begin() + at + 2);
      return true;
    }
    case 2: {  // far commutation, any signs
      for (int i = 0; i + 1 < n; ++i)
        if (abs_(abs_(w[i]) - abs_(w[i + 1])) >= 2) sites.push_back(i);
      if (sites.empty()) return false;
      int at = sites[std::uniform_int_distribution<int>(0, sites.size() - 1)(rng)];
      std::swap(w[at], w[at + 1]);
      return true;
    }
    case 3: {  // a b a -> b a b, same sign throughout, |a-b| = 1
      for (int i = 0; i + 2 < n; ++i)
        if (w[i] == w[i + 2] && sgn(w[i]) == sgn(w[i + 1]) &&
            abs_(abs_(w[i]) - abs_(w[i + 1])) == 1)
          sites.push_back(i);
      if (sites.empty()) return false;
      int at = sites[std::uniform_int_distribution<int>(0, sites.size() - 1)(rng)];
      int a = w[at], b = w[at + 1];
      w[at] = b;
      w[at + 1] = a;
      w[at + 2] = b;
      return true;
    }
    case 4: {  // s_i s_j s_i^-1 -> s_j^-1 s_i s_j for |i-j| = 1, positive i, j
      for (int i = 0; i + 2 < n; ++i)
        if (w[i] > 0 && w[i + 1] > 0 && w[i + 2] == -w[i] &&
            abs_(w[i] - w[i + 1]) == 1)
          sites.push_back(i);
      if (sites.empty()) return false;
      int at = sites[std::uniform_int_distribution<int>(0, sites.size() - 1)(rng)];
      int a = w[at], b = w[at + 1];
      w[at] = -b;
      w[at + 1] = a;
      w[at + 2] = b;
      return true;
    }
    default: {  // insert a braid relator a b a (b a b)^-1 with |a-b| = 1
      if (strands < 3) return false;
      std::uniform_int_distribution<int> gen(1, strands - 2);
      std::uniform_int_distribution<int> pos(0, n);
      int a = gen(rng), b = a + 1;
      if (std::bernoulli_distribution(0.5)(rng)) std::swap(a, b);
      int at = pos(rng);
      w.insert(w.begin() + at, {a, b, a, -b, -a, -b});
      return true;
    }
  }
}

// ---------------------------------------------------------------------------
// Brute-force lattice search. The box radius comes from a rational lower
// bound lambda on the smallest eigenvalue of G = -Q: v^T G v >= lambda |v|^2.

using boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<std::int64_t>>;

// Leading principal minors of an integer matrix all positive (Bareiss).
inline bool positive_definite(const std::vector<std::vector<cpp_int>>& m) {
  const std::size_t r = m.size();
  auto a = m;
  cpp_int prev = 1;
  for (std::size_t k = 0; k < r; ++k) {
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < r; ++i)
      for (std::size_t j = k + 1; j < r; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return true;
}

// Smallest k such that 2^k G - I is positive definite, i.e. lambda = 2^-k is
// a lower bound for the spectrum of G. Returns -1 if G itself is not positive
// definite within 40 halvings.
inline int eigen_lower_bound_exponent(const Matrix& g) {
  const std::size_t r = g.size();
  for (int k = 0; k <= 40; ++k) {
    std::vector<std::vector<cpp_int>> m(r, std::vector<cpp_int>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        m[i][j] = (cpp_int(g[i][j]) << k) - (i == j ? 1 : 0);
    if (positive_definite(m)) return k;
  }
  return -1;
}

inline std::int64_t quad(const Matrix& q, const std::vector<std::int64_t>& v) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += q[i][j] * v[i] * v[j];
  return s;
}

// All v with v^T Q v = square (Q negative definite), first nonzero entry
// positive, sorted. Returns nullopt-like empty + flag when the box is too big.
struct BoxResult {
  std::vector<std::vector<std::int64_t>> classes;
  std::int64_t radius = 0;
  bool feasible = true;
};

inline BoxResult box_search(const Matrix& q, std::int64_t square,
                            std::uint64_t max_points = 20'000'000) {
  BoxResult out;
  const std::size_t r = q.size();
  Matrix g = q;
  for (auto& row : g)
    for (auto& x : row) x = -x;
  int k = eigen_lower_bound_exponent(g);
  if (k < 0) {
    out.feasible = false;
    return out;
  }
  // |v|_inf^2 <= |v|^2 <= -square * 2^k
  cpp_int bound = cpp_int(-square) << k;
  std::int64_t b = static_cast<std::int64_t>(sqrt(bound));
  out.radius = b;
  double points = 1;
  for (std::size_t i = 0; i < r; ++i) points *= static_cast<double>(2 * b + 1);
  if (points > static_cast<double>(max_points)) {
    out.feasible = false;
    return out;
  }
  std::vector<std::int64_t> v(r, -b);
  if (r == 0) return out;
  for (;;) {
    if (quad(q, v) == square) {
      auto first = std::find_if(v.begin(), v.end(), [](auto c) { return c != 0; });
      if (first != v.end() && *first > 0) out.classes.push_back(v);
    }
    std::size_t i = 0;
    while (i < r && v[i] == b) v[i++] = -b;
    if (i == r) break;
    ++v[i];
  }
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

// ---------------------------------------------------------------------------
// Random presentations of Z built by Tietze moves from <x | >.

inline std::vector<GroupWord> random_z_presentation(std::mt19937& rng, int& generators,
                                                    int extra_generators) {
  generators = 1;
  std::vector<GroupWord> rels;
  std::bernoulli_distribution coin(0.5);
  for (int e = 0; e < extra_generators; ++e) {
    // new generator g = word in the existing ones, relator g * word^-1
    std::uniform_int_distribution<int> len(0, 4);
    std::uniform_int_distribution<int> pick(1, generators);
    GroupWord word;
    for (int l = len(rng); l > 0; --l) word.push_back({pick(rng), coin(rng) ? 1 : -1});
    ++generators;
    GroupWord rel{{generators, 1}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) rel.push_back(it->inverse());
    rels.push_back(rel);
  }
  std::uniform_int_distribution<int> moves(0, 3);
  for (int m = 0; m < 2 * extra_generators; ++m) {
    if (rels.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, rels.size() - 1);
    auto& r = rels[pick(rng)];
    switch (moves(rng)) {
      case 0:  // cyclic permutation
        if (!r.empty()) std::rotate(r.begin(), r.begin() + 1, r.end());
        break;
      case 1: {  // inverse
        GroupWord inv;
        for (auto it = r.rbegin(); it != r.rend(); ++it) inv.push_back(it->inverse());
        r = inv;
        break;
      }
      case 2: {  // add a consequence: product of two relators
        auto a = rels[pick(rng)];
        auto b = rels[pick(rng)];
        a.insert(a.end(), b.begin(), b.end());
        rels.push_back(a);
        break;
      }
      default: {  // conjugate by a generator
        std::uniform_int_distribution<int> g(1, generators);
        GroupLetter c{g(rng), coin(rng) ? 1 : -1};
        r.insert(r.begin(), c);
        r.push_back(c.inverse());
        break;
      }
    }
  }
  std::shuffle(rels.begin(), rels.end(), rng);
  return rels;
}

}  // namespace qpkit::oracle
