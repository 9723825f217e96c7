#include "qpkit/presentation.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

#include "qpkit/error.hpp"

namespace qpkit {

using boost::multiprecision::cpp_int;

GroupWord word_from_ids(std::span<const int> ids) {
  GroupWord w;
  w.reserve(ids.size());
  for (int id : ids) {
    if (id == 0) throw Error(ErrorKind::MalformedToken, "generator id 0");
    w.push_back(id > 0 ? GroupLetter{id, 1} : GroupLetter{-id, -1});
  }
  return w;
}

std::vector<int> word_to_ids(const GroupWord& w) {
  std::vector<int> ids;
  ids.reserve(w.size());
  for (const auto& l : w) ids.push_back(l.sign * l.generator);
  return ids;
}

GroupWord free_reduce(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

GroupWord cyclic_reduce(const GroupWord& w) {
  GroupWord r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return GroupWord(r.begin() + lo, r.begin() + hi);
}

GroupWord invert(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

bool is_cyclically_reduced(const GroupWord& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1].inverse()) return false;
  return w.size() < 2 || w.front() != w.back().inverse();
}

namespace {

std::vector<int> identity_labels(int n) {
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  return labels;
}

}  // namespace

GroupPresentation::GroupPresentation(int generator_count,
                                     std::vector<GroupWord> relators)
    : GroupPresentation(generator_count, std::move(relators),
                        identity_labels(generator_count)) {}

GroupPresentation::GroupPresentation(int generator_count,
                                     std::vector<GroupWord> relators,
                                     std::vector<int> labels)
    : generator_count_(generator_count), labels_(std::move(labels)) {
  if (generator_count_ < 0)
    throw Error(ErrorKind::MalformedInput, "negative generator count");
  if (static_cast<int>(labels_.size()) != generator_count_)
    throw Error(ErrorKind::MalformedInput, "one label per generator required");
  relators_.reserve(relators.size());
  for (auto& r : relators) {
    for (const auto& l : r) {
      if (l.generator < 1 || l.generator > generator_count_)
        throw Error(ErrorKind::IndexOutOfRange,
                    "relator uses generator " + std::to_string(l.generator) +
                        " of " + std::to_string(generator_count_));
      if (l.sign != 1 && l.sign != -1)
        throw Error(ErrorKind::MalformedToken, "letter sign must be +1 or -1");
    }
    relators_.push_back(free_reduce(r));
  }
}

std::string AbelianInvariants::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (auto d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<std::int64_t> smith_diagonal(
    const std::vector<std::vector<std::int64_t>>& matrix) {
  const std::size_t rows = matrix.size();
  const std::size_t cols = rows == 0 ? 0 : matrix[0].size();
  std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (matrix[i].size() != cols)
      throw Error(ErrorKind::RankMismatch, "ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = matrix[i][j];
  }

  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        cpp_int q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        cpp_int q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold any offending row into row t and retry
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
  }

  std::vector<std::int64_t> out(diag);
  for (std::size_t t = 0; t < diag; ++t) {
    cpp_int v = abs(a[t][t]);
    if (v > std::numeric_limits<std::int64_t>::max())
      throw Error(ErrorKind::MalformedInput, "invariant factor exceeds 64 bits");
    out[t] = static_cast<std::int64_t>(v);
  }
  return out;
}

AbelianInvariants abelianization(const GroupPresentation& p) {
  const int g = p.generator_count();
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : p.relators()) {
    std::vector<std::int64_t> row(g, 0);
    for (const auto& l : r) row[l.generator - 1] += l.sign;
    rows.push_back(std::move(row));
  }
  AbelianInvariants inv;
  if (g == 0) return inv;
  auto diagonal = rows.empty() ? std::vector<std::int64_t>{} : smith_diagonal(rows);
  int rank = 0;
  for (auto d : diagonal) {
    if (d != 0) ++rank;
    if (d > 1) inv.torsion.push_back(d);
  }
  std::sort(inv.torsion.begin(), inv.torsion.end());
  inv.free_rank = g - rank;
  return inv;
}

namespace {

struct Elimination {
  std::size_t relator;
  std::size_t position;
  int generator;
};

// Shortest relator first; within it the highest-numbered generator that
// occurs exactly once.
std::optional<Elimination> find_elimination(const std::vector<GroupWord>& rels,
                                            int generator_count) {
  std::vector<std::size_t> order(rels.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rels[a].size() < rels[b].size();
  });
  for (std::size_t ri : order) {
    std::vector<int> count(generator_count + 1, 0);
    std::vector<std::size_t> where(generator_count + 1, 0);
    for (std::size_t k = 0; k < rels[ri].size(); ++k) {
      ++count[rels[ri][k].generator];
      where[rels[ri][k].generator] = k;
    }
    for (int gen = generator_count; gen >= 1; --gen)
      if (count[gen] == 1) return Elimination{ri, where[gen], gen};
  }
  return std::nullopt;
}

GroupPresentation eliminate(const GroupPresentation& p, const Elimination& e) {
  const auto& rel = p.relators()[e.relator];
  GroupWord u(rel.begin(), rel.begin() + e.position);
  GroupWord v(rel.begin() + e.position + 1, rel.end());
  // u g v = 1 gives g = u^-1 v^-1; u g^-1 v = 1 gives g = v u
  GroupWord value;
  if (rel[e.position].sign > 0) {
    value = invert(u);
    auto vi = invert(v);
    value.insert(value.end(), vi.begin(), vi.end());
  } else {
    value = v;
    value.insert(value.end(), u.begin(), u.end());
  }
  auto value_inv = invert(value);

  auto renumber = [&](GroupLetter l) {
    if (l.generator > e.generator) --l.generator;
    return l;
  };
  std::vector<GroupWord> out;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (i == e.relator) continue;
    GroupWord w;
    for (const auto& l : p.relators()[i]) {
      if (l.generator == e.generator) {
        const auto& sub = l.sign > 0 ? value : value_inv;
        for (const auto& s : sub) w.push_back(renumber(s));
      } else {
        w.push_back(renumber(l));
      }
    }
    out.push_back(std::move(w));
  }
  auto labels = p.labels();
  labels.erase(labels.begin() + (e.generator - 1));
  return GroupPresentation(p.generator_count() - 1, std::move(out), std::move(labels));
}

}  // namespace

TietzeResult tietze_simplify(const GroupPresentation& p, int step_budget) {
  if (step_budget < 0)
    throw Error(ErrorKind::MalformedInput, "step budget must be nonnegative");
  TietzeResult result{p, 0, false};
  auto& cur = result.presentation;

  auto spend = [&]() {
    if (result.steps >= step_budget) {
      result.budget_exhausted = true;
      return false;
    }
    ++result.steps;
    return true;
  };

  for (;;) {
    const auto& rels = cur.relators();
    auto empty = std::find_if(rels.begin(), rels.end(),
                              [](const GroupWord& w) { return w.empty(); });
    if (empty != rels.end()) {
      if (!spend()) break;
      auto kept = rels;
      kept.erase(kept.begin() + (empty - rels.begin()));
      cur = GroupPresentation(cur.generator_count(), std::move(kept), cur.labels());
      continue;
    }
    if (auto e = find_elimination(rels, cur.generator_count())) {
      if (!spend()) break;
      cur = eliminate(cur, *e);
      continue;
    }
    auto loose = std::find_if(rels.begin(), rels.end(), [](const GroupWord& w) {
      return !is_cyclically_reduced(w);
    });
    if (loose != rels.end()) {
      if (!spend()) break;
      auto updated = rels;
      auto& target = updated[loose - rels.begin()];
      target = cyclic_reduce(target);
      cur = GroupPresentation(cur.generator_count(), std::move(updated), cur.labels());
      continue;
    }
    break;
  }
  return result;
}

std::string to_string(CyclicVerdict v) {
  switch (v) {
    case CyclicVerdict::CertifiedZ: return "certified_Z";
    case CyclicVerdict::NotZ: return "not_Z";
    case CyclicVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

CyclicVerdict is_infinite_cyclic_certificate(const GroupPresentation& p,
                                             int step_budget) {
  if (!abelianization(p).is_infinite_cyclic()) return CyclicVerdict::NotZ;
  auto simplified = tietze_simplify(p, step_budget).presentation;
  if (simplified.generator_count() == 1 && simplified.relators().empty())
    return CyclicVerdict::CertifiedZ;
  return CyclicVerdict::Inconclusive;
}

std::string to_string(SubwordVerdict v) {
  return v == SubwordVerdict::Nontrivial ? "nontrivial" : "inapplicable";
}

SubwordVerdict weinbaum_subword_test(const GroupWord& relator,
                                     const GroupWord& candidate) {
  if (relator.empty()) throw Error(ErrorKind::EmptyRelator, "relator is empty");
  if (!is_cyclically_reduced(relator)) return SubwordVerdict::Inapplicable;
  if (candidate.empty() || candidate.size() >= relator.size())
    return SubwordVerdict::Inapplicable;
  auto hit = std::search(relator.begin(), relator.end(), candidate.begin(),
                         candidate.end());
  return hit != relator.end() ? SubwordVerdict::Nontrivial
                              : SubwordVerdict::Inapplicable;
}

SubwordVerdict weinbaum_subword_test(const GroupPresentation& p,
                                     const GroupWord& candidate) {
  if (p.generator_count() != 2 || p.relators().size() != 1)
    return SubwordVerdict::Inapplicable;
  return weinbaum_subword_test(p.relators().front(), candidate);
}

}  // namespace qpkit
