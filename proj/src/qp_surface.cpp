#include "qpkit/qp_surface.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "qpkit/error.hpp"

namespace qpkit {

QuasipositiveFactorization::QuasipositiveFactorization(int strands,
                                                       std::vector<QPBand> bands)
    : strands_(strands), bands_(std::move(bands)) {
  if (strands_ < 1)
    throw Error(ErrorKind::MalformedInput, "factorization needs at least 1 strand");
  for (const auto& b : bands_) {
    if (b.conjugator.strands() != strands_)
      throw Error(ErrorKind::GroupMismatch,
                  "band conjugator on " + std::to_string(b.conjugator.strands()) +
                      " strands, factorization on " + std::to_string(strands_));
    if (b.generator < 1 || b.generator >= strands_)
      throw Error(ErrorKind::IndexOutOfRange,
                  "band generator " + std::to_string(b.generator));
  }
}

BraidWord expand(const QuasipositiveFactorization& f) {
  BraidWord out(f.strands());
  for (const auto& b : f.bands()) {
    out = concatenate(out, b.conjugator);
    out = concatenate(out, BraidWord(f.strands(), {{b.generator, 1}}));
    out = concatenate(out, invert(b.conjugator));
  }
  return free_reduce(out);
}

int surface_components(const QuasipositiveFactorization& f) {
  // Disks are indexed by strand start; band w s_j w^-1 joins the strands
  // that w carries to positions j and j + 1.
  std::vector<int> parent(f.strands());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = f.strands();
  for (const auto& b : f.bands()) {
    const auto perm = closure_permutation(b.conjugator);
    const auto& images = perm.images();
    int u = find(images[b.generator - 1] - 1), v = find(images[b.generator] - 1);
    if (u != v) {
      parent[u] = v;
      --components;
    }
  }
  return components;
}

SurfaceType surface_type(const QuasipositiveFactorization& f) {
  SurfaceType t;
  t.euler_characteristic = f.strands() - static_cast<int>(f.bands().size());
  t.boundary_components = closure_components(expand(f));
  int twice_genus =
      2 * surface_components(f) - t.euler_characteristic - t.boundary_components;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw std::logic_error("inconsistent braided surface: 2c - chi - b = " +
                           std::to_string(twice_genus));
  t.genus = twice_genus / 2;
  return t;
}

QuasipositiveFactorization prepend_band(const QuasipositiveFactorization& f,
                                        const QPBand& band) {
  if (band.conjugator.strands() != f.strands())
    throw Error(ErrorKind::GroupMismatch, "band and factorization strand counts differ");
  std::vector<QPBand> bands;
  bands.reserve(f.bands().size() + 1);
  bands.push_back(band);
  bands.insert(bands.end(), f.bands().begin(), f.bands().end());
  return QuasipositiveFactorization(f.strands(), std::move(bands));
}

BraidWord shift_word(const BraidWord& w, int new_strands, int offset) {
  std::vector<BraidLetter> letters(w.letters().begin(), w.letters().end());
  for (auto& l : letters) l.index += offset;
  return BraidWord(new_strands, std::move(letters));
}

QuasipositiveFactorization boundary_sum(const QuasipositiveFactorization& f,
                                        const QuasipositiveFactorization& g) {
  const int total = f.strands() + g.strands();
  std::vector<QPBand> bands;
  bands.reserve(f.bands().size() + g.bands().size() + 1);
  for (const auto& b : f.bands())
    bands.push_back({shift_word(b.conjugator, total, 0), b.generator});
  for (const auto& b : g.bands())
    bands.push_back({shift_word(b.conjugator, total, f.strands()),
                     b.generator + f.strands()});
  bands.push_back({BraidWord(total), f.strands()});
  return QuasipositiveFactorization(total, std::move(bands));
}

namespace {

QPBand band(const std::string& conjugator, int generator, int strands) {
  return {parse_word(expand_powers(conjugator), strands), generator};
}

std::map<std::string, CatalogEntry> build_catalog() {
  const int n = 5;
  // conjugators read off the parenthesized quasipositive factorization of beta
  QuasipositiveFactorization d(n, {
      band("2", 3, n),
      band("-1^2 2 3 4^2 -3", 2, n),
      band("-3 2", 1, n),
      band("-4", 3, n),
  });
  const std::string w = "3 -4 -1 -3^2 -2 -1 -3";
  QuasipositiveFactorization d_prime(n, {
      band("", 2, n),
      band(w + " -2", 1, n),
      band(w + " -2 3 1", 2, n),
      band(w + " 3^2", 4, n),
  });
  QPBand c = band("", 2, n);

  // Three-strand and four-strand stand-ins for the accessory surfaces: the
  // multiply twisted band is traded for an extra disk plus braided bands.
  QuasipositiveFactorization a0(3, {band("", 1, 3), band("", 2, 3), band("2", 1, 3)});
  QuasipositiveFactorization t0(4, {band("", 1, 4), band("", 2, 4), band("2", 1, 4),
                                    band("", 3, 4), band("1", 2, 4)});

  std::map<std::string, CatalogEntry> catalog;
  catalog.emplace("D", CatalogEntry{d, "slice disk D: four-band factorization of beta"});
  catalog.emplace("D'", CatalogEntry{d_prime,
                                     "slice disk D': sigma_2 followed by three w-conjugated bands"});
  catalog.emplace("A", CatalogEntry{prepend_band(d, c), "annulus A: band c (sigma_2) prepended to D"});
  catalog.emplace("A'", CatalogEntry{prepend_band(d_prime, c),
                                     "annulus A': band c (sigma_2) prepended to D'"});
  catalog.emplace("A0", CatalogEntry{a0, "accessory annulus: bands (e,s1) (e,s2) (s2,s1) on 3 strands"});
  catalog.emplace("T0", CatalogEntry{t0,
                                     "accessory torus: A0 plus bands (e,s3) (s1,s2) on 4 strands"});
  return catalog;
}

}  // namespace

const std::map<std::string, CatalogEntry>& builtin_factorizations() {
  static const std::map<std::string, CatalogEntry> catalog = build_catalog();
  return catalog;
}

}  // namespace qpkit
