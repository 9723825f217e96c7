#include "qpkit/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "qpkit/error.hpp"

namespace qpkit {

using boost::multiprecision::cpp_int;

namespace {

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorKind::MalformedInput, "value exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

void check_rank(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got)
    throw Error(ErrorKind::RankMismatch, std::string(what) + " has length " +
                                             std::to_string(got) + ", form rank " +
                                             std::to_string(expected));
}

cpp_int floor_div(const Rational& r) {
  cpp_int num = numerator(r), den = denominator(r);
  cpp_int q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

cpp_int ceil_div(const Rational& r) { return -floor_div(-r); }

}  // namespace

IntersectionForm::IntersectionForm(IntMatrix matrix) : matrix_(std::move(matrix)) {
  const std::size_t r = matrix_.size();
  for (const auto& row : matrix_)
    if (row.size() != r) throw Error(ErrorKind::RankMismatch, "matrix is not square");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (matrix_[i][j] != matrix_[j][i])
        throw Error(ErrorKind::MalformedInput, "matrix is not symmetric");
}

bool HomologyClass::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](std::int64_t c) { return c == 0; });
}

std::pair<IntersectionForm, ChernVector> direct_sum(
    std::span<const IntersectionForm> forms, std::span<const ChernVector> chern) {
  if (forms.size() != chern.size())
    throw Error(ErrorKind::RankMismatch, std::to_string(forms.size()) + " forms but " +
                                             std::to_string(chern.size()) +
                                             " chern vectors");
  std::size_t total = 0;
  for (std::size_t k = 0; k < forms.size(); ++k) {
    check_rank(forms[k].rank(), chern[k].pairings.size(), "chern vector");
    total += forms[k].rank();
  }
  IntMatrix m(total, std::vector<std::int64_t>(total, 0));
  ChernVector c;
  std::size_t offset = 0;
  for (std::size_t k = 0; k < forms.size(); ++k) {
    const int r = forms[k].rank();
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) m[offset + i][offset + j] = forms[k](i, j);
    c.pairings.insert(c.pairings.end(), chern[k].pairings.begin(),
                      chern[k].pairings.end());
    offset += r;
  }
  return {IntersectionForm(std::move(m)), std::move(c)};
}

std::int64_t evaluate(const IntersectionForm& q, const HomologyClass& v) {
  check_rank(q.rank(), v.coefficients.size(), "class");
  __int128 sum = 0;
  for (int i = 0; i < q.rank(); ++i) {
    if (v.coefficients[i] == 0) continue;
    __int128 row = 0;
    for (int j = 0; j < q.rank(); ++j)
      row += static_cast<__int128>(q(i, j)) * v.coefficients[j];
    sum += row * v.coefficients[i];
  }
  return narrow(sum);
}

std::int64_t chern_pairing(const ChernVector& c1, const HomologyClass& v) {
  check_rank(c1.pairings.size(), v.coefficients.size(), "class");
  __int128 sum = 0;
  for (std::size_t i = 0; i < v.coefficients.size(); ++i)
    sum += static_cast<__int128>(c1.pairings[i]) * v.coefficients[i];
  return narrow(sum);
}

bool is_negative_definite(const IntersectionForm& q) {
  // Bareiss elimination: after step k the pivot equals the k-th leading minor.
  const int r = q.rank();
  std::vector<std::vector<cpp_int>> a(r, std::vector<cpp_int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a[i][j] = q(i, j);
  cpp_int prev = 1;
  for (int k = 0; k < r; ++k) {
    const cpp_int& minor = a[k][k];
    // (-1)^(k+1) det_{k+1} > 0
    if (minor == 0 || ((k % 2 == 0) ? minor > 0 : minor < 0)) return false;
    for (int i = k + 1; i < r; ++i)
      for (int j = k + 1; j < r; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return true;
}

RationalLdl rational_ldl(const IntMatrix& g) {
  const std::size_t r = g.size();
  std::vector<std::vector<Rational>> a(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a[i][j] = g[i][j];
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i][i] <= 0)
      throw Error(ErrorKind::NotNegativeDefinite, "nonpositive pivot");
    for (std::size_t j = i + 1; j < r; ++j) {
      a[j][i] = a[i][j];
      a[i][j] /= a[i][i];
    }
    for (std::size_t k = i + 1; k < r; ++k)
      for (std::size_t l = k; l < r; ++l) a[k][l] -= a[k][i] * a[i][l];
  }
  RationalLdl out;
  out.diagonal.resize(r);
  out.mu.assign(r, std::vector<Rational>(r, Rational(0)));
  for (std::size_t i = 0; i < r; ++i) {
    out.diagonal[i] = a[i][i];
    for (std::size_t j = i + 1; j < r; ++j) out.mu[i][j] = a[i][j];
  }
  return out;
}

namespace {

// Fincke-Pohst descent over the coordinates, last index first. Collects
// every integer vector with sum_i d_i (v_i - c_i)^2 == target exactly.
class EllipsoidEnumerator {
 public:
  EllipsoidEnumerator(const RationalLdl& ldl, Rational target)
      : ldl_(ldl), target_(std::move(target)), r_(static_cast<int>(ldl.diagonal.size())) {}

  // Admissible values for the coordinate `level` given the later ones.
  std::vector<std::int64_t> candidates(int level, const std::vector<std::int64_t>& v,
                                       const Rational& remaining,
                                       Rational& center) const {
    center = 0;
    for (int j = level + 1; j < r_; ++j) center -= ldl_.mu[level][j] * v[j];
    Rational radius_sq = remaining / ldl_.diagonal[level];
    cpp_int t = sqrt(floor_div(radius_sq));
    cpp_int lo = floor_div(center) - t - 1;
    cpp_int hi = ceil_div(center) + t + 1;
    std::vector<std::int64_t> out;
    for (cpp_int x = lo; x <= hi; ++x) {
      Rational d = Rational(x) - center;
      if (ldl_.diagonal[level] * d * d <= remaining)
        out.push_back(static_cast<std::int64_t>(x));
    }
    return out;
  }

  void descend(int level, std::vector<std::int64_t>& v, const Rational& remaining,
               std::vector<HomologyClass>& out) const {
    if (level < 0) {
      if (remaining == 0) out.push_back({v});
      return;
    }
    Rational center;
    for (auto x : candidates(level, v, remaining, center)) {
      v[level] = x;
      Rational d = Rational(x) - center;
      descend(level - 1, v, remaining - ldl_.diagonal[level] * d * d, out);
    }
    v[level] = 0;
  }

  std::vector<HomologyClass> run(Execution exec) const {
    std::vector<HomologyClass> out;
    if (r_ == 0) return out;
    std::vector<std::int64_t> v(r_, 0);
    Rational center;
    auto top = candidates(r_ - 1, v, target_, center);
    const long count = static_cast<long>(top.size());
    std::vector<std::vector<HomologyClass>> parts(top.size());

    auto branch = [&](long k) {
      std::vector<std::int64_t> local(r_, 0);
      local[r_ - 1] = top[k];
      Rational d = Rational(top[k]) - center;
      descend(r_ - 2, local, target_ - ldl_.diagonal[r_ - 1] * d * d, parts[k]);
    };
    if (exec == Execution::Serial) {
      for (long k = 0; k < count; ++k) branch(k);
    } else {
#pragma omp parallel for schedule(dynamic, 1)
      for (long k = 0; k < count; ++k) branch(k);
    }
    for (auto& p : parts)
      for (auto& c : p) out.push_back(std::move(c));
    return out;
  }

 private:
  const RationalLdl& ldl_;
  Rational target_;
  int r_;
};

bool is_canonical_sign(const HomologyClass& v) {
  for (auto c : v.coefficients)
    if (c != 0) return c > 0;
  return false;
}

}  // namespace

std::vector<HomologyClass> classes_of_square(const IntersectionForm& q,
                                             std::int64_t square, Execution exec) {
  if (square >= 0)
    throw Error(ErrorKind::MalformedInput,
                "square must be negative, got " + std::to_string(square));
  if (!is_negative_definite(q))
    throw Error(ErrorKind::NotNegativeDefinite, "form is not negative definite");
  IntMatrix g = q.matrix();
  for (auto& row : g)
    for (auto& x : row) x = -x;
  auto ldl = rational_ldl(g);
  EllipsoidEnumerator enumerator(ldl, Rational(-square));
  auto all = enumerator.run(exec);

  std::vector<HomologyClass> out;
  for (auto& v : all) {
    // the rational descent already pins the value; recheck in integers
    if (evaluate(q, v) != square)
      throw std::logic_error("enumeration produced a class of the wrong square");
    if (is_canonical_sign(v)) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Adjunction adjunction_bound(const IntersectionForm& q, const ChernVector& c1,
                            const HomologyClass& v, int genus) {
  check_rank(q.rank(), c1.pairings.size(), "chern vector");
  check_rank(q.rank(), v.coefficients.size(), "class");
  if (v.is_zero()) throw Error(ErrorKind::ZeroClass, "class must be nonzero");
  if (genus < 0) throw Error(ErrorKind::MalformedInput, "genus must be nonnegative");
  __int128 lhs = static_cast<__int128>(evaluate(q, v)) +
                 std::llabs(chern_pairing(c1, v));
  __int128 rhs = 2 * static_cast<__int128>(genus) - 2;
  return lhs <= rhs ? Adjunction::Satisfied : Adjunction::Violated;
}

std::string to_string(ObstructionVerdict v) {
  return v == ObstructionVerdict::NoSphereInClassList ? "no_sphere_in_class_list"
                                                      : "obstruction_inconclusive";
}

SphereObstructionReport sphere_obstruction_report(const IntersectionForm& q,
                                                  const ChernVector& c1,
                                                  std::int64_t square, int genus) {
  check_rank(q.rank(), c1.pairings.size(), "chern vector");
  SphereObstructionReport report;
  report.square = square;
  report.genus = genus;
  bool all_violated = true;
  for (auto& cls : classes_of_square(q, square)) {
    ClassReport entry;
    entry.c1_pairing = chern_pairing(c1, cls);
    entry.adjunction_satisfiable =
        adjunction_bound(q, c1, cls, genus) == Adjunction::Satisfied;
    all_violated = all_violated && !entry.adjunction_satisfiable;
    entry.cls = std::move(cls);
    report.classes.push_back(std::move(entry));
  }
  report.verdict = all_violated ? ObstructionVerdict::NoSphereInClassList
                                : ObstructionVerdict::ObstructionInconclusive;
  return report;
}

}  // namespace qpkit
