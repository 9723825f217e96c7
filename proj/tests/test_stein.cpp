#include <doctest.h>

#include <filesystem>

#include "qpkit/error.hpp"
#include "qpkit/formats.hpp"
#include "qpkit/stein.hpp"

using namespace qpkit;

namespace {

const std::filesystem::path kData = QPKIT_DATA_DIR;

SteinHandleDiagram load(const char* name) {
  return stein_from_json(parse_json(read_text_file(kData / name)));
}

}  // namespace

TEST_CASE("tb and rotation") {
  CHECK(tb({0, 1, 0, 0}) == -1);
  CHECK(tb({3, 2, 0, 0}) == 1);
  CHECK(rotation({0, 4, 2, 2}) == 0);
  CHECK(rotation({2, 3, 0, 2}) == -2);
  CHECK(parity_consistent({0, 1, 0, 0}));
  CHECK_FALSE(parity_consistent({0, 1, 1, 0}));
}

TEST_CASE("diagram validation on construction") {
  CHECK_THROWS_AS(SteinHandleDiagram({{{0, 1, 0, 0}, -2}}, {{-2, 0}}), Error);
  CHECK_THROWS_AS(SteinHandleDiagram({{{0, 1, 0, 2}, -2}}, {{-2}}), Error);
  CHECK_THROWS_AS(SteinHandleDiagram({{{0, 1, 0, 0}, -2}, {{0, 1, 0, 0}, -2}},
                                     {{-2, 1}, {0, -2}}),
                  Error);
}

TEST_CASE("validate_stein") {
  auto a = load("sigma-A.stein");
  CHECK(validate_stein(a).ok());
  CHECK(tb(a.components()[0].counts) == -1);

  SteinHandleDiagram bad({{{0, 1, 0, 0}, -1}}, {{-1}});
  auto v = validate_stein(bad);
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0].component == 0);

  SteinHandleDiagram off_diagonal({{{0, 1, 0, 0}, -2}}, {{-3}});
  CHECK(validate_stein(off_diagonal).violations.size() == 1);

  auto t = load("sigma-T.stein");
  CHECK(validate_stein(t).ok());
  CHECK(tb(t.components()[0].counts) == -1);
  CHECK(tb(t.components()[1].counts) == -5);
}

TEST_CASE("to_lattice") {
  auto [qt, ct] = to_lattice(load("sigma-T.stein"));
  CHECK(qt.matrix() == IntMatrix{{-2, -2}, {-2, -6}});
  CHECK(ct.pairings == std::vector<std::int64_t>{-2, 0});

  auto [qa, ca] = to_lattice(load("sigma-A.stein"));
  CHECK(qa.matrix() == IntMatrix{{-2}});
  CHECK(ca.pairings == std::vector<std::int64_t>{-2});

  auto [qu, cu] = to_lattice(SteinHandleDiagram({{{0, 1, 0, 0}, -2}}, {{-2}}));
  CHECK(qu.matrix() == IntMatrix{{-2}});
  CHECK(cu.pairings == std::vector<std::int64_t>{0});

  try {
    to_lattice(SteinHandleDiagram({{{0, 1, 0, 0}, -1}}, {{-1}}));
    FAIL("expected NotStein");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotStein);
  }
}

TEST_CASE("shipped diagrams satisfy front parity") {
  for (const char* name : {"sigma-A.stein", "sigma-T.stein", "hopf-control.stein"}) {
    CAPTURE(name);
    auto d = load(name);
    for (const auto& c : d.components()) CHECK(parity_consistent(c.counts));
    auto [q, c1] = to_lattice(d);
    for (std::size_t i = 0; i < d.components().size(); ++i)
      CHECK(q(static_cast<int>(i), static_cast<int>(i)) == tb(d.components()[i].counts) - 1);
  }
}

TEST_CASE("removing a violating component creates no new violations") {
  std::vector<SteinComponent> comps{{{0, 1, 0, 0}, -2}, {{2, 1, 0, 0}, 5}, {{1, 2, 1, 1}, -2}};
  IntMatrix link{{-2, 1, 0}, {1, 5, 2}, {0, 2, -2}};
  auto before = validate_stein(SteinHandleDiagram(comps, link));
  REQUIRE(before.violations.size() == 1);
  CHECK(before.violations[0].component == 1);
  std::vector<SteinComponent> kept{comps[0], comps[2]};
  IntMatrix kept_link{{-2, 0}, {0, -2}};
  CHECK(validate_stein(SteinHandleDiagram(kept, kept_link)).ok());
}
