#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "known_words.hpp"
#include "qpkit/braid.hpp"
#include "qpkit/error.hpp"

using namespace qpkit;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::MalformedInput;
}

}  // namespace

TEST_CASE("parse_word") {
  auto w = parse_word("2 3 -2");
  CHECK(w.strands() == 4);
  CHECK(w.tokens() == std::vector<int>{2, 3, -2});
  CHECK(w.letters()[2] == BraidLetter{2, -1});

  auto id = parse_word("", 5);
  CHECK(id.strands() == 5);
  CHECK(id.empty());

  auto beta = parse_word(testdata::kBeta);
  CHECK(beta.strands() == 5);
  CHECK(beta.size() == 26);

  CHECK(parse_word("# comment only\n  1\t-1 # trailing\n2").tokens() ==
        std::vector<int>{1, -1, 2});
}

TEST_CASE("parse_word errors") {
  CHECK(kind_of([] { parse_word("1 0 2"); }) == ErrorKind::MalformedToken);
  CHECK(kind_of([] { parse_word("1 x"); }) == ErrorKind::MalformedToken);
  CHECK(kind_of([] { parse_word("+1"); }) == ErrorKind::MalformedToken);
  CHECK(kind_of([] { parse_word("1 2^3"); }) == ErrorKind::MalformedToken);
  CHECK(kind_of([] { parse_word("4", 4); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { parse_word("-3", 2); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("expand_powers pre-pass") {
  CHECK(expand_powers("-1^2 3") == "-1 -1 3");
  CHECK(expand_powers("3^-2") == "-3 -3");
  CHECK(parse_word(expand_powers("2^0 1")).tokens() == std::vector<int>{1});
  CHECK(expand_powers("1 # 2^2 stays\n") == "1 # 2^2 stays\n");
  CHECK(kind_of([] { expand_powers("0^2"); }) == ErrorKind::MalformedToken);
  CHECK(kind_of([] { expand_powers("1^x"); }) == ErrorKind::MalformedToken);
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(parse_word("1 -1")).empty());
  CHECK(free_reduce(parse_word("2 3 -3 2", 4)).tokens() == std::vector<int>{2, 2});
  CHECK(free_reduce(parse_word("1 2 -2 -1 3")).tokens() == std::vector<int>{3});

  // beta has no adjacent inverse pair, so reduction leaves it alone
  auto beta = testdata::beta();
  auto t = beta.tokens();
  bool has_pair = false;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) has_pair |= t[i] == -t[i + 1];
  REQUIRE_FALSE(has_pair);
  CHECK(free_reduce(beta) == beta);
}

TEST_CASE("invert") {
  CHECK(invert(parse_word("2 3")).tokens() == std::vector<int>{-3, -2});
  CHECK(invert(BraidWord(5)).empty());
  auto w = parse_word(testdata::kW, 5);
  CHECK(invert(w).tokens() == parse_word(testdata::kWInverse, 5).tokens());
  CHECK(free_reduce(concatenate(w, invert(w))).empty());
}

TEST_CASE("exponent_sum") {
  CHECK(exponent_sum(parse_word("2 3 -2")) == 1);
  CHECK(exponent_sum(testdata::beta()) == 4);
  CHECK(exponent_sum(testdata::beta_prime()) == 4);
}

TEST_CASE("closure permutation and components") {
  CHECK(closure_permutation(BraidWord(5)) == StrandPermutation::identity(5));
  // sigma_1 ... sigma_4 is the cycle (1 2 3 4 5)
  CHECK(closure_permutation(parse_word("1 2 3 4")).images()[0] == 2);
  CHECK(closure_permutation(parse_word("1 2 3 4")) ==
        StrandPermutation({2, 3, 4, 5, 1}));

  auto beta = testdata::beta();
  auto expected = oracle::strand_arrangement(5, beta.tokens());
  auto got = closure_permutation(beta);
  CHECK(std::vector<int>(got.images().begin(), got.images().end()) == expected);
  CHECK(oracle::cycle_count(expected) == 1);

  CHECK(closure_components(BraidWord(5)) == 5);
  CHECK(closure_components(beta) == 1);
  auto with_c = concatenate(parse_word("2", 5), beta);
  CHECK(oracle::cycle_count(oracle::strand_arrangement(5, with_c.tokens())) == 2);
  CHECK(closure_components(with_c) == 2);
}

TEST_CASE("cross-word operations need equal strand counts") {
  CHECK(kind_of([] { concatenate(BraidWord(3), BraidWord(4)); }) ==
        ErrorKind::GroupMismatch);
}

TEST_CASE("braid-core properties on random words") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> strands(2, 7), length(0, 40);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = strands(rng);
    auto u = BraidWord::from_tokens(n, oracle::random_tokens(rng, n, length(rng)));
    auto v = BraidWord::from_tokens(n, oracle::random_tokens(rng, n, length(rng)));

    CHECK(exponent_sum(concatenate(u, v)) == exponent_sum(u) + exponent_sum(v));
    CHECK(closure_permutation(free_reduce(u)) == closure_permutation(u));
    CHECK(invert(invert(u)) == u);
    CHECK(free_reduce(concatenate(u, invert(u))).empty());

    auto perm = closure_permutation(u);
    CHECK(std::vector<int>(perm.images().begin(), perm.images().end()) ==
          oracle::strand_arrangement(n, u.tokens()));

    auto rewritten = u.tokens();
    for (int step = 0; step < 20; ++step) oracle::random_rewrite(rng, n, rewritten);
    auto r = BraidWord::from_tokens(n, rewritten);
    CHECK(exponent_sum(r) == exponent_sum(u));
    CHECK(closure_permutation(r) == closure_permutation(u));
  }
}

TEST_CASE("format_word round-trips") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto u = BraidWord::from_tokens(6, oracle::random_tokens(rng, 6, trial % 30));
    CHECK(parse_word(format_word(u), 6) == u);
  }
}
