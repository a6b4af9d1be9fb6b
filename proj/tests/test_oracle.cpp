#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "sigma/error.hpp"
#include "sigma/oracle.hpp"
#include "support.hpp"

using namespace sigma;
using sigma::test::S;

TEST_SUITE("oracle") {

TEST_CASE("enumerate_sigma_sets") {
  CHECK(oracle::enumerate_sigma_sets(oracle::Universe({"1"})) ==
        std::vector{SigmaSet{}, S({"1"}), S({"1*"})});
  CHECK(oracle::enumerate_sigma_sets(oracle::Universe{}) == std::vector{SigmaSet{}});

  const auto two = oracle::enumerate_sigma_sets(oracle::Universe({"2", "1"}));
  CHECK(two.size() == 9);
  CHECK(std::find(two.begin(), two.end(), S({"1", "2*"})) != two.end());
}

TEST_CASE("enumeration is complete and duplicate-free") {
  for (std::size_t n = 0; n <= 6; ++n) {
    std::vector<std::string> bases;
    for (std::size_t i = 0; i < n; ++i) bases.push_back("b" + std::to_string(i));
    const auto sets = oracle::enumerate_sigma_sets(oracle::Universe(bases));
    std::set<SigmaSet> unique(sets.begin(), sets.end());
    std::size_t expected = 1;
    for (std::size_t i = 0; i < n; ++i) expected *= 3;
    REQUIRE(sets.size() == expected);
    REQUIRE(unique.size() == expected);
  }
}

TEST_CASE("universe validation and limits") {
  CHECK_THROWS_AS(oracle::Universe({"a*"}), Error);
  std::vector<std::string> many;
  for (int i = 0; i < 17; ++i) many.push_back("u" + std::to_string(i));
  const oracle::Universe big(many);
  try {
    big.count();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OracleInfeasible);
  }
  many.pop_back();
  CHECK(oracle::Universe(many).count() == 43046721);
  CHECK(oracle::Universe({"b", "a", "b"}).bases() == std::vector<std::string>{"a", "b"});
}

TEST_CASE("reference_fuse examples") {
  CHECK(oracle::reference_fuse(S({"1", "2"}), S({"1*", "2*"})).empty());
  CHECK(oracle::reference_fuse(S({"q", "r*"}), {}) == S({"q", "r*"}));
  CHECK(oracle::reference_fuse(S({"1", "2*"}), S({"2", "3"})) == S({"1", "3"}));
}

TEST_CASE("reference_fuse matches fuse") {
  const auto all = sigma::test::universe_sets(sigma::test::kThreeBases);
  for (const auto& x : all)
    for (const auto& y : all) REQUIRE(oracle::reference_fuse(x, y) == fuse(x, y));

  std::mt19937_64 rng(99);
  for (int i = 0; i < 10000; ++i) {
    const auto x = sigma::test::random_set(rng, sigma::test::kSixBases);
    const auto y = sigma::test::random_set(rng, sigma::test::kSixBases);
    REQUIRE(oracle::reference_fuse(x, y) == fuse(x, y));
  }
}

}  // TEST_SUITE
