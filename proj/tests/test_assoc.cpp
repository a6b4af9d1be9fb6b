#include <algorithm>
#include <array>

#include "doctest.h"
#include "sigma/assoc.hpp"
#include "sigma/error.hpp"
#include "support.hpp"

using namespace sigma;
using sigma::test::S;
namespace nv = sigma::test::naive;

namespace {

// Every permutation of the triple, both bracketings, in the naive model.
bool naive_all_orders_associative(const SigmaSet& x, const SigmaSet& y,
                                  const SigmaSet& z) {
  std::array<nv::Set, 3> t{nv::from(x), nv::from(y), nv::from(z)};
  std::array<int, 3> idx{0, 1, 2};
  do {
    const auto& a = t[idx[0]];
    const auto& b = t[idx[1]];
    const auto& c = t[idx[2]];
    if (nv::fuse(nv::fuse(a, b), c) != nv::fuse(a, nv::fuse(b, c))) return false;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return true;
}

}  // namespace

TEST_SUITE("assoc") {

TEST_CASE("chain_value is a left fold") {
  CHECK(chain_value(FusionChain({S({"1", "2"}), S({"1*", "2*"}), S({"1"})})) ==
        S({"1"}));
  CHECK(chain_value(FusionChain({S({"a", "b"})})) == S({"a", "b"}));
  CHECK(chain_value(FusionChain({S({"a", "b"}), S({"a*", "b*"}), S({"c", "d"})})) ==
        S({"c", "d"}));
}

TEST_CASE("empty chains are usage errors") {
  CHECK_THROWS_AS(FusionChain({}), Error);
  try {
    chain_value(std::span<const SigmaSet>{});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Usage);
  }
}

TEST_CASE("eval_chain") {
  CHECK(eval_chain(S({"a", "b"}), S({"a*", "b*"}), S({"c", "d"})).empty());
  CHECK(eval_chain(S({"1", "2"}), S({"1*", "2*"}), S({"1*"})) == S({"1*"}));
  CHECK(eval_chain({}, {}, {}).empty());
}

TEST_CASE("mirrored chain of the worked example") {
  // value(C* B* A*) for A={a,b}, B={a*,b*}, C={c,d} is C*.
  const std::array mirrored{S({"c*", "d*"}), S({"a", "b"}), S({"a*", "b*"})};
  CHECK(chain_value(mirrored) == S({"c*", "d*"}));
}

TEST_CASE("is_assoc_order") {
  CHECK_FALSE(is_assoc_order(S({"1", "2"}), S({"1*", "2*"}), S({"1*"})));
  // Both folds of ({1,2}, {1*,2*}, {1}) give {1}: {1*,2*} ∪ {1} = {2*}.
  CHECK(fuse(S({"1*", "2*"}), S({"1"})) == S({"2*"}));
  CHECK(is_assoc_order(S({"1", "2"}), S({"1*", "2*"}), S({"1"})));
  CHECK(is_assoc_order(S({"a", "b"}), S({"a*", "b*"}), S({"c", "d"})));
  CHECK(is_assoc_order(S({"1"}), S({"2"}), S({"3"})));
}

TEST_CASE("triad_system") {
  SUBCASE("fully cancelling pair with a bystander") {
    const SigmaSet x = S({"a", "b"}), y = S({"a*", "b*"}), z = S({"c", "d"});
    REQUIRE(naive_all_orders_associative(x, y, z));
    const auto r = triad_system(x, y, z);
    CHECK(r.e_x.empty());
    CHECK(r.e_y.empty());
    CHECK(r.e_z.empty());
    CHECK(r.locally_associative);
    CHECK_FALSE(r.first_failing_order().has_value());
  }
  SUBCASE("associative in one order only") {
    const SigmaSet x = S({"1", "2"}), y = S({"1*", "2*"}), z = S({"1", "2"});
    const auto r = triad_system(x, y, z);
    CHECK(r.e_x.empty());
    CHECK_FALSE(r.locally_associative);
    CHECK_FALSE(r.verdict(Ordering::YXZ));
    CHECK(r.first_failing_order() == Ordering::YXZ);
    // Only XYZ and its reversal ZYX survive.
    CHECK(r.failing_orders() ==
          std::vector{Ordering::YXZ, Ordering::ZXY, Ordering::XZY, Ordering::YZX});
  }
  SUBCASE("empties") {
    const auto r = triad_system({}, {}, {});
    CHECK(r.locally_associative);
    CHECK(r.e_x.empty());
  }
}

TEST_CASE("is_locally_associative") {
  CHECK(is_locally_associative(S({"a", "b"}), S({"a*", "b*"}), S({"c", "d"})));
  CHECK_FALSE(is_locally_associative(S({"1", "2"}), S({"1*", "2*"}), S({"1", "2"})));
  REQUIRE(naive_all_orders_associative(S({"1"}), S({"2"}), S({"3"})));
  CHECK(is_locally_associative(S({"1"}), S({"2"}), S({"3"})));
}

TEST_CASE("orderings") {
  CHECK(permutation(Ordering::YXZ) == std::array{1, 0, 2});
  CHECK(permutation(Ordering::ZXY) == std::array{2, 0, 1});
  for (auto o : kAllOrderings) CHECK(parse_ordering(to_string(o)) == o);
  CHECK_FALSE(parse_ordering("XXY").has_value());
}

TEST_CASE("reversal and chain-antiset properties (3 bases, exhaustive)") {
  const auto all = sigma::test::universe_sets(sigma::test::kThreeBases);
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) {
        const std::array abc{a, b, c};
        const std::array cba{c, b, a};
        const std::array stars{antiset(a), antiset(b), antiset(c)};
        if (is_directly_associative(a, b, c)) {
          REQUIRE(chain_value(abc) == chain_value(cba));
        }
        REQUIRE(antiset(chain_value(abc)) == chain_value(stars));
      }
}

TEST_CASE("triad verdict matches the naive six-order check (2 bases)") {
  const auto all = sigma::test::universe_sets(sigma::test::kTwoBases);
  for (const auto& x : all)
    for (const auto& y : all)
      for (const auto& z : all) {
        REQUIRE(is_locally_associative(x, y, z) ==
                naive_all_orders_associative(x, y, z));
      }
}

}  // TEST_SUITE
