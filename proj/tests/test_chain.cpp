#include "support.hpp"

#include "hypsub/chain.hpp"
#include "hypsub/corpus.hpp"
#include "hypsub/error.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

using namespace hypsub;
using test_support::free_group;
using test_support::simplex;

TEST_CASE("boundary of simplices") {
  auto f2 = free_group(2, 4);
  const auto s = simplex(f2, {"", "a", "ab"});
  Chain expected(1);
  expected.add(simplex(f2, {"a", "ab"}), 1);
  expected.add(simplex(f2, {"", "ab"}), -1);
  expected.add(simplex(f2, {"", "a"}), 1);
  CHECK(boundary(s) == expected);

  const Chain degenerate = boundary(simplex(f2, {"", ""}));
  CHECK(degenerate.empty());
  CHECK(degenerate.dim() == 0);

  CHECK(boundary(boundary(simplex(f2, {"", "a", "ab", "b"}))).empty());
  CHECK_THROWS_AS(boundary(simplex(f2, {"a"})), Error);
}

TEST_CASE("norms") {
  auto f2 = free_group(2, 6);
  CHECK(l1_norm(Chain(1)) == 0);
  Chain c(1);
  c.add(simplex(f2, {"", "a"}), 3);
  c.add(simplex(f2, {"", "b"}), -2);
  CHECK(l1_norm(c) == 5);
  for (int n = 1; n <= 4; ++n) {
    Simplex s{f2.identity()};
    const char* vs[] = {"a", "b", "ab", "bb"};
    for (int k = 0; k < n; ++k) s.vertices.push_back(f2.parse(vs[k]));
    CHECK(l1_norm(boundary(s)) == n + 1);
  }

  CHECK(sobolev_norm(f2, Chain(simplex(f2, {"", ""}))) == 1);
  CHECK(sobolev_norm(f2, Chain(simplex(f2, {"", "aaaaa"}))) == 6);
  Chain d(1);
  d.add(simplex(f2, {"", "a"}), 2);
  d.add(simplex(f2, {"", "bb"}), 1);
  CHECK(sobolev_norm(f2, d) == 7);
}

TEST_CASE("action, cone, support, augmentation") {
  auto f2 = free_group(2, 6);
  Chain c(1);
  c.add(simplex(f2, {"", "b"}), 2);
  CHECK(act(f2, f2.identity(), c) == c);
  CHECK(act(f2, f2.parse("a"), simplex(f2, {"", "b"})) == simplex(f2, {"a", "ab"}));

  CHECK(cone(f2.identity(), Chain(simplex(f2, {"a", "b"}))) == Chain(simplex(f2, {"", "a", "b"})));
  CHECK(cone(f2.identity(), Chain(1)).empty());

  Chain s(1);
  s.add(simplex(f2, {"", "a"}), 2);
  s.add(simplex(f2, {"a", "b"}), -1);
  CHECK(support(s) == std::set<Element>{f2.identity(), f2.parse("a"), f2.parse("b")});

  Chain z(0);
  z.add(simplex(f2, {""}), 3);
  z.add(simplex(f2, {"a"}), -3);
  CHECK(augmentation(z) == 0);
  CHECK_THROWS_AS(augmentation(s), Error);
}

TEST_CASE("Rips predicate") {
  auto f2 = free_group(2, 6);
  CHECK(rips_check(f2, Chain(1), Rational(0)));
  CHECK_FALSE(rips_check(f2, Chain(simplex(f2, {"", "aaa"})), Rational(2)));
  CHECK(rips_check(f2, Chain(simplex(f2, {"", "a", "ab"})), Rational(2)));
}

TEST_CASE("chain algebra properties on random chains") {
  auto f2 = free_group(2, 8);
  DeterministicRng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(4));
    Chain c(n);
    for (int t = 0; t < 4; ++t) {
      Simplex s;
      for (int k = 0; k <= n; ++k) s.vertices.push_back(random_element(f2, rng, 2));
      c.add(s, static_cast<long>(rng.below(7)) - 3);
    }
    const Element g = random_element(f2, rng, 2);
    const Element v = random_element(f2, rng, 2);
    if (n >= 2) CHECK(boundary(boundary(c)).empty());
    // d commutes with the action
    CHECK(boundary(act(f2, g, c)) == act(f2, g, boundary(c)));
    // cone identity: d c_v + c_v d = id in positive degrees
    CHECK(boundary(cone(v, c)) + cone(v, boundary(c)) == c);
    // the action preserves both norms
    CHECK(l1_norm(act(f2, g, c)) == l1_norm(c));
    CHECK(sobolev_norm(f2, act(f2, g, c)) == sobolev_norm(f2, c));
    if (n == 1) CHECK(augmentation(boundary(c)) == 0);
  }
}

TEST_CASE("chain JSON is canonical and round-trips") {
  auto f2 = free_group(2, 6);
  Chain c(2);
  c.add(simplex(f2, {"", "a", "ab"}), 3);
  c.add(simplex(f2, {"", "B", "b"}), -1);
  c.add(simplex(f2, {"a", "a", "a"}), 0);
  const auto j = chain_to_json(f2, c);
  CHECK(j.dump() ==
        R"({"dim":2,"terms":[{"simplex":["","B","b"],"coeff":-1},{"simplex":["","a","ab"],"coeff":3}]})");
  CHECK(chain_from_json(f2, nlohmann::json::parse(j.dump())) == c);

  Coeff big = 1;
  for (int k = 0; k < 70; ++k) big *= 2;
  CHECK(coeff_to_json(big).is_string());
  CHECK(coeff_from_json(coeff_to_json(big), "") == big);
}
