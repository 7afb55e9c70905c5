#include "support.hpp"

#include "hypsub/dehn.hpp"
#include "hypsub/error.hpp"
#include "hypsub/word.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <algorithm>
#include <random>

using namespace hypsub;
using test_support::free_group;
using test_support::genus2;

namespace {

std::vector<Word> reduced_words(std::size_t letters, int max_len) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t l = 0; l < letters; ++l) {
        const Word& w = out[i];
        if (!w.empty() && w.back() == inverse_letter(static_cast<Letter>(l))) continue;
        Word v = w;
        v.push_back(static_cast<Letter>(l));
        out.push_back(std::move(v));
      }
    }
    begin = end;
  }
  return out;
}

}  // namespace

TEST_CASE("words round-trip through the alphabet") {
  Alphabet ab({'a', 'b'});
  CHECK(ab.format(ab.parse("aBBa")) == "aBBa");
  CHECK(ab.parse("").empty());
  CHECK(free_reduce(ab.parse("abBA")).empty());
  CHECK(inverse(ab.parse("ab")) == ab.parse("BA"));
  CHECK_THROWS_AS(ab.parse("ax"), Error);
  CHECK(shortlex_less(ab.parse("b"), ab.parse("aa")));
  CHECK(shortlex_less(ab.parse("a"), ab.parse("A")));
}

TEST_CASE("ball sizes") {
  CHECK(free_group(2, 2).ball_size() == 17);
  CHECK(free_group(1, 3).ball_size() == 7);
  CHECK(genus2(2).ball_size() == 65);
  CHECK(genus2(6).sphere_sizes() == std::vector<std::uint64_t>{1, 8, 56, 392, 2736, 19096, 133288});
  // the implicit free ball needs no table even where a table would not fit
  CHECK(free_group(2, 20).ball_size() == 6973568801ull);
}

TEST_CASE("Z ball contents") {
  auto z = free_group(1, 3);
  std::vector<std::string> all;
  for (std::uint64_t i = 0; i < z.ball_size(); ++i) all.push_back(z.format(Element{i}));
  CHECK(all == std::vector<std::string>{"", "a", "A", "aa", "AA", "aaa", "AAA"});
}

TEST_CASE("multiplication, inverse and out-of-ball") {
  auto f2 = free_group(2, 3);
  CHECK(f2.multiply(f2.parse("a"), f2.parse("A")) == f2.identity());
  CHECK(f2.format(f2.multiply(f2.parse("ab"), f2.parse("b"))) == "abb");
  CHECK(f2.inverse(f2.parse("aB")) == f2.parse("bA"));
  try {
    f2.multiply(f2.parse("aaa"), f2.parse("a"));
    FAIL("expected OutOfBall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfBall);
  }
}

TEST_CASE("distances and diameters in F2") {
  auto f2 = free_group(2, 6);
  const auto e = f2.identity();
  CHECK(f2.distance(e, e) == 0);
  CHECK(f2.distance(f2.parse("a"), f2.parse("ab")) == 1);
  CHECK(f2.distance(f2.parse("bA"), f2.parse("ab")) == 4);
  std::vector<Element> t{e, e, e};
  CHECK(f2.diameter(t) == 0);
  t = {e, f2.parse("a"), f2.parse("ab")};
  CHECK(f2.diameter(t) == 2);
  t = {e, f2.parse("aaaaa")};
  CHECK(f2.diameter(t) == 5);
}

TEST_CASE("geodesics and hulls") {
  auto f2 = free_group(2, 6);
  auto fmt = [&](const std::vector<Element>& xs) {
    std::vector<std::string> out;
    for (auto x : xs) out.push_back(f2.format(x));
    return out;
  };
  using V = std::vector<std::string>;
  CHECK(fmt(f2.based_geodesic(f2.identity())) == V{""});
  CHECK(fmt(f2.based_geodesic(f2.parse("aaa"))) == V{"", "a", "aa", "aaa"});
  CHECK(fmt(f2.based_geodesic(f2.parse("ab"))) == V{"", "a", "ab"});
  CHECK(fmt(f2.geodesic(f2.parse("ab"), f2.parse("ab"))) == V{"ab"});
  CHECK(fmt(f2.geodesic(f2.parse("a"), f2.parse("ab"))) == V{"a", "ab"});
  CHECK(fmt(f2.geodesic(f2.parse("b"), f2.parse("a"))) == V{"b", "", "a"});

  std::vector<Element> y{f2.identity()};
  CHECK(fmt(f2.geodesic_hull(y)) == V{""});
  y = {f2.identity(), f2.parse("a"), f2.parse("b")};
  CHECK(fmt(f2.geodesic_hull(y)) == V{"", "a", "b"});
  y = {f2.identity(), f2.parse("aa"), f2.parse("b")};
  CHECK(fmt(f2.geodesic_hull(y)) == V{"", "a", "b", "aa"});
  y.clear();
  CHECK_THROWS_AS(f2.geodesic_hull(y), Error);
}

TEST_CASE("geodesics are equivariant translates of based geodesics") {
  auto g = genus2(6);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Element x{rng() % 457};  // radius-3 ball
    const Element y{rng() % 457};
    const auto path = g.geodesic(x, y);
    REQUIRE(path.front() == x);
    REQUIRE(path.back() == y);
    REQUIRE(static_cast<int>(path.size()) == g.distance(x, y) + 1);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) CHECK(g.distance(path[k], path[k + 1]) == 1);
    const auto based = g.based_geodesic(g.quotient(x, y));
    for (std::size_t k = 0; k < path.size(); ++k) CHECK(g.quotient(x, path[k]) == based[k]);
  }
}

TEST_CASE("word metric on the genus-2 ball matches Dehn's algorithm") {
  // Oracle: classes of freely reduced words of length <= 4 under Dehn equality.
  auto g = genus2(4);
  const DehnReducer& dehn = *g.dehn();
  const auto words = reduced_words(8, 4);
  REQUIRE(words.size() == 3201);
  std::vector<std::size_t> rep(words.size());
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < words.size(); ++i) {
    rep[i] = i;
    for (std::size_t r : reps) {
      if ((words[r].size() - words[i].size()) % 2 != 0) continue;  // the Cayley graph is bipartite
      if (dehn.equal(words[r], words[i])) {
        rep[i] = r;
        break;
      }
    }
    if (rep[i] == i) reps.push_back(i);
  }
  CHECK(reps.size() == 3193);
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Element x = g.element(words[i]);
    CHECK(x == g.element(words[rep[i]]));
    // ShortLex normal form is the first word of the class in enumeration order
    CHECK(g.word(x) == words[rep[i]]);
  }
}

TEST_CASE("Dehn reducer recognises relator conjugates") {
  Alphabet al({'a', 'b', 'c', 'd'});
  DehnReducer d({al.parse("abABcdCD")}, 8);
  CHECK(d.is_identity(al.parse("abABcdCD")));
  CHECK(d.is_identity(al.parse("cdCDabAB")));
  CHECK(d.is_identity(al.parse("dcDCbaBA")));
  CHECK(d.is_identity(al.parse("aabABcdCDA")));
  CHECK_FALSE(d.is_identity(al.parse("abAB")));
  CHECK(d.equal(al.parse("abAB"), al.parse("dcDC")));
}

TEST_CASE("presentation validation") {
  using nlohmann::json;
  auto code_of = [](const json& j) {
    try {
      presentation_from_json(j);
    } catch (const Error& e) {
      return std::make_pair(e.code(), e.path());
    }
    return std::make_pair(ErrorCode::InvalidInput, std::string("no error"));
  };
  CHECK(code_of(json::parse(R"({"generators":[],"ball_radius":2})")).first == ErrorCode::PresentationInvalid);
  CHECK(code_of(json::parse(R"({"generators":["a"],"ball_radius":-1})")).second == "/ball_radius");
  CHECK(code_of(json::parse(R"({"generators":["a","b"],"relators":["abAB"],"backend":"dehn","ball_radius":2})"))
            .second == "/relators/0");
  CHECK(code_of(json::parse(R"({"generators":["a","b"],"relators":["aBA"],"backend":"dehn","ball_radius":2})"))
            .second == "/relators/0");
  CHECK(code_of(json::parse(R"({"generators":["a"],"relators":["aa"],"ball_radius":2})")).second == "/relators");
  CHECK(code_of(json::parse(R"({"generators":["a"],"backend":"magic","ball_radius":2})")).second == "/backend");
}

TEST_CASE("delta estimates") {
  CHECK(estimate_delta(free_group(2, 6), 3) == 0);
  CHECK(estimate_delta(free_group(1, 10), 5) == 0);
  auto g = genus2(6);
  const Rational d = estimate_delta(g, 3);
  CHECK(d >= 0);
  CHECK((d * 2).denominator() == 1);
  const auto golden = nlohmann::json::parse(test_support::slurp(test_support::golden_path("genus2_delta.json")));
  CHECK(to_string(d) == golden["delta_estimate"].get<std::string>());
  CHECK_THROWS_AS(estimate_delta(g, 4), Error);
}
