#include "support.hpp"

#include "hypsub/corpus.hpp"
#include "hypsub/report.hpp"
#include "hypsub/subdivision.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

using namespace hypsub;
using test_support::free_group;
using test_support::genus2;

namespace {

std::string certify_text(const GroupContext& g, std::uint64_t seed, std::size_t per_dim) {
  SubdivisionMap map(g, 3);
  CorpusOptions opts;
  opts.seed = seed;
  opts.per_dim = per_dim;
  const auto corpus = generate_corpus(map, opts);
  // same description the CLI writes for a generated corpus
  auto description = corpus_to_json(g, {}, &opts)["generator"];
  description["source"] = "generated";
  description["size"] = corpus.size();
  const auto run = run_certification(map, corpus, description, seed);
  return to_json(g, run).dump(2) + "\n";
}

}  // namespace

TEST_CASE("FNV-1a reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("group hash is stable and presentation-sensitive") {
  const auto f2 = load_presentation(test_support::data_path("f2.json"));
  const auto g2 = load_presentation(test_support::data_path("genus2.json"));
  CHECK(group_hash(f2).size() == 16);
  CHECK(group_hash(f2) == group_hash(load_presentation(test_support::data_path("f2.json"))));
  CHECK(group_hash(f2) != group_hash(g2));
  CHECK(group_hash(g2) == "a900e83b88d2e2c3");
}

TEST_CASE("rational formatting") {
  CHECK(to_string(Ratio(17, 5)) == "17/5");
  CHECK(to_string(Ratio(2)) == "2/1");
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("4") == Rational(4));
}

TEST_CASE("corpus generation is seeded") {
  auto g = genus2(6);
  SubdivisionMap m1(g, 3), m2(g, 3);
  CorpusOptions opts;
  opts.per_dim = 15;
  opts.seed = 42;
  const auto a = generate_corpus(m1, opts);
  const auto b = generate_corpus(m2, opts);
  CHECK(a == b);
  CHECK(a.size() == 45);
  opts.seed = 43;
  CHECK(generate_corpus(m1, opts) != a);
  for (const auto& s : a) CHECK(diameter(g, s) <= opts.max_diameter);

  const auto j = corpus_to_json(g, a, &opts);
  CHECK(corpus_from_json(g, nlohmann::json::parse(j.dump())) == a);
}

TEST_CASE("certification report matches the golden file") {
  auto g = free_group(2, 14);
  const std::string text = certify_text(g, 1, 4);
  CHECK(text == test_support::slurp(test_support::golden_path("f2_certify_seed1.json")));
  CHECK(text == certify_text(g, 1, 4));
}

TEST_CASE("subdivided chain matches the golden file") {
  auto g = free_group(2, 14);
  SubdivisionMap map(g, 3);
  const auto s = test_support::simplex(g, {"", "ab", "ba"});
  CHECK(chain_to_json(g, map.subdivide(s)).dump(2) + "\n" ==
        test_support::slurp(test_support::golden_path("f2_subdivide_e_ab_ba.json")));
  // a tree triangle whose edge subdivisions cancel exactly
  CHECK(map.subdivide(test_support::simplex(g, {"", "a", "ab"})).empty());
}
