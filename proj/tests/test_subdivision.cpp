#include "support.hpp"

#include "hypsub/corpus.hpp"
#include "hypsub/error.hpp"
#include "hypsub/subdivision.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

using namespace hypsub;
using test_support::free_group;
using test_support::genus2;
using test_support::simplex;

TEST_CASE("radius schedule") {
  CHECK(radius_schedule(Rational(1), Rational(0)) == 13);
  CHECK(radius_schedule(Rational(7), Rational(3)) == 25);
  const auto p = make_params(3, {Rational(0), Rational(0), Rational(0)});
  REQUIRE(p.r.size() == 4);
  CHECK(p.r[0] == 1);
  CHECK(p.r[1] == 1);
  CHECK(p.r[2] == 13);
  CHECK(p.r[3] == 25);
  const auto q = make_params(3, {Rational(0), Rational(0), Rational(4)});
  CHECK(q.r[3] == 13 + 8 + 12);
}

TEST_CASE("f0 and f1") {
  auto f2 = free_group(2, 6);
  const auto e = simplex(f2, {""});
  CHECK(subdivide_f0(e) == Chain(e));
  const auto flat = simplex(f2, {"", ""});
  CHECK(subdivide_f1(f2, flat) == Chain(flat));
  Chain expected(1);
  expected.add(simplex(f2, {"", "a"}), 1);
  expected.add(simplex(f2, {"a", "aa"}), 1);
  expected.add(simplex(f2, {"aa", "aaa"}), 1);
  CHECK(subdivide_f1(f2, simplex(f2, {"", "aaa"})) == expected);
  CHECK_THROWS_AS(subdivide_f1(f2, e), Error);
}

TEST_CASE("prism homotopy") {
  auto f2 = free_group(2, 8);
  auto id = [](Element v) { return v; };
  DeterministicRng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(3));
    Simplex s;
    for (int k = 0; k <= n; ++k) s.vertices.push_back(random_element(f2, rng, 3));
    const Chain c(s);
    // psi phi = id: every prism is degenerate and the identity telescopes to zero
    CHECK((boundary(prism_homotopy(id, c)) + prism_homotopy(id, boundary(c))).empty());

    const Element g = random_element(f2, rng, 2);
    auto shift = [&](Element v) { return f2.multiply(v, g); };
    Chain image(n);
    for (const auto& [t, k] : c) {
      Simplex u;
      for (Element v : t) u.vertices.push_back(shift(v));
      image.add(u, k);
    }
    CHECK(boundary(prism_homotopy(shift, c)) + prism_homotopy(shift, boundary(c)) == image - c);
  }
}

TEST_CASE("single-edge certificate") {
  auto f2 = free_group(2, 10);
  SubdivisionMap map(f2, 3);
  const auto cert = certify(map, simplex(f2, {"", "a"}));
  CHECK(cert.pass());
  CHECK(cert.output_l1 == 1);
  CHECK(cert.input_sobolev == 2);
  CHECK(cert.residual == 0);
}

TEST_CASE("subdivision is equivariant and a chain map") {
  for (bool surface : {false, true}) {
    auto g = surface ? genus2(6) : free_group(2, 12);
    SubdivisionMap map(g, 3);
    DeterministicRng rng(surface ? 31 : 13);
    int done = 0;
    for (int trial = 0; trial < 400 && done < 60; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(3));
      Simplex s{random_element(g, rng, 2)};
      for (int k = 1; k <= n; ++k) s.vertices.push_back(rng.chance(1, 4) ? s[0] : random_element(g, rng, 2));
      const Element h = random_element(g, rng, 1);
      try {
        if (diameter(g, s) > 4) continue;
        const Chain f = map.subdivide(s);
        CHECK(boundary(f) == map.subdivide(boundary(s)));
        CHECK(map.subdivide(act(g, h, s)) == act(g, h, f));
        CHECK(rips_check(g, f, map.radius(n), &map.diameters()));
        ++done;
      } catch (const Error& e) {
        REQUIRE(e.code() == ErrorCode::OutOfBall);
      }
    }
    CHECK(done >= 40);
  }
}

TEST_CASE("batch of 2-simplices certifies under the golden ratio") {
  const auto golden = nlohmann::json::parse(test_support::slurp(test_support::golden_path("max_ratio.json")));
  auto f2 = free_group(2, 14);
  SubdivisionMap map(f2, 3);
  CorpusOptions opts;
  opts.dims = {2};
  opts.per_dim = 100;
  opts.seed = 5;
  opts.include_special = false;
  const auto corpus = generate_corpus(map, opts);
  REQUIRE(corpus.size() == 100);
  const auto certs = certify_all(map, corpus);
  Ratio worst = 0;
  for (const auto& c : certs) {
    CHECK(c.pass());
    worst = std::max(worst, Ratio(c.output_l1, c.input_sobolev));
  }
  CHECK(worst <= Ratio(golden["f2_batch100_dim2"].get<std::string>()));
}

TEST_CASE("bounds") {
  const auto p = make_params(3, {Rational(0), Rational(0), Rational(0)});
  CHECK(cascade_bound(p, 1) == 1);
  // K_2 = (e(r(1)+c(1), 2) + 2) * K_1 * 3 with e(1, 2) = 7
  CHECK(cascade_bound(p, 2) == 27);
  CHECK(norm_bound(p, 1, Ratio(1), Coeff(5)) == 5);
  CHECK(norm_bound(p, 2, Ratio(1), Coeff(2)) == 54);
}

TEST_CASE("radius schedule overflow is reported") {
  auto f2 = free_group(2, 8);
  SubdivisionMap map(f2, 1);
  CHECK_THROWS_AS(map.subdivide(simplex(f2, {"", "a", "b"})), Error);
}
