#include "support.hpp"

#include "hypsub/corpus.hpp"
#include "hypsub/error.hpp"
#include "hypsub/tree_approx.hpp"
#include "hypsub/tree_contraction.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hypsub;

namespace {

NetMetric segment(std::size_t n) {
  std::vector<Rational> d;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d.push_back(Rational(static_cast<std::int64_t>(i > j ? i - j : j - i)));
  return NetMetric(n, std::move(d));
}

}  // namespace

TEST_CASE("e constants") {
  CHECK(e_constant(Rational(2), 1) == 3);
  CHECK(e_constant(Rational(2), 2) == 10);
  CHECK(e_constant(Rational(1), 3) == 29);
  CHECK(e_constant(Rational(1), 2) == 7);
}

TEST_CASE("h on a unit segment") {
  ContractionOperator op(segment(4), 0, Rational(2));
  CHECK(op.h0(0).empty());
  CHECK(op.apply(NetSimplex{0}).empty());
  NetChain path(1);
  path.add(NetSimplex{0, 1}, 1);
  path.add(NetSimplex{1, 2}, 1);
  path.add(NetSimplex{2, 3}, 1);
  CHECK(op.h0(3) == path);
  CHECK(op.h_minus1() == NetChain(NetSimplex{0}));
  for (NetIndex v = 0; v < 4; ++v) CHECK(boundary(op.h0(v)) + op.h_minus1() == NetChain(NetSimplex{v}));
}

TEST_CASE("exhaustive verification on a segment") {
  ContractionOperator op(segment(5), 0, Rational(2));
  const auto rep = verify_contraction(op, 2);
  CHECK(rep.ok());
  CHECK(rep.checked > 0);
}

TEST_CASE("the norm bound is attained at integer radius") {
  // h_1(1,3) = (1,1,3) - (1,1,2) - (1,2,3) has norm 3 = e(2,1): the bound is not strict.
  ContractionOperator op(segment(4), 0, Rational(2));
  const NetChain h = op.apply(NetSimplex{1, 3});
  NetChain expected(2);
  expected.add(NetSimplex{1, 1, 3}, 1);
  expected.add(NetSimplex{1, 1, 2}, -1);
  expected.add(NetSimplex{1, 2, 3}, -1);
  CHECK(h == expected);
  CHECK(l1_norm(h) == e_constant(Rational(2), 1));
  const auto lax = verify_contraction(op, 1);
  CHECK(lax.ok());
  CHECK(lax.norm_equalities > 0);
  ContractionOperator strict_op(segment(4), 0, Rational(2));
  const auto strict = verify_contraction(strict_op, 1, {.strict_norm = true});
  CHECK_FALSE(strict.ok());
  CHECK(strict.failures.front().kind == "norm");
}

TEST_CASE("strict norm bound holds at non-integer radius") {
  ContractionOperator op(segment(6), 2, Rational(5, 2));
  const auto rep = verify_contraction(op, 2, {.strict_norm = true});
  CHECK(rep.ok());
  CHECK(rep.norm_equalities == 0);
}

TEST_CASE("Rips violations are reported") {
  ContractionOperator op(segment(5), 0, Rational(2));
  CHECK_THROWS_AS(op.apply(NetSimplex{0, 4}), Error);
  const std::vector<NetSimplex> bad{NetSimplex{0, 4}};
  const auto rep = verify_contraction(op, bad);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].kind == "rips");
}

TEST_CASE("convex hulls in a tripod") {
  MetricTree t;
  for (int k = 0; k < 3; ++k) t.add_child(t.root(), Rational(1));
  const std::vector<TreeVertex> pts{0, 1, 2, 3};
  const NetMetric m(t, pts);
  const std::vector<NetIndex> one{2};
  CHECK(conv_hull(m, one) == std::vector<NetIndex>{2});
  const std::vector<NetIndex> two{1, 2};
  CHECK(conv_hull(m, two) == std::vector<NetIndex>{0, 1, 2});
  const std::vector<NetIndex> leaves{1, 2, 3};
  CHECK(conv_hull(m, leaves) == std::vector<NetIndex>{0, 1, 2, 3});
}

TEST_CASE("a net missing a branch point breaks the support bound") {
  // Tripod with legs 3/2; the centre is not a net point. h_0(b) - h_0(a) runs
  // through the basepoint instead of along [a, b].
  MetricTree t;
  const auto a = t.add_child(t.root(), Rational(3, 2));
  const auto b = t.add_child(t.root(), Rational(3, 2));
  const auto x = t.add_child(t.root(), Rational(3, 2));
  const std::vector<TreeVertex> net{a, b, x};
  ContractionOperator op(NetMetric(t, net), 2, Rational(3));
  const NetChain h = op.apply(NetSimplex{0, 1});
  CHECK(support(h).count(2) == 1);
  const std::vector<NetSimplex> edge{NetSimplex{0, 1}};
  const auto rep = verify_contraction(op, edge);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].kind == "support");
}

TEST_CASE("random trees contract exhaustively") {
  DeterministicRng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    MetricTree t;
    const std::size_t n = 2 + rng.below(5);
    for (std::size_t k = 0; k < n; ++k) {
      const auto parent = static_cast<TreeVertex>(rng.below(t.vertex_count()));
      t.add_child(parent, Rational(static_cast<std::int64_t>(2 + rng.below(5)), 2));
    }
    const auto net = select_net(t);
    const NetMetric m(t, net);
    ContractionOperator op(m, static_cast<NetIndex>(rng.below(net.size())), Rational(2));
    const auto rep = verify_contraction(op, 2);
    INFO("trial " << trial << ": " << (rep.ok() ? "" : rep.failures.front().detail));
    CHECK(rep.ok());
  }
}
