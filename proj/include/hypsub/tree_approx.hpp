#pragma once

#include "hypsub/group.hpp"
#include "hypsub/metric_tree.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <vector>

namespace hypsub {

/// (d(base,x) + d(base,y) - d(x,y)) / 2.
Rational gromov_product(const GroupContext& ctx, Element x, Element y, Element base);

/// Tree approximating the geodesic hull of a tuple. Every image f(x) is a
/// tree vertex.
struct TreeApproximation {
  std::vector<Element> tuple;
  std::vector<Element> hull;  // sorted by id
  MetricTree tree;
  std::vector<TreeVertex> f;  // parallel to hull
  /// Distortion over pairs of vertices on the based geodesics w_{y0, yi}.
  Rational c0 = 0;
  /// Distortion over all hull pairs.
  Rational c_prime = 0;
  /// 4 delta + 3 c0 when delta is known.
  std::optional<Rational> bound;

  std::size_t hull_index(Element x) const;
  TreeVertex image(Element x) const { return f[hull_index(x)]; }
};

/// Branch gluing along Gromov products for the based geodesics, then
/// clamped placement on [f(y_a), f(y_b)] for the remaining hull vertices.
TreeApproximation approximate_by_tree(const GroupContext& ctx, std::span<const Element> tuple,
                                      std::optional<Rational> delta = std::nullopt);

/// Unit-spaced points on every edge, thinned to pairwise separation >= 1
/// (existing vertices first, root first), then made into vertices. Returned
/// sorted by vertex id, so the root is net index 0.
std::vector<TreeVertex> select_net(MetricTree& tree);

struct NetCheck {
  Rational min_separation = 0;  // 0 for a single point
  Rational density = 0;         // sup over the tree of the distance to the net
  Rational max_gap = 0;         // along geodesics between net points
  bool ok() const { return (min_separation >= 1 || min_separation == 0) && density <= 3 && max_gap <= 2; }
};

NetCheck verify_net(const MetricTree& tree, std::span<const TreeVertex> net);

/// Rough isometries between a hull and a net in its approximating tree.
struct Correspondence {
  TreeApproximation approx;
  std::vector<TreeVertex> net;
  NetMetric net_metric;
  std::vector<std::uint32_t> phi;  // hull index -> net index
  std::vector<std::uint32_t> psi;  // net index -> hull index
  /// Max of the distortions of phi and psi and the displacements of
  /// phi psi and psi phi.
  Rational c = 0;
  NetCheck net_check;

  const std::vector<Element>& hull() const { return approx.hull; }
  std::uint32_t phi_of(Element x) const { return phi[approx.hull_index(x)]; }
  Element psi_of(std::uint32_t v) const { return approx.hull[psi[v]]; }
  Element round_trip(Element x) const { return psi_of(phi_of(x)); }
};

Correspondence build_correspondence(const GroupContext& ctx, std::span<const Element> tuple,
                                    std::optional<Rational> delta = std::nullopt);

/// Tree, net and maps as JSON (words for hull vertices, "p/q" lengths).
nlohmann::ordered_json to_json(const GroupContext& ctx, const Correspondence& c);

}  // namespace hypsub
