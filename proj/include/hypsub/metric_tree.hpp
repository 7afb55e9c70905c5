#pragma once

#include "hypsub/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace hypsub {

using TreeVertex = std::uint32_t;

/// A point of the geometric tree: `offset` units from `vertex` toward its
/// parent, with 0 <= offset < edge_length(vertex). Offset 0 is the vertex.
struct TreePoint {
  TreeVertex vertex = 0;
  Rational offset = 0;
  bool operator==(const TreePoint&) const = default;
};

/// Rooted metric simplicial tree with positive rational edge lengths. The
/// edge joining v to its parent is identified with v. Vertex ids are stable
/// under subdivision.
class MetricTree {
 public:
  static constexpr TreeVertex kNone = std::numeric_limits<TreeVertex>::max();

  MetricTree();

  TreeVertex root() const noexcept { return 0; }
  std::size_t vertex_count() const noexcept { return parent_.size(); }
  TreeVertex parent(TreeVertex v) const { return parent_.at(v); }
  const Rational& edge_length(TreeVertex v) const { return length_.at(v); }
  const Rational& depth(TreeVertex v) const { return depth_.at(v); }
  const std::vector<TreeVertex>& children(TreeVertex v) const { return children_.at(v); }
  std::size_t degree(TreeVertex v) const;

  TreeVertex add_child(TreeVertex p, const Rational& length);
  /// Returns the vertex at `p`, subdividing its edge if necessary.
  TreeVertex materialize(const TreePoint& p);

  TreeVertex lca(TreeVertex u, TreeVertex v) const;
  Rational distance(TreeVertex u, TreeVertex v) const;
  Rational distance(const TreePoint& p, const TreePoint& q) const;
  /// Vertex sequence of the geodesic from u to v.
  std::vector<TreeVertex> path(TreeVertex u, TreeVertex v) const;
  /// The point at distance s from u on [u, v], 0 <= s <= d(u, v).
  TreePoint point_on_path(TreeVertex u, TreeVertex v, const Rational& s) const;
  /// Distances from `source` to every vertex.
  std::vector<Rational> distances_from(TreeVertex source) const;
  Rational total_length() const;

  /// `{"vertices": N, "root": 0, "edges": [[parent, child, "p/q"], ...]}`.
  nlohmann::ordered_json to_json() const;
  static MetricTree from_json(const nlohmann::json& j);

 private:
  TreePoint climb(TreeVertex v, Rational s) const;

  std::vector<TreeVertex> parent_;
  std::vector<Rational> length_;
  std::vector<Rational> depth_;
  std::vector<std::vector<TreeVertex>> children_;
};

/// Distance matrix restricted to a finite point set (the net), indexed by
/// position in the set.
class NetMetric {
 public:
  NetMetric() = default;
  NetMetric(const MetricTree& tree, std::span<const TreeVertex> points);
  NetMetric(std::size_t n, std::vector<Rational> matrix);

  std::size_t size() const noexcept { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> d_;
};

}  // namespace hypsub
