#include "hypsub/metric_tree.hpp"

#include "hypsub/error.hpp"

#include <algorithm>
#include <queue>

namespace hypsub {

MetricTree::MetricTree() : parent_{kNone}, length_{0}, depth_{0}, children_(1) {}

std::size_t MetricTree::degree(TreeVertex v) const {
  return children_.at(v).size() + (v == root() ? 0 : 1);
}

TreeVertex MetricTree::add_child(TreeVertex p, const Rational& length) {
  if (p >= vertex_count()) throw Error(ErrorCode::InvalidInput, "unknown tree vertex");
  if (length <= 0) throw Error(ErrorCode::InvalidInput, "tree edge lengths must be positive");
  const auto v = static_cast<TreeVertex>(vertex_count());
  parent_.push_back(p);
  length_.push_back(length);
  depth_.push_back(depth_[p] + length);
  children_.emplace_back();
  children_[p].push_back(v);
  return v;
}

TreeVertex MetricTree::materialize(const TreePoint& p) {
  if (p.offset == 0) return p.vertex;
  if (p.offset < 0 || p.offset >= length_.at(p.vertex))
    throw Error(ErrorCode::InvalidInput, "tree point offset outside its edge");
  const TreeVertex v = p.vertex;
  const TreeVertex up = parent_[v];
  const auto w = static_cast<TreeVertex>(vertex_count());
  parent_.push_back(up);
  length_.push_back(length_[v] - p.offset);
  depth_.push_back(depth_[v] - p.offset);
  children_.push_back({v});
  std::replace(children_[up].begin(), children_[up].end(), v, w);
  parent_[v] = w;
  length_[v] = p.offset;
  return w;
}

TreeVertex MetricTree::lca(TreeVertex u, TreeVertex v) const {
  while (u != v) {
    if (depth_[u] >= depth_[v]) u = parent_[u];
    else v = parent_[v];
  }
  return u;
}

Rational MetricTree::distance(TreeVertex u, TreeVertex v) const {
  return depth_[u] + depth_[v] - 2 * depth_[lca(u, v)];
}

Rational MetricTree::distance(const TreePoint& p, const TreePoint& q) const {
  if (p.vertex == q.vertex) return abs_diff(p.offset, q.offset);
  const TreeVertex l = lca(p.vertex, q.vertex);
  // A point's edge lies above its vertex, so if that vertex is the LCA the
  // point is on the far side of it from the other point.
  const Rational dp = depth_[p.vertex] - p.offset;
  const Rational dq = depth_[q.vertex] - q.offset;
  if (l == p.vertex) return dq - depth_[l] + p.offset;
  if (l == q.vertex) return dp - depth_[l] + q.offset;
  return dp + dq - 2 * depth_[l];
}

std::vector<TreeVertex> MetricTree::path(TreeVertex u, TreeVertex v) const {
  const TreeVertex l = lca(u, v);
  std::vector<TreeVertex> front, back;
  for (TreeVertex a = u; a != l; a = parent_[a]) front.push_back(a);
  front.push_back(l);
  for (TreeVertex b = v; b != l; b = parent_[b]) back.push_back(b);
  front.insert(front.end(), back.rbegin(), back.rend());
  return front;
}

TreePoint MetricTree::climb(TreeVertex v, Rational s) const {
  while (s > 0 && s >= length_[v]) {
    s -= length_[v];
    v = parent_[v];
  }
  return {v, s};
}

TreePoint MetricTree::point_on_path(TreeVertex u, TreeVertex v, const Rational& s) const {
  const TreeVertex l = lca(u, v);
  const Rational du = depth_[u] - depth_[l];
  const Rational total = du + depth_[v] - depth_[l];
  if (s < 0 || s > total) throw Error(ErrorCode::InvalidInput, "point beyond the end of a path");
  if (s <= du) return climb(u, s);
  return climb(v, total - s);
}

std::vector<Rational> MetricTree::distances_from(TreeVertex source) const {
  std::vector<Rational> d(vertex_count(), Rational(-1));
  std::vector<TreeVertex> stack{source};
  d[source] = 0;
  while (!stack.empty()) {
    const TreeVertex a = stack.back();
    stack.pop_back();
    auto visit = [&](TreeVertex b, const Rational& len) {
      if (d[b] < 0) {
        d[b] = d[a] + len;
        stack.push_back(b);
      }
    };
    if (parent_[a] != kNone) visit(parent_[a], length_[a]);
    for (TreeVertex c : children_[a]) visit(c, length_[c]);
  }
  return d;
}

Rational MetricTree::total_length() const {
  Rational sum = 0;
  for (const auto& l : length_) sum += l;
  return sum;
}

nlohmann::ordered_json MetricTree::to_json() const {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (TreeVertex v = 1; v < vertex_count(); ++v)
    edges.push_back({parent_[v], v, hypsub::to_string(length_[v])});
  nlohmann::ordered_json j;
  j["vertices"] = vertex_count();
  j["root"] = root();
  j["edges"] = std::move(edges);
  return j;
}

MetricTree MetricTree::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw Error(ErrorCode::InvalidInput, "tree needs 'vertices' and 'edges'");
  const auto n = j["vertices"].get<std::size_t>();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "tree needs a vertex", "/vertices");
  if (j.value("root", 0) != 0) throw Error(ErrorCode::InvalidInput, "root must be 0", "/root");
  std::vector<std::vector<std::pair<TreeVertex, Rational>>> adj(n);
  const auto& edges = j["edges"];
  if (edges.size() + 1 != n) throw Error(ErrorCode::InvalidInput, "a tree has N-1 edges", "/edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string p = "/edges/" + std::to_string(i);
    const auto& e = edges[i];
    if (!e.is_array() || e.size() != 3) throw Error(ErrorCode::InvalidInput, "edge is [u, v, len]", p);
    const auto u = e[0].get<TreeVertex>(), v = e[1].get<TreeVertex>();
    if (u >= n || v >= n) throw Error(ErrorCode::InvalidInput, "edge endpoint out of range", p);
    const Rational len = e[2].is_string() ? parse_rational(e[2].get<std::string>())
                                          : Rational(e[2].get<std::int64_t>());
    if (len <= 0) throw Error(ErrorCode::InvalidInput, "edge length must be positive", p);
    adj[u].emplace_back(v, len);
    adj[v].emplace_back(u, len);
  }
  // Rebuild from the root; input ids are preserved only if they already
  // follow discovery order, so remap explicitly.
  MetricTree t;
  std::vector<TreeVertex> id(n, kNone);
  id[0] = 0;
  std::queue<std::size_t> q;
  q.push(0);
  std::size_t seen = 1;
  while (!q.empty()) {
    const std::size_t a = q.front();
    q.pop();
    for (const auto& [b, len] : adj[a]) {
      if (id[b] != kNone) continue;
      id[b] = t.add_child(id[a], len);
      ++seen;
      q.push(b);
    }
  }
  if (seen != n) throw Error(ErrorCode::InvalidInput, "tree is not connected", "/edges");
  return t;
}

NetMetric::NetMetric(const MetricTree& tree, std::span<const TreeVertex> points)
    : n_(points.size()), d_(n_ * n_) {
  for (std::size_t i = 0; i < n_; ++i) {
    const auto row = tree.distances_from(points[i]);
    for (std::size_t j = 0; j < n_; ++j) d_[i * n_ + j] = row[points[j]];
  }
}

NetMetric::NetMetric(std::size_t n, std::vector<Rational> matrix) : n_(n), d_(std::move(matrix)) {
  if (d_.size() != n * n) throw Error(ErrorCode::InvalidInput, "distance matrix is not n x n");
}

}  // namespace hypsub
