#include "hypsub/tree_approx.hpp"

#include "hypsub/error.hpp"

#include <algorithm>
#include <map>

namespace hypsub {

Rational gromov_product(const GroupContext& ctx, Element x, Element y, Element base) {
  return Rational(ctx.distance(base, x) + ctx.distance(base, y) - ctx.distance(x, y), 2);
}

std::size_t TreeApproximation::hull_index(Element x) const {
  auto it = std::lower_bound(hull.begin(), hull.end(), x);
  if (it == hull.end() || *it != x) throw Error(ErrorCode::VertexNotInHull, "vertex not in hull");
  return static_cast<std::size_t>(it - hull.begin());
}

namespace {

// Group distances between hull vertices, row-major.
std::vector<int> hull_distances(const GroupContext& ctx, const std::vector<Element>& hull) {
  const std::size_t h = hull.size();
  std::vector<int> d(h * h, 0);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i + 1; j < h; ++j) d[i * h + j] = d[j * h + i] = ctx.distance(hull[i], hull[j]);
  return d;
}

}  // namespace

TreeApproximation approximate_by_tree(const GroupContext& ctx, std::span<const Element> tuple,
                                      std::optional<Rational> delta) {
  if (tuple.empty()) throw Error(ErrorCode::EmptyTuple, "tree approximation of an empty tuple");
  TreeApproximation A;
  A.tuple.assign(tuple.begin(), tuple.end());
  A.hull = ctx.geodesic_hull(tuple);
  const std::size_t h = A.hull.size();
  const std::vector<int> G = hull_distances(ctx, A.hull);
  auto gd = [&](std::size_t i, std::size_t j) { return G[i * h + j]; };
  A.f.assign(h, MetricTree::kNone);
  MetricTree& T = A.tree;

  const Element y0 = tuple[0];
  const std::size_t n = tuple.size();
  std::vector<std::size_t> yi(n);
  for (std::size_t i = 0; i < n; ++i) yi[i] = A.hull_index(tuple[i]);
  A.f[yi[0]] = T.root();

  // Stage 1: glue the based geodesics branch by branch.
  std::vector<TreeVertex> ends(n, T.root());
  std::vector<std::size_t> stage1{yi[0]};
  for (std::size_t i = 1; i < n; ++i) {
    const Rational len = gd(yi[0], yi[i]);
    Rational t = 0;
    std::optional<std::size_t> along;
    for (std::size_t j = 1; j < i; ++j) {
      const Rational g(gd(yi[0], yi[j]) + gd(yi[0], yi[i]) - gd(yi[j], yi[i]), 2);
      if (!along || g > t) {
        t = g;
        along = j;
      }
    }
    const TreeVertex attach =
        along ? T.materialize(T.point_on_path(T.root(), ends[*along], t)) : T.root();
    ends[i] = len > t ? T.add_child(attach, len - t) : attach;
    const auto path = ctx.geodesic(y0, tuple[i]);
    for (std::size_t k = 0; k < path.size(); ++k) {
      const std::size_t x = A.hull_index(path[k]);
      if (A.f[x] != MetricTree::kNone) continue;
      A.f[x] = T.materialize(T.point_on_path(T.root(), ends[i], Rational(static_cast<std::int64_t>(k))));
      stage1.push_back(x);
    }
  }
  for (std::size_t a = 0; a < stage1.size(); ++a)
    for (std::size_t b = a + 1; b < stage1.size(); ++b)
      A.c0 = std::max(A.c0, abs_diff(Rational(gd(stage1[a], stage1[b])),
                                     T.distance(A.f[stage1[a]], A.f[stage1[b]])));

  // Stage 2: remaining vertices, lexicographically least pair (a, b) first.
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const TreeVertex fa = A.f[yi[a]], fb = A.f[yi[b]];
      const Rational D = T.distance(fa, fb);
      for (Element v : ctx.geodesic(tuple[a], tuple[b])) {
        const std::size_t x = A.hull_index(v);
        if (A.f[x] != MetricTree::kNone) continue;
        const Rational s = std::clamp(Rational(gd(x, yi[a])), Rational(0), D);
        const Rational err_a = abs_diff(s, Rational(gd(x, yi[a])));
        const Rational err_b = abs_diff(D - s, Rational(gd(x, yi[b])));
        if (err_a > A.c0 || err_b > A.c0) {
          throw Error(ErrorCode::ApproximationConstraint,
                      "placement of '" + ctx.format(v) + "' misses its distance constraints by " +
                          to_string(std::max(err_a, err_b)) + " > c0 = " + to_string(A.c0));
        }
        A.f[x] = T.materialize(T.point_on_path(fa, fb, s));
      }
    }
  }

  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i + 1; j < h; ++j)
      A.c_prime = std::max(A.c_prime, abs_diff(Rational(gd(i, j)), T.distance(A.f[i], A.f[j])));
  if (delta) A.bound = 4 * *delta + 3 * A.c0;
  return A;
}

std::vector<TreeVertex> select_net(MetricTree& tree) {
  // Branch vertices first: the contraction's path formula needs them in the net.
  // Then each edge walked from its parent end at unit spacing, both endpoints included.
  std::vector<TreePoint> candidates;
  const auto original = static_cast<TreeVertex>(tree.vertex_count());
  for (TreeVertex v = 0; v < original; ++v)
    if (tree.degree(v) >= 3) candidates.push_back({v, 0});
  candidates.push_back({tree.root(), 0});
  for (TreeVertex v = 1; v < original; ++v) {
    const Rational& len = tree.edge_length(v);
    const TreeVertex p = tree.parent(v);
    candidates.push_back({p, 0});
    for (std::int64_t k = 1; Rational(k) < len; ++k) candidates.push_back({v, len - k});
    candidates.push_back({v, 0});
  }
  std::vector<TreePoint> kept;
  for (const TreePoint& p : candidates) {
    bool ok = true;
    for (const TreePoint& q : kept) {
      if (tree.distance(p, q) < 1) {
        ok = false;
        break;
      }
    }
    if (ok) kept.push_back(p);
  }
  // Deeper offsets first so that earlier subdivisions keep later offsets valid.
  std::sort(kept.begin(), kept.end(), [](const TreePoint& a, const TreePoint& b) {
    return a.vertex != b.vertex ? a.vertex < b.vertex : a.offset > b.offset;
  });
  std::vector<TreeVertex> net;
  for (const TreePoint& p : kept) net.push_back(tree.materialize(p));
  std::sort(net.begin(), net.end());
  return net;
}

NetCheck verify_net(const MetricTree& tree, std::span<const TreeVertex> net) {
  NetCheck out;
  if (net.empty()) {
    out.density = tree.total_length() + 4;
    return out;
  }
  const std::size_t n = net.size();
  std::vector<std::vector<Rational>> rows;
  rows.reserve(n);
  for (TreeVertex p : net) rows.push_back(tree.distances_from(p));
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational& d = rows[i][net[j]];
      if (first || d < out.min_separation) out.min_separation = d;
      first = false;
    }
  }
  std::vector<Rational> near(tree.vertex_count());
  for (TreeVertex v = 0; v < tree.vertex_count(); ++v) {
    near[v] = rows[0][v];
    for (std::size_t i = 1; i < n; ++i) near[v] = std::min(near[v], rows[i][v]);
    out.density = std::max(out.density, near[v]);
  }
  for (TreeVertex v = 1; v < tree.vertex_count(); ++v) {
    out.density = std::max(out.density, (tree.edge_length(v) + near[v] + near[tree.parent(v)]) / 2);
  }
  // Consecutive net points along a geodesic are exactly the pairs with no
  // third net point between them.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational& d = rows[i][net[j]];
      if (d <= out.max_gap) continue;
      bool between = false;
      for (std::size_t k = 0; k < n && !between; ++k)
        between = k != i && k != j && rows[i][net[k]] + rows[j][net[k]] == d;
      if (!between) out.max_gap = d;
    }
  }
  return out;
}

Correspondence build_correspondence(const GroupContext& ctx, std::span<const Element> tuple,
                                    std::optional<Rational> delta) {
  Correspondence C;
  C.approx = approximate_by_tree(ctx, tuple, delta);
  MetricTree& T = C.approx.tree;
  C.net = select_net(T);
  C.net_check = verify_net(T, C.net);
  if (!C.net_check.ok()) {
    throw Error(ErrorCode::ApproximationConstraint,
                "net fails separation/density/gap checks (separation " +
                    to_string(C.net_check.min_separation) + ", density " +
                    to_string(C.net_check.density) + ", gap " + to_string(C.net_check.max_gap) + ")");
  }
  C.net_metric = NetMetric(T, C.net);
  const auto& hull = C.approx.hull;
  const std::size_t h = hull.size(), n = C.net.size();
  std::vector<std::vector<Rational>> rows;
  rows.reserve(n);
  for (TreeVertex p : C.net) rows.push_back(T.distances_from(p));

  C.phi.resize(h);
  for (std::size_t x = 0; x < h; ++x) {
    std::uint32_t best = 0;
    for (std::uint32_t v = 1; v < n; ++v)
      if (rows[v][C.approx.f[x]] < rows[best][C.approx.f[x]]) best = v;
    C.phi[x] = best;
  }
  C.psi.resize(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    std::uint32_t best = 0;
    for (std::uint32_t x = 1; x < h; ++x)
      if (rows[v][C.approx.f[x]] < rows[v][C.approx.f[best]]) best = x;
    C.psi[v] = best;
  }

  const std::vector<int> G = hull_distances(ctx, hull);
  auto gd = [&](std::size_t i, std::size_t j) { return Rational(G[i * h + j]); };
  Rational c = 0;
  for (std::size_t x = 0; x < h; ++x) {
    for (std::size_t y = x + 1; y < h; ++y)
      c = std::max(c, abs_diff(gd(x, y), C.net_metric(C.phi[x], C.phi[y])));
    c = std::max(c, gd(C.psi[C.phi[x]], x));
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = v + 1; w < n; ++w)
      c = std::max(c, abs_diff(C.net_metric(v, w), gd(C.psi[v], C.psi[w])));
    c = std::max(c, C.net_metric(C.phi[C.psi[v]], v));
  }
  C.c = c;
  return C;
}

nlohmann::ordered_json to_json(const GroupContext& ctx, const Correspondence& c) {
  const auto& A = c.approx;
  nlohmann::ordered_json j;
  nlohmann::ordered_json tuple = nlohmann::ordered_json::array();
  for (Element y : A.tuple) tuple.push_back(ctx.format(y));
  j["tuple"] = std::move(tuple);
  nlohmann::ordered_json tree = A.tree.to_json();
  tree["net"] = c.net;
  nlohmann::ordered_json f = nlohmann::ordered_json::object();
  nlohmann::ordered_json phi = nlohmann::ordered_json::object();
  for (std::size_t x = 0; x < A.hull.size(); ++x) {
    f[ctx.format(A.hull[x])] = A.f[x];
    phi[ctx.format(A.hull[x])] = c.phi[x];
  }
  tree["f"] = std::move(f);
  j["tree"] = std::move(tree);
  j["phi"] = std::move(phi);
  nlohmann::ordered_json psi = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < c.net.size(); ++v) psi.push_back(ctx.format(c.psi_of(static_cast<std::uint32_t>(v))));
  j["psi"] = std::move(psi);
  j["c0"] = to_string(A.c0);
  j["c_prime"] = to_string(A.c_prime);
  if (A.bound) j["bound"] = to_string(*A.bound);
  j["c"] = to_string(c.c);
  nlohmann::ordered_json check;
  check["min_separation"] = to_string(c.net_check.min_separation);
  check["density"] = to_string(c.net_check.density);
  check["max_gap"] = to_string(c.net_check.max_gap);
  j["net_check"] = std::move(check);
  return j;
}

}  // namespace hypsub
