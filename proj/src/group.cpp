#include "hypsub/group.hpp"

#include "hypsub/error.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace hypsub {

GroupContext GroupContext::build(const GroupPresentation& p, const BuildOptions& opts) {
  validate(p);
  GroupContext ctx;
  ctx.presentation_ = std::make_shared<const GroupPresentation>(p);
  ctx.delta_ = p.delta;
  if (p.backend == Backend::FreeReduction) {
    ctx.ball_ = make_free_ball(p.alphabet.generator_count(), p.ball_radius);
  } else {
    ctx.dehn_ = std::make_shared<const DehnReducer>(p.relators, p.alphabet.letter_count());
    ctx.ball_ = make_enumerated_ball(p, ctx.dehn_, opts);
  }
  return ctx;
}

GroupContext GroupContext::with_delta(Rational delta) const {
  GroupContext out = *this;
  out.delta_ = delta;
  return out;
}

Word GroupContext::word(Element x) const { return ball_->word(x); }

std::string GroupContext::format(Element x) const { return alphabet().format(word(x)); }

Element GroupContext::element(const Word& w) const {
  auto e = ball_->evaluate(w);
  if (!e) {
    throw Error(ErrorCode::OutOfBall,
                "word '" + alphabet().format(w) + "' lies outside the ball of radius " +
                    std::to_string(ball_radius()));
  }
  return *e;
}

Element GroupContext::parse(std::string_view text) const { return element(alphabet().parse(text)); }

int GroupContext::length(Element x) const { return ball_->length(x); }

std::optional<Element> GroupContext::neighbor(Element x, Letter l) const {
  return ball_->neighbor(x, l);
}

Element GroupContext::multiply(Element x, Element y) const {
  return element(concat(word(x), word(y)));
}

Element GroupContext::inverse(Element x) const { return element(hypsub::inverse(word(x))); }

Element GroupContext::quotient(Element x, Element y) const {
  auto q = ball_->quotient(x, y);
  if (!q) {
    throw Error(ErrorCode::OutOfBall, "quotient of '" + format(x) + "' and '" + format(y) +
                                          "' lies outside the ball");
  }
  return *q;
}

int GroupContext::distance(Element x, Element y) const {
  if (x == y) return 0;
  return length(quotient(x, y));
}

int GroupContext::diameter(std::span<const Element> tuple) const {
  int d = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j) d = std::max(d, distance(tuple[i], tuple[j]));
  return d;
}

std::vector<Element> GroupContext::based_geodesic(Element x) const {
  const Word w = word(x);
  std::vector<Element> out;
  out.reserve(w.size() + 1);
  Element cur = identity();
  out.push_back(cur);
  for (Letter l : w) {
    cur = *ball_->neighbor(cur, l);
    out.push_back(cur);
  }
  return out;
}

std::vector<Element> GroupContext::geodesic(Element x, Element y) const {
  const Word w = word(quotient(x, y));
  std::vector<Element> out;
  out.reserve(w.size() + 1);
  out.push_back(x);
  Element cur = x;
  Word prefix = word(x);
  for (Letter l : w) {
    prefix.push_back(l);
    auto next = ball_->neighbor(cur, l);
    cur = next ? *next : element(prefix);
    out.push_back(cur);
  }
  return out;
}

std::vector<Element> GroupContext::geodesic_hull(std::span<const Element> tuple) const {
  if (tuple.empty()) throw Error(ErrorCode::EmptyTuple, "geodesic hull of an empty tuple");
  std::set<Element> hull(tuple.begin(), tuple.end());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      for (Element v : geodesic(tuple[i], tuple[j])) hull.insert(v);
    }
  }
  return {hull.begin(), hull.end()};
}

namespace {

struct EdgeKey {
  std::uint64_t a, b;
  bool operator==(const EdgeKey&) const = default;
};
struct EdgeKeyHash {
  std::size_t operator()(const EdgeKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.a * 0x9E3779B97F4A7C15ull ^ k.b);
  }
};
EdgeKey edge_key(Element p, Element q) {
  return p.id < q.id ? EdgeKey{p.id, q.id} : EdgeKey{q.id, p.id};
}

// Least eps (in half units) with `side` inside the eps-neighbourhood of the
// union of `others`, measured at vertices and along edges.
std::int64_t side_thickness_halves(const GroupContext& ctx, const std::vector<Element>& side,
                                   const std::vector<const std::vector<Element>*>& others) {
  std::vector<Element> pts;
  std::unordered_set<EdgeKey, EdgeKeyHash> edges;
  for (const auto* o : others) {
    pts.insert(pts.end(), o->begin(), o->end());
    for (std::size_t i = 0; i + 1 < o->size(); ++i) edges.insert(edge_key((*o)[i], (*o)[i + 1]));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<std::int64_t> dist(side.size());
  std::int64_t worst = 0;
  for (std::size_t i = 0; i < side.size(); ++i) {
    int best = std::numeric_limits<int>::max();
    for (Element q : pts) {
      best = std::min(best, ctx.distance(side[i], q));
      if (best == 0) break;
    }
    dist[i] = best;
    worst = std::max<std::int64_t>(worst, 2 * best);
  }
  for (std::size_t i = 0; i + 1 < side.size(); ++i) {
    if (edges.contains(edge_key(side[i], side[i + 1]))) continue;
    worst = std::max(worst, dist[i] + dist[i + 1] + 1);
  }
  return worst;
}

}  // namespace

Rational estimate_delta(const GroupContext& ctx, int sample_radius) {
  if (sample_radius < 0) throw Error(ErrorCode::InvalidInput, "negative sample radius");
  // Every side y->z must stay inside the ball.
  if (2 * sample_radius > ctx.ball_radius()) {
    throw Error(ErrorCode::OutOfBall, "sample radius " + std::to_string(sample_radius) +
                                          " exceeds half the ball radius");
  }
  const int s = sample_radius;
  const auto spheres = ctx.sphere_sizes();
  std::uint64_t count = 0;
  for (int k = 0; k <= s; ++k) count += spheres[static_cast<std::size_t>(k)];
  const Element e = ctx.identity();
  std::int64_t worst = 0;
  for (std::uint64_t y = 1; y < count; ++y) {
    const auto ey = ctx.geodesic(e, Element{y});
    for (std::uint64_t z = 1; z < count; ++z) {
      if (z == y) continue;
      const auto ez = ctx.geodesic(e, Element{z});
      const auto yz = ctx.geodesic(Element{y}, Element{z});
      worst = std::max(worst, side_thickness_halves(ctx, ey, {&ez, &yz}));
      worst = std::max(worst, side_thickness_halves(ctx, ez, {&ey, &yz}));
      worst = std::max(worst, side_thickness_halves(ctx, yz, {&ey, &ez}));
    }
  }
  return Rational(worst, 2);
}

}  // namespace hypsub
