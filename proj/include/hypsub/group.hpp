#pragma once

#include "hypsub/dehn.hpp"
#include "hypsub/presentation.hpp"
#include "hypsub/rational.hpp"
#include "hypsub/word.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypsub {

/// A ball element, identified by its dense id. Ids follow ShortLex order of
/// normal forms, so the identity is 0 and id order is ShortLex order.
struct Element {
  std::uint64_t id = 0;
  friend auto operator<=>(const Element&, const Element&) = default;
};

/// Storage for the Cayley ball. Free groups use an implicit model (ids are
/// ShortLex ranks of reduced words); small-cancellation groups use a table
/// materialized by radius-limited coset enumeration.
class BallModel {
 public:
  virtual ~BallModel() = default;

  virtual int radius() const = 0;
  virtual std::uint64_t size() const = 0;
  virtual std::vector<std::uint64_t> sphere_sizes() const = 0;
  virtual Word word(Element x) const = 0;
  virtual int length(Element x) const = 0;
  virtual std::optional<Element> neighbor(Element x, Letter l) const = 0;
  /// Element represented by an arbitrary word, if it lies in the ball.
  virtual std::optional<Element> evaluate(const Word& w) const = 0;
  /// x^{-1} y, if it lies in the ball.
  virtual std::optional<Element> quotient(Element x, Element y) const = 0;
};

struct BuildOptions {
  /// Cap on materialized balls (the free-group ball is implicit).
  std::uint64_t max_elements = 20'000'000;
  /// Extra layers of coset definitions beyond the ball radius, so relator
  /// cells touching the outer sphere are fully traced.
  int enumeration_margin = 1;
};

/// Word metric on a finitely generated group, realized on a precomputed
/// ball. Immutable after construction; cheap to copy (shared model).
class GroupContext {
 public:
  static GroupContext build(const GroupPresentation& p, const BuildOptions& opts = {});

  const GroupPresentation& presentation() const noexcept { return *presentation_; }
  const Alphabet& alphabet() const noexcept { return presentation_->alphabet; }
  Backend backend() const noexcept { return presentation_->backend; }
  int ball_radius() const noexcept { return ball_->radius(); }
  std::uint64_t ball_size() const noexcept { return ball_->size(); }
  std::vector<std::uint64_t> sphere_sizes() const { return ball_->sphere_sizes(); }
  const std::optional<Rational>& delta() const noexcept { return delta_; }
  GroupContext with_delta(Rational delta) const;
  const DehnReducer* dehn() const noexcept { return dehn_.get(); }

  Element identity() const noexcept { return Element{0}; }
  Word word(Element x) const;
  std::string format(Element x) const;
  /// Normal form lookup; OutOfBall if the word's element lies outside the ball.
  Element element(const Word& w) const;
  Element parse(std::string_view text) const;
  int length(Element x) const;
  std::optional<Element> neighbor(Element x, Letter l) const;

  Element multiply(Element x, Element y) const;
  Element inverse(Element x) const;
  /// x^{-1} y.
  Element quotient(Element x, Element y) const;
  int distance(Element x, Element y) const;
  int diameter(std::span<const Element> tuple) const;

  /// [e = v_0, ..., v_d = x]: prefixes of the ShortLex normal form, which is
  /// the path that always steps to the ShortLex-least neighbour strictly
  /// closer to x.
  std::vector<Element> based_geodesic(Element x) const;
  /// x * based_geodesic(x^{-1} y); equivariant by construction.
  std::vector<Element> geodesic(Element x, Element y) const;
  /// Vertices of the union of geodesic(y_i, y_j), i < j; sorted by id.
  std::vector<Element> geodesic_hull(std::span<const Element> tuple) const;

 private:
  std::shared_ptr<const GroupPresentation> presentation_;
  std::shared_ptr<const BallModel> ball_;
  std::shared_ptr<const DehnReducer> dehn_;
  std::optional<Rational> delta_;
};

/// Sampled slim-triangle constant: max over triangles (e, y, z) with y, z in
/// the ball of radius `sample_radius` (sides from the canonical family) of
/// the least eps such that each side lies in the eps-neighbourhood of the
/// other two. A lower bound for the true delta; half-integer valued.
Rational estimate_delta(const GroupContext& ctx, int sample_radius);

std::unique_ptr<BallModel> make_free_ball(std::size_t generator_count, int radius);
std::unique_ptr<BallModel> make_enumerated_ball(const GroupPresentation& p,
                                                std::shared_ptr<const DehnReducer> dehn,
                                                const BuildOptions& opts);

}  // namespace hypsub

template <>
struct std::hash<hypsub::Element> {
  std::size_t operator()(const hypsub::Element& e) const noexcept {
    return std::hash<std::uint64_t>{}(e.id);
  }
};
