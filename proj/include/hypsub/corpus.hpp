#pragma once

#include "hypsub/subdivision.hpp"

#include <json.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace hypsub {

/// mt19937_64 with an explicit rejection sampler, so draws are identical
/// across standard libraries.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t below(std::uint64_t n);
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 gen_;
};

/// Random walk of random length <= max_length from the identity, staying in
/// the ball.
Element random_element(const GroupContext& ctx, DeterministicRng& rng, int max_length);

struct CorpusOptions {
  std::vector<int> dims{1, 2, 3};
  std::size_t per_dim = 200;
  int max_vertex_length = 3;
  int max_diameter = 6;
  std::uint64_t seed = 1;
  /// Degenerate and maximal-diameter simplices ahead of the random ones.
  bool include_special = true;
};

/// Seeded corpus. A candidate is kept only if subdividing it stays inside
/// the ball, so `map` is warmed as a side effect.
std::vector<Simplex> generate_corpus(SubdivisionMap& map, const CorpusOptions& opts);

nlohmann::ordered_json corpus_to_json(const GroupContext& ctx, const std::vector<Simplex>& corpus,
                                      const CorpusOptions* opts = nullptr);
std::vector<Simplex> corpus_from_json(const GroupContext& ctx, const nlohmann::json& j);

}  // namespace hypsub
