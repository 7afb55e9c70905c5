#include "hypsub/corpus.hpp"

#include <limits>
#include <set>

namespace hypsub {

std::uint64_t DeterministicRng::below(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "below(0)");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return x % n;
}

Element random_element(const GroupContext& ctx, DeterministicRng& rng, int max_length) {
  const auto len = rng.below(static_cast<std::uint64_t>(max_length) + 1);
  Element cur = ctx.identity();
  const std::size_t letters = ctx.alphabet().letter_count();
  for (std::uint64_t k = 0; k < len; ++k) {
    const auto l = static_cast<Letter>(rng.below(letters));
    if (auto next = ctx.neighbor(cur, l)) cur = *next;
  }
  return cur;
}

namespace {

bool accept(SubdivisionMap& map, const Simplex& s, int max_diameter) {
  const GroupContext& ctx = map.context();
  try {
    if (diameter(ctx, s, &map.diameters()) > max_diameter) return false;
    map.subdivide(s);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::OutOfBall) return false;
    throw;
  }
}

std::vector<Simplex> special_simplices(const GroupContext& ctx, int n, int max_diameter) {
  const Element e = ctx.identity();
  std::vector<Simplex> out;
  Simplex flat;
  for (int k = 0; k <= n; ++k) flat.vertices.push_back(e);
  out.push_back(flat);
  if (n == 0) return out;

  const Word a{generator_letter(0)};
  auto power = [&](int k) -> std::optional<Element> {
    Word w;
    for (int j = 0; j < k; ++j) w.push_back(a[0]);
    try {
      return ctx.element(w);
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  // Repeated vertex next to a genuine edge.
  if (auto g = power(1)) {
    Simplex rep{e};
    for (int k = 1; k <= n; ++k) rep.vertices.push_back(*g);
    out.push_back(rep);
  }
  // Vertices spread along a geodesic ray, diameter exactly max_diameter.
  Simplex ray;
  for (int k = 0; k <= n; ++k) {
    auto g = power(max_diameter * k / n);
    if (!g) return out;
    ray.vertices.push_back(*g);
  }
  out.push_back(ray);
  return out;
}

}  // namespace

std::vector<Simplex> generate_corpus(SubdivisionMap& map, const CorpusOptions& opts) {
  const GroupContext& ctx = map.context();
  DeterministicRng rng(opts.seed);
  std::vector<Simplex> out;
  for (int n : opts.dims) {
    if (n < 0 || n > map.max_dim()) throw Error(ErrorCode::WrongDimension, "corpus dimension out of range");
    std::set<Simplex> seen;
    std::size_t count = 0;
    if (opts.include_special) {
      for (const Simplex& s : special_simplices(ctx, n, opts.max_diameter)) {
        if (s.dim() != n || count >= opts.per_dim || seen.contains(s)) continue;
        if (!accept(map, s, opts.max_diameter)) continue;
        seen.insert(s);
        out.push_back(s);
        ++count;
      }
    }
    const std::size_t max_attempts = 1000 * opts.per_dim + 1000;
    for (std::size_t attempt = 0; count < opts.per_dim; ++attempt) {
      if (attempt >= max_attempts) {
        throw Error(ErrorCode::InvalidInput,
                    "could not find " + std::to_string(opts.per_dim) + " admissible " +
                        std::to_string(n) + "-simplices; enlarge the ball or shrink the corpus");
      }
      Simplex s{random_element(ctx, rng, opts.max_vertex_length)};
      for (int k = 1; k <= n; ++k) {
        if (rng.chance(1, 8)) {
          s.vertices.push_back(s[rng.below(s.size())]);
          continue;
        }
        const Element step = random_element(ctx, rng, opts.max_diameter);
        try {
          s.vertices.push_back(ctx.multiply(s[0], step));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::OutOfBall) throw;
          s.vertices.push_back(s[0]);
        }
      }
      if (seen.contains(s) || !accept(map, s, opts.max_diameter)) continue;
      seen.insert(s);
      out.push_back(s);
      ++count;
    }
  }
  return out;
}

nlohmann::ordered_json corpus_to_json(const GroupContext& ctx, const std::vector<Simplex>& corpus,
                                      const CorpusOptions* opts) {
  nlohmann::ordered_json j;
  if (opts) {
    nlohmann::ordered_json g;
    g["seed"] = opts->seed;
    g["dims"] = opts->dims;
    g["per_dim"] = opts->per_dim;
    g["max_vertex_length"] = opts->max_vertex_length;
    g["max_diameter"] = opts->max_diameter;
    j["generator"] = std::move(g);
  }
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const Simplex& s : corpus) list.push_back(simplex_to_json(ctx, s));
  j["simplices"] = std::move(list);
  return j;
}

std::vector<Simplex> corpus_from_json(const GroupContext& ctx, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("simplices") || !j["simplices"].is_array())
    throw Error(ErrorCode::InvalidInput, "corpus needs a 'simplices' array", "/simplices");
  std::vector<Simplex> out;
  const auto& list = j["simplices"];
  for (std::size_t i = 0; i < list.size(); ++i)
    out.push_back(simplex_from_json(ctx, list[i], "/simplices/" + std::to_string(i)));
  return out;
}

}  // namespace hypsub
