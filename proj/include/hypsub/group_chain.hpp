#pragma once

#include "hypsub/chain.hpp"
#include "hypsub/group.hpp"

#include <json.hpp>

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace hypsub {

using Simplex = BasicSimplex<Element>;
using Chain = BasicChain<Element>;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (Element v : s) h = (h ^ v.id) * 0x100000001b3ull;
    return static_cast<std::size_t>(h);
  }
};

/// Simplex diameters, memoized per run. Internally synchronized.
class DiameterCache {
 public:
  int get(const GroupContext& ctx, const Simplex& s);

 private:
  std::mutex mutex_;
  std::unordered_map<Simplex, int, SimplexHash> map_;
};

int diameter(const GroupContext& ctx, const Simplex& s, DiameterCache* cache = nullptr);

/// Sum of |coefficient| * (1 + diameter).
Coeff sobolev_norm(const GroupContext& ctx, const Chain& c, DiameterCache* cache = nullptr);

/// Every simplex has diameter <= r.
bool rips_check(const GroupContext& ctx, const Chain& c, const Rational& r,
                DiameterCache* cache = nullptr);

/// Diagonal left action.
Simplex act(const GroupContext& ctx, Element g, const Simplex& s);
Chain act(const GroupContext& ctx, Element g, const Chain& c);

/// Canonical order: lexicographic on the vertex word strings.
std::vector<std::string> simplex_words(const GroupContext& ctx, const Simplex& s);

nlohmann::ordered_json simplex_to_json(const GroupContext& ctx, const Simplex& s);
Simplex simplex_from_json(const GroupContext& ctx, const nlohmann::json& j,
                          const std::string& path = "");
/// `{"dim": n, "terms": [{"simplex": [...], "coeff": k}]}`; coefficients
/// beyond 64 bits are written as decimal strings.
nlohmann::ordered_json chain_to_json(const GroupContext& ctx, const Chain& c);
Chain chain_from_json(const GroupContext& ctx, const nlohmann::json& j);

nlohmann::ordered_json coeff_to_json(const Coeff& c);
Coeff coeff_from_json(const nlohmann::json& j, const std::string& path);

}  // namespace hypsub
