#include "hypsub/group_chain.hpp"

#include <algorithm>
#include <limits>

namespace hypsub {

int DiameterCache::get(const GroupContext& ctx, const Simplex& s) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = map_.find(s); it != map_.end()) return it->second;
  }
  const int d = ctx.diameter(std::span<const Element>(s.vertices.data(), s.size()));
  std::lock_guard lock(mutex_);
  map_.emplace(s, d);
  return d;
}

int diameter(const GroupContext& ctx, const Simplex& s, DiameterCache* cache) {
  if (cache) return cache->get(ctx, s);
  return ctx.diameter(std::span<const Element>(s.vertices.data(), s.size()));
}

Coeff sobolev_norm(const GroupContext& ctx, const Chain& c, DiameterCache* cache) {
  Coeff n = 0;
  for (const auto& [s, k] : c) n += abs(k) * (1 + diameter(ctx, s, cache));
  return n;
}

bool rips_check(const GroupContext& ctx, const Chain& c, const Rational& r, DiameterCache* cache) {
  for (const auto& [s, k] : c)
    if (Rational(diameter(ctx, s, cache)) > r) return false;
  return true;
}

Simplex act(const GroupContext& ctx, Element g, const Simplex& s) {
  if (g == ctx.identity()) return s;
  Simplex out;
  out.vertices.reserve(s.size());
  for (Element v : s) out.vertices.push_back(ctx.multiply(g, v));
  return out;
}

Chain act(const GroupContext& ctx, Element g, const Chain& c) {
  if (g == ctx.identity()) return c;
  Chain out(c.dim());
  for (const auto& [s, k] : c) out.add(act(ctx, g, s), k);
  return out;
}

std::vector<std::string> simplex_words(const GroupContext& ctx, const Simplex& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (Element v : s) out.push_back(ctx.format(v));
  return out;
}

nlohmann::ordered_json simplex_to_json(const GroupContext& ctx, const Simplex& s) {
  return nlohmann::ordered_json(simplex_words(ctx, s));
}

Simplex simplex_from_json(const GroupContext& ctx, const nlohmann::json& j,
                          const std::string& path) {
  if (!j.is_array() || j.empty()) {
    throw Error(ErrorCode::InvalidInput, "simplex must be a nonempty array of words", path);
  }
  Simplex s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    if (!j[i].is_string()) throw Error(ErrorCode::InvalidInput, "vertex must be a word string", p);
    try {
      s.vertices.push_back(ctx.parse(j[i].get<std::string>()));
    } catch (const Error& e) {
      throw Error(e.code(), e.message(), p);
    }
  }
  return s;
}

nlohmann::ordered_json coeff_to_json(const Coeff& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

Coeff coeff_from_json(const nlohmann::json& j, const std::string& path) {
  if (j.is_number_integer()) return Coeff(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Coeff(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorCode::InvalidInput, "coefficient must be an integer", path);
}

nlohmann::ordered_json chain_to_json(const GroupContext& ctx, const Chain& c) {
  std::vector<std::pair<std::vector<std::string>, const Coeff*>> rows;
  rows.reserve(c.size());
  for (const auto& [s, k] : c) rows.emplace_back(simplex_words(ctx, s), &k);
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [words, k] : rows) {
    nlohmann::ordered_json t;
    t["simplex"] = words;
    t["coeff"] = coeff_to_json(*k);
    terms.push_back(std::move(t));
  }
  nlohmann::ordered_json out;
  out["dim"] = c.dim();
  out["terms"] = std::move(terms);
  return out;
}

Chain chain_from_json(const GroupContext& ctx, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
    throw Error(ErrorCode::InvalidInput, "chain needs an integer 'dim'", "/dim");
  }
  const int dim = j["dim"].get<int>();
  if (dim < 0) throw Error(ErrorCode::InvalidInput, "negative dimension", "/dim");
  Chain c(dim);
  if (!j.contains("terms") || !j["terms"].is_array()) {
    throw Error(ErrorCode::InvalidInput, "chain needs a 'terms' array", "/terms");
  }
  const auto& terms = j["terms"];
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string p = "/terms/" + std::to_string(i);
    if (!terms[i].is_object() || !terms[i].contains("simplex") || !terms[i].contains("coeff"))
      throw Error(ErrorCode::InvalidInput, "term needs 'simplex' and 'coeff'", p);
    Simplex s = simplex_from_json(ctx, terms[i]["simplex"], p + "/simplex");
    if (s.dim() != dim) throw Error(ErrorCode::WrongDimension, "simplex dimension mismatch", p);
    c.add(s, coeff_from_json(terms[i]["coeff"], p + "/coeff"));
  }
  return c;
}

}  // namespace hypsub
