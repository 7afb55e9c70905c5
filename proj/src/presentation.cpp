#include "hypsub/presentation.hpp"

#include "hypsub/error.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace hypsub {

std::string_view to_string(Backend b) {
  return b == Backend::FreeReduction ? "free" : "dehn";
}

namespace {

std::vector<Word> rotations(const Word& w) {
  std::vector<Word> out;
  for (std::size_t s = 0; s < w.size(); ++s) {
    Word r(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
    out.push_back(std::move(r));
  }
  return out;
}

std::size_t common_prefix(const Word& a, const Word& b) {
  std::size_t n = std::min(a.size(), b.size());
  std::size_t k = 0;
  while (k < n && a[k] == b[k]) ++k;
  return k;
}

}  // namespace

std::vector<std::size_t> max_piece_lengths(const std::vector<Word>& relators) {
  // Symmetrized set: every cyclic permutation of every relator and its inverse.
  std::vector<std::pair<Word, std::size_t>> sym;
  std::set<Word> seen;
  for (std::size_t i = 0; i < relators.size(); ++i) {
    for (const Word& base : {relators[i], inverse(relators[i])})
      for (Word& r : rotations(base))
        if (seen.insert(r).second) sym.emplace_back(std::move(r), i);
  }
  std::vector<std::size_t> longest(relators.size(), 0);
  for (std::size_t a = 0; a < sym.size(); ++a)
    for (std::size_t b = 0; b < sym.size(); ++b) {
      if (a == b) continue;
      auto k = common_prefix(sym[a].first, sym[b].first);
      longest[sym[a].second] = std::max(longest[sym[a].second], k);
    }
  return longest;
}

void validate(const GroupPresentation& p) {
  if (p.alphabet.generator_count() == 0)
    throw Error(ErrorCode::PresentationInvalid, "no generators", "/generators");
  if (p.ball_radius < 0)
    throw Error(ErrorCode::PresentationInvalid, "ball_radius must be nonnegative", "/ball_radius");
  if (p.delta) {
    if (*p.delta < 0 || (*p.delta * 2).denominator() != 1)
      throw Error(ErrorCode::PresentationInvalid, "delta must be a nonnegative half-integer", "/delta");
  }
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const Word& r = p.relators[i];
    auto path = "/relators/" + std::to_string(i);
    if (r.empty()) throw Error(ErrorCode::PresentationInvalid, "empty relator", path);
    if (!is_cyclically_reduced(r))
      throw Error(ErrorCode::PresentationInvalid, "relator is not cyclically reduced", path);
  }
  if (p.backend == Backend::FreeReduction && !p.relators.empty())
    throw Error(ErrorCode::PresentationInvalid, "backend 'free' requires an empty relator list",
                "/relators");
  if (p.backend == Backend::DehnSmallCancellation) {
    if (p.relators.empty())
      throw Error(ErrorCode::PresentationInvalid, "backend 'dehn' needs at least one relator",
                  "/relators");
    auto pieces = max_piece_lengths(p.relators);
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      // C'(1/6): every piece strictly shorter than |r|/6.
      if (6 * pieces[i] >= p.relators[i].size())
        throw Error(ErrorCode::PresentationInvalid,
                    "relator violates C'(1/6): piece of length " + std::to_string(pieces[i]) +
                        " in relator of length " + std::to_string(p.relators[i].size()),
                    "/relators/" + std::to_string(i));
    }
  }
}

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::PresentationInvalid, msg, path);
}

}  // namespace

GroupPresentation presentation_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad("", "group file must be a JSON object");
  GroupPresentation p;

  if (!j.contains("generators") || !j["generators"].is_array())
    bad("/generators", "missing or non-array 'generators'");
  std::vector<char> symbols;
  for (std::size_t i = 0; i < j["generators"].size(); ++i) {
    const auto& g = j["generators"][i];
    if (!g.is_string() || g.get<std::string>().size() != 1)
      bad("/generators/" + std::to_string(i), "generator must be a one-letter string");
    symbols.push_back(g.get<std::string>()[0]);
  }
  p.alphabet = Alphabet(std::move(symbols));

  if (j.contains("relators")) {
    if (!j["relators"].is_array()) bad("/relators", "'relators' must be an array");
    for (std::size_t i = 0; i < j["relators"].size(); ++i) {
      const auto& r = j["relators"][i];
      if (!r.is_string()) bad("/relators/" + std::to_string(i), "relator must be a string");
      try {
        p.relators.push_back(p.alphabet.parse(r.get<std::string>()));
      } catch (const Error& e) {
        bad("/relators/" + std::to_string(i), e.message());
      }
    }
  }

  std::string backend = "free";
  if (j.contains("backend")) {
    if (!j["backend"].is_string()) bad("/backend", "'backend' must be a string");
    backend = j["backend"].get<std::string>();
  }
  if (backend == "free")
    p.backend = Backend::FreeReduction;
  else if (backend == "dehn")
    p.backend = Backend::DehnSmallCancellation;
  else
    bad("/backend", "unknown backend '" + backend + "' (expected 'free' or 'dehn')");

  if (!j.contains("ball_radius") || !j["ball_radius"].is_number_integer())
    bad("/ball_radius", "missing or non-integer 'ball_radius'");
  p.ball_radius = j["ball_radius"].get<int>();

  if (j.contains("delta") && !j["delta"].is_null()) {
    const auto& d = j["delta"];
    if (d.is_number_integer())
      p.delta = Rational(d.get<std::int64_t>());
    else if (d.is_number_float()) {
      double v = d.get<double>();
      if (v * 2 != static_cast<double>(static_cast<std::int64_t>(v * 2)))
        bad("/delta", "delta must be a half-integer");
      p.delta = Rational(static_cast<std::int64_t>(v * 2), 2);
    } else if (d.is_string()) {
      try {
        p.delta = parse_rational(d.get<std::string>());
      } catch (const Error& e) {
        bad("/delta", e.what());
      }
    } else {
      bad("/delta", "delta must be a number or rational string");
    }
  }

  validate(p);
  return p;
}

GroupPresentation load_presentation(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open group file " + file.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::PresentationInvalid, std::string("malformed JSON: ") + e.what(), "");
  }
  return presentation_from_json(j);
}

nlohmann::ordered_json to_json(const GroupPresentation& p) {
  nlohmann::ordered_json j;
  j["generators"] = nlohmann::ordered_json::array();
  for (char c : p.alphabet.symbols()) j["generators"].push_back(std::string(1, c));
  j["relators"] = nlohmann::ordered_json::array();
  for (const auto& r : p.relators) j["relators"].push_back(p.alphabet.format(r));
  j["backend"] = std::string(to_string(p.backend));
  j["ball_radius"] = p.ball_radius;
  if (p.delta)
    j["delta"] = to_string(*p.delta);
  else
    j["delta"] = nullptr;
  return j;
}

}  // namespace hypsub
