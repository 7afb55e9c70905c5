#include "hypsub/report.hpp"

#include <algorithm>
#include <cstdio>

namespace hypsub {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string group_hash(const GroupPresentation& p) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(to_json(p).dump())));
  return buf;
}

std::string to_string(const Ratio& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

nlohmann::ordered_json to_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["version"] = m.version;
  j["group_hash"] = m.group_hash;
  j["seed"] = m.seed ? nlohmann::ordered_json(*m.seed) : nlohmann::ordered_json(nullptr);
  j["corpus"] = m.corpus;
  j["max_dim"] = m.params.max_dim;
  nlohmann::ordered_json r = nlohmann::ordered_json::array(), c = nlohmann::ordered_json::array();
  for (const auto& x : m.params.r) r.push_back(to_string(x));
  for (const auto& x : m.params.c) c.push_back(to_string(x));
  j["schedule_r"] = std::move(r);
  j["tolerance_c"] = std::move(c);
  nlohmann::ordered_json ratio = nlohmann::ordered_json::array(), memo = nlohmann::ordered_json::array();
  for (const auto& x : m.max_ratio) ratio.push_back(to_string(x));
  for (const auto& x : m.memo_max_ratio) memo.push_back(to_string(x));
  j["max_ratio"] = std::move(ratio);
  j["memo_max_ratio"] = std::move(memo);
  nlohmann::ordered_json k = nlohmann::ordered_json::array();
  for (const auto& x : m.cascade) k.push_back(to_string(x));
  j["cascade_bound"] = std::move(k);
  return j;
}

std::size_t CertifyRun::passed() const {
  return static_cast<std::size_t>(
      std::count_if(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.pass(); }));
}

CertifyRun run_certification(SubdivisionMap& map, const std::vector<Simplex>& corpus,
                             nlohmann::ordered_json corpus_description,
                             std::optional<std::uint64_t> seed) {
  const GroupContext& ctx = map.context();
  CertifyRun run;
  run.certificates = certify_all(map, corpus);
  std::vector<std::pair<std::pair<int, std::vector<std::string>>, std::size_t>> order;
  for (std::size_t i = 0; i < run.certificates.size(); ++i)
    order.push_back({{run.certificates[i].dim, simplex_words(ctx, run.certificates[i].simplex)}, i});
  std::sort(order.begin(), order.end());
  std::vector<Certificate> sorted;
  for (const auto& [key, i] : order) sorted.push_back(run.certificates[i]);
  run.certificates = std::move(sorted);

  RunManifest& m = run.manifest;
  m.group_hash = group_hash(ctx.presentation());
  m.corpus = std::move(corpus_description);
  m.seed = seed;
  m.params = map.params();
  const auto dims = static_cast<std::size_t>(map.max_dim()) + 1;
  m.max_ratio.assign(dims, Ratio(0));
  for (const Certificate& c : run.certificates) {
    auto& r = m.max_ratio[static_cast<std::size_t>(c.dim)];
    r = std::max(r, Ratio(c.output_l1, c.input_sobolev));
  }
  for (std::size_t i = 0; i < dims; ++i) {
    m.memo_max_ratio.push_back(map.max_ratio(static_cast<int>(i)));
    m.cascade.push_back(cascade_bound(m.params, static_cast<int>(i)));
  }
  return run;
}

nlohmann::ordered_json to_json(const GroupContext& ctx, const CertifyRun& run) {
  nlohmann::ordered_json j;
  j["manifest"] = to_json(run.manifest);
  nlohmann::ordered_json certs = nlohmann::ordered_json::array();
  for (const Certificate& c : run.certificates) certs.push_back(to_json(ctx, c));
  j["certificates"] = std::move(certs);
  nlohmann::ordered_json summary;
  summary["total"] = run.certificates.size();
  summary["passed"] = run.passed();
  summary["failed"] = run.certificates.size() - run.passed();
  j["summary"] = std::move(summary);
  return j;
}

}  // namespace hypsub
