#pragma once

#include "hypsub/presentation.hpp"
#include "hypsub/subdivision.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hypsub {

inline constexpr std::string_view kToolVersion = "1.0.0";

std::uint64_t fnv1a64(std::string_view bytes);
/// FNV-1a-64 of the canonical presentation JSON, as 16 hex digits.
std::string group_hash(const GroupPresentation& p);
std::string to_string(const Ratio& q);

struct RunManifest {
  std::string group_hash;
  nlohmann::ordered_json corpus;
  std::optional<std::uint64_t> seed;
  SubdivisionParams params;
  std::vector<Ratio> max_ratio;       // over corpus certificates, per dimension
  std::vector<Ratio> memo_max_ratio;  // over every memoized value, per dimension
  std::vector<Ratio> cascade;         // K_i per dimension
  std::string version{kToolVersion};
};

nlohmann::ordered_json to_json(const RunManifest& m);

struct CertifyRun {
  RunManifest manifest;
  std::vector<Certificate> certificates;  // sorted by (dim, vertex words)
  std::size_t passed() const;
  bool all_pass() const { return passed() == certificates.size(); }
};

CertifyRun run_certification(SubdivisionMap& map, const std::vector<Simplex>& corpus,
                             nlohmann::ordered_json corpus_description,
                             std::optional<std::uint64_t> seed);

nlohmann::ordered_json to_json(const GroupContext& ctx, const CertifyRun& run);

}  // namespace hypsub
