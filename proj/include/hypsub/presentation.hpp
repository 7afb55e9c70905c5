#pragma once

#include "hypsub/rational.hpp"
#include "hypsub/word.hpp"

#include <json.hpp>

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hypsub {

enum class Backend { FreeReduction, DehnSmallCancellation };

std::string_view to_string(Backend b);

struct GroupPresentation {
  Alphabet alphabet;
  std::vector<Word> relators;
  Backend backend = Backend::FreeReduction;
  int ball_radius = 0;
  /// Nonnegative half-integer; unset means "estimate later".
  std::optional<Rational> delta;
};

/// Checks every load-time invariant; throws PresentationInvalid with the
/// offending field path.
void validate(const GroupPresentation& p);

/// Length of the longest piece of the symmetrized relator set, per relator
/// (same order as `relators`).
std::vector<std::size_t> max_piece_lengths(const std::vector<Word>& relators);

/// Reads `{generators, relators, backend, ball_radius, delta}`. Errors carry
/// a JSON-pointer path to the offending field.
GroupPresentation presentation_from_json(const nlohmann::json& j);
GroupPresentation load_presentation(const std::filesystem::path& file);
nlohmann::ordered_json to_json(const GroupPresentation& p);

}  // namespace hypsub
