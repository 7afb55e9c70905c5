#pragma once

#include "hypsub/word.hpp"

#include <vector>

namespace hypsub {

/// Dehn's algorithm over the symmetrized relator set. Exact word problem
/// solver for C'(1/6) presentations: a freely reduced word is trivial iff it
/// reduces to the empty word.
class DehnReducer {
 public:
  DehnReducer() = default;
  DehnReducer(const std::vector<Word>& relators, std::size_t letter_count);

  /// Freely reduces, then repeatedly replaces any subword that is more than
  /// half of a symmetrized relator by the shorter complement.
  Word reduce(Word w) const;
  bool is_identity(const Word& w) const { return reduce(w).empty(); }
  bool equal(const Word& u, const Word& v) const;

 private:
  std::vector<std::vector<Word>> by_first_letter_;
};

}  // namespace hypsub
