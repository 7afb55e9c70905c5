#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hypsub {

/// Letter 2g is generator g, letter 2g+1 its formal inverse. Numeric order
/// of letters is the ShortLex order: a < A < b < B < ...
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

constexpr Letter inverse_letter(Letter l) noexcept { return static_cast<Letter>(l ^ 1u); }
constexpr Letter generator_letter(unsigned g) noexcept { return static_cast<Letter>(2 * g); }

Word inverse(const Word& w);
Word free_reduce(const Word& w);
bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);
Word concat(const Word& a, const Word& b);

/// ShortLex comparison (length first, then lexicographic on letters).
bool shortlex_less(const Word& a, const Word& b);

/// Generator symbols are single lowercase ASCII letters; the uppercase
/// letter denotes the inverse. The empty string is the identity.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<char> symbols);

  std::size_t generator_count() const noexcept { return symbols_.size(); }
  std::size_t letter_count() const noexcept { return 2 * symbols_.size(); }
  const std::vector<char>& symbols() const noexcept { return symbols_; }

  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;
  char letter_char(Letter l) const;

 private:
  std::vector<char> symbols_;
};

}  // namespace hypsub
