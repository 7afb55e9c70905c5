#include "hypsub/word.hpp"

#include "hypsub/error.hpp"

#include <algorithm>
#include <cctype>

namespace hypsub {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = inverse_letter(l);
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == inverse_letter(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == inverse_letter(w[i - 1])) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_freely_reduced(w)) return false;
  return w.size() < 2 || w.front() != inverse_letter(w.back());
}

Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Alphabet::Alphabet(std::vector<char> symbols) : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    char c = symbols_[i];
    if (c < 'a' || c > 'z')
      throw Error(ErrorCode::PresentationInvalid,
                  std::string("generator symbol '") + c + "' is not a lowercase letter",
                  "/generators/" + std::to_string(i));
    for (std::size_t j = 0; j < i; ++j)
      if (symbols_[j] == c)
        throw Error(ErrorCode::PresentationInvalid,
                    std::string("duplicate generator symbol '") + c + "'",
                    "/generators/" + std::to_string(i));
  }
  if (symbols_.size() > 26)
    throw Error(ErrorCode::PresentationInvalid, "too many generators", "/generators");
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    bool inv = std::isupper(static_cast<unsigned char>(c)) != 0;
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto it = std::find(symbols_.begin(), symbols_.end(), lower);
    if (it == symbols_.end())
      throw Error(ErrorCode::InvalidInput,
                  std::string("unknown letter '") + c + "' in word \"" + std::string(text) + "\"");
    auto g = static_cast<unsigned>(it - symbols_.begin());
    w.push_back(static_cast<Letter>(2 * g + (inv ? 1 : 0)));
  }
  return w;
}

char Alphabet::letter_char(Letter l) const {
  char c = symbols_.at(l / 2);
  return (l & 1u) ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
}

std::string Alphabet::format(const Word& w) const {
  std::string s;
  s.reserve(w.size());
  for (Letter l : w) s.push_back(letter_char(l));
  return s;
}

}  // namespace hypsub
