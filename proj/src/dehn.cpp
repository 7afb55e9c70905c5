#include "hypsub/dehn.hpp"

#include <set>

namespace hypsub {

DehnReducer::DehnReducer(const std::vector<Word>& relators, std::size_t letter_count)
    : by_first_letter_(letter_count) {
  std::set<Word> seen;
  for (const Word& r : relators)
    for (const Word& base : {r, inverse(r)})
      for (std::size_t s = 0; s < base.size(); ++s) {
        Word rot(base.begin() + static_cast<std::ptrdiff_t>(s), base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(s));
        if (seen.insert(rot).second) by_first_letter_[rot.front()].push_back(rot);
      }
}

Word DehnReducer::reduce(Word w) const {
  w = free_reduce(w);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.size() && !changed; ++i) {
      for (const Word& rho : by_first_letter_[w[i]]) {
        std::size_t m = 0;
        while (m < rho.size() && i + m < w.size() && w[i + m] == rho[m]) ++m;
        if (2 * m <= rho.size()) continue;
        // w[i, i+m) equals the inverse of the remaining part of rho.
        Word rest(rho.begin() + static_cast<std::ptrdiff_t>(m), rho.end());
        Word replacement = inverse(rest);
        Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        next.insert(next.end(), replacement.begin(), replacement.end());
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(i + m), w.end());
        w = free_reduce(next);
        changed = true;
        break;
      }
    }
  }
  return w;
}

bool DehnReducer::equal(const Word& u, const Word& v) const {
  return is_identity(concat(u, inverse(v)));
}

}  // namespace hypsub
