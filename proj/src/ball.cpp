#include "hypsub/error.hpp"
#include "hypsub/group.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace hypsub {

namespace {

// Reduced words of length <= R, ranked in ShortLex order. Within one length
// the rank is a mixed-radix number: the first letter has 2n choices, later
// letters 2n-1 (the inverse of the previous letter is skipped).
class FreeBall final : public BallModel {
 public:
  // Nothing is materialized, so the only limit is that ids fit in 64 bits.
  FreeBall(std::size_t gens, int radius)
      : letters_(2 * gens), radius_(radius) {
    cumulative_.push_back(0);
    unsigned __int128 total = 0;
    unsigned __int128 sphere = 1;
    for (int k = 0; k <= radius; ++k) {
      if (k == 1) sphere = letters_;
      else if (k > 1) sphere *= (letters_ - 1);
      total += sphere;
      if (total > std::numeric_limits<std::uint64_t>::max() / 4) {
        throw Error(ErrorCode::BallTooLarge,
                    "free ball of radius " + std::to_string(radius) + " overflows 64-bit ids");
      }
      cumulative_.push_back(static_cast<std::uint64_t>(total));
    }
  }

  int radius() const override { return radius_; }
  std::uint64_t size() const override { return cumulative_.back(); }

  std::vector<std::uint64_t> sphere_sizes() const override {
    std::vector<std::uint64_t> out;
    for (std::size_t k = 1; k < cumulative_.size(); ++k)
      out.push_back(cumulative_[k] - cumulative_[k - 1]);
    return out;
  }

  int length(Element x) const override {
    check(x);
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x.id);
    return static_cast<int>(it - cumulative_.begin()) - 1;
  }

  Word word(Element x) const override {
    const int len = length(x);
    std::uint64_t r = x.id - cumulative_[static_cast<std::size_t>(len)];
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(len));
    const std::uint64_t q = letters_ - 1;
    for (int j = len - 1; j >= 1; --j) {
      digits[static_cast<std::size_t>(j)] = q == 0 ? 0 : r % q;
      if (q != 0) r /= q;
    }
    if (len > 0) digits[0] = r;
    Word w(static_cast<std::size_t>(len));
    for (int j = 0; j < len; ++j) {
      auto d = digits[static_cast<std::size_t>(j)];
      if (j > 0 && d >= inverse_letter(w[static_cast<std::size_t>(j) - 1])) ++d;
      w[static_cast<std::size_t>(j)] = static_cast<Letter>(d);
    }
    return w;
  }

  std::optional<Element> neighbor(Element x, Letter l) const override {
    Word w = word(x);
    if (!w.empty() && w.back() == inverse_letter(l)) {
      w.pop_back();
    } else {
      if (static_cast<int>(w.size()) + 1 > radius_) return std::nullopt;
      w.push_back(l);
    }
    return Element{rank(w)};
  }

  std::optional<Element> evaluate(const Word& w) const override {
    Word r = free_reduce(w);
    if (static_cast<int>(r.size()) > radius_) return std::nullopt;
    return Element{rank(r)};
  }

  std::optional<Element> quotient(Element x, Element y) const override {
    const Word wx = word(x);
    const Word wy = word(y);
    std::size_t k = 0;
    while (k < wx.size() && k < wy.size() && wx[k] == wy[k]) ++k;
    if (static_cast<int>(wx.size() + wy.size() - 2 * k) > radius_) return std::nullopt;
    Word out;
    out.reserve(wx.size() + wy.size() - 2 * k);
    for (std::size_t i = wx.size(); i > k; --i) out.push_back(inverse_letter(wx[i - 1]));
    out.insert(out.end(), wy.begin() + static_cast<std::ptrdiff_t>(k), wy.end());
    return Element{rank(out)};
  }

 private:
  void check(Element x) const {
    if (x.id >= size()) throw Error(ErrorCode::OutOfBall, "element id out of range");
  }

  std::uint64_t rank(const Word& w) const {
    if (w.empty()) return 0;
    std::uint64_t r = w[0];
    const std::uint64_t q = letters_ - 1;
    for (std::size_t j = 1; j < w.size(); ++j) {
      std::uint64_t d = w[j];
      if (d > inverse_letter(w[j - 1])) --d;
      r = r * q + d;
    }
    return cumulative_[w.size()] + r;
  }

  std::uint64_t letters_;
  int radius_;
  std::vector<std::uint64_t> cumulative_;  // cumulative_[k] = |B(k-1)|
};

// Coset enumeration of the trivial subgroup, limited to cosets within a fixed
// definition depth. Coincidence handling follows the standard union-find
// procedure with a queue of dead cosets.
class CosetEnumerator {
 public:
  static constexpr std::int64_t kNone = -1;

  CosetEnumerator(std::size_t letters, std::vector<Word> relators, std::uint64_t cap)
      : letters_(letters), relators_(std::move(relators)), cap_(cap) {
    add_coset(0);
  }

  void run(int define_depth) {
    scan_all();
    for (int k = 0; k < define_depth; ++k) {
      const std::size_t n = rep_.size();
      for (std::size_t c = 0; c < n; ++c) {
        if (!live(c) || depth_[c] != k) continue;
        for (std::size_t x = 0; x < letters_; ++x) {
          if (!live(c)) break;
          if (entry(c, x) != kNone) continue;
          const std::size_t d = add_coset(k + 1);
          set(c, x, d);
          set(d, x ^ 1u, c);
        }
      }
      scan_all();
    }
  }

  bool live(std::size_t c) const { return rep_[c] == static_cast<std::int64_t>(c); }
  std::int64_t entry(std::size_t c, std::size_t x) const { return table_[c * letters_ + x]; }
  std::size_t coset_count() const { return rep_.size(); }

 private:
  std::size_t add_coset(int depth) {
    if (rep_.size() >= cap_) {
      throw Error(ErrorCode::BallTooLarge, "coset enumeration exceeded " +
                                               std::to_string(cap_) + " cosets");
    }
    const std::size_t c = rep_.size();
    rep_.push_back(static_cast<std::int64_t>(c));
    depth_.push_back(depth);
    table_.insert(table_.end(), letters_, kNone);
    return c;
  }

  void set(std::size_t c, std::size_t x, std::size_t d) {
    table_[c * letters_ + x] = static_cast<std::int64_t>(d);
  }
  void unset(std::size_t c, std::size_t x) { table_[c * letters_ + x] = kNone; }

  std::size_t find(std::size_t c) {
    std::size_t root = c;
    while (rep_[root] != static_cast<std::int64_t>(root)) root = static_cast<std::size_t>(rep_[root]);
    while (rep_[c] != static_cast<std::int64_t>(root)) {
      const auto next = static_cast<std::size_t>(rep_[c]);
      rep_[c] = static_cast<std::int64_t>(root);
      c = next;
    }
    return root;
  }

  void merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep_[b] = static_cast<std::int64_t>(a);
    depth_[a] = std::min(depth_[a], depth_[b]);
    queue_.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    merge(a, b);
    while (!queue_.empty()) {
      const std::size_t g = queue_.front();
      queue_.pop_front();
      for (std::size_t x = 0; x < letters_; ++x) {
        const std::int64_t de = entry(g, x);
        if (de == kNone) continue;
        const auto d = static_cast<std::size_t>(de);
        unset(d, x ^ 1u);
        const std::size_t mu = find(g);
        const std::size_t nu = find(d);
        if (entry(mu, x) != kNone) {
          merge(nu, static_cast<std::size_t>(entry(mu, x)));
        } else if (entry(nu, x ^ 1u) != kNone) {
          merge(mu, static_cast<std::size_t>(entry(nu, x ^ 1u)));
        } else {
          set(mu, x, nu);
          set(nu, x ^ 1u, mu);
        }
      }
    }
  }

  // Traces relator r from coset a in both directions; fills a single gap by
  // deduction, or records a coincidence. Returns true if the table changed.
  bool scan(std::size_t a, const Word& r) {
    const std::size_t n = r.size();
    std::size_t f = a, b = a;
    std::size_t i = 0, j = n;
    while (i < j) {
      const std::int64_t nx = entry(f, r[i]);
      if (nx == kNone) break;
      f = static_cast<std::size_t>(nx);
      ++i;
    }
    if (i == j) {
      if (f != a) {
        coincidence(f, a);
        return true;
      }
      return false;
    }
    while (j > i) {
      const std::int64_t nx = entry(b, r[j - 1] ^ 1u);
      if (nx == kNone) break;
      b = static_cast<std::size_t>(nx);
      --j;
    }
    if (j == i) {
      coincidence(f, b);
      return true;
    }
    if (j == i + 1) {
      set(f, r[i], b);
      set(b, r[i] ^ 1u, f);
      return true;
    }
    return false;
  }

  void scan_all() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t c = 0; c < rep_.size(); ++c) {
        for (const Word& r : relators_) {
          if (!live(c)) break;
          if (scan(c, r)) changed = true;
        }
      }
    }
  }

  std::size_t letters_;
  std::vector<Word> relators_;
  std::uint64_t cap_;
  std::vector<std::int64_t> table_;
  std::vector<std::int64_t> rep_;
  std::vector<int> depth_;
  std::deque<std::size_t> queue_;
};

class TableBall final : public BallModel {
 public:
  static constexpr std::uint32_t kOut = std::numeric_limits<std::uint32_t>::max();

  TableBall(const GroupPresentation& p, std::shared_ptr<const DehnReducer> dehn,
            const BuildOptions& opts)
      : letters_(p.alphabet.letter_count()), radius_(p.ball_radius), dehn_(std::move(dehn)) {
    const std::uint64_t cap = opts.max_elements * std::max<std::uint64_t>(letters_, 1) + 1;
    CosetEnumerator en(letters_, p.relators, cap);
    en.run(radius_ + std::max(opts.enumeration_margin, 1));

    // BFS from the identity coset, visiting neighbours in letter order, gives
    // ShortLex normal forms and ShortLex ids.
    std::vector<std::uint32_t> id_of(en.coset_count(), kOut);
    std::vector<std::size_t> coset_of;
    id_of[0] = 0;
    coset_of.push_back(0);
    parent_.push_back(kOut);
    last_.push_back(0);
    depth_.push_back(0);
    for (std::size_t head = 0; head < coset_of.size(); ++head) {
      if (depth_[head] == radius_) continue;
      const std::size_t c = coset_of[head];
      for (std::size_t x = 0; x < letters_; ++x) {
        const std::int64_t d = en.entry(c, x);
        if (d == CosetEnumerator::kNone) {
          throw Error(ErrorCode::BallTooLarge, "coset table incomplete inside the ball");
        }
        const auto dc = static_cast<std::size_t>(d);
        if (id_of[dc] != kOut) continue;
        if (coset_of.size() >= opts.max_elements) {
          throw Error(ErrorCode::BallTooLarge,
                      "ball exceeds " + std::to_string(opts.max_elements) + " elements");
        }
        id_of[dc] = static_cast<std::uint32_t>(coset_of.size());
        coset_of.push_back(dc);
        parent_.push_back(static_cast<std::uint32_t>(head));
        last_.push_back(static_cast<Letter>(x));
        depth_.push_back(static_cast<std::uint8_t>(depth_[head] + 1));
      }
    }
    const std::size_t n = coset_of.size();
    adj_.assign(n * letters_, kOut);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t x = 0; x < letters_; ++x) {
        const std::int64_t d = en.entry(coset_of[v], x);
        if (d != CosetEnumerator::kNone) adj_[v * letters_ + x] = id_of[static_cast<std::size_t>(d)];
      }
    }
    sphere_.assign(static_cast<std::size_t>(radius_) + 1, 0);
    for (auto d : depth_) ++sphere_[d];
    inv_.assign(n, kOut);
    for (std::size_t v = 0; v < n; ++v) {
      inv_[v] = walk(0, inverse(word(Element{v})));
      if (inv_[v] == kOut) throw Error(ErrorCode::BallTooLarge, "inverse table incomplete");
    }
  }

  int radius() const override { return radius_; }
  std::uint64_t size() const override { return depth_.size(); }
  std::vector<std::uint64_t> sphere_sizes() const override { return sphere_; }

  int length(Element x) const override { return depth_[check(x)]; }

  Word word(Element x) const override {
    std::size_t v = check(x);
    Word w(depth_[v]);
    for (std::size_t i = w.size(); i > 0; --i) {
      w[i - 1] = last_[v];
      v = parent_[v];
    }
    return w;
  }

  std::optional<Element> neighbor(Element x, Letter l) const override {
    const std::uint32_t v = adj_[check(x) * letters_ + l];
    if (v == kOut) return std::nullopt;
    return Element{v};
  }

  std::optional<Element> evaluate(const Word& w) const override {
    std::uint32_t v = walk(0, w);
    if (v == kOut) v = walk(0, dehn_->reduce(w));
    if (v == kOut) return std::nullopt;
    return Element{v};
  }

  std::optional<Element> quotient(Element x, Element y) const override {
    const std::uint32_t v = walk(inv_[check(x)], word(y));
    if (v != kOut) return Element{v};
    return evaluate(concat(inverse(word(x)), word(y)));
  }

 private:
  std::size_t check(Element x) const {
    if (x.id >= depth_.size()) throw Error(ErrorCode::OutOfBall, "element id out of range");
    return static_cast<std::size_t>(x.id);
  }

  std::uint32_t walk(std::uint32_t v, const Word& w) const {
    for (Letter l : w) {
      if (v == kOut) return kOut;
      v = adj_[std::size_t{v} * letters_ + l];
    }
    return v;
  }

  std::size_t letters_;
  int radius_;
  std::shared_ptr<const DehnReducer> dehn_;
  std::vector<std::uint32_t> adj_;
  std::vector<std::uint32_t> parent_;
  std::vector<Letter> last_;
  std::vector<std::uint8_t> depth_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint64_t> sphere_;
};

}  // namespace

std::unique_ptr<BallModel> make_free_ball(std::size_t generator_count, int radius) {
  return std::make_unique<FreeBall>(generator_count, radius);
}

std::unique_ptr<BallModel> make_enumerated_ball(const GroupPresentation& p,
                                                std::shared_ptr<const DehnReducer> dehn,
                                                const BuildOptions& opts) {
  if (p.ball_radius > 250) throw Error(ErrorCode::BallTooLarge, "radius too large");
  return std::make_unique<TableBall>(p, std::move(dehn), opts);
}

}  // namespace hypsub
