#pragma once

#include "hypsub/error.hpp"

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <string>

namespace hypsub {

using Coeff = boost::multiprecision::cpp_int;

/// Ordered tuple (v_0, ..., v_n). Repeated vertices are allowed.
template <class V>
struct BasicSimplex {
  boost::container::small_vector<V, 5> vertices;

  BasicSimplex() = default;
  BasicSimplex(std::initializer_list<V> vs) : vertices(vs) {}
  template <class It>
  BasicSimplex(It first, It last) : vertices(first, last) {}

  int dim() const noexcept { return static_cast<int>(vertices.size()) - 1; }
  std::size_t size() const noexcept { return vertices.size(); }
  const V& operator[](std::size_t i) const { return vertices[i]; }
  V& operator[](std::size_t i) { return vertices[i]; }
  auto begin() const { return vertices.begin(); }
  auto end() const { return vertices.end(); }

  /// Drops the i-th vertex.
  BasicSimplex face(std::size_t i) const {
    BasicSimplex out;
    out.vertices.reserve(vertices.size() - 1);
    for (std::size_t k = 0; k < vertices.size(); ++k)
      if (k != i) out.vertices.push_back(vertices[k]);
    return out;
  }

  /// (v, v_0, ..., v_n).
  BasicSimplex prepend(const V& v) const {
    BasicSimplex out;
    out.vertices.reserve(vertices.size() + 1);
    out.vertices.push_back(v);
    out.vertices.insert(out.vertices.end(), vertices.begin(), vertices.end());
    return out;
  }

  friend bool operator==(const BasicSimplex& a, const BasicSimplex& b) {
    return a.vertices == b.vertices;
  }
  friend bool operator<(const BasicSimplex& a, const BasicSimplex& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                                        b.vertices.end());
  }
};

/// Finite integer combination of n-simplices; zero coefficients are never
/// stored. The empty chain keeps a nominal dimension so that boundary and
/// cone stay well-typed.
template <class V>
class BasicChain {
 public:
  using Simplex = BasicSimplex<V>;
  using Terms = std::map<Simplex, Coeff>;

  explicit BasicChain(int dim = 0) : dim_(dim) {}
  BasicChain(const Simplex& s, Coeff c = 1) : dim_(s.dim()) { add(s, c); }

  int dim() const noexcept { return dim_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Coeff coefficient(const Simplex& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add(const Simplex& s, const Coeff& c) {
    if (s.size() == 0) throw Error(ErrorCode::EmptyTuple, "simplex with no vertices");
    if (s.dim() != dim_) {
      if (!terms_.empty()) {
        throw Error(ErrorCode::WrongDimension, "adding a " + std::to_string(s.dim()) +
                                                   "-simplex to a " + std::to_string(dim_) +
                                                   "-chain");
      }
      dim_ = s.dim();
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BasicChain& operator+=(const BasicChain& o) {
    if (o.empty()) return *this;
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
  }
  BasicChain& operator-=(const BasicChain& o) {
    for (const auto& [s, c] : o.terms_) add(s, -c);
    return *this;
  }
  BasicChain& operator*=(const Coeff& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [s, c] : terms_) c *= k;
    return *this;
  }
  BasicChain operator-() const {
    BasicChain out = *this;
    for (auto& [s, c] : out.terms_) c = -c;
    return out;
  }
  friend BasicChain operator+(BasicChain a, const BasicChain& b) { return a += b; }
  friend BasicChain operator-(BasicChain a, const BasicChain& b) { return a -= b; }
  friend BasicChain operator*(const Coeff& k, BasicChain a) { return a *= k; }
  /// Equality of chains as elements of the free abelian group; the nominal
  /// dimension of a zero chain is ignored.
  friend bool operator==(const BasicChain& a, const BasicChain& b) {
    return a.terms_ == b.terms_ && (a.empty() || a.dim_ == b.dim_);
  }

 private:
  int dim_;
  Terms terms_;
};

template <class V>
BasicChain<V> boundary(const BasicSimplex<V>& s) {
  if (s.dim() < 1) throw Error(ErrorCode::DimensionZero, "boundary of a 0-simplex");
  BasicChain<V> out(s.dim() - 1);
  for (std::size_t i = 0; i < s.size(); ++i) out.add(s.face(i), i % 2 == 0 ? 1 : -1);
  return out;
}

template <class V>
BasicChain<V> boundary(const BasicChain<V>& c) {
  if (c.dim() < 1) throw Error(ErrorCode::DimensionZero, "boundary of a 0-chain");
  BasicChain<V> out(c.dim() - 1);
  for (const auto& [s, k] : c) {
    for (std::size_t i = 0; i < s.size(); ++i) out.add(s.face(i), i % 2 == 0 ? k : Coeff(-k));
  }
  return out;
}

template <class V>
Coeff l1_norm(const BasicChain<V>& c) {
  Coeff n = 0;
  for (const auto& [s, k] : c) n += abs(k);
  return n;
}

/// c_v: prepends v to every simplex.
template <class V>
BasicChain<V> cone(const V& v, const BasicChain<V>& c) {
  BasicChain<V> out(c.dim() + 1);
  for (const auto& [s, k] : c) out.add(s.prepend(v), k);
  return out;
}

template <class V>
std::set<V> support(const BasicChain<V>& c) {
  std::set<V> out;
  for (const auto& [s, k] : c) out.insert(s.begin(), s.end());
  return out;
}

template <class V>
Coeff augmentation(const BasicChain<V>& c) {
  if (c.dim() != 0) {
    throw Error(ErrorCode::WrongDimension,
                "augmentation of a " + std::to_string(c.dim()) + "-chain");
  }
  Coeff sum = 0;
  for (const auto& [s, k] : c) sum += k;
  return sum;
}

/// Pushes a chain forward along a vertex map (the induced chain map).
template <class W, class V, class F>
BasicChain<W> map_vertices(const BasicChain<V>& c, F&& f) {
  BasicChain<W> out(c.dim());
  for (const auto& [s, k] : c) {
    BasicSimplex<W> t;
    t.vertices.reserve(s.size());
    for (const V& v : s) t.vertices.push_back(f(v));
    out.add(t, k);
  }
  return out;
}

/// Linear extension of a function defined on basis simplices.
template <class W, class V, class F>
BasicChain<W> extend_linearly(const BasicChain<V>& c, int out_dim, F&& f) {
  BasicChain<W> out(out_dim);
  for (const auto& [s, k] : c) {
    BasicChain<W> img = f(s);
    img *= k;
    out += img;
  }
  return out;
}

}  // namespace hypsub
