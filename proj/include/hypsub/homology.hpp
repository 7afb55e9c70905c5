#pragma once

#include "hypsub/chain.hpp"
#include "hypsub/group_chain.hpp"
#include "hypsub/metric_tree.hpp"
#include "hypsub/tree_contraction.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

namespace hypsub {

/// Sparse integer matrix, row-major with a column index for elimination.
class IntegerMatrix {
 public:
  IntegerMatrix(std::size_t rows, std::size_t cols);
  static IntegerMatrix from_dense(const std::vector<std::vector<Coeff>>& rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return col_rows_.size(); }
  Coeff get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Coeff& v);
  void add(std::size_t i, std::size_t j, const Coeff& v);
  std::size_t nonzeros() const;
  const std::map<std::size_t, Coeff>& row(std::size_t i) const { return rows_[i]; }
  const std::set<std::size_t>& column(std::size_t j) const { return col_rows_[j]; }
  IntegerMatrix multiply(const IntegerMatrix& other) const;
  bool is_zero() const { return nonzeros() == 0; }

 private:
  friend struct SmithEliminator;
  std::vector<std::map<std::size_t, Coeff>> rows_;
  std::vector<std::set<std::size_t>> col_rows_;
};

struct SmithResult {
  std::vector<Coeff> divisors;  // d_1 | d_2 | ..., all positive
  std::size_t rank = 0;
};

/// Unimodular elimination with the least-|value| pivot (row-major on
/// ties), then a gcd/lcm pass to put the diagonal into divisor-chain form.
SmithResult smith_normal_form(IntegerMatrix m);

enum class BasisMode {
  Ordered,     // all tuples, degenerate ones included
  Simplicial,  // strictly increasing tuples only
};

/// Rips basis of a finite metric space on points 0..n-1, or an explicit
/// list of cells per dimension.
class FiniteComplexBasis {
 public:
  FiniteComplexBasis(const NetMetric& metric, const Rational& r, int max_dim, BasisMode mode);
  explicit FiniteComplexBasis(std::vector<std::vector<NetSimplex>> cells);

  int max_dim() const noexcept { return static_cast<int>(cells_.size()) - 1; }
  const std::vector<NetSimplex>& cells(int n) const { return cells_.at(static_cast<std::size_t>(n)); }
  std::optional<std::size_t> index(int n, const NetSimplex& s) const;

 private:
  void build_index();
  std::vector<std::vector<NetSimplex>> cells_;
  std::vector<std::map<NetSimplex, std::size_t>> index_;
};

/// Matrix of d_n : C_n -> C_{n-1}. With `augmented`, d_0 is the 1 x |C_0|
/// row of ones.
IntegerMatrix boundary_matrix(const FiniteComplexBasis& basis, int n, bool augmented = false);

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<Coeff> torsion;  // divisors > 1
  bool vanishes() const { return betti == 0 && torsion.empty(); }
};

/// Homology in degrees 0..k; requires cells through dimension k+1.
std::vector<HomologyGroup> homology(const FiniteComplexBasis& basis, int k, bool augmented);

/// Bounded homotopy between an equivariant chain map phi and
/// the identity on C_*(G): h_0(g) = g x and
/// h_k(e, g_1..g_k) = c_e((phi_k - id - h_{k-1} d)(e, g_1..g_k)), extended
/// equivariantly. Evaluated lazily and memoized on based simplices.
class HomotopyBuilder {
 public:
  using ChainMap = std::function<Chain(const Simplex&)>;

  /// HomotopyIdentityFailed unless d x = phi_0(e) - e.
  HomotopyBuilder(GroupContext ctx, ChainMap phi, Chain x);

  Chain apply(const Simplex& s);
  Chain apply(const Chain& c);
  /// ||d h_k(s) + h_{k-1}(d s) - (phi_k(s) - s)||_1 (degree 0: without the
  /// h_{-1} term).
  Coeff residual(const Simplex& s);
  /// phi(g s) == g phi(s).
  bool equivariant_at(Element g, const Simplex& s);

 private:
  GroupContext ctx_;
  ChainMap phi_;
  Chain x_;
  std::mutex mutex_;
  std::unordered_map<Simplex, Chain, SimplexHash> memo_;
};

}  // namespace hypsub
