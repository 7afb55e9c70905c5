#pragma once

#include "hypsub/chain.hpp"
#include "hypsub/metric_tree.hpp"

#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace hypsub {

using NetIndex = std::uint32_t;
using NetSimplex = BasicSimplex<NetIndex>;
using NetChain = BasicChain<NetIndex>;

/// e(r,1) = ceil(r) + 1, e(r,i) = e(r,i-1) * (i+1) + 1.
Ratio e_constant(const Rational& r, int i);

/// Net points p with d(a,p) + d(p,b) = d(a,b) for some a, b in `points`;
/// sorted.
std::vector<NetIndex> conv_hull(const NetMetric& metric, std::span<const NetIndex> points);

/// Chain contraction of the augmented Rips complex C^r_*(V) of a
/// 1-separated net V in a tree, based at net point x. Memoizing and
/// internally synchronized.
class ContractionOperator {
 public:
  ContractionOperator(NetMetric metric, NetIndex basepoint, Rational r);

  const NetMetric& metric() const noexcept { return metric_; }
  NetIndex basepoint() const noexcept { return basepoint_; }
  const Rational& radius() const noexcept { return r_; }

  Rational diameter(const NetSimplex& s) const;

  /// k times the basepoint 0-simplex.
  NetChain h_minus1(const Coeff& k = 1) const;
  /// Consecutive net points along [x, v].
  NetChain h0(NetIndex v) const;
  /// h_i on a basis i-simplex; RipsViolation if its diameter exceeds r.
  NetChain apply(const NetSimplex& s);
  NetChain apply(const NetChain& c);

 private:
  NetChain compute(const NetSimplex& s);

  struct Hash {
    std::size_t operator()(const NetSimplex& s) const noexcept {
      std::size_t h = s.size();
      for (NetIndex v : s) h = h * 1000003u ^ v;
      return h;
    }
  };

  NetMetric metric_;
  NetIndex basepoint_;
  Rational r_;
  std::mutex mutex_;
  std::unordered_map<NetSimplex, NetChain, Hash> memo_;
};

/// All ordered (i+1)-tuples of net points with diameter <= r, degenerate
/// ones included, in lexicographic order.
std::vector<NetSimplex> rips_simplices(const NetMetric& metric, const Rational& r, int dim);

struct ContractionFailure {
  std::string kind;  // "identity", "norm", "support", "rips"
  NetSimplex simplex;
  std::string detail;
};

struct ContractionReport {
  std::size_t checked = 0;
  /// Simplices with ||h_i(s)|| == e(r,i): they satisfy the non-strict bound
  /// but not the strict one.
  std::size_t norm_equalities = 0;
  std::vector<ContractionFailure> failures;
  bool ok() const { return failures.empty(); }
};

struct ContractionCheckOptions {
  /// Require ||h_i(s)|| < e(r,i); otherwise <= is required and equality
  /// cases are only counted.
  bool strict_norm = false;
};

/// Checks d h_i(s) + h_{i-1}(d s) = s (augmented in degree 0), the norm
/// bound and supp h_i(s) in conv(s) on the given simplices.
ContractionReport verify_contraction(ContractionOperator& op, std::span<const NetSimplex> simplices,
                                     const ContractionCheckOptions& opts = {});

/// Exhaustive run over every Rips simplex of dimension <= max_dim.
ContractionReport verify_contraction(ContractionOperator& op, int max_dim,
                                     const ContractionCheckOptions& opts = {});

}  // namespace hypsub
