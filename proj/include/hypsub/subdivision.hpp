#pragma once

#include "hypsub/group_chain.hpp"
#include "hypsub/tree_approx.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace hypsub {


/// r(i+1) = r(i) + 2 c(i) + 12.
Rational radius_schedule(const Rational& r_i, const Rational& c_i);

struct SubdivisionParams {
  int max_dim = 3;
  std::vector<Rational> r;  // r[0..max_dim]
  std::vector<Rational> c;  // c[i]: max tolerance over correspondences of (i+1)-simplices
};

/// Builds r from c with r(0) = r(1) = 1.
SubdivisionParams make_params(int max_dim, std::vector<Rational> c);

Chain subdivide_f0(const Simplex& s);
/// Sum of the edges of the canonical geodesic; (x, x) for a degenerate edge.
Chain subdivide_f1(const GroupContext& ctx, const Simplex& s);

/// sum_k (-1)^k (g_0..g_k, t(g_k)..t(g_n)), linearly extended. A chain
/// homotopy between id and the vertex map t.
Chain prism_homotopy(const std::function<Element(Element)>& round_trip, const Chain& c);

/// The subdivision chain map f_* on C_*(G), memoized on based simplices
/// (e, g_1, ..., g_i). Internally synchronized.
class SubdivisionMap {
 public:
  explicit SubdivisionMap(GroupContext ctx, int max_dim = 3);

  const GroupContext& context() const noexcept { return ctx_; }
  int max_dim() const noexcept { return max_dim_; }
  DiameterCache& diameters() noexcept { return diameters_; }

  Chain subdivide(const Simplex& s);
  Chain subdivide(const Chain& c);

  /// Current schedule (r grows as larger tolerances are measured).
  SubdivisionParams params() const;
  Rational radius(int i) const;
  /// Max over memo entries of dimension i of ||f_i(s)|| / (1 + diam s).
  Ratio max_ratio(int i) const;
  std::size_t memo_size() const;

 private:
  struct Entry {
    Chain value;
    Rational c;  // tolerance of the correspondence used (0 below dimension 2)
  };

  Simplex to_based(const Simplex& s) const;
  Entry compute_based(const Simplex& based);
  void record(const Simplex& based, const Entry& e);

  GroupContext ctx_;
  int max_dim_;
  DiameterCache diameters_;
  mutable std::mutex mutex_;
  std::unordered_map<Simplex, Entry, SimplexHash> memo_;
  std::vector<Rational> c_;    // indexed by i, size max_dim
  std::vector<Ratio> ratio_;   // indexed by dimension
};

struct Certificate {
  Simplex simplex;
  int dim = 0;
  Coeff residual = 0;  // ||d f_i(s) - f_{i-1}(d s)||_1
  Coeff output_l1 = 0;
  Coeff input_sobolev = 0;
  bool diam_bound_ok = false;
  bool support_ok = false;
  Coeff norm_bound = 0;
  bool pass() const { return residual == 0 && diam_bound_ok && support_ok && output_l1 <= norm_bound; }
};

/// The ceiling K_i: K_1 = 1, K_i = (e(r(i-1) + c(i-1), i) + i) K_{i-1} (i+1).
Ratio cascade_bound(const SubdivisionParams& p, int i);

/// Per-simplex norm ceiling for f_i using the measured ratio of f_{i-1}.
Coeff norm_bound(const SubdivisionParams& p, int i, const Ratio& prev_ratio, const Coeff& sobolev);

/// Certifies against the map's current schedule and measured ratios.
Certificate certify(SubdivisionMap& map, const Simplex& s);

/// Subdivides everything first so the schedule and ratios are final, then
/// certifies each simplex.
std::vector<Certificate> certify_all(SubdivisionMap& map, const std::vector<Simplex>& simplices);

nlohmann::ordered_json to_json(const GroupContext& ctx, const Certificate& c);

}  // namespace hypsub
