#include "hypsub/subdivision.hpp"

#include "hypsub/tree_contraction.hpp"

#include <algorithm>

namespace hypsub {

Rational radius_schedule(const Rational& r_i, const Rational& c_i) {
  if (c_i < 0) throw Error(ErrorCode::InvalidInput, "negative tolerance");
  return r_i + 2 * c_i + 12;
}

SubdivisionParams make_params(int max_dim, std::vector<Rational> c) {
  SubdivisionParams p;
  p.max_dim = max_dim;
  c.resize(static_cast<std::size_t>(std::max(max_dim, 1)), Rational(0));
  p.c = std::move(c);
  p.r.assign(static_cast<std::size_t>(max_dim) + 1, Rational(1));
  for (int i = 1; i < max_dim; ++i)
    p.r[static_cast<std::size_t>(i) + 1] = radius_schedule(p.r[static_cast<std::size_t>(i)], p.c[static_cast<std::size_t>(i)]);
  return p;
}

Chain subdivide_f0(const Simplex& s) {
  if (s.dim() != 0) throw Error(ErrorCode::WrongDimension, "f_0 takes a 0-simplex");
  return Chain(s);
}

Chain subdivide_f1(const GroupContext& ctx, const Simplex& s) {
  if (s.dim() != 1) throw Error(ErrorCode::WrongDimension, "f_1 takes a 1-simplex");
  if (s[0] == s[1]) return Chain(s);
  const auto path = ctx.geodesic(s[0], s[1]);
  Chain out(1);
  for (std::size_t k = 1; k < path.size(); ++k) out.add(Simplex{path[k - 1], path[k]}, 1);
  return out;
}

Chain prism_homotopy(const std::function<Element(Element)>& round_trip, const Chain& c) {
  Chain out(c.dim() + 1);
  for (const auto& [s, coeff] : c) {
    Simplex image;
    for (Element v : s) image.vertices.push_back(round_trip(v));
    for (std::size_t k = 0; k < s.size(); ++k) {
      Simplex t;
      t.vertices.insert(t.vertices.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k) + 1);
      t.vertices.insert(t.vertices.end(), image.begin() + static_cast<std::ptrdiff_t>(k), image.end());
      out.add(t, k % 2 == 0 ? coeff : Coeff(-coeff));
    }
  }
  return out;
}

SubdivisionMap::SubdivisionMap(GroupContext ctx, int max_dim)
    : ctx_(std::move(ctx)),
      max_dim_(max_dim),
      c_(static_cast<std::size_t>(std::max(max_dim, 1)), Rational(0)),
      ratio_(static_cast<std::size_t>(max_dim) + 1, Ratio(0)) {
  if (max_dim < 0) throw Error(ErrorCode::InvalidInput, "negative max_dim");
  ratio_[0] = 1;
}

SubdivisionParams SubdivisionMap::params() const {
  std::lock_guard lock(mutex_);
  return make_params(max_dim_, c_);
}

Rational SubdivisionMap::radius(int i) const { return params().r.at(static_cast<std::size_t>(i)); }

Ratio SubdivisionMap::max_ratio(int i) const {
  std::lock_guard lock(mutex_);
  return ratio_.at(static_cast<std::size_t>(i));
}

std::size_t SubdivisionMap::memo_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

Simplex SubdivisionMap::to_based(const Simplex& s) const {
  const Element g0 = s[0];
  if (g0 == ctx_.identity()) return s;
  Simplex out;
  for (Element v : s) out.vertices.push_back(ctx_.quotient(g0, v));
  return out;
}

Chain SubdivisionMap::subdivide(const Chain& c) {
  return extend_linearly<Element>(c, c.dim(), [&](const Simplex& s) { return subdivide(s); });
}

Chain SubdivisionMap::subdivide(const Simplex& s) {
  const int n = s.dim();
  if (n < 0) throw Error(ErrorCode::EmptyTuple, "empty simplex");
  if (n == 0) return subdivide_f0(s);
  if (n > max_dim_) {
    throw Error(ErrorCode::WrongDimension, "dimension " + std::to_string(n) + " exceeds max_dim " +
                                               std::to_string(max_dim_));
  }
  const Simplex based = to_based(s);
  Chain value;
  bool found = false;
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(based); it != memo_.end()) {
      value = it->second.value;
      found = true;
    }
  }
  if (!found) {
    Entry e = compute_based(based);
    record(based, e);
    value = std::move(e.value);
  }
  return act(ctx_, s[0], value);
}

SubdivisionMap::Entry SubdivisionMap::compute_based(const Simplex& based) {
  const int n = based.dim();
  if (n == 1) return {subdivide_f1(ctx_, based), Rational(0)};

  const int i = n - 1;
  const Chain F = subdivide(boundary(based));
  const Correspondence corr =
      build_correspondence(ctx_, std::span<const Element>(based.vertices.data(), based.size()), ctx_.delta());
  ContractionOperator op(corr.net_metric, 0, radius(i) + corr.c);
  const NetChain phiF = map_vertices<NetIndex>(F, [&](Element v) { return corr.phi_of(v); });
  const NetChain H = op.apply(phiF);
  Chain value = map_vertices<Element>(H, [&](NetIndex v) { return corr.psi_of(v); });
  value -= prism_homotopy([&](Element v) { return corr.round_trip(v); }, F);
  if (value.empty()) value = Chain(n);

  const Chain residual = boundary(value) - F;
  if (!residual.empty()) {
    throw Error(ErrorCode::ChainMapResidual,
                "d f(s) - f(d s) has l1 norm " + l1_norm(residual).str() + " on a based " +
                    std::to_string(n) + "-simplex");
  }
  return {std::move(value), corr.c};
}

void SubdivisionMap::record(const Simplex& based, const Entry& e) {
  const int n = based.dim();
  const Coeff sob = 1 + diameter(ctx_, based, &diameters_);
  const Ratio ratio(l1_norm(e.value), sob);
  Rational r_n;
  {
    std::lock_guard lock(mutex_);
    if (n >= 2) {
      auto& c = c_[static_cast<std::size_t>(n - 1)];
      c = std::max(c, e.c);
    }
    r_n = make_params(max_dim_, c_).r[static_cast<std::size_t>(n)];
  }
  for (const auto& [t, k] : e.value) {
    if (Rational(diameter(ctx_, t, &diameters_)) > r_n) {
      throw Error(ErrorCode::RadiusScheduleExceeded,
                  "output simplex of diameter " + std::to_string(diameter(ctx_, t, &diameters_)) +
                      " exceeds r(" + std::to_string(n) + ") = " + to_string(r_n));
    }
  }
  std::lock_guard lock(mutex_);
  auto& m = ratio_[static_cast<std::size_t>(n)];
  m = std::max(m, ratio);
  memo_.emplace(based, e);
}

Ratio cascade_bound(const SubdivisionParams& p, int i) {
  Ratio k = 1;
  for (int n = 2; n <= i; ++n) {
    const auto prev = static_cast<std::size_t>(n - 1);
    k = (e_constant(p.r[prev] + p.c[prev], n) + n) * k * (n + 1);
  }
  return k;
}

Coeff norm_bound(const SubdivisionParams& p, int i, const Ratio& prev_ratio, const Coeff& sobolev) {
  if (i <= 1) return sobolev;
  const auto prev = static_cast<std::size_t>(i - 1);
  const Ratio x = (e_constant(p.r[prev] + p.c[prev], i) + i) * prev_ratio * (i + 1) * sobolev;
  return numerator(x) / denominator(x);
}

Certificate certify(SubdivisionMap& map, const Simplex& s) {
  const GroupContext& ctx = map.context();
  Certificate cert;
  cert.simplex = s;
  cert.dim = s.dim();
  const Chain value = map.subdivide(s);
  if (cert.dim >= 1) cert.residual = l1_norm(boundary(value) - map.subdivide(boundary(s)));
  cert.output_l1 = l1_norm(value);
  cert.input_sobolev = 1 + diameter(ctx, s, &map.diameters());
  const SubdivisionParams p = map.params();
  cert.diam_bound_ok = rips_check(ctx, value, p.r[static_cast<std::size_t>(cert.dim)], &map.diameters());
  const auto hull = ctx.geodesic_hull(std::span<const Element>(s.vertices.data(), s.size()));
  cert.support_ok = true;
  for (Element v : support(value)) {
    if (!std::binary_search(hull.begin(), hull.end(), v)) {
      cert.support_ok = false;
      break;
    }
  }
  cert.norm_bound = norm_bound(p, cert.dim, cert.dim >= 1 ? map.max_ratio(cert.dim - 1) : Ratio(1),
                               cert.input_sobolev);
  return cert;
}

std::vector<Certificate> certify_all(SubdivisionMap& map, const std::vector<Simplex>& simplices) {
  for (const Simplex& s : simplices) map.subdivide(s);
  std::vector<Certificate> out;
  out.reserve(simplices.size());
  for (const Simplex& s : simplices) out.push_back(certify(map, s));
  return out;
}

nlohmann::ordered_json to_json(const GroupContext& ctx, const Certificate& c) {
  nlohmann::ordered_json j;
  j["simplex"] = simplex_to_json(ctx, c.simplex);
  j["dim"] = c.dim;
  j["residual"] = coeff_to_json(c.residual);
  j["output_l1"] = coeff_to_json(c.output_l1);
  j["input_sobolev"] = coeff_to_json(c.input_sobolev);
  j["diam_bound_ok"] = c.diam_bound_ok;
  j["support_ok"] = c.support_ok;
  j["norm_bound"] = coeff_to_json(c.norm_bound);
  j["pass"] = c.pass();
  return j;
}

}  // namespace hypsub
