#include "hypsub/tree_contraction.hpp"

#include "hypsub/error.hpp"

#include <algorithm>
#include <sstream>

namespace hypsub {

Ratio e_constant(const Rational& r, int i) {
  if (i < 1) throw Error(ErrorCode::InvalidInput, "e(r,i) needs i >= 1");
  Ratio e = Ratio(r.numerator(), r.denominator()) + 1;
  for (int k = 2; k <= i; ++k) e = e * (k + 1) + 1;
  return e;
}

std::vector<NetIndex> conv_hull(const NetMetric& metric, std::span<const NetIndex> points) {
  std::vector<NetIndex> out;
  for (NetIndex p = 0; p < metric.size(); ++p) {
    bool inside = false;
    for (std::size_t a = 0; a < points.size() && !inside; ++a)
      for (std::size_t b = a; b < points.size() && !inside; ++b)
        inside = metric(points[a], p) + metric(p, points[b]) == metric(points[a], points[b]);
    if (inside) out.push_back(p);
  }
  return out;
}

ContractionOperator::ContractionOperator(NetMetric metric, NetIndex basepoint, Rational r)
    : metric_(std::move(metric)), basepoint_(basepoint), r_(r) {
  if (basepoint_ >= metric_.size()) throw Error(ErrorCode::InvalidInput, "basepoint not in the net");
}

Rational ContractionOperator::diameter(const NetSimplex& s) const {
  Rational d = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) d = std::max(d, metric_(s[i], s[j]));
  return d;
}

NetChain ContractionOperator::h_minus1(const Coeff& k) const {
  return NetChain(NetSimplex{basepoint_}, k);
}

NetChain ContractionOperator::h0(NetIndex v) const {
  const NetIndex x = basepoint_;
  std::vector<NetIndex> on_path;
  for (NetIndex p = 0; p < metric_.size(); ++p)
    if (metric_(x, p) + metric_(p, v) == metric_(x, v)) on_path.push_back(p);
  std::sort(on_path.begin(), on_path.end(),
            [&](NetIndex a, NetIndex b) { return metric_(x, a) < metric_(x, b); });
  NetChain out(1);
  for (std::size_t k = 0; k + 1 < on_path.size(); ++k) out.add(NetSimplex{on_path[k], on_path[k + 1]}, 1);
  return out;
}

NetChain ContractionOperator::apply(const NetSimplex& s) {
  if (diameter(s) > r_) {
    std::ostringstream msg;
    msg << "simplex of diameter " << to_string(diameter(s)) << " exceeds r = " << to_string(r_);
    throw Error(ErrorCode::RipsViolation, msg.str());
  }
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
  }
  NetChain value = compute(s);
  std::lock_guard lock(mutex_);
  return memo_.emplace(s, std::move(value)).first->second;
}

NetChain ContractionOperator::apply(const NetChain& c) {
  return extend_linearly<NetIndex>(c, c.dim() + 1, [&](const NetSimplex& s) { return apply(s); });
}

NetChain ContractionOperator::compute(const NetSimplex& s) {
  if (s.dim() == 0) return h0(s[0]);
  // h_i(s) = c_{v0}(s - h_{i-1} d s)
  NetChain inner(s);
  inner -= apply(boundary(s));
  return cone(s[0], inner);
}

std::vector<NetSimplex> rips_simplices(const NetMetric& metric, const Rational& r, int dim) {
  std::vector<NetSimplex> out;
  const auto n = static_cast<NetIndex>(metric.size());
  NetSimplex cur;
  auto rec = [&](auto&& self) -> void {
    if (cur.dim() == dim) {
      out.push_back(cur);
      return;
    }
    for (NetIndex v = 0; v < n; ++v) {
      bool ok = true;
      for (NetIndex u : cur) ok = ok && metric(u, v) <= r;
      if (!ok) continue;
      cur.vertices.push_back(v);
      self(self);
      cur.vertices.pop_back();
    }
  };
  rec(rec);
  return out;
}

namespace {

std::string describe(const NetSimplex& s) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ")";
  return os.str();
}

}  // namespace

ContractionReport verify_contraction(ContractionOperator& op, std::span<const NetSimplex> simplices,
                                     const ContractionCheckOptions& opts) {
  ContractionReport rep;
  for (const NetSimplex& s : simplices) {
    ++rep.checked;
    const int i = s.dim();
    NetChain h;
    try {
      h = op.apply(s);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::RipsViolation) throw;
      rep.failures.push_back({"rips", s, e.what()});
      continue;
    }
    NetChain lhs = boundary(h);
    if (i == 0) {
      lhs += op.h_minus1(1);
    } else {
      lhs += op.apply(boundary(s));
    }
    if (!(lhs == NetChain(s))) {
      rep.failures.push_back({"identity", s, "d h + h d != id on " + describe(s)});
    }
    if (i >= 1) {
      const Coeff norm = l1_norm(h);
      const Ratio bound = e_constant(op.radius(), i);
      if (Ratio(norm) == bound) ++rep.norm_equalities;
      if (Ratio(norm) > bound || (opts.strict_norm && Ratio(norm) == bound)) {
        rep.failures.push_back({"norm", s,
                                "||h(s)|| = " + norm.str() + " vs e(r," + std::to_string(i) +
                                    ") = " + bound.str()});
      }
    }
    // h_0(v) runs from the basepoint, so degree 0 is measured against conv(v, x).
    std::vector<NetIndex> spanned(s.begin(), s.end());
    if (i == 0) spanned.push_back(op.basepoint());
    const auto hull = conv_hull(op.metric(), spanned);
    for (NetIndex v : support(h)) {
      if (!std::binary_search(hull.begin(), hull.end(), v)) {
        rep.failures.push_back({"support", s, "net point " + std::to_string(v) + " outside conv"});
        break;
      }
    }
  }
  return rep;
}

ContractionReport verify_contraction(ContractionOperator& op, int max_dim,
                                     const ContractionCheckOptions& opts) {
  ContractionReport total;
  for (int i = 0; i <= max_dim; ++i) {
    const auto simplices = rips_simplices(op.metric(), op.radius(), i);
    auto rep = verify_contraction(op, simplices, opts);
    total.checked += rep.checked;
    total.norm_equalities += rep.norm_equalities;
    total.failures.insert(total.failures.end(), rep.failures.begin(), rep.failures.end());
  }
  return total;
}

}  // namespace hypsub
