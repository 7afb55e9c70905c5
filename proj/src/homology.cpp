#include "hypsub/homology.hpp"

#include <algorithm>
#include <numeric>

namespace hypsub {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), col_rows_(cols) {}

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<Coeff>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::InvalidInput, "ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Coeff IntegerMatrix::get(std::size_t i, std::size_t j) const {
  auto it = rows_.at(i).find(j);
  return it == rows_[i].end() ? Coeff(0) : it->second;
}

void IntegerMatrix::set(std::size_t i, std::size_t j, const Coeff& v) {
  if (j >= cols()) throw Error(ErrorCode::InvalidInput, "column out of range");
  if (v == 0) {
    if (rows_.at(i).erase(j)) col_rows_[j].erase(i);
    return;
  }
  rows_.at(i)[j] = v;
  col_rows_[j].insert(i);
}

void IntegerMatrix::add(std::size_t i, std::size_t j, const Coeff& v) {
  if (v == 0) return;
  if (j >= cols()) throw Error(ErrorCode::InvalidInput, "column out of range");
  auto [it, inserted] = rows_.at(i).try_emplace(j, v);
  if (inserted) {
    col_rows_[j].insert(i);
    return;
  }
  it->second += v;
  if (it->second == 0) {
    rows_[i].erase(it);
    col_rows_[j].erase(i);
  }
}

std::size_t IntegerMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

IntegerMatrix IntegerMatrix::multiply(const IntegerMatrix& o) const {
  if (cols() != o.rows()) throw Error(ErrorCode::InvalidInput, "matrix shapes do not compose");
  IntegerMatrix out(rows(), o.cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [k, a] : rows_[i])
      for (const auto& [j, b] : o.rows_[k]) out.add(i, j, a * b);
  return out;
}

struct SmithEliminator {
  IntegerMatrix& m;
  std::size_t first_row = 0;

  // Least |value|, then row-major. Stops early at a unit.
  bool find_pivot(std::size_t& p, std::size_t& q) {
    while (first_row < m.rows() && m.rows_[first_row].empty()) ++first_row;
    bool found = false;
    Coeff best;
    for (std::size_t i = first_row; i < m.rows(); ++i) {
      for (const auto& [j, v] : m.rows_[i]) {
        const Coeff a = abs(v);
        if (!found || a < best) {
          found = true;
          best = a;
          p = i;
          q = j;
          if (best == 1) return true;
        }
      }
    }
    return found;
  }

  void add_row_multiple(std::size_t target, std::size_t source, const Coeff& k) {
    for (const auto& [j, v] : m.rows_[source]) m.add(target, j, k * v);
  }

  SmithResult run() {
    std::vector<Coeff> diag;
    std::size_t p = 0, q = 0;
    while (find_pivot(p, q)) {
      const Coeff a = m.get(p, q);
      bool restart = false;
      const std::vector<std::size_t> others(m.col_rows_[q].begin(), m.col_rows_[q].end());
      for (std::size_t i : others) {
        if (i == p) continue;
        const Coeff f = m.get(i, q) / a;
        if (f != 0) add_row_multiple(i, p, -f);
        if (m.get(i, q) != 0) restart = true;
      }
      if (restart) continue;
      // Column q now holds only the pivot, so a column operation touches row p alone.
      const std::vector<std::pair<std::size_t, Coeff>> entries(m.rows_[p].begin(), m.rows_[p].end());
      for (const auto& [j, v] : entries) {
        if (j == q) continue;
        const Coeff rem = v - (v / a) * a;
        m.set(p, j, rem);
        if (rem != 0) restart = true;
      }
      if (restart) continue;
      diag.push_back(abs(a));
      m.set(p, q, 0);
    }
    for (std::size_t i = 0; i < diag.size(); ++i) {
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        const Coeff g = gcd(diag[i], diag[j]);
        const Coeff l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
    }
    return {diag, diag.size()};
  }
};

SmithResult smith_normal_form(IntegerMatrix m) {
  SmithEliminator e{m};
  return e.run();
}

namespace {

void enumerate(const NetMetric& metric, const Rational& r, int dim, BasisMode mode,
               std::vector<NetSimplex>& out) {
  const auto n = static_cast<NetIndex>(metric.size());
  NetSimplex cur;
  auto rec = [&](auto&& self) -> void {
    if (cur.dim() == dim) {
      out.push_back(cur);
      return;
    }
    const NetIndex start = (mode == BasisMode::Simplicial && cur.size() > 0) ? cur.vertices.back() + 1 : 0;
    for (NetIndex v = start; v < n; ++v) {
      bool ok = true;
      for (NetIndex u : cur) ok = ok && metric(u, v) <= r;
      if (!ok) continue;
      cur.vertices.push_back(v);
      self(self);
      cur.vertices.pop_back();
    }
  };
  rec(rec);
}

}  // namespace

FiniteComplexBasis::FiniteComplexBasis(const NetMetric& metric, const Rational& r, int max_dim,
                                       BasisMode mode) {
  for (int n = 0; n <= max_dim; ++n) {
    cells_.emplace_back();
    enumerate(metric, r, n, mode, cells_.back());
  }
  build_index();
}

FiniteComplexBasis::FiniteComplexBasis(std::vector<std::vector<NetSimplex>> cells)
    : cells_(std::move(cells)) {
  for (std::size_t n = 0; n < cells_.size(); ++n)
    for (const auto& s : cells_[n])
      if (static_cast<std::size_t>(s.dim()) != n)
        throw Error(ErrorCode::WrongDimension, "cell listed under the wrong dimension");
  build_index();
}

void FiniteComplexBasis::build_index() {
  index_.assign(cells_.size(), {});
  for (std::size_t n = 0; n < cells_.size(); ++n)
    for (std::size_t k = 0; k < cells_[n].size(); ++k) index_[n].emplace(cells_[n][k], k);
}

std::optional<std::size_t> FiniteComplexBasis::index(int n, const NetSimplex& s) const {
  if (n < 0 || n > max_dim()) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(n)];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

IntegerMatrix boundary_matrix(const FiniteComplexBasis& basis, int n, bool augmented) {
  if (n < 0 || n > basis.max_dim())
    throw Error(ErrorCode::BasisNotClosed, "no cells in dimension " + std::to_string(n));
  const auto& cols = basis.cells(n);
  if (n == 0) {
    IntegerMatrix m(augmented ? 1 : 0, cols.size());
    if (augmented)
      for (std::size_t j = 0; j < cols.size(); ++j) m.set(0, j, 1);
    return m;
  }
  IntegerMatrix m(basis.cells(n - 1).size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < cols[j].size(); ++i) {
      const auto row = basis.index(n - 1, cols[j].face(i));
      if (!row) throw Error(ErrorCode::BasisNotClosed, "face missing from the basis");
      m.add(*row, j, i % 2 == 0 ? 1 : -1);
    }
  }
  return m;
}

std::vector<HomologyGroup> homology(const FiniteComplexBasis& basis, int k, bool augmented) {
  if (k + 1 > basis.max_dim())
    throw Error(ErrorCode::BasisNotClosed, "homology through degree k needs cells of dimension k+1");
  std::vector<SmithResult> snf;
  for (int n = 0; n <= k + 1; ++n) snf.push_back(smith_normal_form(boundary_matrix(basis, n, augmented)));
  std::vector<HomologyGroup> out;
  for (int n = 0; n <= k; ++n) {
    const auto& in = snf[static_cast<std::size_t>(n)];
    const auto& next = snf[static_cast<std::size_t>(n) + 1];
    HomologyGroup h;
    h.betti = basis.cells(n).size() - in.rank - next.rank;
    for (const auto& d : next.divisors)
      if (d > 1) h.torsion.push_back(d);
    out.push_back(std::move(h));
  }
  return out;
}

HomotopyBuilder::HomotopyBuilder(GroupContext ctx, ChainMap phi, Chain x)
    : ctx_(std::move(ctx)), phi_(std::move(phi)), x_(std::move(x)) {
  if (x_.empty()) x_ = Chain(1);
  if (x_.dim() != 1) throw Error(ErrorCode::WrongDimension, "base correction must be a 1-chain");
  const Simplex e{ctx_.identity()};
  const Chain expected = phi_(e) - Chain(e);
  if (!(boundary(x_) == expected)) {
    throw Error(ErrorCode::HomotopyIdentityFailed, "d x differs from phi_0(e) - e");
  }
}

Chain HomotopyBuilder::apply(const Chain& c) {
  return extend_linearly<Element>(c, c.dim() + 1, [&](const Simplex& s) { return apply(s); });
}

Chain HomotopyBuilder::apply(const Simplex& s) {
  if (s.dim() < 0) throw Error(ErrorCode::EmptyTuple, "empty simplex");
  if (s.dim() == 0) return act(ctx_, s[0], x_);
  const Element g0 = s[0];
  Simplex based;
  for (Element v : s) based.vertices.push_back(ctx_.quotient(g0, v));
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(based); it != memo_.end()) return act(ctx_, g0, it->second);
  }
  Chain z = phi_(based) - Chain(based) - apply(boundary(based));
  Chain value = cone(ctx_.identity(), z);
  if (value.empty()) value = Chain(s.dim() + 1);
  if (!(boundary(value) == z)) {
    throw Error(ErrorCode::HomotopyIdentityFailed,
                "d h + h d != phi - id at based simplex (" + [&] {
                  std::string w;
                  for (const auto& t : simplex_words(ctx_, based)) w += (w.empty() ? "'" : ",'") + t + "'";
                  return w;
                }() + ")");
  }
  {
    std::lock_guard lock(mutex_);
    memo_.emplace(based, value);
  }
  return act(ctx_, g0, value);
}

Coeff HomotopyBuilder::residual(const Simplex& s) {
  Chain lhs = boundary(apply(s));
  if (s.dim() >= 1) lhs += apply(boundary(s));
  return l1_norm(lhs - (phi_(s) - Chain(s)));
}

bool HomotopyBuilder::equivariant_at(Element g, const Simplex& s) {
  return phi_(act(ctx_, g, s)) == act(ctx_, g, phi_(s));
}

}  // namespace hypsub
