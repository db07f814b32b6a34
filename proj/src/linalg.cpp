#include "qhowe/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhowe {

namespace {

// Residual of v and the coefficients of the pivot rows that were removed.
SVec eliminate(const std::map<int, SVec>& rows, const SVec& v, std::vector<std::pair<int, RatFunc>>* used) {
  SVec r = v;
  for (const auto& [col, val] : v.entries()) {
    auto it = rows.find(col);
    if (it == rows.end()) continue;
    r.axpy(-val, it->second);
    if (used) used->emplace_back(col, val);
  }
  return r;
}

int choose_pivot(const SVec& r) {
  int best = -1;
  int best_w = 0;
  for (const auto& [col, val] : r.entries()) {
    const int w = val.weight();
    if (best < 0 || w < best_w) {
      best = col;
      best_w = w;
    }
  }
  return best;
}

}  // namespace

bool Echelon::insert(const SVec& v) {
  std::vector<std::pair<int, RatFunc>> used;
  SVec r = eliminate(rows_, v, track_ ? &used : nullptr);
  if (r.empty()) return false;
  const int id = inserted_++;
  SVec combo;
  if (track_) {
    combo = SVec::unit(id);
    for (const auto& [col, val] : used) combo.axpy(-val, combo_.at(col));
  }
  const int p = choose_pivot(r);
  const RatFunc inv = r.get(p).inv();
  r = r.scaled(inv);
  if (track_) combo = combo.scaled(inv);
  for (auto& [col, row] : rows_) {
    RatFunc f = row.get(p);
    if (f.is_zero()) continue;
    row.axpy(-f, r);
    if (track_) combo_[col].axpy(-f, combo);
  }
  rows_.emplace(p, std::move(r));
  if (track_) combo_.emplace(p, std::move(combo));
  return true;
}

SVec Echelon::reduce(const SVec& v) const { return eliminate(rows_, v, nullptr); }

std::optional<SVec> Echelon::express(const SVec& v) const {
  if (!track_) throw std::logic_error("Echelon::express needs tracking");
  std::vector<std::pair<int, RatFunc>> used;
  SVec r = eliminate(rows_, v, &used);
  if (!r.empty()) return std::nullopt;
  SVec c;
  for (const auto& [col, val] : used) c.axpy(val, combo_.at(col));
  return c;
}

std::vector<SVec> Echelon::basis() const {
  std::vector<SVec> b;
  for (const auto& [p, row] : rows_) b.push_back(row);
  return b;
}

std::vector<SVec> kernel(const std::vector<SVec>& equations, int ncols) {
  Echelon e;
  for (const auto& eq : equations)
    if (!eq.empty()) e.insert(eq);
  std::vector<std::vector<std::pair<int, RatFunc>>> by_col(ncols);
  for (const auto& [p, row] : e.rows())
    for (const auto& [col, val] : row.entries())
      if (col != p) by_col[col].emplace_back(p, -val);
  std::vector<SVec> out;
  for (int f = 0; f < ncols; ++f) {
    if (e.rows().count(f)) continue;
    auto entries = by_col[f];
    entries.emplace_back(f, RatFunc(1));
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SVec x;
    for (auto& [i, v] : entries) x.push_back(i, std::move(v));
    out.push_back(std::move(x));
  }
  return out;
}

SpanResult span_dim(const std::vector<SVec>& vectors) {
  Echelon e;
  for (const auto& v : vectors) e.insert(v);
  return SpanResult{e.rank(), e.basis()};
}

SpanResult span_dim(const std::vector<SOp>& ops) {
  std::vector<SVec> flat;
  for (const auto& op : ops) flat.push_back(op.flatten());
  return span_dim(flat);
}

std::vector<SVec> joint_kernel(const std::vector<SOp>& ops) {
  if (ops.empty()) throw std::invalid_argument("joint_kernel needs at least one operator");
  const int d = ops.front().dom()->dim();
  std::vector<SVec> eqs;
  for (const auto& op : ops) {
    SOp t = op.transpose();
    for (int r = 0; r < t.dom()->dim(); ++r)
      if (!t.col(r).empty()) eqs.push_back(t.col(r));
  }
  return kernel(eqs, d);
}

std::vector<SOp> CommutantResult::all() const {
  std::vector<SOp> r = even;
  r.insert(r.end(), odd.begin(), odd.end());
  return r;
}

std::vector<SOp> intertwiners(const std::vector<SOp>& a, const std::vector<SOp>& b, int parity, bool graded) {
  if (a.empty() || a.size() != b.size()) throw std::invalid_argument("intertwiners: mismatched generator lists");
  const SpacePtr& sa = a.front().dom();
  const SpacePtr& sb = b.front().dom();
  const int da = sa->dim();
  const int db = sb->dim();
  // Unknowns are the entries X[i][l] allowed by the parity.
  std::vector<int> var(db * da, -1);
  int nv = 0;
  for (int i = 0; i < db; ++i)
    for (int l = 0; l < da; ++l)
      if (((sb->parity(i) + sa->parity(l) + parity) & 1) == 0) var[i * da + l] = nv++;
  std::vector<SVec> eqs;
  for (size_t k = 0; k < a.size(); ++k) {
    const int s = graded ? sgn(parity * a[k].parity()) : 1;
    std::vector<std::map<int, RatFunc>> acc(db * da);
    // (X a)[i][j] = sum_l X[i][l] a[l][j]
    for (int j = 0; j < da; ++j)
      for (const auto& [l, v] : a[k].col(j).entries())
        for (int i = 0; i < db; ++i) {
          const int x = var[i * da + l];
          if (x >= 0) acc[i * da + j][x] += v;
        }
    // (b X)[i][j] = sum_l b[i][l] X[l][j]
    for (int l = 0; l < db; ++l)
      for (const auto& [i, w] : b[k].col(l).entries())
        for (int j = 0; j < da; ++j) {
          const int x = var[l * da + j];
          if (x >= 0) acc[i * da + j][x] -= s == 1 ? w : -w;
        }
    for (auto& m : acc) {
      SVec row;
      for (auto& [x, v] : m)
        if (!v.is_zero()) row.push_back(x, std::move(v));
      if (!row.empty()) eqs.push_back(std::move(row));
    }
  }
  std::vector<SOp> out;
  for (const auto& sol : kernel(eqs, nv)) {
    SOp x(sa, sb, parity);
    std::vector<int> inv_var(nv);
    for (int t = 0; t < db * da; ++t)
      if (var[t] >= 0) inv_var[var[t]] = t;
    for (const auto& [id, v] : sol.entries()) x.set(inv_var[id] / da, inv_var[id] % da, v);
    out.push_back(std::move(x));
  }
  return out;
}

CommutantResult graded_commutant(const std::vector<SOp>& ops, const SpacePtr& space) {
  CommutantResult r;
  if (ops.empty()) {
    for (int i = 0; i < space->dim(); ++i)
      for (int j = 0; j < space->dim(); ++j) {
        SOp u = SOp::unit(space, i, j);
        (u.parity() ? r.odd : r.even).push_back(u);
      }
    return r;
  }
  r.even = intertwiners(ops, ops, 0);
  r.odd = intertwiners(ops, ops, 1);
  return r;
}

AlgebraImage algebra_image(const std::vector<SOp>& gens, const SpacePtr& space) {
  AlgebraImage img;
  SOp id = SOp::identity(space);
  img.echelon.insert(id.flatten());
  img.ops.push_back(id);
  std::vector<SOp> frontier{id};
  while (!frontier.empty()) {
    std::vector<SOp> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        SOp y = g * x;
        if (img.echelon.insert(y.flatten())) {
          img.ops.push_back(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return img;
}

Subspace closure(const std::vector<SOp>& gens, const std::vector<SVec>& seeds) {
  Subspace s;
  std::vector<SVec> frontier;
  for (const auto& v : seeds)
    if (s.echelon.insert(v)) {
      s.basis.push_back(v);
      frontier.push_back(v);
    }
  while (!frontier.empty()) {
    std::vector<SVec> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        SVec w = g.apply(v);
        if (s.echelon.insert(w)) {
          s.basis.push_back(w);
          next.push_back(w);
        }
      }
    frontier = std::move(next);
  }
  return s;
}

SOp restrict_to(const SOp& op, const Subspace& sub, const SpacePtr& subspace_space) {
  SOp r(subspace_space, subspace_space, op.parity());
  for (int j = 0; j < sub.dim(); ++j) {
    auto c = sub.echelon.express(op.apply(sub.basis[j]));
    if (!c) throw std::logic_error("subspace is not invariant");
    r.set_col(j, std::move(*c));
  }
  return r;
}

SOp inverse(const SOp& a) {
  const int d = a.dom()->dim();
  if (a.cod()->dim() != d) throw std::invalid_argument("inverse of a non-square operator");
  Echelon e(true);
  for (int c = 0; c < d; ++c) e.insert(a.col(c));
  if (e.rank() != d) throw std::domain_error("operator is singular");
  SOp r(a.cod(), a.dom(), a.parity());
  for (int i = 0; i < d; ++i) r.set_col(i, *e.express(SVec::unit(i)));
  return r;
}

}  // namespace qhowe
