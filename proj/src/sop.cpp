#include "qhowe/sop.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhowe {

SOp::SOp(SpacePtr dom, SpacePtr cod, int parity)
    : dom_(std::move(dom)), cod_(std::move(cod)), parity_(parity & 1), cols_(dom_->dim()) {}

SOp SOp::identity(const SpacePtr& v) { return scalar(v, RatFunc(1)); }

SOp SOp::scalar(const SpacePtr& v, const RatFunc& c) {
  SOp r(v, v, 0);
  if (c.is_zero()) return r;
  for (int i = 0; i < v->dim(); ++i) r.cols_[i] = SVec::unit(i, c);
  return r;
}

SOp SOp::unit(const SpacePtr& v, int row, int col) {
  SOp r(v, v, v->parity(row) + v->parity(col));
  r.cols_[col] = SVec::unit(row);
  return r;
}

bool SOp::is_zero() const {
  for (const auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

size_t SOp::nnz() const {
  size_t n = 0;
  for (const auto& c : cols_) n += c.nnz();
  return n;
}

void SOp::set(int row, int col, const RatFunc& v) {
  if (!v.is_zero() && ((cod_->parity(row) + dom_->parity(col) + parity_) & 1))
    throw std::logic_error("entry violates operator parity");
  cols_[col].set(row, v);
}

void SOp::add(int row, int col, const RatFunc& v) {
  if (!v.is_zero() && ((cod_->parity(row) + dom_->parity(col) + parity_) & 1))
    throw std::logic_error("entry violates operator parity");
  cols_[col].add(row, v);
}

void SOp::set_col(int c, SVec v) {
  for (const auto& [r, x] : v.entries())
    if ((cod_->parity(r) + dom_->parity(c) + parity_) & 1) throw std::logic_error("column violates operator parity");
  cols_[c] = std::move(v);
}

SVec SOp::apply(const SVec& x) const {
  SVec r;
  for (const auto& [i, v] : x.entries()) r.axpy(v, cols_[i]);
  return r;
}

SOp SOp::operator-() const {
  SOp r = *this;
  for (auto& c : r.cols_) c = c.scaled(RatFunc(-1));
  return r;
}

namespace {
int combined_parity(const SOp& a, const SOp& b) {
  if (a.parity() == b.parity()) return a.parity();
  if (a.is_zero()) return b.parity();
  if (b.is_zero()) return a.parity();
  throw std::logic_error("adding operators of different parity");
}
}  // namespace

SOp operator+(const SOp& a, const SOp& b) {
  SOp r(a.dom_, a.cod_, combined_parity(a, b));
  for (size_t c = 0; c < a.cols_.size(); ++c) r.cols_[c] = a.cols_[c] + b.cols_[c];
  return r;
}

SOp operator-(const SOp& a, const SOp& b) {
  SOp r(a.dom_, a.cod_, combined_parity(a, b));
  for (size_t c = 0; c < a.cols_.size(); ++c) r.cols_[c] = a.cols_[c] - b.cols_[c];
  return r;
}

SOp operator*(const SOp& a, const SOp& b) {
  if (a.dom_->dim() != b.cod_->dim()) throw std::logic_error("operator dimension mismatch");
  SOp r(b.dom_, a.cod_, a.parity_ + b.parity_);
  for (size_t c = 0; c < b.cols_.size(); ++c) r.cols_[c] = a.apply(b.cols_[c]);
  return r;
}

SOp operator*(const RatFunc& c, const SOp& a) {
  SOp r(a.dom_, a.cod_, a.parity_);
  if (c.is_zero()) return r;
  for (size_t k = 0; k < a.cols_.size(); ++k) r.cols_[k] = a.cols_[k].scaled(c);
  return r;
}

bool operator==(const SOp& a, const SOp& b) {
  if (a.cols_.size() != b.cols_.size()) return false;
  for (size_t c = 0; c < a.cols_.size(); ++c)
    if (a.cols_[c] != b.cols_[c]) return false;
  return true;
}

SOp SOp::pow(int k) const {
  SOp r = identity(dom_);
  for (int i = 0; i < k; ++i) r = *this * r;
  return r;
}

SOp SOp::transpose() const {
  SOp r(cod_, dom_, parity_);
  for (size_t c = 0; c < cols_.size(); ++c)
    for (const auto& [row, v] : cols_[c].entries()) r.cols_[row].push_back(static_cast<int>(c), v);
  return r;
}

SOp SOp::map_entries(const std::function<RatFunc(const RatFunc&)>& f) const {
  SOp r(dom_, cod_, parity_);
  for (size_t c = 0; c < cols_.size(); ++c)
    for (const auto& [row, v] : cols_[c].entries()) {
      RatFunc w = f(v);
      if (!w.is_zero()) r.cols_[c].push_back(row, std::move(w));
    }
  return r;
}

SOp SOp::restrict(const SpacePtr& dom, const std::vector<int>& col_pos, const SpacePtr& cod,
                  const std::vector<int>& row_pos) const {
  std::vector<int> row_map(cod_->dim(), -1);
  for (size_t k = 0; k < row_pos.size(); ++k) row_map[row_pos[k]] = static_cast<int>(k);
  SOp r(dom, cod, parity_);
  for (size_t k = 0; k < col_pos.size(); ++k)
    for (const auto& [row, v] : cols_[col_pos[k]].entries())
      if (row_map[row] >= 0) r.cols_[k].add(row_map[row], v);
  return r;
}

SVec SOp::flatten() const {
  SVec r;
  const int d = dom_->dim();
  std::vector<std::pair<int, RatFunc>> tmp;
  for (size_t c = 0; c < cols_.size(); ++c)
    for (const auto& [row, v] : cols_[c].entries()) tmp.emplace_back(row * d + static_cast<int>(c), v);
  std::sort(tmp.begin(), tmp.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [i, v] : tmp) r.push_back(i, std::move(v));
  return r;
}

std::vector<std::pair<std::pair<int, int>, RatFunc>> SOp::entries() const {
  std::vector<std::pair<std::pair<int, int>, RatFunc>> r;
  for (size_t c = 0; c < cols_.size(); ++c)
    for (const auto& [row, v] : cols_[c].entries()) r.push_back({{row, static_cast<int>(c)}, v});
  std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return r;
}

std::pair<int, int> SOp::first_entry() const {
  for (size_t c = 0; c < cols_.size(); ++c)
    if (!cols_[c].empty()) return {cols_[c].entries().front().first, static_cast<int>(c)};
  return {-1, -1};
}

SOp graded_tensor(const SOp& a, const SOp& b, SpacePtr dom, SpacePtr cod) {
  if (!dom) dom = SuperSpace::tensor(a.dom(), b.dom());
  if (!cod) cod = same_space(a.dom(), a.cod()) && same_space(b.dom(), b.cod()) ? dom : SuperSpace::tensor(a.cod(), b.cod());
  SOp r(dom, cod, a.parity() + b.parity());
  const int db = b.dom()->dim();
  const int cb = b.cod()->dim();
  for (int u = 0; u < a.dom()->dim(); ++u) {
    const bool flip = b.parity() && a.dom()->parity(u);
    for (int w = 0; w < db; ++w) {
      SVec col;
      for (const auto& [ra, va] : a.col(u).entries())
        for (const auto& [rb, vb] : b.col(w).entries()) {
          RatFunc v = va * vb;
          col.push_back(ra * cb + rb, flip ? -v : v);
        }
      r.set_col(u * db + w, std::move(col));
    }
  }
  return r;
}

SOp supercommutator(const SOp& a, const SOp& b) {
  SOp ab = a * b;
  SOp ba = b * a;
  return (a.parity() & b.parity()) ? ab + ba : ab - ba;
}

SOp parity_operator(const SpacePtr& v) {
  SOp r(v, v, 0);
  for (int i = 0; i < v->dim(); ++i) r.set(i, i, RatFunc(sgn(v->parity(i))));
  return r;
}

}  // namespace qhowe
