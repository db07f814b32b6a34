#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qhowe/superspace.hpp"
#include "qhowe/svec.hpp"

namespace qhowe {

// Parity-homogeneous sparse linear map between super spaces, stored by columns.
class SOp {
 public:
  SOp() = default;
  SOp(SpacePtr dom, SpacePtr cod, int parity);

  static SOp zero(const SpacePtr& dom, const SpacePtr& cod, int parity = 0) { return SOp(dom, cod, parity); }
  static SOp identity(const SpacePtr& v);
  static SOp scalar(const SpacePtr& v, const RatFunc& c);
  // Matrix unit E_{row,col}.
  static SOp unit(const SpacePtr& v, int row, int col);

  const SpacePtr& dom() const { return dom_; }
  const SpacePtr& cod() const { return cod_; }
  int parity() const { return parity_; }
  bool is_zero() const;
  size_t nnz() const;

  RatFunc get(int row, int col) const { return cols_[col].get(row); }
  void set(int row, int col, const RatFunc& v);
  void add(int row, int col, const RatFunc& v);
  const SVec& col(int c) const { return cols_[c]; }
  void set_col(int c, SVec v);

  SVec apply(const SVec& x) const;

  SOp operator-() const;
  friend SOp operator+(const SOp& a, const SOp& b);
  friend SOp operator-(const SOp& a, const SOp& b);
  friend SOp operator*(const SOp& a, const SOp& b);  // composition a∘b
  friend SOp operator*(const RatFunc& c, const SOp& a);
  friend bool operator==(const SOp& a, const SOp& b);
  friend bool operator!=(const SOp& a, const SOp& b) { return !(a == b); }

  SOp pow(int k) const;
  SOp transpose() const;  // plain transpose, codomain and domain exchanged
  SOp map_entries(const std::function<RatFunc(const RatFunc&)>& f) const;
  // Submatrix on the given row and column positions of codomain and domain.
  SOp restrict(const SpacePtr& dom, const std::vector<int>& col_pos, const SpacePtr& cod,
               const std::vector<int>& row_pos) const;
  // Flattened row-major vector, index row*dom_dim + col.
  SVec flatten() const;
  std::vector<std::pair<std::pair<int, int>, RatFunc>> entries() const;
  // Row and column of the first nonzero entry, or (-1,-1).
  std::pair<int, int> first_entry() const;

 private:
  SpacePtr dom_, cod_;
  int parity_ = 0;
  std::vector<SVec> cols_;
};

// (A ⊗ B)(u ⊗ w) = (-1)^{|B||u|} A(u) ⊗ B(w).
// Spaces may be supplied to share them across many products.
SOp graded_tensor(const SOp& a, const SOp& b, SpacePtr dom = nullptr, SpacePtr cod = nullptr);
// Graded commutator [a, b] = ab - (-1)^{|a||b|} ba.
SOp supercommutator(const SOp& a, const SOp& b);
// Parity operator (-1)^{|v|} on a space.
SOp parity_operator(const SpacePtr& v);

}  // namespace qhowe
