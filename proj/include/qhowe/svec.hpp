#pragma once

#include <utility>
#include <vector>

#include "qhowe/ratfunc.hpp"

namespace qhowe {

// Sparse vector over Q(q): entries sorted by index, no explicit zeros.
class SVec {
 public:
  using Entry = std::pair<int, RatFunc>;

  SVec() = default;
  static SVec unit(int i, RatFunc v = RatFunc(1));

  bool empty() const { return e_.empty(); }
  size_t nnz() const { return e_.size(); }
  const std::vector<Entry>& entries() const { return e_; }
  RatFunc get(int i) const;
  void set(int i, const RatFunc& v);
  void add(int i, const RatFunc& v);

  // this += a * x
  void axpy(const RatFunc& a, const SVec& x);
  SVec scaled(const RatFunc& a) const;
  SVec map(RatFunc (*f)(const RatFunc&)) const;

  friend bool operator==(const SVec& a, const SVec& b) { return a.e_ == b.e_; }
  friend bool operator!=(const SVec& a, const SVec& b) { return !(a == b); }
  friend SVec operator+(const SVec& a, const SVec& b);
  friend SVec operator-(const SVec& a, const SVec& b);

  // Appends assuming strictly increasing index; for bulk construction.
  void push_back(int i, RatFunc v) { e_.emplace_back(i, std::move(v)); }

 private:
  std::vector<Entry> e_;
};

}  // namespace qhowe
