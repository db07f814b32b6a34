#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qhowe {

// Parity of an index of I_{n|n}: negative indices are odd.
inline int par(int i) { return i < 0 ? 1 : 0; }
inline int gpar(int i, int j) { return (par(i) + par(j)) & 1; }
inline int sgn(int e) { return (e & 1) ? -1 : 1; }

// I_{n|n} = -n, ..., -1, 1, ..., n in that order.
std::vector<int> index_set(int n);

// Basis label: a word of signed indices, optionally tagged with a name
// (used for dual bases and fixture modules).
struct Label {
  std::string name;
  std::vector<int> word;

  std::string str() const;
  friend bool operator<(const Label& a, const Label& b) {
    return a.name != b.name ? a.name < b.name : a.word < b.word;
  }
  friend bool operator==(const Label& a, const Label& b) { return a.name == b.name && a.word == b.word; }
};

class SuperSpace;
using SpacePtr = std::shared_ptr<const SuperSpace>;

class SuperSpace {
 public:
  SuperSpace(std::vector<Label> labels, std::vector<int> parity);

  static SpacePtr vector_space(int n);
  static SpacePtr named(const std::vector<std::string>& names, const std::vector<int>& parity);
  static SpacePtr tensor(const SpacePtr& a, const SpacePtr& b);
  static SpacePtr tensor_power(const SpacePtr& v, int m);
  static SpacePtr dual(const SpacePtr& v);
  // The span of the given basis positions, as its own space.
  static SpacePtr subspace(const SpacePtr& v, const std::vector<int>& positions);

  int dim() const { return static_cast<int>(labels_.size()); }
  int even_dim() const;
  int odd_dim() const { return dim() - even_dim(); }
  const Label& label(int i) const { return labels_[i]; }
  const std::vector<Label>& labels() const { return labels_; }
  int parity(int i) const { return parity_[i]; }
  int index(const Label& l) const;  // -1 if absent
  int index_of_word(const std::vector<int>& w) const { return index(Label{"", w}); }

  friend bool operator==(const SuperSpace& a, const SuperSpace& b) {
    return a.labels_ == b.labels_ && a.parity_ == b.parity_;
  }

 private:
  std::vector<Label> labels_;
  std::vector<int> parity_;
  std::map<Label, int> index_;
};

bool same_space(const SpacePtr& a, const SpacePtr& b);

}  // namespace qhowe
