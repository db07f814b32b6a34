#include "qhowe/superspace.hpp"

#include <sstream>
#include <stdexcept>

namespace qhowe {

std::vector<int> index_set(int n) {
  std::vector<int> r;
  for (int i = -n; i <= n; ++i)
    if (i != 0) r.push_back(i);
  return r;
}

std::string Label::str() const {
  std::ostringstream os;
  os << name;
  if (!word.empty()) {
    os << "(";
    for (size_t k = 0; k < word.size(); ++k) os << (k ? "," : "") << word[k];
    os << ")";
  }
  return os.str();
}

SuperSpace::SuperSpace(std::vector<Label> labels, std::vector<int> parity)
    : labels_(std::move(labels)), parity_(std::move(parity)) {
  if (labels_.size() != parity_.size()) throw std::invalid_argument("label/parity size mismatch");
  for (int i = 0; i < dim(); ++i) {
    if (!index_.emplace(labels_[i], i).second)
      throw std::invalid_argument("duplicate basis label " + labels_[i].str());
    parity_[i] &= 1;
  }
}

int SuperSpace::even_dim() const {
  int e = 0;
  for (int p : parity_) e += p == 0;
  return e;
}

int SuperSpace::index(const Label& l) const {
  auto it = index_.find(l);
  return it == index_.end() ? -1 : it->second;
}

SpacePtr SuperSpace::vector_space(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<Label> labels;
  std::vector<int> parity;
  for (int i : index_set(n)) {
    labels.push_back(Label{"", {i}});
    parity.push_back(par(i));
  }
  return std::make_shared<SuperSpace>(std::move(labels), std::move(parity));
}

SpacePtr SuperSpace::named(const std::vector<std::string>& names, const std::vector<int>& parity) {
  std::vector<Label> labels;
  for (const auto& s : names) labels.push_back(Label{s, {}});
  return std::make_shared<SuperSpace>(std::move(labels), parity);
}

SpacePtr SuperSpace::tensor(const SpacePtr& a, const SpacePtr& b) {
  std::vector<Label> labels;
  std::vector<int> parity;
  labels.reserve(a->dim() * b->dim());
  for (int i = 0; i < a->dim(); ++i) {
    for (int j = 0; j < b->dim(); ++j) {
      const Label& x = a->label(i);
      const Label& y = b->label(j);
      Label l;
      if (x.name.empty() && y.name.empty()) {
        l.word = x.word;
        l.word.insert(l.word.end(), y.word.begin(), y.word.end());
      } else {
        l.name = x.str() + "|" + y.str();
      }
      labels.push_back(std::move(l));
      parity.push_back((a->parity(i) + b->parity(j)) & 1);
    }
  }
  return std::make_shared<SuperSpace>(std::move(labels), std::move(parity));
}

SpacePtr SuperSpace::tensor_power(const SpacePtr& v, int m) {
  if (m < 1) throw std::invalid_argument("tensor power must be >= 1");
  SpacePtr r = v;
  for (int k = 1; k < m; ++k) r = tensor(r, v);
  return r;
}

SpacePtr SuperSpace::dual(const SpacePtr& v) {
  std::vector<Label> labels;
  std::vector<int> parity;
  for (int i = 0; i < v->dim(); ++i) {
    Label l = v->label(i);
    l.name = "*" + l.name;
    labels.push_back(std::move(l));
    parity.push_back(v->parity(i));
  }
  return std::make_shared<SuperSpace>(std::move(labels), std::move(parity));
}

SpacePtr SuperSpace::subspace(const SpacePtr& v, const std::vector<int>& positions) {
  std::vector<Label> labels;
  std::vector<int> parity;
  for (int p : positions) {
    labels.push_back(v->label(p));
    parity.push_back(v->parity(p));
  }
  return std::make_shared<SuperSpace>(std::move(labels), std::move(parity));
}

bool same_space(const SpacePtr& a, const SpacePtr& b) { return a == b || *a == *b; }

}  // namespace qhowe
