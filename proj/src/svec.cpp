#include "qhowe/svec.hpp"

#include <algorithm>

namespace qhowe {

SVec SVec::unit(int i, RatFunc v) {
  SVec s;
  if (!v.is_zero()) s.e_.emplace_back(i, std::move(v));
  return s;
}

RatFunc SVec::get(int i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& a, int k) { return a.first < k; });
  if (it != e_.end() && it->first == i) return it->second;
  return RatFunc();
}

void SVec::set(int i, const RatFunc& v) {
  auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& a, int k) { return a.first < k; });
  if (it != e_.end() && it->first == i) {
    if (v.is_zero())
      e_.erase(it);
    else
      it->second = v;
  } else if (!v.is_zero()) {
    e_.insert(it, Entry(i, v));
  }
}

void SVec::add(int i, const RatFunc& v) {
  if (v.is_zero()) return;
  auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& a, int k) { return a.first < k; });
  if (it != e_.end() && it->first == i) {
    it->second += v;
    if (it->second.is_zero()) e_.erase(it);
  } else {
    e_.insert(it, Entry(i, v));
  }
}

void SVec::axpy(const RatFunc& a, const SVec& x) {
  if (a.is_zero() || x.e_.empty()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + x.e_.size());
  auto i = e_.begin();
  auto j = x.e_.begin();
  while (i != e_.end() || j != x.e_.end()) {
    if (j == x.e_.end() || (i != e_.end() && i->first < j->first)) {
      out.push_back(std::move(*i));
      ++i;
    } else if (i == e_.end() || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      RatFunc v = i->second + a * j->second;
      if (!v.is_zero()) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  e_ = std::move(out);
}

SVec SVec::scaled(const RatFunc& a) const {
  SVec r;
  if (a.is_zero()) return r;
  r.e_.reserve(e_.size());
  for (const auto& [i, v] : e_) r.e_.emplace_back(i, a * v);
  return r;
}

SVec SVec::map(RatFunc (*f)(const RatFunc&)) const {
  SVec r;
  for (const auto& [i, v] : e_) {
    RatFunc w = f(v);
    if (!w.is_zero()) r.e_.emplace_back(i, std::move(w));
  }
  return r;
}

SVec operator+(const SVec& a, const SVec& b) {
  SVec r = a;
  r.axpy(RatFunc(1), b);
  return r;
}

SVec operator-(const SVec& a, const SVec& b) {
  SVec r = a;
  r.axpy(RatFunc(-1), b);
  return r;
}

}  // namespace qhowe
