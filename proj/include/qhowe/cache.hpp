#pragma once

#include <filesystem>
#include <string>

#include "qhowe/hecke.hpp"
#include "qhowe/report.hpp"

namespace qhowe {

inline constexpr int kCacheFormatVersion = 1;

// {domain, domain_parity, codomain, codomain_parity, parity, entries: [[row, col, f]]}
// with labels as strings and entries sorted by (row label, column label).
json op_to_json(const SOp& op);
// Spaces are rebuilt from the labels unless supplied.
SOp op_from_json(const json& j, SpacePtr dom = nullptr, SpacePtr cod = nullptr);

Label parse_label(const std::string& s);
json space_to_json(const SpacePtr& v);
SpacePtr space_from_json(const json& j);

// File-backed store of generator matrices for tensor powers of V.  An empty
// directory path disables it; only the indeterminate (exact) base is cached.
class OperatorCache {
 public:
  OperatorCache() = default;
  explicit OperatorCache(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }
  QueerRep tensor_rep(const AlgebraSpec& spec, int m);
  HCAction hc_action(const AlgebraSpec& spec, int m);

  int hits() const { return hits_; }
  int misses() const { return misses_; }
  std::filesystem::path rep_path(const AlgebraSpec& spec, int m) const;
  std::filesystem::path hc_path(const AlgebraSpec& spec, int m) const;

 private:
  bool usable(const AlgebraSpec& spec) const;
  std::filesystem::path dir_;
  int hits_ = 0, misses_ = 0;
};

}  // namespace qhowe
