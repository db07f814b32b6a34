#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhowe/coord.hpp"

namespace qhowe {

struct StrictPartition {
  std::vector<int> parts;

  int length() const { return static_cast<int>(parts.size()); }
  int size() const;
  std::string str() const;
  // Padded with zeros to n entries.
  Weight as_weight(int n) const;
  friend bool operator==(const StrictPartition& a, const StrictPartition& b) { return a.parts == b.parts; }
};

// Strict partitions of `size` with at most max_len parts, lexicographically sorted.
std::vector<StrictPartition> enumerate_strict_partitions(int size, int max_len);

struct CensusEntry {
  StrictPartition lambda;
  int hwv_dim = 0;           // all highest weight vectors of weight λ
  int hwv_in_submodule = 0;  // those inside the submodule generated by one of them
  int submodule_dim = 0;
  int copies = 0;            // hwv_dim / hwv_in_submodule
  int end_even = 0, end_odd = 0;
  // The generated submodule is k copies of an irreducible of type M (End dim k^2)
  // or of type Q (End dim 2k^2) over an algebraic closure.
  int closure_multiplicity = 0;
  int irreducible_dim = 0;
  char predicted_type = 'M';  // from the parity of ℓ(λ)
  std::string detected_type;  // "M", "Q" or "?"
  std::string odd_square;     // J^2 = c for the odd endomorphism when End is 1|1
  std::map<Weight, int> weight_multiplicities;  // of the generated submodule
  bool type_match() const { return detected_type.size() == 1 && detected_type[0] == predicted_type; }
};

struct IsotypicCensus {
  int n = 1, m = 1;
  int total_dim = 0;
  std::vector<CensusEntry> entries;
  std::vector<Weight> hwv_weights;  // weights carrying a highest weight vector
  std::vector<Weight> candidates;   // strict partitions of m with ℓ <= n
  int census_sum() const;
  bool closes() const { return census_sum() == total_dim; }
  bool weights_match() const { return hwv_weights == candidates; }
  const CensusEntry& at(const StrictPartition& lambda) const;
};

IsotypicCensus isotypic_census(int n, int m);
VerifyReport census_verify(int n, int m);

// Graded commutators of every Chevalley operator with every HC generator on V^{⊗m}.
VerifyReport supercommutation_check(int n, int m);

// Supercommutation, span(HC words) = graded commutant of the queer image,
// bicommutant and census closure on V^{⊗m}.
VerifyReport sergeev_verify(int n, int m, const CheckOptions& opt = {});

// Graded dimensions of A_q(q_n, q_m) against Σ_λ dim L_n(λ) dim L_m(λ) 2^{-[ℓ odd]}.
VerifyReport howe_verify(int n, int m, int l_max);

// The 8-dimensional module with basis u0, u1, u2, w, ū0, ū1, ū2, w̄ for the rank-2
// algebra.  `corrected` replaces the f̄ image of u0 by ū1/(q+q^-1) + w̄.
ChevalleyOps fixture_module(bool corrected = true);
VerifyReport fixture_verify(bool corrected = true);

// Everything at q = 1: signed swaps, Clifford operators, the Sergeev relations,
// supercommutation, census and the weights of (k_i - 1)/(q - 1).
VerifyReport classical_crosscheck(int n, int m);

}  // namespace qhowe
