#pragma once

#include "qhowe/queer.hpp"

namespace qhowe {

// Operators T_1..T_{m-1} (even) and C_1..C_m (odd) on a space, meant to satisfy
// the relations of HC_p(m) with p = qv.  The Clifford generators are u*C_b for a
// central scalar u with u^2 = clifford_unit_sq, so HC4 reads u^2 C_b^2 = 1.
struct HCAction {
  int m = 1;
  Param param = Param::q;
  RatFunc qv = RatFunc::q();
  SpacePtr space;
  std::vector<SOp> T, C;
  RatFunc clifford_unit_sq = RatFunc(1);

  std::vector<SOp> generators() const;
};

struct EmptyZeroWeight : std::domain_error {
  using std::domain_error::domain_error;
};

// The action on V^{⊗m} transcribed from its defining formulas.
// `space` may be given to share the word basis of an existing tensor power.
HCAction hc_tensor_action(const AlgebraSpec& spec, int m, SpacePtr space = nullptr);

// Σ (-1)^j q^{k(k-j)-i(i-j+k)+j-1} e^{(i)} f^{(j)} e^{(k)} k_a^{k-i} k_{a+1}^{i-k}, a is 1-based.
SOp braid_operator(const ChevalleyOps& ops, int a);

// Braid operators and C_b = k̄_b on the weight (1,...,1) block, with the opposite parameter.
HCAction zero_weight_hc(const ChevalleyOps& ops);

// HC1..HC7 as operator identities for the action's parameter.
VerifyReport hc_check(const HCAction& action);
// Same operators checked against HC_p for p = qv (the given value of the parameter).
VerifyReport hc_check_with(const HCAction& action, const RatFunc& qv);

HCAction specialize_action(const HCAction& action, const mpq_class& c);

}  // namespace qhowe
