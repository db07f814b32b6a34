#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhowe/linalg.hpp"
#include "qhowe/report.hpp"

namespace qhowe {

enum class Param { q, qinv };
Param opposite(Param p);
std::string to_string(Param p);

// U_q(q_n) or U_{q^-1}(q_n).  `base` is the value substituted for q; it is the
// indeterminate itself in exact mode and a random rational in probabilistic mode.
struct AlgebraSpec {
  int n = 1;
  Param param = Param::q;
  RatFunc base = RatFunc::q();

  RatFunc qv() const { return param == Param::q ? base : base.inv(); }
  RatFunc xi() const { return qv() - qv().inv(); }
  AlgebraSpec flipped() const { return AlgebraSpec{n, opposite(param), base}; }
};

enum class Mode { exact, probabilistic };

struct CheckOptions {
  Mode mode = Mode::exact;
  int trials = 5;
  std::uint64_t seed = 1;
};

// Rational points used by probabilistic checks, deterministic in the seed.
std::vector<mpq_class> sample_points(int trials, std::uint64_t seed);

struct NonInvertibleDiagonal : std::domain_error {
  using std::domain_error::domain_error;
};
struct NonDiagonalCartan : std::domain_error {
  using std::domain_error::domain_error;
};

// A representation: an operator for every generator L_ij with i <= j.
// Odd generators may carry a central scalar u with u^2 = odd_unit_sq, so the
// generator acts as u * gens(i,j); relation checks account for it.
struct QueerRep {
  AlgebraSpec spec;
  SpacePtr space;
  std::map<std::pair<int, int>, SOp> gens;
  RatFunc odd_unit_sq = RatFunc(1);

  const SOp& L(int i, int j) const { return gens.at({i, j}); }
  int n() const { return spec.n; }
  // Entrywise image, e.g. a specialization of q.
  QueerRep mapped(const std::function<RatFunc(const RatFunc&)>& f, const AlgebraSpec& target) const;
};

// Generator pairs (i, j) with i <= j in the order of I_{n|n}.
std::vector<std::pair<int, int>> generator_indices(int n);

int phi(int i, int j);
int theta(int i, int j, int k);

SOp s_matrix(const AlgebraSpec& spec);
QueerRep vector_rep(const AlgebraSpec& spec);
// Action of Δ(L_ij) = Σ L_ik ⊗ L_kj on the graded tensor product.
QueerRep tensor_product(const QueerRep& a, const QueerRep& b);
QueerRep tensor_rep(const QueerRep& rep, int m);

struct NamedOp {
  std::string name;
  SOp op;
};

// k_i^{±1}, k̄_i, e_j, f_j, ē_j, f̄_j as operators on one space (index i-1, j-1).
struct ChevalleyOps {
  int n = 0;
  SpacePtr space;
  Param param = Param::q;
  RatFunc qv = RatFunc::q();
  std::vector<SOp> k, kinv, kbar, e, f, ebar, fbar;

  std::vector<NamedOp> named() const;
  std::vector<SOp> all() const;
  std::vector<SOp> raising() const;  // e_j and ē_j
  ChevalleyOps restricted(const SpacePtr& sub, const std::vector<int>& positions) const;
};

ChevalleyOps chevalley_ops(const QueerRep& rep);
// The action table of the Chevalley generators on V, written out entry by entry.
ChevalleyOps chevalley_table(const AlgebraSpec& spec);

// Unit relations and every instance of the expanded quadratic relation.
VerifyReport check_defining_relations(const QueerRep& rep, const CheckOptions& opt = {});

// Operators of S(L_ij) and S^{-1}(L_ij) on the rep's space, by triangular inversion.
std::map<std::pair<int, int>, SOp> antipode(const QueerRep& rep);
std::map<std::pair<int, int>, SOp> antipode_inv(const QueerRep& rep);

// Dual module: <x.f, v> = (-1)^{|x||f|} <f, S(x).v>.
QueerRep dual_rep(const QueerRep& rep);

// Module of the opposite-parameter algebra with x acting as S^{-1}(σ(x)) J^{|x|},
// J the parity operator.
QueerRep sigma_twist(const QueerRep& rep);

using Weight = std::vector<int>;
// Λ⁺ ∩ P⁺: nonnegative, weakly decreasing, equal neighbours only if zero.
bool is_strict_dominant(const Weight& w);
std::string weight_str(const Weight& w);

// Exponent μ with v = qv^μ; throws if v is not such a power.
int q_exponent(const RatFunc& v, const RatFunc& qv);

std::map<Weight, std::vector<int>> weight_spaces(const ChevalleyOps& ops);
// Homogeneous basis of the vectors of weight lambda killed by every e_j and ē_j.
std::vector<SVec> highest_weight_vectors(const ChevalleyOps& ops, const Weight& lambda);
Subspace generate_submodule(const QueerRep& rep, const std::vector<SVec>& seeds);

SOp omega_map(int n);

// Operators at q = 1: h_i = (k_i - 1)/(q - 1) and the odd and root generators.
struct ClassicalOps {
  std::vector<NamedOp> ops;
  const SOp& get(const std::string& name) const;
};
ClassicalOps classical_limit(const ChevalleyOps& ops);

// Specialize every entry at q = c; throws PoleAtPoint naming the context.
SOp specialize_op(const SOp& op, const mpq_class& c, const std::string& what = "");

// Formal combination of words in generators L_ij.
struct GenWord {
  using Word = std::vector<std::pair<int, int>>;
  std::vector<std::pair<RatFunc, Word>> terms;

  static GenWord gen(int i, int j);
  static GenWord one();
  GenWord operator*(const GenWord& o) const;
  GenWord operator+(const GenWord& o) const;
  friend GenWord operator*(const RatFunc& c, const GenWord& w);
  int parity() const;  // of the first term; words are built homogeneous
  SOp eval(const QueerRep& rep) const;
  std::string str() const;
};

}  // namespace qhowe
