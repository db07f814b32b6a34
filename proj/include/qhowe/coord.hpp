#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhowe/hecke.hpp"

namespace qhowe {

struct DegreeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// t_{a1,b1} ... t_{al,bl}.
struct CoordMonomial {
  std::vector<int> a, b;

  int degree() const { return static_cast<int>(a.size()); }
  int parity() const;
  // Every column index made positive through t_ab = t_{-a,-b}.
  CoordMonomial normalized() const;
  std::string str() const;  // "t[a1,b1]t[a2,b2]..."

  friend bool operator<(const CoordMonomial& x, const CoordMonomial& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
  friend bool operator==(const CoordMonomial& x, const CoordMonomial& y) { return x.a == y.a && x.b == y.b; }
};

// Sign relating a monomial to the matrix coefficient of its word pair:
// <t(a,b), y> = (-1)^{Σ_{j<k} |a_j|(|a_k|+|b_k|)} y[(a),(b)].
int monomial_sign(const std::vector<int>& a, const std::vector<int>& b);

// Linear combination of monomials of one degree.
class CoordFunctional {
 public:
  explicit CoordFunctional(int degree = 0) : degree_(degree) {}
  static CoordFunctional one();
  static CoordFunctional t(int a, int b);
  static CoordFunctional monomial(const CoordMonomial& mono, const RatFunc& c = RatFunc(1));

  int degree() const { return degree_; }
  const std::map<CoordMonomial, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Parity of the first term; -1 when zero.
  int parity() const;
  void add(const CoordMonomial& mono, const RatFunc& c);

  CoordFunctional operator-() const;
  friend CoordFunctional operator+(const CoordFunctional& f, const CoordFunctional& g);
  friend CoordFunctional operator-(const CoordFunctional& f, const CoordFunctional& g);
  friend CoordFunctional operator*(const RatFunc& c, const CoordFunctional& f);
  // Product: concatenation of monomials.
  friend CoordFunctional operator*(const CoordFunctional& f, const CoordFunctional& g);
  std::string str() const;

 private:
  int degree_;
  std::map<CoordMonomial, RatFunc> terms_;
};

CoordFunctional product(const CoordFunctional& f, const CoordFunctional& g);

// Span of the action of U(q_n) on V^{⊗l}, grown from the identity by left
// multiplication with the generators until stable.
struct OperatorImageBasis {
  int n = 1;
  int degree = 1;
  Param param = Param::q;
  QueerRep rep;
  AlgebraImage image;

  int dim() const { return image.dim(); }
  const SpacePtr& space() const { return rep.space; }
};
OperatorImageBasis operator_image_basis(int n, int l, Param param = Param::q);

// Value on an operator of V^{⊗l} (word basis), or on a word evaluated in a tensor rep.
RatFunc eval_functional(const CoordFunctional& f, const SOp& y);
RatFunc eval_functional(const CoordFunctional& f, const GenWord& w, const QueerRep& tensor);

// Values on the image basis; two functionals agree iff these agree.
SVec value_vector(const CoordFunctional& f, const OperatorImageBasis& basis);
bool functional_equal(const CoordFunctional& f, const CoordFunctional& g, const OperatorImageBasis& basis);

enum class CoordAction { Phi, Psi, PsiTilde };
std::string to_string(CoordAction a);

// Φ_x, Ψ_x (x in U_q) or Ψ̃_x (x in U_{q^-1}, through σ), on a functional of the
// basis degree.  Words are evaluated in basis.rep.
CoordFunctional act(CoordAction label, const GenWord& x, const CoordFunctional& f, const OperatorImageBasis& basis);

// Φ-zero-weight test of a monomial for U_q(q_m): every k_j acts by q.
bool is_phi_zero_weight(const CoordMonomial& mono, int m);

struct GradedComponent {
  int n = 1, m = 1, degree = 0;
  int dim = 0;
  std::vector<CoordMonomial> independent;
  // Tracked echelon of the value vectors of `independent` (degree >= 1).
  Echelon echelon{true};
};
// Normalized monomials a_i in I_{n|n}, 1 <= b_1 <= ... <= b_l <= m, reduced to an
// independent family against the image basis of rank max(n, m).
GradedComponent graded_component(int n, int m, int l);
GradedComponent graded_component(int n, int m, const OperatorImageBasis& basis);

// Matrix of an action on a graded component, in the basis of its independent family.
SOp component_action(CoordAction label, const GenWord& x, const GradedComponent& comp,
                     const OperatorImageBasis& basis, const SpacePtr& comp_space);
SpacePtr component_space(const GradedComponent& comp);

// t_ab = t_{-a,-b} for all a, b in I_{n|n}.
VerifyReport qca1_check(int n);
// Entry identities of S^{12} T^{13} T^{23} = T^{23} T^{13} S^{12} at degree 2.
VerifyReport qca2_check(int n);
// eval(t_ab, w1 w2) against Σ_c of products over words; `signed_form` selects
// whether the coproduct carries (-1)^{(|a|+|c|)(|c|+|b|)}.
VerifyReport delta_circ_check(int n, int samples, std::uint64_t seed, bool signed_form = true);
// τ_{ω̃(ũ), ω(v)} = -(-1)^{|ũ|} τ_{ũ, v} on V.
VerifyReport omega_twist_check(int n);
// Φ and Ψ̃ supercommute, Φ and Ψ̃ (with √-1 on odd generators) are representations,
// on the degree-l component of A_q(q_n, q_m).
VerifyReport coord_actions_check(int n, int m, int l);

// The map v_{a1} ⊗ ... ⊗ v_{am} -> t_{a1,1} ... t_{am,m}.
VerifyReport zero_weight_iso(int n, int m);

}  // namespace qhowe
