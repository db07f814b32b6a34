#include "qhowe/coord.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>

namespace qhowe {

int CoordMonomial::parity() const {
  int p = 0;
  for (int x : a) p += par(x);
  for (int x : b) p += par(x);
  return p & 1;
}

CoordMonomial CoordMonomial::normalized() const {
  CoordMonomial r = *this;
  for (size_t k = 0; k < b.size(); ++k)
    if (r.b[k] < 0) {
      r.a[k] = -r.a[k];
      r.b[k] = -r.b[k];
    }
  return r;
}

std::string CoordMonomial::str() const {
  if (a.empty()) return "1";
  std::ostringstream os;
  for (size_t k = 0; k < a.size(); ++k) os << "t[" << a[k] << "," << b[k] << "]";
  return os.str();
}

int monomial_sign(const std::vector<int>& a, const std::vector<int>& b) {
  int e = 0;
  for (size_t j = 0; j < a.size(); ++j)
    for (size_t k = j + 1; k < a.size(); ++k) e += par(a[j]) * (par(a[k]) + par(b[k]));
  return sgn(e);
}

CoordFunctional CoordFunctional::one() { return monomial(CoordMonomial{}); }

CoordFunctional CoordFunctional::t(int a, int b) { return monomial(CoordMonomial{{a}, {b}}); }

CoordFunctional CoordFunctional::monomial(const CoordMonomial& mono, const RatFunc& c) {
  CoordFunctional f(mono.degree());
  f.add(mono, c);
  return f;
}

int CoordFunctional::parity() const { return terms_.empty() ? -1 : terms_.begin()->first.parity(); }

void CoordFunctional::add(const CoordMonomial& mono, const RatFunc& c) {
  if (mono.degree() != degree_) throw DegreeMismatch("monomial " + mono.str() + " has the wrong degree");
  if (c.is_zero()) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CoordFunctional CoordFunctional::operator-() const { return RatFunc(-1) * *this; }

CoordFunctional operator+(const CoordFunctional& f, const CoordFunctional& g) {
  if (f.degree() != g.degree()) throw DegreeMismatch("sum of functionals of different degrees");
  CoordFunctional r = f;
  for (const auto& [m, c] : g.terms()) r.add(m, c);
  return r;
}

CoordFunctional operator-(const CoordFunctional& f, const CoordFunctional& g) { return f + (-g); }

CoordFunctional operator*(const RatFunc& c, const CoordFunctional& f) {
  CoordFunctional r(f.degree());
  for (const auto& [m, v] : f.terms()) r.add(m, c * v);
  return r;
}

CoordFunctional operator*(const CoordFunctional& f, const CoordFunctional& g) {
  CoordFunctional r(f.degree() + g.degree());
  for (const auto& [m1, c1] : f.terms())
    for (const auto& [m2, c2] : g.terms()) {
      CoordMonomial m = m1;
      m.a.insert(m.a.end(), m2.a.begin(), m2.a.end());
      m.b.insert(m.b.end(), m2.b.begin(), m2.b.end());
      r.add(m, c1 * c2);
    }
  return r;
}

CoordFunctional product(const CoordFunctional& f, const CoordFunctional& g) { return f * g; }

std::string CoordFunctional::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*" << m.str();
  }
  return os.str();
}

namespace {

// Functional as trace pairing y -> Σ M[r][c] y[r][c] on the word basis.
using CoeffMatrix = std::map<std::pair<int, int>, RatFunc>;

int word_index(const SpacePtr& s, const std::vector<int>& w) {
  const int i = s->index_of_word(w);
  if (i < 0) {
    std::ostringstream os;
    os << "word (";
    for (size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k];
    os << ") is not a basis word of the evaluation space";
    throw std::out_of_range(os.str());
  }
  return i;
}

int word_degree(const SpacePtr& s) { return static_cast<int>(s->label(0).word.size()); }

CoeffMatrix to_coeff(const CoordFunctional& f, const SpacePtr& s) {
  CoeffMatrix m;
  for (const auto& [mono, c] : f.terms()) {
    RatFunc& e = m[{word_index(s, mono.a), word_index(s, mono.b)}];
    e += RatFunc(monomial_sign(mono.a, mono.b)) * c;
  }
  return m;
}

CoordFunctional from_coeff(const CoeffMatrix& m, const SpacePtr& s) {
  CoordFunctional f(word_degree(s));
  for (const auto& [rc, v] : m) {
    CoordMonomial mono{s->label(rc.first).word, s->label(rc.second).word};
    f.add(mono, RatFunc(monomial_sign(mono.a, mono.b)) * v);
  }
  return f;
}

// M -> M Y^T.
CoordFunctional apply_columns(const CoordFunctional& f, const SOp& y) {
  const SpacePtr& s = y.dom();
  CoeffMatrix out;
  for (const auto& [rc, v] : to_coeff(f, s))
    for (const auto& [r2, x] : y.col(rc.second).entries()) out[{rc.first, r2}] += v * x;
  return from_coeff(out, s);
}

// M -> Y^T M with (-1)^{|y| |entry|} on each entry of M.
CoordFunctional apply_rows(const CoordFunctional& f, const SOp& y) {
  const SpacePtr& s = y.dom();
  const SOp yt = y.transpose();
  CoeffMatrix out;
  for (const auto& [rc, v] : to_coeff(f, s)) {
    const int ep = (s->parity(rc.first) + s->parity(rc.second)) & 1;
    const RatFunc sv = RatFunc(sgn(ep * y.parity())) * v;
    for (const auto& [r2, x] : yt.col(rc.first).entries()) out[{r2, rc.second}] += sv * x;
  }
  return from_coeff(out, s);
}

// S(x) for x a combination of words: S(g1...gk) = ± S(gk)...S(g1).
SOp antipode_word(const GenWord& x, const QueerRep& rep) {
  const auto s = antipode(rep);
  SOp sum(rep.space, rep.space, x.parity());
  for (const auto& [c, w] : x.terms) {
    SOp y = SOp::identity(rep.space);
    int e = 0;
    for (size_t k = 0; k < w.size(); ++k) {
      y = s.at(w[k]) * y;
      for (size_t l = k + 1; l < w.size(); ++l) e += gpar(w[k].first, w[k].second) * gpar(w[l].first, w[l].second);
    }
    sum = sum + (RatFunc(sgn(e)) * c) * y;
  }
  return sum;
}

// σ(L_ij) = (-1)^{|i||j|+|j|} L_{-j,-i}, extended as an anti-homomorphism.
SOp sigma_word(const GenWord& x, const QueerRep& rep) {
  SOp sum(rep.space, rep.space, x.parity());
  for (const auto& [c, w] : x.terms) {
    SOp y = SOp::identity(rep.space);
    for (auto [i, j] : w) y = (RatFunc(sgn(par(i) * par(j) + par(j))) * rep.L(-j, -i)) * y;
    sum = sum + c * y;
  }
  return sum;
}

RatFunc counit(const GenWord& w) {
  RatFunc r;
  for (const auto& [c, word] : w.terms) {
    bool diag = std::all_of(word.begin(), word.end(), [](auto p) { return p.first == p.second; });
    if (diag) r += c;
  }
  return r;
}

std::vector<std::vector<int>> all_words(const std::vector<int>& letters, int l) {
  std::vector<std::vector<int>> out{{}};
  for (int k = 0; k < l; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out)
      for (int x : letters) {
        auto v = w;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<std::vector<int>> weakly_increasing(int m, int l) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == l) {
      out.push_back(cur);
      return;
    }
    for (int x = lo; x <= m; ++x) {
      cur.push_back(x);
      rec(x);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

}  // namespace

OperatorImageBasis operator_image_basis(int n, int l, Param param) {
  if (l < 1) throw std::invalid_argument("operator_image_basis needs degree >= 1");
  OperatorImageBasis b;
  b.n = n;
  b.degree = l;
  b.param = param;
  b.rep = tensor_rep(vector_rep(AlgebraSpec{n, param}), l);
  std::vector<SOp> gens;
  for (const auto& [key, op] : b.rep.gens) gens.push_back(op);
  b.image = algebra_image(gens, b.rep.space);
  return b;
}

RatFunc eval_functional(const CoordFunctional& f, const SOp& y) {
  if (word_degree(y.dom()) != f.degree())
    throw DegreeMismatch("functional of degree " + std::to_string(f.degree()) + " on V^{⊗" +
                         std::to_string(word_degree(y.dom())) + "}");
  RatFunc r;
  for (const auto& [rc, v] : to_coeff(f, y.dom())) {
    RatFunc x = y.get(rc.first, rc.second);
    if (!x.is_zero()) r += v * x;
  }
  return r;
}

RatFunc eval_functional(const CoordFunctional& f, const GenWord& w, const QueerRep& tensor) {
  if (f.degree() == 0) {
    auto it = f.terms().find(CoordMonomial{});
    return it == f.terms().end() ? RatFunc() : it->second * counit(w);
  }
  return eval_functional(f, w.eval(tensor));
}

SVec value_vector(const CoordFunctional& f, const OperatorImageBasis& basis) {
  if (f.degree() != basis.degree)
    throw DegreeMismatch("functional of degree " + std::to_string(f.degree()) + " against an image basis of degree " +
                         std::to_string(basis.degree));
  const CoeffMatrix m = to_coeff(f, basis.space());
  SVec v;
  for (int k = 0; k < basis.dim(); ++k) {
    const SOp& y = basis.image.ops[k];
    RatFunc r;
    for (const auto& [rc, c] : m) {
      RatFunc x = y.get(rc.first, rc.second);
      if (!x.is_zero()) r += c * x;
    }
    if (!r.is_zero()) v.push_back(k, std::move(r));
  }
  return v;
}

bool functional_equal(const CoordFunctional& f, const CoordFunctional& g, const OperatorImageBasis& basis) {
  if (f.degree() != g.degree()) throw DegreeMismatch("comparing functionals of different degrees");
  return value_vector(f - g, basis).empty();
}

std::string to_string(CoordAction a) {
  switch (a) {
    case CoordAction::Phi:
      return "Phi";
    case CoordAction::Psi:
      return "Psi";
    case CoordAction::PsiTilde:
      return "PsiTilde";
  }
  return "?";
}

CoordFunctional act(CoordAction label, const GenWord& x, const CoordFunctional& f, const OperatorImageBasis& basis) {
  if (f.degree() != basis.degree) throw DegreeMismatch("act: functional degree differs from the basis degree");
  switch (label) {
    case CoordAction::Phi:
      return RatFunc(sgn(x.parity())) * apply_columns(f, x.eval(basis.rep));
    case CoordAction::Psi:
      return apply_rows(f, antipode_word(x, basis.rep));
    case CoordAction::PsiTilde:
      return apply_rows(f, sigma_word(x, basis.rep));
  }
  return f;
}

bool is_phi_zero_weight(const CoordMonomial& mono, int m) {
  if (mono.degree() != m) return false;
  for (int j = 1; j <= m; ++j) {
    int w = 0;
    for (int b : mono.b) w += phi(b, j);
    if (w != 1) return false;
  }
  return true;
}

GradedComponent graded_component(int n, int m, const OperatorImageBasis& basis) {
  GradedComponent c;
  c.n = n;
  c.m = m;
  c.degree = basis.degree;
  for (const auto& b : weakly_increasing(m, basis.degree))
    for (const auto& a : all_words(index_set(n), basis.degree)) {
      CoordMonomial mono{a, b};
      if (c.echelon.insert(value_vector(CoordFunctional::monomial(mono), basis))) c.independent.push_back(mono);
    }
  c.dim = static_cast<int>(c.independent.size());
  return c;
}

GradedComponent graded_component(int n, int m, int l) {
  if (l < 0) throw std::invalid_argument("graded_component needs l >= 0");
  if (l == 0) {
    GradedComponent c;
    c.n = n;
    c.m = m;
    c.dim = 1;
    c.independent.push_back(CoordMonomial{});
    return c;
  }
  return graded_component(n, m, operator_image_basis(std::max(n, m), l));
}

SpacePtr component_space(const GradedComponent& comp) {
  std::vector<std::string> names;
  std::vector<int> parity;
  for (const auto& mono : comp.independent) {
    names.push_back(mono.str());
    parity.push_back(mono.parity());
  }
  return SuperSpace::named(names, parity);
}

SOp component_action(CoordAction label, const GenWord& x, const GradedComponent& comp,
                     const OperatorImageBasis& basis, const SpacePtr& comp_space) {
  SOp r(comp_space, comp_space, x.parity());
  for (int k = 0; k < comp.dim; ++k) {
    CoordFunctional g = act(label, x, CoordFunctional::monomial(comp.independent[k]), basis);
    auto c = comp.echelon.express(value_vector(g, basis));
    if (!c) throw std::logic_error("graded component is not invariant under " + to_string(label));
    r.set_col(k, std::move(*c));
  }
  return r;
}

VerifyReport qca1_check(int n) {
  VerifyReport r;
  r.suite = "qca1";
  r.params = {{"n", n}};
  const auto basis = operator_image_basis(n, 1);
  json fails = json::array();
  int inst = 0;
  for (int a : index_set(n))
    for (int b : index_set(n)) {
      ++inst;
      if (!functional_equal(CoordFunctional::t(a, b), CoordFunctional::t(-a, -b), basis)) fails.push_back({a, b});
    }
  r.add("t_ab=t_-a-b", fails.empty(), fails.empty() ? json(nullptr) : fails, {{"instances", inst}});
  return r;
}

VerifyReport qca2_check(int n) {
  VerifyReport r;
  r.suite = "qca2";
  r.params = {{"n", n}, {"degree", 2}};
  const auto basis = operator_image_basis(n, 2);
  const SOp s = s_matrix(AlgebraSpec{n});
  const SOp st = s.transpose();
  const SpacePtr v = SuperSpace::vector_space(n);
  const SpacePtr vv = s.dom();
  const auto idx = index_set(n);
  std::map<std::pair<int, int>, CoordFunctional> lhs, rhs;
  auto slot = [](auto& m, std::pair<int, int> k) -> CoordFunctional& { return m.try_emplace(k, CoordFunctional(2)).first->second; };
  for (int a : idx)
    for (int b : idx)
      for (int c : idx)
        for (int d : idx) {
          const SOp g = graded_tensor(SOp::unit(v, v->index_of_word({a}), v->index_of_word({b})),
                                      SOp::unit(v, v->index_of_word({c}), v->index_of_word({d})), vv, vv);
          const auto [R, C] = g.first_entry();
          const RatFunc gv = g.get(R, C);
          const RatFunc s1 = RatFunc(sgn((par(a) + par(b)) * (par(c) + par(d)))) * gv;
          const CoordMonomial m1{{a, c}, {b, d}};
          const CoordMonomial m2{{c, a}, {d, b}};
          for (const auto& [row, sv] : s.col(R).entries()) slot(lhs, {row, C}).add(m1, s1 * sv);
          for (const auto& [col, sv] : st.col(C).entries()) slot(rhs, {R, col}).add(m2, gv * sv);
        }
  std::set<std::pair<int, int>> keys;
  for (const auto& [k, f] : lhs) keys.insert(k);
  for (const auto& [k, f] : rhs) keys.insert(k);
  json fails = json::array();
  for (const auto& k : keys) {
    const CoordFunctional& f = slot(lhs, k);
    const CoordFunctional& g = slot(rhs, k);
    if (!functional_equal(f, g, basis) && fails.size() < 16)
      fails.push_back({{"row", vv->label(k.first).str()}, {"col", vv->label(k.second).str()}});
  }
  r.add("entry_identities", fails.empty(), fails.empty() ? json(nullptr) : fails, {{"entries", keys.size()}});
  return r;
}

VerifyReport delta_circ_check(int n, int samples, std::uint64_t seed, bool signed_form) {
  VerifyReport r;
  r.suite = "delta_circ";
  r.params = {{"n", n}, {"samples", samples}, {"seed", seed}, {"signed", signed_form}};
  const QueerRep rep = vector_rep(AlgebraSpec{n});
  const auto gens = generator_indices(n);
  std::mt19937_64 rng(seed);
  auto random_word = [&] {
    GenWord w = GenWord::one();
    const int len = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < len; ++k) {
      auto [i, j] = gens[rng() % gens.size()];
      w = w * GenWord::gen(i, j);
    }
    return w;
  };
  const auto idx = index_set(n);
  json fails = json::array();
  for (int t = 0; t < samples; ++t) {
    const GenWord w1 = random_word(), w2 = random_word();
    const SOp y1 = w1.eval(rep), y2 = w2.eval(rep), y12 = (w1 * w2).eval(rep);
    for (int a : idx)
      for (int b : idx) {
        RatFunc lhs = eval_functional(CoordFunctional::t(a, b), y12);
        RatFunc rhs;
        for (int c : idx) {
          int e = (par(c) + par(b)) * w1.parity();
          if (signed_form) e += (par(a) + par(c)) * (par(c) + par(b));
          rhs += RatFunc(sgn(e)) * eval_functional(CoordFunctional::t(a, c), y1) *
                 eval_functional(CoordFunctional::t(c, b), y2);
        }
        if (lhs != rhs && fails.size() < 8)
          fails.push_back({{"w1", w1.str()}, {"w2", w2.str()}, {"a", a}, {"b", b}});
      }
  }
  r.add("coproduct_on_words", fails.empty(), fails.empty() ? json(nullptr) : fails);
  return r;
}

VerifyReport omega_twist_check(int n) {
  VerifyReport r;
  r.suite = "omega_twist";
  r.params = {{"n", n}};
  const auto basis = operator_image_basis(n, 1);
  const SOp w = omega_map(n);
  const SpacePtr& v = w.dom();
  const auto idx = index_set(n);
  auto pos = [&](int a) { return v->index_of_word({a}); };
  // τ_{v_a*, v_b} = (-1)^{(|a|+|b|)|b|} t_ab.
  auto tau = [&](int a, int b) { return RatFunc(sgn((par(a) + par(b)) * par(b))) * CoordFunctional::t(a, b); };
  json fails = json::array();
  for (int a : idx)
    for (int b : idx) {
      CoordFunctional lhs(1);
      // <ω̃(v_a*), v_c> = (-1)^{|a|} <v_a*, ω(v_c)>.
      for (int c : idx) {
        RatFunc oc = RatFunc(sgn(par(a))) * w.get(pos(a), pos(c));
        if (oc.is_zero()) continue;
        for (const auto& [d, od] : w.col(pos(b)).entries())
          lhs = lhs + (oc * od) * tau(c, v->label(d).word[0]);
      }
      CoordFunctional rhs = RatFunc(-sgn(par(a))) * tau(a, b);
      if (!functional_equal(lhs, rhs, basis)) fails.push_back({a, b});
    }
  r.add("tau_omega", fails.empty(), fails.empty() ? json(nullptr) : fails, {{"pairs", idx.size() * idx.size()}});
  return r;
}

VerifyReport coord_actions_check(int n, int m, int l) {
  VerifyReport r;
  r.suite = "coord_actions";
  r.params = {{"n", n}, {"m", m}, {"degree", l}};
  const auto basis = operator_image_basis(std::max(n, m), l);
  const auto comp = graded_component(n, m, basis);
  const SpacePtr cs = component_space(comp);
  r.derived_values["component_dim"] = comp.dim;

  QueerRep phi_rep{AlgebraSpec{m, Param::q}, cs, {}};
  for (auto [i, j] : generator_indices(m))
    phi_rep.gens.emplace(std::pair{i, j}, component_action(CoordAction::Phi, GenWord::gen(i, j), comp, basis, cs));
  QueerRep psi_rep{AlgebraSpec{n, Param::qinv}, cs, {}, RatFunc(-1)};
  for (auto [i, j] : generator_indices(n))
    psi_rep.gens.emplace(std::pair{i, j}, component_action(CoordAction::PsiTilde, GenWord::gen(i, j), comp, basis, cs));

  const VerifyReport phi_rel = check_defining_relations(phi_rep);
  r.add("phi_is_representation", phi_rel.passed());
  const VerifyReport psi_rel = check_defining_relations(psi_rep);
  r.add("psi_tilde_with_sqrt_minus_one_is_representation", psi_rel.passed());
  QueerRep psi_literal = psi_rep;
  psi_literal.odd_unit_sq = RatFunc(1);
  r.derived_values["psi_tilde_literal_is_representation"] = check_defining_relations(psi_literal).passed();

  json fails = json::array();
  for (const auto& [ki, x] : phi_rep.gens)
    for (const auto& [kj, y] : psi_rep.gens)
      if (!supercommutator(x, y).is_zero())
        fails.push_back({{"phi", {ki.first, ki.second}}, {"psi_tilde", {kj.first, kj.second}}});
  r.add("phi_psi_tilde_supercommute", fails.empty(), fails.empty() ? json(nullptr) : fails);
  return r;
}

namespace {

int positive_letters(const std::vector<int>& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](int x) { return x > 0; }));
}

// X op X^{-1} / (-i)^shift for X = diag((-i)^{#positive letters}); nullopt if not real.
std::optional<SOp> phase_conjugate(const SOp& op, int shift) {
  SOp out(op.dom(), op.cod(), op.parity());
  for (const auto& [rc, v] : op.entries()) {
    const int e = positive_letters(op.cod()->label(rc.first).word) - positive_letters(op.dom()->label(rc.second).word) - shift;
    if (e & 1) return std::nullopt;
    out.set(rc.first, rc.second, RatFunc(sgn(((e % 4) + 4) % 4 / 2)) * v);
  }
  return out;
}

// v_{w1} ⊗ ... ⊗ v_{wm} -> (-1)^{Σ_{j<k}|w_j||w_k|} v_{wm} ⊗ ... ⊗ v_{w1}.
SOp graded_reversal(const SpacePtr& s) {
  SOp r(s, s, 0);
  for (int c = 0; c < s->dim(); ++c) {
    auto w = s->label(c).word;
    int e = 0;
    for (size_t j = 0; j < w.size(); ++j)
      for (size_t k = j + 1; k < w.size(); ++k) e += par(w[j]) * par(w[k]);
    std::reverse(w.begin(), w.end());
    r.set(s->index_of_word(w), c, RatFunc(sgn(e)));
  }
  return r;
}

std::vector<std::vector<int>> signed_arrangements(int m) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    for (int mask = 0; mask < (1 << m); ++mask) {
      auto w = perm;
      for (int k = 0; k < m; ++k)
        if (mask >> k & 1) w[k] = -w[k];
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

VerifyReport zero_weight_iso(int n, int m) {
  VerifyReport r;
  r.suite = "zw_iso";
  r.params = {{"n", n}, {"m", m}};
  const int big = std::max(n, m);
  const auto basis = operator_image_basis(big, m);
  const QueerRep ref = tensor_rep(vector_rep(AlgebraSpec{n, Param::qinv}), m);
  const SpacePtr& words = ref.space;
  std::vector<int> id_word(m);
  std::iota(id_word.begin(), id_word.end(), 1);

  // (i) independence of t_{a1,1}...t_{am,m}.
  Echelon fe(true);
  int expected = 1;
  for (int k = 0; k < m; ++k) expected *= 2 * n;
  for (int k = 0; k < words->dim(); ++k)
    fe.insert(value_vector(CoordFunctional::monomial(CoordMonomial{words->label(k).word, id_word}), basis));
  r.add("image_rank", fe.rank() == expected, nullptr, {{"rank", fe.rank()}, {"expected", expected}});
  r.derived_values["rank"] = fe.rank();
  if (fe.rank() != expected) return r;

  // (ii) every Φ-zero-weight monomial lies in the span, and the weight test agrees with Φ_{k_j}.
  bool spanned = true;
  json witness = nullptr;
  for (const auto& b : signed_arrangements(m))
    for (int k = 0; k < words->dim() && spanned; ++k) {
      CoordMonomial mono{words->label(k).word, b};
      if (!fe.contains(value_vector(CoordFunctional::monomial(mono), basis))) {
        spanned = false;
        witness = mono.str();
      }
    }
  r.add("zero_weight_block_spanned", spanned, witness);

  json mismatch = json::array();
  int vanishing = 0;
  for (int l = 1; l <= m; ++l) {
    const auto bl = l == m ? basis : operator_image_basis(big, l);
    for (const auto& b : weakly_increasing(m, l))
      for (const auto& a : all_words(index_set(n), l)) {
        const CoordMonomial mono{a, b};
        const auto f = CoordFunctional::monomial(mono);
        if (value_vector(f, bl).empty()) {
          ++vanishing;
          continue;
        }
        bool fixed = true;
        for (int j = 1; j <= m && fixed; ++j)
          fixed = functional_equal(act(CoordAction::Phi, GenWord::gen(j, j), f, bl), RatFunc::q() * f, bl);
        const bool predicted = l == m && b == id_word;
        if (fixed != predicted || is_phi_zero_weight(mono, m) != predicted) mismatch.push_back(mono.str());
      }
  }
  r.add("zero_weight_characterization", mismatch.empty(), mismatch.empty() ? json(nullptr) : mismatch,
        {{"vanishing_monomials", vanishing}});

  auto block = [&](const std::function<CoordFunctional(const CoordFunctional&)>& op, int parity) {
    SOp x(words, words, parity);
    for (int k = 0; k < words->dim(); ++k) {
      auto f = CoordFunctional::monomial(CoordMonomial{words->label(k).word, id_word});
      auto c = fe.express(value_vector(op(f), basis));
      if (!c) throw std::logic_error("zero weight block is not invariant");
      x.set_col(k, std::move(*c));
    }
    return x;
  };

  // (iii) row side: Ψ̃ against U_{q^-1}(q_n) on V^{⊗m}.
  const SOp rev = graded_reversal(words);
  bool row_literal = true, row_phased = true;
  json row_fail = json::array();
  for (auto [i, j] : generator_indices(n)) {
    const GenWord x = GenWord::gen(i, j);
    const SOp p = block([&](const CoordFunctional& f) { return act(CoordAction::PsiTilde, x, f, basis); }, x.parity());
    if (p != ref.L(i, j)) row_literal = false;
    auto ph = phase_conjugate(p, x.parity());
    if (!ph || *ph != rev * ref.L(i, j) * rev) {
      row_phased = false;
      row_fail.push_back({i, j});
    }
  }
  r.add("row_side_equivariance", row_phased, row_fail.empty() ? json(nullptr) : row_fail);
  r.derived_values["row_side_literal_match"] = row_literal;

  // HC side: braid operators and k̄_b of Φ on the column words.
  QueerRep colrep{AlgebraSpec{m, Param::q}, basis.rep.space, {}};
  for (auto [i, j] : generator_indices(m)) colrep.gens.emplace(std::pair{i, j}, RatFunc(sgn(gpar(i, j))) * basis.rep.L(i, j));
  const ChevalleyOps ops = chevalley_ops(colrep);
  HCAction hz;
  hz.m = m;
  hz.param = Param::qinv;
  hz.qv = RatFunc::q().inv();
  hz.space = words;
  for (int a = 1; a < m; ++a) {
    const SOp t = braid_operator(ops, a);
    hz.T.push_back(block([&](const CoordFunctional& f) { return apply_columns(f, t); }, 0));
  }
  for (int b = 0; b < m; ++b) {
    const SOp c = ops.kbar[b];
    hz.C.push_back(block([&](const CoordFunctional& f) { return apply_columns(f, c); }, 1));
  }
  r.add("zero_weight_block_hc_qinv", hc_check(hz).passed());

  const HCAction hq = hc_tensor_action(AlgebraSpec{n, Param::q}, m, words);
  const HCAction hqi = hc_tensor_action(AlgebraSpec{n, Param::qinv}, m, words);
  auto same = [](const HCAction& a, const HCAction& b) {
    for (size_t k = 0; k < a.T.size(); ++k)
      if (a.T[k] != b.T[k]) return false;
    for (size_t k = 0; k < a.C.size(); ++k)
      if (a.C[k] != b.C[k]) return false;
    return true;
  };
  r.derived_values["hc_literal_match_q"] = same(hz, hq);
  r.derived_values["hc_literal_match_qinv"] = same(hz, hqi);
  bool hc_phased = true;
  json hc_fail = json::array();
  for (size_t k = 0; k < hz.T.size(); ++k) {
    auto t = phase_conjugate(hz.T[k], 2);
    if (!t || *t != hq.T[k]) {
      hc_phased = false;
      hc_fail.push_back("T" + std::to_string(k + 1));
    }
  }
  for (size_t k = 0; k < hz.C.size(); ++k) {
    auto c = phase_conjugate(hz.C[k], 1);
    if (!c || *c != hq.C[k]) {
      hc_phased = false;
      hc_fail.push_back("C" + std::to_string(k + 1));
    }
  }
  r.add("hc_equivariance", hc_phased, hc_fail.empty() ? json(nullptr) : hc_fail);
  r.derived_values["convention"] =
      "U_{q^-1}(q_n) (x) HC_{q^-1}(m) on the zero weight block; X = diag((-i)^{#positive letters}); "
      "X Psi~'_x X^-1 = R x R with Psi~'_x = i^{|x|} Psi~_x and R the graded word reversal; "
      "X T_a X^-1 = -T_a(tensor, q), X C_b X^-1 = -i C_b(tensor, q)";
  return r;
}

}  // namespace qhowe
