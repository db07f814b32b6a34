#include "qhowe/duality.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace qhowe {

int StrictPartition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::string StrictPartition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t k = 0; k < parts.size(); ++k) os << (k ? "," : "") << parts[k];
  os << ")";
  return os.str();
}

Weight StrictPartition::as_weight(int n) const {
  if (length() > n) throw std::invalid_argument("partition " + str() + " is longer than " + std::to_string(n));
  Weight w(n, 0);
  for (int k = 0; k < length(); ++k) w[k] = parts[k];
  return w;
}

std::vector<StrictPartition> enumerate_strict_partitions(int size, int max_len) {
  if (size < 0) throw std::invalid_argument("partition size must be >= 0");
  std::vector<StrictPartition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int below) {
    if (rest == 0) {
      out.push_back(StrictPartition{cur});
      return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int p = std::min(rest, below - 1); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(size, size + 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.parts > b.parts; });
  return out;
}

int IsotypicCensus::census_sum() const {
  int s = 0;
  for (const auto& e : entries) s += e.submodule_dim * e.copies;
  return s;
}

const CensusEntry& IsotypicCensus::at(const StrictPartition& lambda) const {
  for (const auto& e : entries)
    if (e.lambda == lambda) return e;
  throw std::out_of_range("no census entry for " + lambda.str());
}

namespace {

int span_rank(const std::vector<SVec>& a, const std::vector<SVec>& b = {}) {
  Echelon e;
  for (const auto& v : a) e.insert(v);
  for (const auto& v : b) e.insert(v);
  return e.rank();
}

SpacePtr subspace_space(const SpacePtr& ambient, const Subspace& sub) {
  std::vector<std::string> names;
  std::vector<int> parity;
  for (int k = 0; k < sub.dim(); ++k) {
    names.push_back("b" + std::to_string(k));
    parity.push_back(ambient->parity(sub.basis[k].entries().front().first));
  }
  return SuperSpace::named(names, parity);
}

std::vector<SOp> restrict_all(const std::vector<SOp>& ops, const Subspace& sub, const SpacePtr& s) {
  std::vector<SOp> r;
  for (const auto& op : ops) r.push_back(restrict_to(op, sub, s));
  return r;
}

bool perfect_square_int(int e, int* root) {
  for (int k = 0; k * k <= e; ++k)
    if (k * k == e) {
      *root = k;
      return true;
    }
  return false;
}

// Type data of the module on which `gens` act.
void classify(CensusEntry& entry, const std::vector<SOp>& gens, const SpacePtr& s) {
  const CommutantResult end = graded_commutant(gens, s);
  entry.end_even = static_cast<int>(end.even.size());
  entry.end_odd = static_cast<int>(end.odd.size());
  const int e = end.dim();
  int k = 0;
  if (perfect_square_int(e, &k)) {
    entry.detected_type = "M";
  } else if (e % 2 == 0 && entry.end_odd == entry.end_even && perfect_square_int(e / 2, &k)) {
    entry.detected_type = "Q";
  } else {
    entry.detected_type = "?";
  }
  entry.closure_multiplicity = k;
  entry.irreducible_dim = k ? entry.submodule_dim / k : 0;
  // An odd automorphism squaring to a nonzero scalar, normalized to -1 after a scalar extension.
  if (entry.end_even == 1 && entry.end_odd == 1) {
    const SOp j2 = end.odd[0] * end.odd[0];
    const RatFunc c = j2.get(0, 0);
    if (!c.is_zero() && j2 == c * SOp::identity(s)) {
      entry.odd_square = c.str();
    } else {
      entry.odd_square = "not a nonzero scalar";
      entry.detected_type = "?";
    }
  }
}

}  // namespace

IsotypicCensus isotypic_census(int n, int m) {
  IsotypicCensus c;
  c.n = n;
  c.m = m;
  const QueerRep rep = tensor_rep(vector_rep(AlgebraSpec{n}), m);
  const ChevalleyOps ops = chevalley_ops(rep);
  c.total_dim = rep.space->dim();
  const auto spaces = weight_spaces(ops);
  for (const auto& [w, block] : spaces)
    if (!highest_weight_vectors(ops, w).empty()) c.hwv_weights.push_back(w);
  const auto parts = enumerate_strict_partitions(m, n);
  for (const auto& lam : parts) c.candidates.push_back(lam.as_weight(n));
  std::sort(c.candidates.begin(), c.candidates.end());

  std::vector<SOp> gens;
  for (const auto& [key, op] : rep.gens) gens.push_back(op);
  for (const auto& lam : parts) {
    CensusEntry e;
    e.lambda = lam;
    e.predicted_type = lam.length() % 2 ? 'Q' : 'M';
    const auto hwv = highest_weight_vectors(ops, lam.as_weight(n));
    e.hwv_dim = static_cast<int>(hwv.size());
    if (hwv.empty()) {
      e.detected_type = "?";
      c.entries.push_back(e);
      continue;
    }
    const Subspace sub = closure(gens, {hwv.front()});
    e.submodule_dim = sub.dim();
    e.hwv_in_submodule = span_rank(hwv) + sub.dim() - span_rank(hwv, sub.basis);
    e.copies = e.hwv_dim % e.hwv_in_submodule == 0 ? e.hwv_dim / e.hwv_in_submodule : 0;
    for (const auto& [w, block] : spaces) {
      std::vector<SVec> units;
      for (int b : block) units.push_back(SVec::unit(b));
      const int k = sub.dim() + static_cast<int>(block.size()) - span_rank(units, sub.basis);
      if (k) e.weight_multiplicities[w] = k;
    }
    const SpacePtr s = subspace_space(rep.space, sub);
    classify(e, restrict_all(gens, sub, s), s);
    c.entries.push_back(e);
  }
  return c;
}

namespace {

json multiplicities_json(const std::map<Weight, int>& mult) {
  json j = json::array();
  for (const auto& [w, k] : mult) j.push_back({w, k});
  return j;
}

json census_json(const IsotypicCensus& c) {
  json entries = json::array();
  for (const auto& e : c.entries)
    entries.push_back({{"lambda", e.lambda.parts},
                       {"hwv_dim", e.hwv_dim},
                       {"hwv_in_submodule", e.hwv_in_submodule},
                       {"submodule_dim", e.submodule_dim},
                       {"copies", e.copies},
                       {"end_dim", {e.end_even, e.end_odd}},
                       {"closure_multiplicity", e.closure_multiplicity},
                       {"irreducible_dim", e.irreducible_dim},
                       {"predicted_type", std::string(1, e.predicted_type)},
                       {"detected_type", e.detected_type},
                       {"odd_square", e.odd_square},
                       {"weight_multiplicities", multiplicities_json(e.weight_multiplicities)}});
  return {{"n", c.n}, {"m", c.m}, {"total_dim", c.total_dim}, {"entries", entries}};
}

json weights_json(const std::vector<Weight>& ws) {
  json j = json::array();
  for (const auto& w : ws) j.push_back(w);
  return j;
}

}  // namespace

VerifyReport census_verify(int n, int m) {
  VerifyReport r;
  r.suite = "census";
  r.params = {{"n", n}, {"m", m}};
  const IsotypicCensus c = isotypic_census(n, m);
  r.add("hwv_weights_are_strict_partitions", c.weights_match(), nullptr,
        {{"found", weights_json(c.hwv_weights)}, {"expected", weights_json(c.candidates)}});
  json stray = json::array();
  for (const auto& w : c.hwv_weights)
    if (!is_strict_dominant(w)) stray.push_back(w);
  r.add("no_hwv_outside_dominant", stray.empty(), stray.empty() ? json(nullptr) : stray);
  r.add("closure", c.closes(), nullptr, {{"sum", c.census_sum()}, {"total", c.total_dim}});
  // Characters are symmetric under permutations of the weight coordinates.
  json asym = json::array();
  for (const auto& e : c.entries)
    for (const auto& [w, k] : e.weight_multiplicities) {
      Weight p = w;
      std::sort(p.begin(), p.end());
      do {
        const auto it = e.weight_multiplicities.find(p);
        if (it == e.weight_multiplicities.end() || it->second != k) asym.push_back({e.lambda.parts, w, p});
      } while (std::next_permutation(p.begin(), p.end()));
    }
  r.add("submodule_characters_symmetric", asym.empty(), asym.empty() ? json(nullptr) : asym);
  json mismatch = json::array();
  for (const auto& e : c.entries)
    if (!e.type_match()) mismatch.push_back(e.lambda.str());
  r.add("type_by_length_parity", mismatch.empty(), mismatch.empty() ? json(nullptr) : mismatch);
  r.derived_values["census"] = census_json(c);
  return r;
}

namespace {

struct SergeevInputs {
  SpacePtr space;
  std::vector<SOp> queer;
  std::vector<NamedOp> chevalley;
  std::vector<SOp> hc;
  std::vector<std::string> hc_names;
};

void sergeev_core(const SergeevInputs& in, VerifyReport& r, const std::string& prefix) {
  json bad = json::array();
  for (const auto& x : in.chevalley)
    for (size_t k = 0; k < in.hc.size(); ++k)
      if (!supercommutator(x.op, in.hc[k]).is_zero()) bad.push_back({x.name, in.hc_names[k]});
  r.add(prefix + "supercommutation", bad.empty(), bad.empty() ? json(nullptr) : bad);

  const AlgebraImage qimg = algebra_image(in.queer, in.space);
  const AlgebraImage himg = algebra_image(in.hc, in.space);
  const CommutantResult comm = graded_commutant(in.queer, in.space);
  Echelon ce;
  for (const auto& x : comm.all()) ce.insert(x.flatten());
  int hc_outside = 0, comm_outside = 0;
  for (const auto& x : himg.ops)
    if (!ce.contains(x.flatten())) ++hc_outside;
  for (const auto& x : comm.all())
    if (!himg.echelon.contains(x.flatten())) ++comm_outside;
  const bool equal = himg.dim() == comm.dim() && hc_outside == 0 && comm_outside == 0;
  r.add(prefix + "hc_span_equals_commutant", equal, nullptr,
        {{"hc_image_dim", himg.dim()},
         {"commutant_dim", comm.dim()},
         {"hc_outside_commutant", hc_outside},
         {"commutant_outside_hc", comm_outside}});

  const CommutantResult hcomm = graded_commutant(in.hc, in.space);
  Echelon he;
  for (const auto& x : hcomm.all()) he.insert(x.flatten());
  int q_outside = 0;
  for (const auto& x : qimg.ops)
    if (!he.contains(x.flatten())) ++q_outside;
  const bool bi = hcomm.dim() == qimg.dim() && q_outside == 0;
  r.add(prefix + "bicommutant", bi, nullptr,
        {{"queer_image_dim", qimg.dim()}, {"hc_commutant_dim", hcomm.dim()}, {"queer_outside", q_outside}});
  if (prefix.empty()) {
    r.derived_values["queer_image_dim"] = qimg.dim();
    r.derived_values["hc_image_dim"] = himg.dim();
    r.derived_values["commutant_dim"] = comm.dim();
    r.derived_values["commutant_even_odd"] = {comm.even.size(), comm.odd.size()};
  }
}

}  // namespace

VerifyReport sergeev_verify(int n, int m, const CheckOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport r;
  r.suite = "sergeev";
  r.params = {{"n", n}, {"m", m}, {"mode", opt.mode == Mode::exact ? "exact" : "prob"}};
  const QueerRep rep = tensor_rep(vector_rep(AlgebraSpec{n}), m);
  const ChevalleyOps ops = chevalley_ops(rep);
  const HCAction hc = hc_tensor_action(AlgebraSpec{n}, m, rep.space);
  SergeevInputs in;
  in.space = rep.space;
  for (const auto& [key, op] : rep.gens) in.queer.push_back(op);
  in.chevalley = ops.named();
  in.hc = hc.generators();
  for (size_t a = 0; a < hc.T.size(); ++a) in.hc_names.push_back("T" + std::to_string(a + 1));
  for (size_t b = 0; b < hc.C.size(); ++b) in.hc_names.push_back("C" + std::to_string(b + 1));
  if (opt.mode == Mode::exact) {
    sergeev_core(in, r, "");
  } else {
    r.params["trials"] = opt.trials;
    r.params["seed"] = opt.seed;
    int t = 0;
    for (const auto& c : sample_points(opt.trials, opt.seed)) {
      auto at = [&](const SOp& x) { return x.map_entries([&](const RatFunc& v) { return v.subst(c); }); };
      SergeevInputs s = in;
      for (auto& x : s.queer) x = at(x);
      for (auto& x : s.chevalley) x.op = at(x.op);
      for (auto& x : s.hc) x = at(x);
      sergeev_core(s, r, "trial" + std::to_string(t++) + ".");
    }
  }
  const VerifyReport census = census_verify(n, m);
  r.absorb(census, "census.");
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

VerifyReport supercommutation_check(int n, int m) {
  VerifyReport r;
  r.suite = "supercommutation";
  r.params = {{"n", n}, {"m", m}};
  const QueerRep rep = tensor_rep(vector_rep(AlgebraSpec{n}), m);
  const HCAction hc = hc_tensor_action(AlgebraSpec{n}, m, rep.space);
  const auto gens = hc.generators();
  json bad = json::array();
  int pairs = 0;
  for (const auto& x : chevalley_ops(rep).named())
    for (size_t k = 0; k < gens.size(); ++k, ++pairs)
      if (!supercommutator(x.op, gens[k]).is_zero()) {
        const std::string h = k < hc.T.size() ? "T" + std::to_string(k + 1) : "C" + std::to_string(k - hc.T.size() + 1);
        bad.push_back({x.name, h});
      }
  r.add("supercommutation", bad.empty(), bad.empty() ? json(nullptr) : bad, {{"pairs", pairs}});
  return r;
}

VerifyReport howe_verify(int n, int m, int l_max) {
  if (l_max < 0) throw std::invalid_argument("howe_verify needs l_max >= 0");
  VerifyReport r;
  r.suite = "howe";
  r.params = {{"n", n}, {"m", m}, {"degree", l_max}};
  json dims = json::object();
  for (int l = 0; l <= l_max; ++l) {
    const GradedComponent comp = graded_component(n, m, l);
    int predicted = 0;
    json terms = json::array();
    if (l == 0) {
      predicted = 1;
    } else {
      const IsotypicCensus cn = isotypic_census(n, l);
      const IsotypicCensus cm = isotypic_census(m, l);
      for (const auto& lam : enumerate_strict_partitions(l, std::min(n, m))) {
        const int dn = cn.at(lam).irreducible_dim, dm = cm.at(lam).irreducible_dim;
        const int term = lam.length() % 2 ? dn * dm / 2 : dn * dm;
        predicted += term;
        terms.push_back({{"lambda", lam.parts}, {"dim_n", dn}, {"dim_m", dm}, {"term", term}});
      }
    }
    r.add("degree_" + std::to_string(l), comp.dim == predicted, nullptr,
          {{"dimension", comp.dim}, {"predicted", predicted}, {"terms", terms}});
    json mono = json::array();
    for (const auto& x : comp.independent) mono.push_back(x.str());
    dims[std::to_string(l)] = {{"n", n}, {"m", m}, {"l", l}, {"dimension", comp.dim}, {"independent_monomials", mono}};

    if (l == 0) continue;
    // Fixed subspace of Ψ̃_{k_i}, i > n, and Φ_{k_j}, j > m, in A_q(q_s), s = max(n, m) + 1.
    const int s = std::max(n, m) + 1;
    OperatorImageBasis amb;
    amb.n = s;
    amb.degree = l;
    amb.rep = tensor_rep(vector_rep(AlgebraSpec{s}), l);
    json unfixed = json::array();
    for (const auto& x : comp.independent) {
      const auto f = CoordFunctional::monomial(x);
      for (int i = n + 1; i <= s; ++i)
        if ((act(CoordAction::PsiTilde, GenWord::gen(i, i), f, amb) - f).terms().size())
          unfixed.push_back({x.str(), "PsiTilde_k" + std::to_string(i)});
      for (int j = m + 1; j <= s; ++j)
        if ((act(CoordAction::Phi, GenWord::gen(j, j), f, amb) - f).terms().size())
          unfixed.push_back({x.str(), "Phi_k" + std::to_string(j)});
    }
    // A row index beyond n is not fixed.
    std::vector<int> a(l, s), b(l, 1);
    const auto outside = CoordFunctional::monomial(CoordMonomial{a, b});
    const bool detects = (act(CoordAction::PsiTilde, GenWord::gen(s, s), outside, amb) - outside).terms().size() > 0;
    r.add("fixed_subspace_degree_" + std::to_string(l), unfixed.empty() && detects,
          unfixed.empty() ? json(nullptr) : unfixed);
  }
  r.derived_values["graded_dimensions"] = dims;
  return r;
}

ChevalleyOps fixture_module(bool corrected) {
  const std::vector<std::string> names{"u0", "u1", "u2", "w", "ubar0", "ubar1", "ubar2", "wbar"};
  auto space = SuperSpace::named(names, {0, 0, 0, 0, 1, 1, 1, 1});
  auto at = [&](const std::string& s) { return static_cast<int>(std::find(names.begin(), names.end(), s) - names.begin()); };
  const RatFunc q = RatFunc::q(), qi = q.inv();
  const RatFunc Q = q + qi, Q2 = q * q + qi * qi, Qi = Q.inv();
  auto make = [&](int parity, const std::vector<std::tuple<std::string, std::string, RatFunc>>& rows) {
    SOp x(space, space, parity);
    for (const auto& [src, dst, c] : rows) x.add(at(dst), at(src), c);
    return x;
  };
  ChevalleyOps ops;
  ops.n = 2;
  ops.space = space;
  ops.param = Param::q;
  ops.qv = q;
  std::vector<std::tuple<std::string, std::string, RatFunc>> ka, kb;
  for (int i = 0; i < 3; ++i) {
    const std::string u = "u" + std::to_string(i), ub = "ubar" + std::to_string(i);
    ka.emplace_back(u, u, q.pow(2 - i));
    ka.emplace_back(ub, ub, q.pow(2 - i));
    kb.emplace_back(u, u, q.pow(i));
    kb.emplace_back(ub, ub, q.pow(i));
  }
  for (const char* x : {"w", "wbar"}) {
    ka.emplace_back(x, x, q);
    kb.emplace_back(x, x, q);
  }
  ops.k = {make(0, ka), make(0, kb)};
  ops.kinv = {inverse(ops.k[0]), inverse(ops.k[1])};
  ops.e = {make(0, {{"u1", "u0", Q}, {"ubar1", "ubar0", Q}, {"u2", "u1", q}, {"ubar2", "ubar1", q}})};
  ops.f = {make(0, {{"u0", "u1", RatFunc(1)},
                    {"ubar0", "ubar1", RatFunc(1)},
                    {"u1", "u2", qi * Q},
                    {"ubar1", "ubar2", qi * Q}})};
  const RatFunc c2 = RatFunc(2) * Qi * Qi;
  ops.kbar = {make(1, {{"u0", "ubar0", RatFunc(1)},
                       {"ubar0", "u0", Q2},
                       {"u1", "ubar1", Qi},
                       {"u1", "wbar", -q * q},
                       {"ubar1", "u1", Q2 * Qi},
                       {"ubar1", "w", -q * q},
                       {"w", "wbar", -Q2 * Qi},
                       {"w", "ubar1", -qi * qi * c2},
                       {"wbar", "w", -Qi},
                       {"wbar", "u1", -qi * qi * c2}}),
              make(1, {{"u1", "ubar1", Qi},
                       {"u1", "wbar", RatFunc(1)},
                       {"ubar1", "u1", Q2 * Qi},
                       {"ubar1", "w", RatFunc(1)},
                       {"u2", "ubar2", RatFunc(1)},
                       {"ubar2", "u2", Q2},
                       {"w", "wbar", -Q2 * Qi},
                       {"w", "ubar1", c2},
                       {"wbar", "w", -Qi},
                       {"wbar", "u1", c2}})};
  ops.ebar = {make(1, {{"u1", "ubar0", RatFunc(1)},
                       {"ubar1", "u0", Q2},
                       {"u2", "ubar1", q * Qi},
                       {"u2", "wbar", -q.pow(3)},
                       {"ubar2", "u1", q * Q2 * Qi},
                       {"ubar2", "w", -q.pow(3)},
                       {"w", "ubar0", RatFunc(2) * Qi},
                       {"wbar", "u0", RatFunc(2) * Qi}})};
  ops.fbar = {make(1, {{"u0", "ubar1", Qi},
                       {"u0", "wbar", corrected ? RatFunc(1) : -q * q},
                       {"ubar0", "u1", Q2 * Qi},
                       {"ubar0", "w", RatFunc(1)},
                       {"u1", "ubar2", qi},
                       {"ubar1", "u2", qi * Q2},
                       {"w", "ubar2", RatFunc(-2) * qi.pow(3) * Qi},
                       {"wbar", "u2", RatFunc(-2) * qi.pow(3) * Qi}})};
  return ops;
}

VerifyReport fixture_verify(bool corrected) {
  VerifyReport r;
  r.suite = "fixture";
  r.params = {{"table", corrected ? "corrected" : "verbatim"}};
  const ChevalleyOps fx = fixture_module(corrected);
  const auto& s = fx.space;
  const RatFunc q = RatFunc::q();

  std::map<Weight, int> mult;
  for (const auto& [w, block] : weight_spaces(fx)) mult[w] = static_cast<int>(block.size());
  const std::map<Weight, int> expect{{{2, 0}, 2}, {{1, 1}, 4}, {{0, 2}, 2}};
  json mj = json::array();
  for (const auto& [w, k] : mult) mj.push_back({w, k});
  r.add("weight_multiplicities", mult == expect, nullptr, mj);

  // Submodule of V^{⊗2} generated by the even highest weight vector of weight (2,0).
  const QueerRep v2 = tensor_rep(vector_rep(AlgebraSpec{2}), 2);
  const ChevalleyOps ops2 = chevalley_ops(v2);
  SVec seed;
  for (const auto& v : highest_weight_vectors(ops2, {2, 0}))
    if (v2.space->parity(v.entries().front().first) == 0) seed = v;
  std::vector<SOp> gens;
  for (const auto& [key, op] : v2.gens) gens.push_back(op);
  const Subspace sub = closure(gens, {seed});
  const SpacePtr ss = subspace_space(v2.space, sub);
  const auto target = restrict_all(ops2.all(), sub, ss);
  const auto source = fx.all();
  const auto homs = intertwiners(source, target, 0);
  std::optional<SOp> iso;
  std::vector<SOp> trial = homs;
  if (homs.size() > 1) {
    SOp sum = homs[0];
    for (size_t k = 1; k < homs.size(); ++k) sum = sum + RatFunc(static_cast<long>(k + 1)) * homs[k];
    trial.push_back(sum);
  }
  for (const auto& x : trial) {
    std::vector<SVec> cols;
    for (int c = 0; c < s->dim(); ++c) cols.push_back(x.col(c));
    if (sub.dim() == s->dim() && span_rank(cols) == s->dim()) {
      iso = x;
      break;
    }
  }
  r.derived_values["submodule_dim"] = sub.dim();
  r.derived_values["hom_dim"] = homs.size();
  r.add("embeds_into_tensor_square", iso.has_value(), nullptr, {{"hom_dim", homs.size()}, {"submodule_dim", sub.dim()}});
  if (iso) {
    int transported = 0;
    for (size_t k = 0; k < source.size(); ++k)
      if (*iso * source[k] == target[k] * *iso) ++transported;
    r.add("generators_transported", transported == static_cast<int>(source.size()), nullptr,
          {{"transported", transported}, {"generators", source.size()}});
  }

  const SOp t = braid_operator(fx, 1);
  auto idx = [&](const std::string& name) { return s->index(Label{name, {}}); };
  json eig = json::object();
  bool ok = true;
  for (const auto& [name, value] : std::vector<std::pair<std::string, RatFunc>>{
           {"u1", -q}, {"ubar1", -q}, {"w", q.inv()}, {"wbar", q.inv()}}) {
    const SVec col = t.col(idx(name));
    const bool hit = col == SVec::unit(idx(name), value);
    ok = ok && hit;
    eig[name] = hit ? value.str() : "not an eigenvector";
  }
  r.add("braid_eigenvalues", ok, nullptr, eig);

  const HCAction zw = zero_weight_hc(fx);
  r.add("zero_weight_hc_qinv", hc_check(zw).passed(), nullptr, {{"dim", zw.space->dim()}});
  return r;
}

VerifyReport classical_crosscheck(int n, int m) {
  VerifyReport r;
  r.suite = "classical";
  r.params = {{"n", n}, {"m", m}};
  const QueerRep rep = tensor_rep(vector_rep(AlgebraSpec{n}), m);
  const SpacePtr& space = rep.space;
  const ChevalleyOps ops = chevalley_ops(rep);
  const ClassicalOps cl = classical_limit(ops);
  const HCAction hc1 = specialize_action(hc_tensor_action(AlgebraSpec{n}, m, space), 1);

  // Signed swap and Clifford operator built factor by factor.
  const SpacePtr v = SuperSpace::vector_space(n);
  const SpacePtr vv = SuperSpace::tensor(v, v);
  SOp swap(vv, vv, 0), cliff(v, v, 1);
  for (int x : index_set(n)) {
    cliff.set(v->index_of_word({-x}), v->index_of_word({x}), RatFunc(sgn(par(x))));
    for (int y : index_set(n)) swap.set(vv->index_of_word({y, x}), vv->index_of_word({x, y}), RatFunc(sgn(par(x) * par(y))));
  }
  auto embed = [&](const SOp& x, int pos, int width) {
    std::vector<SOp> f(pos, SOp::identity(v));
    f.push_back(x);
    for (int t = pos + width; t < m; ++t) f.push_back(SOp::identity(v));
    SOp acc = f[0];
    for (size_t k = 1; k < f.size(); ++k) acc = graded_tensor(acc, f[k]);
    return acc;
  };
  auto same_matrix = [&](const SOp& a, const SOp& b) {
    if (a.dom()->dim() != b.dom()->dim()) return false;
    for (int c = 0; c < a.dom()->dim(); ++c)
      if (a.col(c) != b.col(c)) return false;
    return true;
  };
  json bad = json::array();
  for (int a = 0; a + 1 < m; ++a)
    if (!same_matrix(hc1.T[a], embed(swap, a, 2))) bad.push_back("T" + std::to_string(a + 1));
  for (int b = 0; b < m; ++b)
    if (!same_matrix(hc1.C[b], embed(cliff, b, 1))) bad.push_back("C" + std::to_string(b + 1));
  r.add("signed_swap_and_clifford", bad.empty(), bad.empty() ? json(nullptr) : bad);

  r.add("sergeev_relations", hc_check_with(hc1, RatFunc(1)).passed());

  AlgebraSpec one{n, Param::q, RatFunc(1)};
  const QueerRep rep1 = rep.mapped([](const RatFunc& x) { return RatFunc(x.specialize(1)); }, one);
  r.add("defining_relations_at_one", check_defining_relations(rep1).passed());

  json sc = json::array();
  for (const auto& x : cl.ops)
    for (size_t k = 0; k < hc1.generators().size(); ++k)
      if (!supercommutator(x.op, hc1.generators()[k]).is_zero()) sc.push_back({x.name, k});
  r.add("supercommutation", sc.empty(), sc.empty() ? json(nullptr) : sc);

  // h_i is diagonal with the classical weight: the number of letters ±i.
  std::map<Weight, std::vector<int>> ws;
  bool weights_ok = true;
  for (int c = 0; c < space->dim(); ++c) {
    Weight w(n);
    for (int i = 1; i <= n; ++i) {
      const SVec& col = cl.get("h" + std::to_string(i)).col(c);
      int count = 0;
      for (int x : space->label(c).word) count += std::abs(x) == i;
      if (col != SVec::unit(c, RatFunc(count))) weights_ok = false;
      w[i - 1] = count;
    }
    ws[w].push_back(c);
  }
  r.add("cartan_weights", weights_ok);

  // Census at q = 1.
  std::vector<SOp> raising, all;
  for (const auto& x : cl.ops) {
    all.push_back(x.op);
    if (x.name[0] == 'e') raising.push_back(x.op);
  }
  std::vector<Weight> found;
  int sum = 0;
  for (const auto& [w, block] : ws) {
    std::vector<SVec> hw;
    for (int p : {0, 1}) {
      std::vector<int> part;
      for (int b : block)
        if (space->parity(b) == p) part.push_back(b);
      if (part.empty()) continue;
      auto sub = SuperSpace::subspace(space, part);
      std::vector<int> rows(space->dim());
      for (int i = 0; i < space->dim(); ++i) rows[i] = i;
      std::vector<SOp> cut;
      for (const auto& x : raising) cut.push_back(x.restrict(sub, part, space, rows));
      for (const auto& k : cut.empty() ? std::vector<SVec>{} : joint_kernel(cut)) {
        SVec y;
        for (const auto& [t, c] : k.entries()) y.push_back(part[t], c);
        hw.push_back(y);
      }
      if (cut.empty())
        for (int b : part) hw.push_back(SVec::unit(b));
    }
    if (hw.empty()) continue;
    found.push_back(w);
    const Subspace s = closure(all, {hw.front()});
    const int inside = span_rank(hw) + s.dim() - span_rank(hw, s.basis);
    sum += s.dim() * static_cast<int>(hw.size()) / inside;
  }
  std::vector<Weight> cand;
  for (const auto& lam : enumerate_strict_partitions(m, n)) cand.push_back(lam.as_weight(n));
  std::sort(cand.begin(), cand.end());
  r.add("classical_hwv_weights", found == cand, nullptr, {{"found", weights_json(found)}, {"expected", weights_json(cand)}});
  r.add("classical_census_closure", sum == space->dim(), nullptr, {{"sum", sum}, {"total", space->dim()}});
  return r;
}

}  // namespace qhowe
