#include "qhowe/queer.hpp"

#include <random>
#include <sstream>

namespace qhowe {

Param opposite(Param p) { return p == Param::q ? Param::qinv : Param::q; }
std::string to_string(Param p) { return p == Param::q ? "q" : "qinv"; }

std::vector<mpq_class> sample_points(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(2, 997), den(1, 997);
  std::vector<mpq_class> pts;
  while (static_cast<int>(pts.size()) < trials) {
    mpq_class c(num(rng), den(rng));
    c.canonicalize();
    if (c == 1) continue;
    pts.push_back(c);
  }
  return pts;
}

namespace {

int vpos(int n, int a) { return a < 0 ? a + n : a + n - 1; }

std::string witness_label(const SpacePtr& s, int col) { return s->label(col).str(); }

// First column on which two operators differ, or -1.
int first_difference(const SOp& a, const SOp& b) {
  for (int c = 0; c < a.dom()->dim(); ++c)
    if (a.col(c) != b.col(c)) return c;
  return -1;
}

}  // namespace

QueerRep QueerRep::mapped(const std::function<RatFunc(const RatFunc&)>& f, const AlgebraSpec& target) const {
  QueerRep r{target, space, {}, odd_unit_sq};
  for (const auto& [key, op] : gens) r.gens.emplace(key, op.map_entries(f));
  return r;
}

std::vector<std::pair<int, int>> generator_indices(int n) {
  std::vector<std::pair<int, int>> r;
  const auto idx = index_set(n);
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = a; b < idx.size(); ++b) r.emplace_back(idx[a], idx[b]);
  return r;
}

int phi(int i, int j) { return sgn(par(j)) * ((i == j) + (i == -j)); }

int theta(int i, int j, int k) { return sgn(par(i) * par(j) + par(j) * par(k) + par(k) * par(i)); }

SOp s_matrix(const AlgebraSpec& spec) {
  const int n = spec.n;
  auto v = SuperSpace::vector_space(n);
  auto vv = SuperSpace::tensor(v, v);
  const RatFunc qv = spec.qv(), xi = spec.xi();
  SOp s(vv, vv, 0);
  auto e = [&](int a, int b) { return SOp::unit(v, vpos(n, a), vpos(n, b)); };
  for (int i : index_set(n))
    for (int j : index_set(n)) {
      const int p = phi(i, j);
      s = s + qv.pow(p) * graded_tensor(e(i, i), e(j, j), vv, vv);
    }
  for (int i : index_set(n))
    for (int j : index_set(n)) {
      if (!(i < j)) continue;
      SOp left = e(j, i) + e(-j, -i);
      s = s + (xi * RatFunc(sgn(par(i)))) * graded_tensor(left, e(i, j), vv, vv);
    }
  return s;
}

QueerRep vector_rep(const AlgebraSpec& spec) {
  const int n = spec.n;
  QueerRep r{spec, SuperSpace::vector_space(n), {}};
  const RatFunc qv = spec.qv(), xi = spec.xi();
  for (auto [i, j] : generator_indices(n)) {
    SOp op(r.space, r.space, gpar(i, j));
    if (i == j) {
      for (int a : index_set(n)) op.set(vpos(n, a), vpos(n, a), qv.pow(phi(a, j)));
    } else {
      const RatFunc c = xi * RatFunc(sgn(par(i)));
      op.add(vpos(n, j), vpos(n, i), c);
      op.add(vpos(n, -j), vpos(n, -i), c);
    }
    r.gens.emplace(std::make_pair(i, j), std::move(op));
  }
  return r;
}

QueerRep tensor_product(const QueerRep& a, const QueerRep& b) {
  if (a.spec.n != b.spec.n || a.spec.param != b.spec.param) throw std::invalid_argument("tensor of different algebras");
  QueerRep r{a.spec, SuperSpace::tensor(a.space, b.space), {}};
  const auto idx = index_set(a.n());
  for (auto [i, j] : generator_indices(a.n())) {
    SOp sum(r.space, r.space, gpar(i, j));
    for (int k : idx)
      if (i <= k && k <= j) sum = sum + graded_tensor(a.L(i, k), b.L(k, j), r.space, r.space);
    r.gens.emplace(std::make_pair(i, j), std::move(sum));
  }
  return r;
}

QueerRep tensor_rep(const QueerRep& rep, int m) {
  if (m < 1) throw std::invalid_argument("tensor power must be >= 1");
  QueerRep r = rep;
  for (int k = 1; k < m; ++k) r = tensor_product(r, rep);
  return r;
}

std::vector<NamedOp> ChevalleyOps::named() const {
  std::vector<NamedOp> r;
  for (int i = 0; i < n; ++i) {
    const std::string s = std::to_string(i + 1);
    r.push_back({"k" + s, k[i]});
    r.push_back({"kinv" + s, kinv[i]});
    r.push_back({"kbar" + s, kbar[i]});
  }
  for (int j = 0; j + 1 < n; ++j) {
    const std::string s = std::to_string(j + 1);
    r.push_back({"e" + s, e[j]});
    r.push_back({"f" + s, f[j]});
    r.push_back({"ebar" + s, ebar[j]});
    r.push_back({"fbar" + s, fbar[j]});
  }
  return r;
}

std::vector<SOp> ChevalleyOps::all() const {
  std::vector<SOp> r;
  for (auto& x : named()) r.push_back(x.op);
  return r;
}

std::vector<SOp> ChevalleyOps::raising() const {
  std::vector<SOp> r = e;
  r.insert(r.end(), ebar.begin(), ebar.end());
  return r;
}

ChevalleyOps ChevalleyOps::restricted(const SpacePtr& sub, const std::vector<int>& positions) const {
  ChevalleyOps r;
  r.n = n;
  r.space = sub;
  r.param = param;
  r.qv = qv;
  auto cut = [&](const std::vector<SOp>& xs) {
    std::vector<SOp> out;
    for (const auto& x : xs) out.push_back(x.restrict(sub, positions, sub, positions));
    return out;
  };
  r.k = cut(k);
  r.kinv = cut(kinv);
  r.kbar = cut(kbar);
  r.e = cut(e);
  r.f = cut(f);
  r.ebar = cut(ebar);
  r.fbar = cut(fbar);
  return r;
}

ChevalleyOps chevalley_ops(const QueerRep& rep) {
  ChevalleyOps c;
  c.n = rep.n();
  c.space = rep.space;
  c.param = rep.spec.param;
  c.qv = rep.spec.qv();
  const RatFunc xinv = rep.spec.xi().inv();
  for (int i = 1; i <= c.n; ++i) {
    c.k.push_back(rep.L(i, i));
    c.kinv.push_back(rep.L(-i, -i));
    c.kbar.push_back(-xinv * rep.L(-i, i));
  }
  for (int j = 1; j < c.n; ++j) {
    c.e.push_back(-xinv * (rep.L(j + 1, j + 1) * rep.L(-j - 1, -j)));
    c.f.push_back(xinv * (rep.L(j, j + 1) * rep.L(-j - 1, -j - 1)));
    c.ebar.push_back(-xinv * (rep.L(j + 1, j + 1) * rep.L(-j - 1, j)));
    c.fbar.push_back(-xinv * (rep.L(-j, j + 1) * rep.L(-j - 1, -j - 1)));
  }
  return c;
}

ChevalleyOps chevalley_table(const AlgebraSpec& spec) {
  const int n = spec.n;
  ChevalleyOps c;
  c.n = n;
  c.space = SuperSpace::vector_space(n);
  c.param = spec.param;
  c.qv = spec.qv();
  auto v = c.space;
  auto P = [&](int a) { return vpos(n, a); };
  for (int i = 1; i <= n; ++i) {
    SOp k(v, v, 0), ki(v, v, 0), kb(v, v, 1);
    for (int j = 1; j <= n; ++j) {
      const RatFunc w = c.qv.pow(i == j);
      k.set(P(j), P(j), w);
      k.set(P(-j), P(-j), w);
      ki.set(P(j), P(j), w.inv());
      ki.set(P(-j), P(-j), w.inv());
    }
    kb.set(P(-i), P(i), 1);
    kb.set(P(i), P(-i), 1);
    c.k.push_back(k);
    c.kinv.push_back(ki);
    c.kbar.push_back(kb);
  }
  for (int i = 1; i < n; ++i) {
    SOp e(v, v, 0), f(v, v, 0), eb(v, v, 1), fb(v, v, 1);
    e.set(P(i), P(i + 1), 1);
    e.set(P(-i), P(-i - 1), 1);
    f.set(P(i + 1), P(i), 1);
    f.set(P(-i - 1), P(-i), 1);
    eb.set(P(-i), P(i + 1), 1);
    eb.set(P(i), P(-i - 1), 1);
    fb.set(P(-i - 1), P(i), 1);
    fb.set(P(i + 1), P(-i), 1);
    c.e.push_back(e);
    c.f.push_back(f);
    c.ebar.push_back(eb);
    c.fbar.push_back(fb);
  }
  return c;
}

namespace {

void check_relations_exact(const QueerRep& rep, VerifyReport& rep_out, const std::string& prefix) {
  const int n = rep.n();
  const RatFunc qv = rep.spec.qv(), xi = rep.spec.xi();
  const SOp id = SOp::identity(rep.space);
  json unit_fail = json::array();
  for (int i = 1; i <= n; ++i) {
    for (auto [a, b] : {std::pair{i, -i}, std::pair{-i, i}}) {
      SOp p = rep.L(a, a) * rep.L(b, b);
      int c = first_difference(p, id);
      if (c >= 0) unit_fail.push_back({{"i", a}, {"witness", witness_label(rep.space, c)}});
    }
  }
  rep_out.add(prefix + "unit", unit_fail.empty(), unit_fail.empty() ? json(nullptr) : unit_fail);

  const auto gens = generator_indices(n);
  auto prod = [&](int a, int b, int c, int d) {
    SOp p = rep.L(a, b) * rep.L(c, d);
    return gpar(a, b) && gpar(c, d) ? rep.odd_unit_sq * p : p;
  };
  json quad_fail = json::array();
  int instances = 0;
  for (auto [i, j] : gens)
    for (auto [k, l] : gens) {
      ++instances;
      const int s = sgn((par(i) + par(j)) * (par(k) + par(l)));
      SOp lhs = (qv.pow(phi(j, l)) * RatFunc(s)) * prod(i, j, k, l);
      if (k <= j && j < l) lhs = lhs + (xi * RatFunc(theta(i, j, k))) * prod(i, l, k, j);
      if (i <= -l && -l < j && j <= -k)
        lhs = lhs + (xi * RatFunc(theta(-i, -j, k))) * prod(i, -l, k, -j);
      SOp rhs = qv.pow(phi(i, k)) * prod(k, l, i, j);
      if (k < i && i <= l) rhs = rhs + (xi * RatFunc(theta(i, j, k))) * prod(i, l, k, j);
      if (-j <= k && k < -i && -i <= l)
        rhs = rhs + (xi * RatFunc(theta(-i, -j, k))) * prod(-i, l, -k, j);
      int c = first_difference(lhs, rhs);
      if (c >= 0 && quad_fail.size() < 32)
        quad_fail.push_back({{"ijkl", {i, j, k, l}}, {"witness", witness_label(rep.space, c)}});
      else if (c >= 0)
        quad_fail.push_back({{"ijkl", {i, j, k, l}}});
    }
  rep_out.add(prefix + "quadratic", quad_fail.empty(), quad_fail.empty() ? json(nullptr) : quad_fail,
              {{"instances", instances}, {"failures", quad_fail.size()}});
}

}  // namespace

VerifyReport check_defining_relations(const QueerRep& rep, const CheckOptions& opt) {
  VerifyReport r;
  r.suite = "relations";
  r.params = {{"n", rep.n()}, {"param", to_string(rep.spec.param)}, {"dim", rep.space->dim()},
              {"mode", opt.mode == Mode::exact ? "exact" : "prob"}};
  if (opt.mode == Mode::exact) {
    check_relations_exact(rep, r, "");
    return r;
  }
  int t = 0;
  for (const auto& c : sample_points(opt.trials, opt.seed)) {
    AlgebraSpec s = rep.spec;
    s.base = RatFunc(c);
    // Entries are functions of the exact q; substitute q = c.
    QueerRep spec_rep = rep.mapped([&](const RatFunc& x) { return x.subst(c); }, s);
    check_relations_exact(spec_rep, r, "trial" + std::to_string(t++) + ".");
  }
  return r;
}

std::map<std::pair<int, int>, SOp> antipode(const QueerRep& rep) {
  std::map<std::pair<int, int>, SOp> s;
  const auto idx = index_set(rep.n());
  std::map<int, SOp> dinv;
  for (int i : idx) {
    try {
      dinv.emplace(i, inverse(rep.L(i, i)));
    } catch (const std::domain_error&) {
      throw NonInvertibleDiagonal("L_" + std::to_string(i) + std::to_string(i) + " is singular");
    }
  }
  for (int j : idx)
    for (int i : idx) {
      if (i > j) continue;
      if (i == j) {
        s.emplace(std::make_pair(i, i), dinv.at(i));
        continue;
      }
      SOp acc(rep.space, rep.space, gpar(i, j));
      for (int k : idx)
        if (i <= k && k < j) acc = acc + s.at({i, k}) * rep.L(k, j);
      s.emplace(std::make_pair(i, j), -(acc * dinv.at(j)));
    }
  return s;
}

std::map<std::pair<int, int>, SOp> antipode_inv(const QueerRep& rep) {
  std::map<std::pair<int, int>, SOp> s;
  const auto idx = index_set(rep.n());
  std::map<int, SOp> dinv;
  for (int i : idx) {
    try {
      dinv.emplace(i, inverse(rep.L(i, i)));
    } catch (const std::domain_error&) {
      throw NonInvertibleDiagonal("L_" + std::to_string(i) + std::to_string(i) + " is singular");
    }
  }
  for (int j : idx)
    for (int i : idx) {
      if (i > j) continue;
      if (i == j) {
        s.emplace(std::make_pair(i, i), dinv.at(i));
        continue;
      }
      SOp acc(rep.space, rep.space, gpar(i, j));
      for (int k : idx)
        if (i <= k && k < j) acc = acc + rep.L(k, j) * s.at({i, k});
      s.emplace(std::make_pair(i, j), -(dinv.at(j) * acc));
    }
  return s;
}

QueerRep dual_rep(const QueerRep& rep) {
  const auto s = antipode(rep);
  QueerRep d{rep.spec, SuperSpace::dual(rep.space), {}};
  for (const auto& [key, op] : s) {
    const int px = op.parity();
    SOp x(d.space, d.space, px);
    for (int c = 0; c < rep.space->dim(); ++c)
      for (const auto& [b, v] : op.col(c).entries()) x.set(c, b, sgn(px * rep.space->parity(b)) == 1 ? v : -v);
    d.gens.emplace(key, std::move(x));
  }
  return d;
}

QueerRep sigma_twist(const QueerRep& rep) {
  const auto sinv = antipode_inv(rep);
  const SOp j = parity_operator(rep.space);
  QueerRep r{rep.spec.flipped(), rep.space, {}};
  for (auto [a, b] : generator_indices(rep.n())) {
    const int s = sgn(par(a) * par(b) + par(b));
    SOp x = RatFunc(s) * sinv.at({-b, -a});
    if (gpar(a, b)) x = x * j;
    r.gens.emplace(std::make_pair(a, b), std::move(x));
  }
  return r;
}

bool is_strict_dominant(const Weight& w) {
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0) return false;
    if (i + 1 < w.size()) {
      if (w[i] < w[i + 1]) return false;
      if (w[i] == w[i + 1] && w[i] != 0) return false;
    }
  }
  return true;
}

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

int q_exponent(const RatFunc& v, const RatFunc& qv) {
  if (v.is_one()) return 0;
  RatFunc up = qv, down = qv.inv();
  for (int mu = 1; mu <= 64; ++mu) {
    if (v == up) return mu;
    if (v == down) return -mu;
    up *= qv;
    down /= qv;
  }
  throw NonDiagonalCartan("eigenvalue " + v.str() + " is not a power of q");
}

std::map<Weight, std::vector<int>> weight_spaces(const ChevalleyOps& ops) {
  std::map<Weight, std::vector<int>> r;
  for (int b = 0; b < ops.space->dim(); ++b) {
    Weight w(ops.n);
    for (int i = 0; i < ops.n; ++i) {
      const SVec& col = ops.k[i].col(b);
      if (col.nnz() != 1 || col.entries()[0].first != b)
        throw NonDiagonalCartan("k" + std::to_string(i + 1) + " is not diagonal at " + ops.space->label(b).str());
      w[i] = q_exponent(col.entries()[0].second, ops.qv);
    }
    r[w].push_back(b);
  }
  return r;
}

std::vector<SVec> highest_weight_vectors(const ChevalleyOps& ops, const Weight& lambda) {
  const auto ws = weight_spaces(ops);
  auto it = ws.find(lambda);
  if (it == ws.end()) return {};
  const auto& block = it->second;
  std::vector<int> all_rows(ops.space->dim());
  for (int i = 0; i < ops.space->dim(); ++i) all_rows[i] = i;
  std::vector<SVec> out;
  for (int p : {0, 1}) {
    std::vector<int> part;
    for (int b : block)
      if (ops.space->parity(b) == p) part.push_back(b);
    if (part.empty()) continue;
    auto sub = SuperSpace::subspace(ops.space, part);
    std::vector<SOp> cut;
    for (const auto& x : ops.raising()) cut.push_back(x.restrict(sub, part, ops.space, all_rows));
    std::vector<SVec> local;
    if (cut.empty()) {
      for (size_t t = 0; t < part.size(); ++t) local.push_back(SVec::unit(static_cast<int>(t)));
    } else {
      local = joint_kernel(cut);
    }
    for (const auto& v : local) {
      SVec w;
      for (const auto& [t, c] : v.entries()) w.push_back(part[t], c);
      out.push_back(std::move(w));
    }
  }
  return out;
}

Subspace generate_submodule(const QueerRep& rep, const std::vector<SVec>& seeds) {
  std::vector<SOp> gens;
  for (const auto& [key, op] : rep.gens) gens.push_back(op);
  return closure(gens, seeds);
}

SOp omega_map(int n) {
  auto v = SuperSpace::vector_space(n);
  SOp w(v, v, 1);
  for (int a : index_set(n)) w.set(vpos(n, -a), vpos(n, a), RatFunc(sgn(par(a))));
  return w;
}

const SOp& ClassicalOps::get(const std::string& name) const {
  for (const auto& x : ops)
    if (x.name == name) return x.op;
  throw std::out_of_range("no classical operator " + name);
}

SOp specialize_op(const SOp& op, const mpq_class& c, const std::string& what) {
  try {
    return op.map_entries([&](const RatFunc& x) { return RatFunc(x.specialize(c)); });
  } catch (const PoleAtPoint& p) {
    throw PoleAtPoint(what.empty() ? p.what() : what + ": " + p.what());
  }
}

ClassicalOps classical_limit(const ChevalleyOps& ops) {
  ClassicalOps r;
  const SOp id = SOp::identity(ops.space);
  const RatFunc scale = (ops.qv - RatFunc(1)).inv();
  for (int i = 0; i < ops.n; ++i)
    r.ops.push_back({"h" + std::to_string(i + 1), specialize_op(scale * (ops.k[i] - id), 1, "h" + std::to_string(i + 1))});
  for (const auto& x : ops.named()) {
    if (x.name[0] == 'k' && x.name.rfind("kbar", 0) != 0) continue;
    r.ops.push_back({x.name, specialize_op(x.op, 1, x.name)});
  }
  return r;
}

GenWord GenWord::gen(int i, int j) {
  if (i > j) throw std::invalid_argument("generator L_ij needs i <= j");
  return GenWord{{{RatFunc(1), {{i, j}}}}};
}

GenWord GenWord::one() { return GenWord{{{RatFunc(1), {}}}}; }

GenWord GenWord::operator*(const GenWord& o) const {
  GenWord r;
  for (const auto& [c1, w1] : terms)
    for (const auto& [c2, w2] : o.terms) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.terms.emplace_back(c1 * c2, std::move(w));
    }
  return r;
}

GenWord GenWord::operator+(const GenWord& o) const {
  GenWord r = *this;
  r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
  return r;
}

GenWord operator*(const RatFunc& c, const GenWord& w) {
  GenWord r = w;
  for (auto& t : r.terms) t.first = c * t.first;
  return r;
}

int GenWord::parity() const {
  if (terms.empty()) return 0;
  int p = 0;
  for (auto [i, j] : terms.front().second) p += gpar(i, j);
  return p & 1;
}

SOp GenWord::eval(const QueerRep& rep) const {
  SOp sum(rep.space, rep.space, parity());
  for (const auto& [c, w] : terms) {
    SOp x = SOp::identity(rep.space);
    for (auto [i, j] : w) x = x * rep.L(i, j);
    sum = sum + c * x;
  }
  return sum;
}

std::string GenWord::str() const {
  std::ostringstream os;
  for (size_t t = 0; t < terms.size(); ++t) {
    if (t) os << " + ";
    os << terms[t].first.str();
    for (auto [i, j] : terms[t].second) os << "*L[" << i << "," << j << "]";
  }
  return os.str();
}

}  // namespace qhowe
