#include "qhowe/hecke.hpp"

namespace qhowe {

std::vector<SOp> HCAction::generators() const {
  std::vector<SOp> g = T;
  g.insert(g.end(), C.begin(), C.end());
  return g;
}

HCAction hc_tensor_action(const AlgebraSpec& spec, int m, SpacePtr space) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  HCAction h;
  h.m = m;
  h.param = spec.param;
  h.qv = spec.qv();
  h.clifford_unit_sq = RatFunc(-1);
  h.space = space ? space : SuperSpace::tensor_power(SuperSpace::vector_space(spec.n), m);
  const RatFunc xi = spec.xi();
  const int d = h.space->dim();
  for (int a = 0; a + 1 < m; ++a) {
    SOp t(h.space, h.space, 0);
    for (int c = 0; c < d; ++c) {
      const auto& w = h.space->label(c).word;
      const int x = w[a], y = w[a + 1];
      auto sw = w;
      std::swap(sw[a], sw[a + 1]);
      t.add(h.space->index_of_word(sw), c, RatFunc(sgn(par(x) * par(y))) * h.qv.pow(phi(x, y)));
      if (x < y) t.add(c, c, xi);
      if (-x < y) {
        auto ng = w;
        ng[a] = -x;
        ng[a + 1] = -y;
        t.add(h.space->index_of_word(ng), c, RatFunc(sgn(par(y))) * xi);
      }
    }
    h.T.push_back(std::move(t));
  }
  for (int b = 0; b < m; ++b) {
    SOp cb(h.space, h.space, 1);
    for (int c = 0; c < d; ++c) {
      auto w = h.space->label(c).word;
      int e = 0;
      for (int t = 0; t <= b; ++t) e += par(w[t]);
      w[b] = -w[b];
      cb.set(h.space->index_of_word(w), c, RatFunc(sgn(e)));
    }
    h.C.push_back(std::move(cb));
  }
  return h;
}

namespace {

// x^(j) = x^j / [j]! for j = 0.. until the power vanishes.
std::vector<SOp> divided_powers(const SOp& x, const RatFunc& qv) {
  std::vector<SOp> r{SOp::identity(x.dom())};
  SOp p = SOp::identity(x.dom());
  for (int j = 1;; ++j) {
    p = x * p;
    if (p.is_zero()) break;
    r.push_back(q_number_at(qv, j, true).inv() * p);
  }
  return r;
}

SOp k_power(const SOp& k, const SOp& kinv, int p) { return p >= 0 ? k.pow(p) : kinv.pow(-p); }

}  // namespace

SOp braid_operator(const ChevalleyOps& ops, int a) {
  if (a < 1 || a >= ops.n) throw std::invalid_argument("braid index out of range");
  const RatFunc& qv = ops.qv;
  const auto E = divided_powers(ops.e[a - 1], qv);
  const auto F = divided_powers(ops.f[a - 1], qv);
  const SOp &ka = ops.k[a - 1], &kai = ops.kinv[a - 1], &kb = ops.k[a], &kbi = ops.kinv[a];
  SOp sum(ops.space, ops.space, 0);
  const int ni = static_cast<int>(E.size()), nj = static_cast<int>(F.size());
  for (int i = 0; i < ni; ++i)
    for (int j = 0; j < nj; ++j) {
      SOp ef = E[i] * F[j];
      if (ef.is_zero()) continue;
      for (int k = 0; k < ni; ++k) {
        SOp term = ef * E[k];
        if (term.is_zero()) continue;
        term = term * (k_power(ka, kai, k - i) * k_power(kb, kbi, i - k));
        const int e = k * (k - j) - i * (i - j + k) + j - 1;
        sum = sum + (RatFunc(sgn(j)) * qv.pow(e)) * term;
      }
    }
  return sum;
}

HCAction zero_weight_hc(const ChevalleyOps& ops) {
  const auto ws = weight_spaces(ops);
  auto it = ws.find(Weight(ops.n, 1));
  if (it == ws.end()) throw EmptyZeroWeight("zero weight space is empty");
  const auto& block = it->second;
  HCAction h;
  h.m = ops.n;
  h.param = opposite(ops.param);
  h.qv = ops.qv.inv();
  h.space = SuperSpace::subspace(ops.space, block);
  for (int a = 1; a < ops.n; ++a) h.T.push_back(braid_operator(ops, a).restrict(h.space, block, h.space, block));
  for (int b = 0; b < ops.n; ++b) h.C.push_back(ops.kbar[b].restrict(h.space, block, h.space, block));
  return h;
}

namespace {

json first_witness(const SOp& lhs, const SOp& rhs) {
  for (int c = 0; c < lhs.dom()->dim(); ++c)
    if (lhs.col(c) != rhs.col(c)) return lhs.dom()->label(c).str();
  return nullptr;
}

}  // namespace

VerifyReport hc_check_with(const HCAction& h, const RatFunc& qv) {
  VerifyReport r;
  r.suite = "hc";
  r.params = {{"m", h.m}, {"dim", h.space->dim()}, {"qv", qv.str()}};
  const SOp id = SOp::identity(h.space);
  const SOp zero = SOp::zero(h.space, h.space);
  const int m = h.m;
  auto family = [&](const std::string& name, const std::vector<std::pair<std::string, std::pair<SOp, SOp>>>& eqs) {
    json fails = json::array();
    for (const auto& [inst, sides] : eqs) {
      json w = first_witness(sides.first, sides.second);
      if (!w.is_null()) fails.push_back({{"instance", inst}, {"witness", w}});
    }
    r.add(name, fails.empty(), fails.empty() ? json(nullptr) : fails, {{"instances", eqs.size()}});
  };
  std::vector<std::pair<std::string, std::pair<SOp, SOp>>> e1, e2, e3, e4, e5, e6, e7;
  for (int a = 0; a + 1 < m; ++a) {
    SOp lhs = (h.T[a] - qv * id) * (h.T[a] + qv.inv() * id);
    e1.push_back({"a=" + std::to_string(a + 1), {lhs, zero}});
  }
  for (int a = 0; a + 2 < m; ++a) {
    const SOp &x = h.T[a], &y = h.T[a + 1];
    e2.push_back({"a=" + std::to_string(a + 1), {x * y * x, y * x * y}});
  }
  for (int a = 0; a + 1 < m; ++a)
    for (int b = a + 2; b + 1 < m; ++b)
      e3.push_back({"a=" + std::to_string(a + 1) + ",b=" + std::to_string(b + 1), {h.T[a] * h.T[b], h.T[b] * h.T[a]}});
  for (int a = 0; a < m; ++a)
    e4.push_back({"a=" + std::to_string(a + 1), {h.clifford_unit_sq * (h.C[a] * h.C[a]), id}});
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      e5.push_back({"a=" + std::to_string(a + 1) + ",b=" + std::to_string(b + 1), {h.C[a] * h.C[b], -(h.C[b] * h.C[a])}});
  for (int a = 0; a + 1 < m; ++a)
    e6.push_back({"a=" + std::to_string(a + 1), {h.T[a] * h.C[a], h.C[a + 1] * h.T[a]}});
  for (int a = 0; a + 1 < m; ++a)
    for (int b = 0; b < m; ++b)
      if (b != a && b != a + 1)
        e7.push_back({"a=" + std::to_string(a + 1) + ",b=" + std::to_string(b + 1), {h.T[a] * h.C[b], h.C[b] * h.T[a]}});
  family("HC1", e1);
  family("HC2", e2);
  family("HC3", e3);
  family("HC4", e4);
  family("HC5", e5);
  family("HC6", e6);
  family("HC7", e7);
  return r;
}

VerifyReport hc_check(const HCAction& h) {
  VerifyReport r = hc_check_with(h, h.qv);
  r.params["param"] = to_string(h.param);
  return r;
}

HCAction specialize_action(const HCAction& h, const mpq_class& c) {
  HCAction s = h;
  s.qv = RatFunc(h.qv.specialize(c));
  s.clifford_unit_sq = RatFunc(h.clifford_unit_sq.specialize(c));
  for (size_t a = 0; a < h.T.size(); ++a) s.T[a] = specialize_op(h.T[a], c, "T" + std::to_string(a + 1));
  for (size_t b = 0; b < h.C.size(); ++b) s.C[b] = specialize_op(h.C[b], c, "C" + std::to_string(b + 1));
  return s;
}

}  // namespace qhowe
