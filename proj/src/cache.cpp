#include "qhowe/cache.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace qhowe {

namespace {

json labels_json(const SpacePtr& v) {
  json a = json::array();
  for (const auto& l : v->labels()) a.push_back(l.str());
  return a;
}

json parity_json(const SpacePtr& v) {
  json a = json::array();
  for (int i = 0; i < v->dim(); ++i) a.push_back(v->parity(i));
  return a;
}

SpacePtr space_from(const json& labels, const json& parity) {
  std::vector<Label> ls;
  std::vector<int> ps;
  for (const auto& s : labels) ls.push_back(parse_label(s.get<std::string>()));
  for (const auto& p : parity) ps.push_back(p.get<int>());
  return std::make_shared<const SuperSpace>(std::move(ls), std::move(ps));
}

std::string param_tag(const AlgebraSpec& spec) { return to_string(spec.param); }

json read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) return nullptr;
  try {
    return json::parse(in);
  } catch (const json::parse_error&) {
    return nullptr;
  }
}

void write_file(const std::filesystem::path& p, const json& j) {
  std::filesystem::create_directories(p.parent_path());
  const auto tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump() << "\n";
  }
  std::filesystem::rename(tmp, p);
}

}  // namespace

Label parse_label(const std::string& s) {
  Label l;
  const size_t open = s.find('(');
  if (open == std::string::npos) {
    l.name = s;
    return l;
  }
  if (s.back() != ')') throw std::invalid_argument("bad label: " + s);
  l.name = s.substr(0, open);
  std::stringstream in(s.substr(open + 1, s.size() - open - 2));
  std::string tok;
  while (std::getline(in, tok, ',')) l.word.push_back(std::stoi(tok));
  return l;
}

json space_to_json(const SpacePtr& v) { return {{"labels", labels_json(v)}, {"parity", parity_json(v)}}; }

SpacePtr space_from_json(const json& j) { return space_from(j.at("labels"), j.at("parity")); }

json op_to_json(const SOp& op) {
  std::vector<std::array<std::string, 3>> rows;
  for (const auto& [rc, v] : op.entries())
    rows.push_back({op.cod()->label(rc.first).str(), op.dom()->label(rc.second).str(), v.str()});
  std::sort(rows.begin(), rows.end());
  json entries = json::array();
  for (const auto& r : rows) entries.push_back({r[0], r[1], r[2]});
  return {{"domain", labels_json(op.dom())},     {"domain_parity", parity_json(op.dom())},
          {"codomain", labels_json(op.cod())},   {"codomain_parity", parity_json(op.cod())},
          {"parity", op.parity()},               {"entries", entries}};
}

SOp op_from_json(const json& j, SpacePtr dom, SpacePtr cod) {
  if (!dom) dom = space_from(j.at("domain"), j.at("domain_parity"));
  if (!cod) cod = space_from(j.at("codomain"), j.at("codomain_parity"));
  SOp op(dom, cod, j.at("parity").get<int>());
  for (const auto& e : j.at("entries")) {
    const int r = cod->index(parse_label(e[0].get<std::string>()));
    const int c = dom->index(parse_label(e[1].get<std::string>()));
    if (r < 0 || c < 0) throw std::invalid_argument("cache entry label not in space");
    op.set(r, c, RatFunc::parse(e[2].get<std::string>()));
  }
  return op;
}

OperatorCache::OperatorCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

bool OperatorCache::usable(const AlgebraSpec& spec) const { return enabled() && spec.base == RatFunc::q(); }

std::filesystem::path OperatorCache::rep_path(const AlgebraSpec& spec, int m) const {
  return dir_ / ("rep_n" + std::to_string(spec.n) + "_" + param_tag(spec) + "_m" + std::to_string(m) + "_v" +
                 std::to_string(kCacheFormatVersion) + ".json");
}

std::filesystem::path OperatorCache::hc_path(const AlgebraSpec& spec, int m) const {
  return dir_ / ("hc_n" + std::to_string(spec.n) + "_m" + std::to_string(m) + "_" + param_tag(spec) +
                 "_tensor_v" + std::to_string(kCacheFormatVersion) + ".json");
}

QueerRep OperatorCache::tensor_rep(const AlgebraSpec& spec, int m) {
  if (!usable(spec)) return qhowe::tensor_rep(vector_rep(spec), m);
  const auto path = rep_path(spec, m);
  const json key = {{"n", spec.n}, {"param", param_tag(spec)}, {"m", m}, {"version", kCacheFormatVersion}};
  const json j = read_file(path);
  if (!j.is_null() && j.value("key", json()) == key) {
    QueerRep r{spec, space_from_json(j.at("space")), {}, RatFunc::parse(j.at("odd_unit_sq").get<std::string>())};
    for (const auto& g : j.at("gens"))
      r.gens.emplace(std::pair{g.at("i").get<int>(), g.at("j").get<int>()}, op_from_json(g.at("op"), r.space, r.space));
    ++hits_;
    return r;
  }
  ++misses_;
  QueerRep r = qhowe::tensor_rep(vector_rep(spec), m);
  json gens = json::array();
  for (const auto& [ij, op] : r.gens) gens.push_back({{"i", ij.first}, {"j", ij.second}, {"op", op_to_json(op)}});
  write_file(path, {{"key", key}, {"space", space_to_json(r.space)}, {"odd_unit_sq", r.odd_unit_sq.str()}, {"gens", gens}});
  return r;
}

HCAction OperatorCache::hc_action(const AlgebraSpec& spec, int m) {
  if (!usable(spec)) return hc_tensor_action(spec, m);
  const auto path = hc_path(spec, m);
  const json key = {{"n", spec.n}, {"m", m}, {"param", param_tag(spec)}, {"construction", "tensor"},
                    {"version", kCacheFormatVersion}};
  const json j = read_file(path);
  if (!j.is_null() && j.value("key", json()) == key) {
    HCAction h;
    h.m = m;
    h.param = spec.param;
    h.qv = spec.qv();
    h.space = space_from_json(j.at("space"));
    h.clifford_unit_sq = RatFunc::parse(j.at("clifford_unit_sq").get<std::string>());
    for (const auto& t : j.at("T")) h.T.push_back(op_from_json(t, h.space, h.space));
    for (const auto& c : j.at("C")) h.C.push_back(op_from_json(c, h.space, h.space));
    ++hits_;
    return h;
  }
  ++misses_;
  HCAction h = hc_tensor_action(spec, m);
  json ts = json::array(), cs = json::array();
  for (const auto& t : h.T) ts.push_back(op_to_json(t));
  for (const auto& c : h.C) cs.push_back(op_to_json(c));
  write_file(path, {{"key", key}, {"space", space_to_json(h.space)}, {"clifford_unit_sq", h.clifford_unit_sq.str()},
                    {"T", ts}, {"C", cs}});
  return h;
}

}  // namespace qhowe
