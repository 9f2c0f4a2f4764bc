#include "kch/gencurve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kch {

const VarSet& gf_vars() {
  static const VarSet vs({"s"});
  return vs;
}

void CurveCatalog::add_curve(Curve c) {
  if (index_.count(c.id))
    throw std::invalid_argument("CurveCatalog: duplicate curve id '" + c.id + "'");
  index_.emplace(c.id, curves_.size());
  curves_.push_back(std::move(c));
}

void CurveCatalog::set_linking(const std::string& a, const std::string& b, int lk) {
  if (!has(a) || !has(b))
    throw std::invalid_argument("CurveCatalog: linking references unknown curve");
  auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  lk_[key] = lk;
}

const Curve& CurveCatalog::curve(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw std::invalid_argument("CurveCatalog: unknown curve id '" + id + "'");
  return curves_[it->second];
}

bool CurveCatalog::has(const std::string& id) const { return index_.count(id) > 0; }

int CurveCatalog::linking(const std::string& a, const std::string& b) const {
  curve(a);
  curve(b);
  auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  auto it = lk_.find(key);
  return it == lk_.end() ? 0 : it->second;
}

GFTerm graph_weight(const CurveCatalog& catalog,
                    const std::vector<std::string>& vertices,
                    const std::vector<std::pair<size_t, size_t>>& edges) {
  if (vertices.empty()) throw std::invalid_argument("graph_weight: no vertices");
  std::vector<std::pair<size_t, size_t>> seen;
  for (auto [a, b] : edges) {
    if (a >= vertices.size() || b >= vertices.size())
      throw std::invalid_argument("graph_weight: edge endpoint out of range");
    if (a == b) throw std::invalid_argument("graph_weight: self-loop");
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    if (std::find(seen.begin(), seen.end(), key) != seen.end())
      throw std::invalid_argument("graph_weight: parallel edge");
    seen.push_back(key);
  }

  Rat w(1);
  long s_exp = 0;
  GFTerm t;
  for (const auto& id : vertices) {
    const Curve& c = catalog.curve(id);
    w *= c.weight;
    s_exp += c.slk;  // e^{slk/2 g} per vertex
    t.m += c.m;
    t.k += c.k;
    t.chi += c.chi;
  }
  for (auto [a, b] : edges)
    s_exp += 2L * catalog.linking(vertices[a], vertices[b]);  // e^{lk g} per edge
  t.chi -= static_cast<int>(edges.size());
  t.coeff = LaurentPoly::monomial(gf_vars(), {static_cast<int32_t>(s_exp)}, w);
  return t;
}

namespace {

// all connected labeled simple graphs on n vertices, as edge lists
std::vector<std::vector<std::pair<size_t, size_t>>> connected_graphs(size_t n) {
  std::vector<std::pair<size_t, size_t>> all_edges;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) all_edges.emplace_back(a, b);
  std::vector<std::vector<std::pair<size_t, size_t>>> out;
  size_t m = all_edges.size();
  for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), size_t{0});
    auto find = [&](size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t e = 0; e < m; ++e) {
      if (mask & (size_t{1} << e)) {
        edges.push_back(all_edges[e]);
        parent[find(all_edges[e].first)] = find(all_edges[e].second);
      }
    }
    size_t comps = 0;
    for (size_t v = 0; v < n; ++v)
      if (find(v) == v) ++comps;
    if (comps == 1) out.push_back(std::move(edges));
  }
  return out;
}

}  // namespace

std::vector<GFTerm> potential_truncated(const CurveCatalog& catalog, int max_vertices) {
  if (max_vertices < 1)
    throw std::invalid_argument("potential_truncated: max_vertices must be >= 1");
  if (max_vertices > 7)
    throw std::invalid_argument("potential_truncated: vertex bound too large to enumerate");
  if (catalog.curves().empty()) return {};
  std::map<std::tuple<int, int, int>, LaurentPoly> acc;

  for (int n = 1; n <= max_vertices; ++n) {
    auto graphs = connected_graphs(static_cast<size_t>(n));
    Rat inv_fact(1, factorial(static_cast<unsigned>(n)));
    // labeled vertex assignments summed with 1/n! equal the sum over
    // isomorphism classes weighted by 1/|Aut|
    std::vector<size_t> pick(static_cast<size_t>(n), 0);
    while (true) {
      std::vector<std::string> vertices;
      vertices.reserve(pick.size());
      for (size_t i : pick) vertices.push_back(catalog.curves()[i].id);
      for (const auto& edges : graphs) {
        GFTerm t = graph_weight(catalog, vertices, edges);
        auto key = std::make_tuple(t.m, t.k, t.chi);
        auto it = acc.find(key);
        if (it == acc.end())
          acc.emplace(key, t.coeff.scaled(inv_fact));
        else
          it->second += t.coeff.scaled(inv_fact);
      }
      // next assignment
      size_t pos = 0;
      while (pos < pick.size()) {
        if (++pick[pos] < catalog.curves().size()) break;
        pick[pos++] = 0;
      }
      if (pos == pick.size()) break;
    }
  }

  std::vector<GFTerm> out;
  for (auto& [key, coeff] : acc) {
    if (coeff.is_zero()) continue;
    out.push_back({std::move(coeff), std::get<0>(key), std::get<1>(key), std::get<2>(key)});
  }
  return out;
}

PowerSeries resolution_weight_series(int order) {
  if (order < 1)
    throw std::invalid_argument("resolution_weight_series: order must be >= 1");
  std::vector<Rat> c(static_cast<size_t>(order) + 1, Rat(0));
  for (int m = 1; m <= order; m += 2) {
    // 2 / (2^m m!) = 1 / (2^{m-1} m!)
    Rat w(Int(1), (Int(1) << static_cast<unsigned>(m - 1)) * factorial(static_cast<unsigned>(m)));
    w.canonicalize();
    c[static_cast<size_t>(m)] = w;
  }
  return PowerSeries(std::move(c));
}

}  // namespace kch
