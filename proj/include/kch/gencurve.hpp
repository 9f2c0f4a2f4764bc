#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kch/laurent.hpp"
#include "kch/power_series.hpp"

namespace kch {

/// Coefficient variable of generating-function terms: s = q^{1/2}.
const VarSet& gf_vars();

struct Curve {
  std::string id;
  Rat weight;
  int chi = 0;   // Euler characteristic
  int m = 0;     // x-class
  int k = 0;     // t-class
  int slk = 0;   // self-linking
};

/// Rigid-curve catalog with symmetric integer linking data. The diagonal
/// entry lk(u, u) is the linking of two distinct copies of the same curve;
/// self-data of a single vertex lives in slk. Missing pairs link 0.
class CurveCatalog {
 public:
  void add_curve(Curve c);
  void set_linking(const std::string& a, const std::string& b, int lk);

  const std::vector<Curve>& curves() const { return curves_; }
  const Curve& curve(const std::string& id) const;
  bool has(const std::string& id) const;
  int linking(const std::string& a, const std::string& b) const;

 private:
  std::vector<Curve> curves_;
  std::map<std::string, size_t> index_;
  std::map<std::pair<std::string, std::string>, int> lk_;
};

/// One term of the generating function: coefficient in Q[s^{+-1}] and the
/// exponents (total x-class, total t-class, total Euler characteristic).
struct GFTerm {
  LaurentPoly coeff;  // over gf_vars()
  int m = 0;
  int k = 0;
  int chi = 0;
};

/// Weight of one decorated simple graph: product of vertex weights, s^{2 lk}
/// per edge, s^{slk} per vertex; chi totals Sum chi(v) - #edges.
GFTerm graph_weight(const CurveCatalog& catalog,
                    const std::vector<std::string>& vertices,
                    const std::vector<std::pair<size_t, size_t>>& edges);

/// Sum of graph_weight over all connected simple graphs on multisets of at
/// most max_vertices catalog curves, each isomorphism class weighted by
/// 1/|Aut|. Terms are merged by (m, k, chi) and sorted by that key.
std::vector<GFTerm> potential_truncated(const CurveCatalog& catalog, int max_vertices);

/// Sum over odd m <= order of 2/(2^m m!) gs^m; equals the series expansion
/// of e^{gs/2} - e^{-gs/2} truncated at the same order.
PowerSeries resolution_weight_series(int order);

}  // namespace kch
