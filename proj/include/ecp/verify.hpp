#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ecp/coloring.hpp"
#include "ecp/cut_row.hpp"
#include "ecp/cuts.hpp"
#include "ecp/graph.hpp"
#include "ecp/rank.hpp"

namespace ecp {

/// dim(ECP) predicted from the instance: n^2 - (|A(G)| + 2). Meaningful under
/// the standing assumption (n >= 5 and 2 <= chi_eq <= n-2).
inline int predicted_dimension(int n, int infeasible_count) {
  return n * n - (infeasible_count + 2);
}

struct ConditionBullet {
  std::string name;
  bool holds = false;
};

/// Per-proposition sufficient-condition verdicts for one row. `sufficient`
/// combines the bullets with the proposition's own logic (the 2-rank family
/// needs its two structural bullets plus any one of three alternatives; the
/// other families need every bullet).
struct ConditionReport {
  std::string proposition;
  bool applicable = false;
  std::vector<ConditionBullet> bullets;
  bool sufficient = false;
};

/// Caches the eqcol lists of one instance and answers polytope questions:
/// dimension, face dimensions, facet verdicts, validity, and the
/// per-proposition sufficient conditions.
class Verifier {
 public:
  explicit Verifier(Graph g, OracleLimits limits = {});

  const Graph& graph() const { return graph_; }
  int n() const { return graph_.num_vertices(); }

  const std::set<int>& infeasible_ks();
  int chi_eq();
  bool meets_standing_assumption();

  const std::vector<EquitableColoring>& eqcols(int k);
  long long num_eqcols();

  bool check_validity(const CutRow& row);

  /// Affine dimension of all eqcol vectors, exact over the rationals.
  const AffineRankReport& ecp_dimension();

  /// Affine dimension of the eqcol vectors tight at the row; -1 when the
  /// face is empty. Throws ParameterError when the row is not valid.
  AffineRankReport face_dimension(const CutRow& row);

  bool is_facet(const CutRow& row);

  ConditionReport check_sufficient_conditions(const CutRow& row);

  /// Early-exit variant of check_sufficient_conditions(...).sufficient,
  /// cheap enough for bulk audits.
  bool sufficient_conditions_hold(const CutRow& row);

 private:
  std::vector<std::pair<int, int>> sparse_vector(const EquitableColoring& c) const;
  ConditionReport conditions_impl(const CutRow& row, bool early_exit);

  Graph graph_;
  OracleLimits limits_;
  std::map<int, std::vector<EquitableColoring>> eqcols_by_k_;
  std::set<int> infeasible_;
  bool infeasible_ready_ = false;
  AffineRankReport dimension_;
  bool dimension_ready_ = false;
};

/// Seeded sample of distinct connected graphs on n vertices (mixed
/// densities), at most `count` of them.
std::vector<Graph> corpus_graphs(int n, int count, std::uint64_t seed);

}  // namespace ecp
