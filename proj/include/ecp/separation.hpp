#pragma once

#include <vector>

#include "ecp/cut_row.hpp"
#include "ecp/graph.hpp"

namespace ecp {

struct SeparationOptions {
  double violation_eps = 1e-5;  // a cut counts as violated only beyond this
  int cut_round_target = 0;     // 0 means n; enumerated families join a round
                                // only when the greedy ones fall short of it
  bool enable_new_families = true;  // BC+ vs BC switch
};

/// Separation routines over a fractional point x (the full (x,w) vector).
/// Stateless with respect to the point; caches alpha(N(u)) per vertex.
class Separator {
 public:
  Separator(const Graph& g, SeparationOptions opts);

  /// One cutting round: greedy clique (+ clique-neighborhood scan) and
  /// 2-rank separation; when fewer than cut_round_target cuts were found,
  /// also the enumerated families (block, subneighborhood with S = N(u),
  /// outside-neighborhood) and the greedy S-color routine; symmetry cuts are
  /// always scanned. The result is deduplicated by family tag.
  std::vector<CutRow> round(const std::vector<double>& point);

  std::vector<CutRow> clique_and_clique_neighborhood(const std::vector<double>& point);
  std::vector<CutRow> two_rank(const std::vector<double>& point);
  std::vector<CutRow> enumerated_families(const std::vector<double>& point);
  std::vector<CutRow> s_color(const std::vector<double>& point);
  std::vector<CutRow> symmetry(const std::vector<double>& point);

 private:
  int alpha_neighborhood(int u);
  bool violated(const CutRow& row, const std::vector<double>& point) const;

  const Graph& g_;
  SeparationOptions opts_;
  std::vector<int> alpha_cache_;
};

}  // namespace ecp
