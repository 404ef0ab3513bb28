#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ecp/coloring.hpp"
#include "ecp/graph.hpp"

namespace ecp {

struct SolverConfig {
  double time_limit_sec = std::numeric_limits<double>::infinity();
  bool enable_new_families = true;  // BC+ when true, plain BC otherwise
  int cut_round_target = 0;         // 0 means n
  int max_rounds_per_node = 10;
  int oracle_cap = 14;
  std::uint64_t seed = 1;
  double cut_violation_eps = 1e-5;
  int max_lp_pivots = 50000;
  bool audit_cuts = false;     // oracle-check emitted family cuts (small n)
  std::ostream* node_log = nullptr;
};

struct SolveStats {
  long long nodes = 0;
  double time_sec = 0.0;
  std::map<std::string, long long> cuts_by_family;
  int best_k = 0;
  bool proven_optimal = false;
  double root_lp_before_cuts = 0.0;
  double root_lp_after_cuts = 0.0;
  // audit trail for separator soundness
  long long cuts_emitted = 0;
  double min_emission_violation = std::numeric_limits<double>::infinity();
  bool lp_bound_monotone = true;
  long long audited_cuts = 0;
  long long audit_failures = 0;
};

struct BnbNode {
  std::vector<std::pair<int, int>> fixings;  // (variable, 0/1)
  int depth = 0;
  double parent_bound = -std::numeric_limits<double>::infinity();
  long long id = 0;
};

/// The fractional variable with the largest min(x, 1-x); x variables take
/// priority over w, ties break to the smallest (color, vertex). Throws
/// ContractViolation when the point is integral within tol.
int select_branch_variable(const std::vector<double>& point, int n, double tol = 1e-6);

/// Branch-and-cut solve: best-bound search, lazily activated conflict rows,
/// separation rounds per node, greedy initial and rounding primal
/// heuristics. Returns the best coloring found and the run statistics.
std::pair<EquitableColoring, SolveStats> solve_ecp(const Graph& g,
                                                   const SolverConfig& config = {});

}  // namespace ecp
