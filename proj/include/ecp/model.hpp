#pragma once

#include <string>
#include <vector>

#include "ecp/cut_row.hpp"
#include "ecp/graph.hpp"

namespace ecp {

/// The 0/1 programming model over x_vj (vertex v gets color j) and w_j
/// (color j is used): assignment equalities, per-edge-per-color conflict
/// rows, w monotonicity, isolated-vertex rows, and the two-sided equity rows
/// telescoped over w (the dummy w_{n+1} is a literal zero, never a variable).
/// Objective: minimize sum_j w_j.
struct Model {
  int n = 0;
  std::vector<CutRow> rows;
  std::vector<int> fixed_to_zero;  // variable ids (from the symmetry strengthening)

  int num_x() const { return n * n; }
  int num_w() const { return n; }
  int num_vars() const { return n * n + n; }
};

/// Builds the model. With strengthen=true the variables x_vj with v < j are
/// fixed to zero (a relaxation-only device; the polytope itself is always
/// taken without these fixings).
Model build_model(const Graph& g, bool strengthen);

/// Equity row coefficient helper: the telescoped lower-side row for color j
/// reads  sum_v x_vj - sum_k c_k w_k >= 0  with c_j = floor(n/j) and
/// c_k = floor(n/k) - floor(n/(k-1)) for k > j; analogously with ceilings
/// for the upper side.
CutRow equity_lower_row(int j, int n);
CutRow equity_upper_row(int j, int n);

/// True iff the point satisfies every row, every fixing, and the 0/1 bounds,
/// each within tol (exact when tol = 0, appropriate for binary vectors).
bool is_feasible_point(const Model& m, const std::vector<double>& point,
                       double tol = 0.0);

/// Plain LP text: `min`, `st`, one row per line, then bounds and fixings.
std::string to_lp_text(const Model& m);

}  // namespace ecp
