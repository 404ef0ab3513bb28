#pragma once

#include <memory>
#include <vector>

#include "ecp/cut_row.hpp"
#include "ecp/model.hpp"
#include "ecp/rank.hpp"
#include "ecp/simplex.hpp"

namespace ecp {

enum class LpStatus { Optimal, Infeasible, IterationLimit };

struct LpSolution {
  LpStatus status = LpStatus::IterationLimit;
  std::vector<double> values;  // structural variables only
  double objective_value = 0.0;
  std::vector<double> duals;  // one per row, in instance row order
};

struct LpOptions {
  int max_pivots = 50000;
  double feas_tol = 1e-7;
  int bland_after_degenerate = 1000;
};

/// Columns all live in [0,1] (fixings collapse an interval to a point);
/// objective is minimize sum_j w_j unless overridden.
struct LpInstance {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<double> lower, upper;
  std::vector<CutRow> rows;
};

/// The relaxation of a model: its rows, 0/1 boxes, fixings collapsed.
LpInstance relaxation_instance(const Model& m);

LpSolution solve(const LpInstance& inst, const LpOptions& opts = {});

/// Appends the rows to the instance and re-solves. The warm solution can
/// only influence running time; the optimum is that of the extended row set.
LpSolution resolve_with_rows(LpInstance& inst, const std::vector<CutRow>& new_rows,
                             const LpSolution& warm, const LpOptions& opts = {});

struct ExactLpSolution {
  LpStatus status = LpStatus::IterationLimit;
  BigRat objective_value;
  std::vector<BigRat> values;
};

/// Exact rational optimum. Runs the floating solve first and certifies its
/// basis with rational arithmetic, polishing with exact pivots when the
/// certificate fails; falls back to a full exact solve if needed.
ExactLpSolution solve_exact(const LpInstance& inst, const LpOptions& opts = {});

/// Stateful LP used by the branch-and-cut search: rows accumulate (model
/// rows activated lazily plus separated cuts), bounds change per node, and
/// the dual simplex warm-starts from the previous basis throughout.
class IncrementalLp {
 public:
  IncrementalLp(int num_vars, std::vector<double> objective, LpOptions opts = {});
  ~IncrementalLp();

  /// Returns a stable handle for the row.
  int add_row(const CutRow& row);
  int num_rows() const;
  const CutRow& row(int handle) const;

  void set_bounds(int var, double lo, double hi);

  /// Removes the given rows where possible (a row whose slack is nonbasic is
  /// kept); returns the handles actually removed.
  std::vector<int> remove_rows(const std::vector<int>& handles);

  LpSolution solve();

  /// Slack of a row at the last solution (rhs - activity, sign-normalized so
  /// nonnegative means satisfied for inequalities).
  double slack(int handle) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ecp
