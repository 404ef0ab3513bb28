#include "ecp/lp.hpp"

#include <algorithm>
#include <map>

#include "ecp/errors.hpp"

namespace ecp {

namespace {

char sense_char(Sense s) {
  switch (s) {
    case Sense::LessEqual:
      return 'L';
    case Sense::Equal:
      return 'E';
    case Sense::GreaterEqual:
      return 'G';
  }
  return 'L';
}

template <class Scalar>
std::vector<std::pair<int, Scalar>> to_scalar_coeffs(const CutRow& row) {
  std::vector<std::pair<int, Scalar>> out;
  out.reserve(row.coeffs.size());
  for (auto [var, c] : row.coeffs) out.emplace_back(var, Scalar(c));
  return out;
}

SimplexConfig<double> double_config(const LpOptions& opts) {
  SimplexConfig<double> cfg;
  cfg.feas_tol = opts.feas_tol;
  cfg.pivot_tol = 1e-9;
  cfg.dual_tol = 1e-9;
  cfg.max_pivots = opts.max_pivots;
  cfg.bland_after_degenerate = opts.bland_after_degenerate;
  return cfg;
}

SimplexConfig<BigRat> exact_config(const LpOptions& opts) {
  SimplexConfig<BigRat> cfg;
  cfg.feas_tol = 0;
  cfg.pivot_tol = 0;
  cfg.dual_tol = 0;
  cfg.max_pivots = opts.max_pivots;
  cfg.bland_after_degenerate = opts.bland_after_degenerate;
  return cfg;
}

LpStatus to_status(SimplexStatus s) {
  switch (s) {
    case SimplexStatus::Optimal:
      return LpStatus::Optimal;
    case SimplexStatus::Infeasible:
      return LpStatus::Infeasible;
    case SimplexStatus::IterationLimit:
      return LpStatus::IterationLimit;
  }
  return LpStatus::IterationLimit;
}

template <class Scalar>
void install_instance(BoundedDualSimplex<Scalar>& core, const LpInstance& inst) {
  for (int j = 0; j < inst.num_vars; ++j)
    core.set_bounds(j, Scalar(inst.lower[j]), Scalar(inst.upper[j]));
  for (const auto& row : inst.rows)
    core.add_row(to_scalar_coeffs<Scalar>(row), sense_char(row.sense), Scalar(row.rhs));
}

void check_instance(const LpInstance& inst) {
  if (static_cast<int>(inst.objective.size()) != inst.num_vars ||
      static_cast<int>(inst.lower.size()) != inst.num_vars ||
      static_cast<int>(inst.upper.size()) != inst.num_vars)
    throw ParameterError("lp: instance arrays must match num_vars");
  for (const auto& row : inst.rows)
    for (auto [var, c] : row.coeffs)
      if (var < 0 || var >= inst.num_vars)
        throw ParameterError("lp: row references an unknown column");
}

}  // namespace

LpInstance relaxation_instance(const Model& m) {
  LpInstance inst;
  inst.num_vars = m.num_vars();
  inst.objective.assign(inst.num_vars, 0.0);
  for (int j = 1; j <= m.n; ++j) inst.objective[w_index(j, m.n)] = 1.0;
  inst.lower.assign(inst.num_vars, 0.0);
  inst.upper.assign(inst.num_vars, 1.0);
  for (int var : m.fixed_to_zero) inst.upper[var] = 0.0;
  inst.rows = m.rows;
  return inst;
}

LpSolution solve(const LpInstance& inst, const LpOptions& opts) {
  check_instance(inst);
  BoundedDualSimplex<double> core(inst.num_vars, inst.objective, double_config(opts));
  install_instance(core, inst);
  LpSolution out;
  out.status = to_status(core.solve());
  if (out.status != LpStatus::Infeasible) {
    out.values.resize(inst.num_vars);
    for (int j = 0; j < inst.num_vars; ++j) out.values[j] = core.value(j);
    out.objective_value = core.objective();
    out.duals = core.duals();
  }
  return out;
}

LpSolution resolve_with_rows(LpInstance& inst, const std::vector<CutRow>& new_rows,
                             const LpSolution& warm, const LpOptions& opts) {
  (void)warm;  // the stateless entry point re-solves; IncrementalLp keeps bases
  inst.rows.insert(inst.rows.end(), new_rows.begin(), new_rows.end());
  return solve(inst, opts);
}

ExactLpSolution solve_exact(const LpInstance& inst, const LpOptions& opts) {
  check_instance(inst);
  ExactLpSolution out;

  BoundedDualSimplex<BigRat> exact(inst.num_vars,
                                   std::vector<BigRat>(inst.objective.begin(), inst.objective.end()),
                                   exact_config(opts));
  // exact bounds: the model's boxes are integral, so the double values are safe
  install_instance(exact, inst);

  // float run first; its basis usually certifies directly
  BoundedDualSimplex<double> approx(inst.num_vars, inst.objective, double_config(opts));
  install_instance(approx, inst);
  SimplexStatus approx_status = approx.solve();
  if (approx_status == SimplexStatus::Optimal)
    exact.load_basis(approx.basis_columns(), approx.structural_states());

  SimplexStatus status = exact.solve();
  out.status = to_status(status);
  if (out.status != LpStatus::Infeasible) {
    out.values.resize(inst.num_vars);
    for (int j = 0; j < inst.num_vars; ++j) out.values[j] = exact.value(j);
    out.objective_value = exact.objective();
  }
  return out;
}

// ---------------------------------------------------------------------------

struct IncrementalLp::Impl {
  Impl(int nvars, std::vector<double> obj, LpOptions o)
      : options(o), core(nvars, std::move(obj), double_config(o)), num_vars(nvars) {}

  LpOptions options;
  BoundedDualSimplex<double> core;
  int num_vars;
  std::vector<CutRow> rows_by_handle;
  std::vector<int> handle_to_internal;  // -1 when removed
  std::vector<int> internal_to_handle;
  std::vector<double> last_values;
};

IncrementalLp::IncrementalLp(int num_vars, std::vector<double> objective, LpOptions opts)
    : impl_(std::make_unique<Impl>(num_vars, std::move(objective), opts)) {}

IncrementalLp::~IncrementalLp() = default;

int IncrementalLp::add_row(const CutRow& row) {
  int internal = impl_->core.add_row(to_scalar_coeffs<double>(row),
                                     sense_char(row.sense),
                                     static_cast<double>(row.rhs));
  int handle = static_cast<int>(impl_->rows_by_handle.size());
  impl_->rows_by_handle.push_back(row);
  impl_->handle_to_internal.push_back(internal);
  if (static_cast<int>(impl_->internal_to_handle.size()) <= internal)
    impl_->internal_to_handle.resize(internal + 1, -1);
  impl_->internal_to_handle[internal] = handle;
  return handle;
}

int IncrementalLp::num_rows() const { return impl_->core.num_rows(); }

const CutRow& IncrementalLp::row(int handle) const {
  return impl_->rows_by_handle.at(handle);
}

void IncrementalLp::set_bounds(int var, double lo, double hi) {
  impl_->core.set_bounds(var, lo, hi);
}

std::vector<int> IncrementalLp::remove_rows(const std::vector<int>& handles) {
  std::vector<int> internal, removed;
  for (int h : handles) {
    int id = impl_->handle_to_internal.at(h);
    if (id >= 0 && impl_->core.slack_basic(id)) {
      internal.push_back(id);
      removed.push_back(h);
    }
  }
  if (internal.empty()) return removed;
  impl_->core.remove_rows(internal);
  // recompute the handle <-> internal maps after compaction
  std::sort(internal.begin(), internal.end());
  std::vector<int> new_internal_to_handle;
  for (std::size_t id = 0; id < impl_->internal_to_handle.size(); ++id) {
    if (std::binary_search(internal.begin(), internal.end(), static_cast<int>(id))) {
      int h = impl_->internal_to_handle[id];
      if (h >= 0) impl_->handle_to_internal[h] = -1;
      continue;
    }
    new_internal_to_handle.push_back(impl_->internal_to_handle[id]);
  }
  impl_->internal_to_handle = std::move(new_internal_to_handle);
  for (std::size_t id = 0; id < impl_->internal_to_handle.size(); ++id) {
    int h = impl_->internal_to_handle[id];
    if (h >= 0) impl_->handle_to_internal[h] = static_cast<int>(id);
  }
  return removed;
}

LpSolution IncrementalLp::solve() {
  LpSolution out;
  out.status = to_status(impl_->core.solve());
  if (out.status != LpStatus::Infeasible) {
    out.values.resize(impl_->num_vars);
    for (int j = 0; j < impl_->num_vars; ++j) out.values[j] = impl_->core.value(j);
    out.objective_value = impl_->core.objective();
    out.duals = impl_->core.duals();
    impl_->last_values = out.values;
  }
  return out;
}

double IncrementalLp::slack(int handle) const {
  int id = impl_->handle_to_internal.at(handle);
  if (id < 0) throw ParameterError("lp: row was removed");
  double s = impl_->core.slack_of_row(id);
  return s;
}

}  // namespace ecp
