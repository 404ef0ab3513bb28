#include "ecp/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <set>

#include "ecp/cuts.hpp"
#include "ecp/errors.hpp"
#include "ecp/heuristics.hpp"
#include "ecp/lp.hpp"
#include "ecp/model.hpp"
#include "ecp/separation.hpp"

namespace ecp {

namespace {

constexpr double kIntTol = 1e-6;

bool is_integral(const std::vector<double>& point, double tol = kIntTol) {
  for (double v : point)
    if (std::abs(v - std::round(v)) > tol) return false;
  return true;
}

struct NodeOrder {
  bool operator()(const BnbNode& a, const BnbNode& b) const {
    if (a.parent_bound != b.parent_bound) return a.parent_bound > b.parent_bound;
    return a.id > b.id;  // FIFO among equal bounds
  }
};

}  // namespace

int select_branch_variable(const std::vector<double>& point, int n, double tol) {
  int best = -1;
  double best_frac = tol;
  // x variables scanned color-major so ties prefer the smallest (j, v)
  for (int j = 1; j <= n; ++j)
    for (int v = 1; v <= n; ++v) {
      double value = point[x_index(v, j, n)];
      double frac = std::min(value, 1.0 - value);
      if (frac > best_frac + 1e-12) {
        best_frac = frac;
        best = x_index(v, j, n);
      }
    }
  if (best >= 0) return best;
  for (int j = 1; j <= n; ++j) {
    double value = point[w_index(j, n)];
    double frac = std::min(value, 1.0 - value);
    if (frac > best_frac + 1e-12) {
      best_frac = frac;
      best = w_index(j, n);
    }
  }
  if (best < 0)
    throw ContractViolation("branch: point is integral, nothing to branch on");
  return best;
}

namespace {

class BranchAndCut {
 public:
  BranchAndCut(const Graph& g, const SolverConfig& config)
      : g_(g),
        cfg_(config),
        n_(g.num_vertices()),
        model_(build_model(g, /*strengthen=*/true)),
        separator_(g_, make_separation_options(config, g)),
        lp_(make_lp()) {}

  std::pair<EquitableColoring, SolveStats> run() {
    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    incumbent_ = initial_heuristic(g_);
    stats_.best_k = incumbent_.k;

    std::priority_queue<BnbNode, std::vector<BnbNode>, NodeOrder> queue;
    BnbNode root;
    root.id = next_node_id_++;
    queue.push(root);
    bool timed_out = false;

    while (!queue.empty()) {
      if (elapsed() > cfg_.time_limit_sec) {
        timed_out = true;
        break;
      }
      BnbNode node = queue.top();
      queue.pop();
      if (prunable(node.parent_bound)) break;  // best-bound: the rest prune too
      process_node(node, queue, elapsed);
    }

    stats_.time_sec = elapsed();
    stats_.proven_optimal = !timed_out;
    stats_.best_k = incumbent_.k;
    return {incumbent_, stats_};
  }

 private:
  static SeparationOptions make_separation_options(const SolverConfig& cfg, const Graph& g) {
    SeparationOptions opts;
    opts.violation_eps = cfg.cut_violation_eps;
    opts.cut_round_target = cfg.cut_round_target > 0 ? cfg.cut_round_target : g.num_vertices();
    opts.enable_new_families = cfg.enable_new_families;
    return opts;
  }

  IncrementalLp make_lp() {
    std::vector<double> objective(num_model_vars(n_), 0.0);
    for (int j = 1; j <= n_; ++j) objective[w_index(j, n_)] = 1.0;
    LpOptions opts;
    opts.max_pivots = cfg_.max_lp_pivots;
    IncrementalLp lp(num_model_vars(n_), std::move(objective), opts);
    base_upper_.assign(num_model_vars(n_), 1.0);
    for (int var : model_.fixed_to_zero) base_upper_[var] = 0.0;
    for (int var = 0; var < num_model_vars(n_); ++var) lp.set_bounds(var, 0.0, base_upper_[var]);
    // always-on rows: assignment, w ordering, equity, isolated-vertex rows;
    // conflict rows activate lazily on violation
    for (const auto& row : model_.rows) {
      if (std::holds_alternative<ConflictTag>(row.family)) {
        lazy_conflicts_.push_back(&row);
        continue;
      }
      lp.add_row(row);
    }
    return lp;
  }

  bool prunable(double bound) const {
    // objective Σ w_j is integral on feasible points, so bounds round up
    return std::ceil(bound - kIntTol) >= static_cast<double>(incumbent_.k);
  }

  void apply_node_bounds(const BnbNode& node) {
    for (int var = 0; var < num_model_vars(n_); ++var) lp_.set_bounds(var, 0.0, base_upper_[var]);
    for (auto [var, value] : node.fixings)
      lp_.set_bounds(var, value ? 1.0 : 0.0, value ? 1.0 : 0.0);
  }

  int activate_violated_conflicts(const std::vector<double>& point) {
    int added = 0;
    for (auto it = lazy_conflicts_.begin(); it != lazy_conflicts_.end() && added < 800;) {
      if (violation(**it, point) > 1e-7) {
        pool_handles_.push_back(lp_.add_row(**it));
        pool_inactive_.push_back(0);
        it = lazy_conflicts_.erase(it);
        ++added;
      } else {
        ++it;
      }
    }
    return added;
  }

  void audit_emission(const CutRow& row, const std::vector<double>& point) {
    double v = violation(row, point);
    stats_.min_emission_violation = std::min(stats_.min_emission_violation, v);
    ++stats_.cuts_emitted;
    ++stats_.cuts_by_family[family_name(row.family)];
    if (cfg_.audit_cuts && n_ <= 8 &&
        !std::holds_alternative<SymmetryTag>(row.family)) {
      ++stats_.audited_cuts;
      OracleLimits limits;
      limits.max_vertices = cfg_.oracle_cap;
      if (!check_validity(g_, row, limits)) ++stats_.audit_failures;
    }
  }

  EquitableColoring decode(const std::vector<double>& point) const {
    EquitableColoring c;
    c.color_of.assign(n_ + 1, 0);
    c.k = 0;
    for (int j = 1; j <= n_; ++j)
      if (point[w_index(j, n_)] > 0.5) ++c.k;
    for (int v = 1; v <= n_; ++v)
      for (int j = 1; j <= n_; ++j)
        if (point[x_index(v, j, n_)] > 0.5) c.color_of[v] = j;
    return c;
  }

  template <class Elapsed>
  void process_node(const BnbNode& node, std::priority_queue<BnbNode, std::vector<BnbNode>, NodeOrder>& queue,
                    const Elapsed& elapsed) {
    ++stats_.nodes;
    apply_node_bounds(node);

    bool is_root = node.depth == 0;
    double node_bound = -std::numeric_limits<double>::infinity();
    double previous_round_bound = -std::numeric_limits<double>::infinity();
    int rounds = 0;
    bool root_before_recorded = !is_root;
    std::map<std::string, long long> node_cuts;

    while (true) {
      LpSolution sol = lp_.solve();
      if (sol.status == LpStatus::Infeasible) {
        log_node(node, node_bound, node_cuts, "infeasible");
        return;
      }
      node_bound = sol.objective_value;
      if (sol.status == LpStatus::IterationLimit) {
        // dual-feasible basis: the objective is still a valid lower bound
        if (!prunable(node_bound)) branch(node, sol.values, node_bound, queue);
        log_node(node, node_bound, node_cuts, "pivot-limit");
        return;
      }

      if (activate_violated_conflicts(sol.values) > 0) continue;

      if (!root_before_recorded) {
        stats_.root_lp_before_cuts = node_bound;
        root_before_recorded = true;
      }
      if (previous_round_bound > node_bound + 1e-7) stats_.lp_bound_monotone = false;
      previous_round_bound = node_bound;

      if (prunable(node_bound)) {
        if (is_root) stats_.root_lp_after_cuts = node_bound;
        log_node(node, node_bound, node_cuts, "bound-pruned");
        return;
      }

      if (is_integral(sol.values)) {
        // all conflict rows are certified here: the in-LP ones by the solve,
        // the still-lazy ones by the activation scan returning zero
        EquitableColoring candidate = decode(sol.values);
        if (!is_valid_eqcol(g_, candidate))
          throw ContractViolation("solver: integral model point decoded invalid");
        if (candidate.k < incumbent_.k) incumbent_ = candidate;
        if (is_root) stats_.root_lp_after_cuts = node_bound;
        log_node(node, node_bound, node_cuts, "integral");
        return;
      }

      if (rounds < cfg_.max_rounds_per_node && elapsed() <= cfg_.time_limit_sec) {
        auto cuts = separator_.round(sol.values);
        std::vector<const CutRow*> fresh;
        for (const auto& row : cuts)
          if (known_cuts_.insert(to_text(row, n_)).second) fresh.push_back(&row);
        if (!fresh.empty()) {
          for (const CutRow* row : fresh) {
            audit_emission(*row, sol.values);
            ++node_cuts[family_name(row->family)];
            pool_handles_.push_back(lp_.add_row(*row));
            pool_inactive_.push_back(0);
          }
          ++rounds;
          continue;
        }
      }

      // cuts exhausted: primal heuristic, then branch
      if (auto better = primal_heuristic(g_, sol.values, incumbent_.k)) incumbent_ = *better;
      if (is_root) stats_.root_lp_after_cuts = node_bound;
      if (!prunable(node_bound)) branch(node, sol.values, node_bound, queue);
      log_node(node, node_bound, node_cuts, "branched");
      sweep_cut_pool();
      return;
    }
  }

  void branch(const BnbNode& node, const std::vector<double>& point, double bound,
              std::priority_queue<BnbNode, std::vector<BnbNode>, NodeOrder>& queue) {
    int var = select_branch_variable(point, n_);
    for (int value : {1, 0}) {
      BnbNode child;
      child.fixings = node.fixings;
      child.fixings.emplace_back(var, value);
      child.depth = node.depth + 1;
      child.parent_bound = bound;
      child.id = next_node_id_++;
      queue.push(std::move(child));
    }
  }

  void sweep_cut_pool() {
    // age out separated cuts that stayed slack for 20 consecutive node LPs;
    // activated conflict rows are model rows and stay for good (their lazy
    // re-activation list no longer contains them)
    std::vector<int> removable;
    for (std::size_t i = 0; i < pool_handles_.size(); ++i) {
      int handle = pool_handles_[i];
      if (handle < 0) continue;
      if (std::holds_alternative<ConflictTag>(lp_.row(handle).family)) continue;
      if (lp_.slack(handle) > 1e-3) {
        if (++pool_inactive_[i] >= 20) removable.push_back(handle);
      } else {
        pool_inactive_[i] = 0;
      }
    }
    if (removable.size() < 100) return;
    auto removed = lp_.remove_rows(removable);
    std::set<int> gone(removed.begin(), removed.end());
    for (std::size_t i = 0; i < pool_handles_.size(); ++i) {
      int handle = pool_handles_[i];
      if (handle >= 0 && gone.contains(handle)) {
        known_cuts_.erase(to_text(lp_.row(handle), n_));  // may come back later
        pool_handles_[i] = -1;
      }
    }
  }

  void log_node(const BnbNode& node, double bound, const std::map<std::string, long long>& cuts,
                const char* outcome) {
    if (!cfg_.node_log) return;
    auto& out = *cfg_.node_log;
    out << "node " << node.id << " depth " << node.depth << " bound " << bound << " cuts";
    if (cuts.empty()) out << " -";
    for (const auto& [family, count] : cuts) out << " " << family << ":" << count;
    out << " incumbent " << incumbent_.k << " " << outcome << "\n";
  }

  const Graph& g_;
  SolverConfig cfg_;
  int n_;
  Model model_;
  Separator separator_;
  std::vector<double> base_upper_;
  std::vector<const CutRow*> lazy_conflicts_;
  IncrementalLp lp_;
  EquitableColoring incumbent_;
  SolveStats stats_;
  std::set<std::string> known_cuts_;
  std::vector<int> pool_handles_;
  std::vector<int> pool_inactive_;
  long long next_node_id_ = 0;
};

}  // namespace

std::pair<EquitableColoring, SolveStats> solve_ecp(const Graph& g, const SolverConfig& config) {
  BranchAndCut solver(g, config);
  return solver.run();
}

}  // namespace ecp
