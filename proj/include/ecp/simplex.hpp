#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ecp/errors.hpp"

namespace ecp {

enum class SimplexStatus { Optimal, Infeasible, IterationLimit };

template <class Scalar>
struct SimplexConfig {
  Scalar feas_tol{};   // primal bound violation tolerance
  Scalar pivot_tol{};  // minimum usable |alpha| in the ratio test
  Scalar dual_tol{};   // reduced-cost sign slack
  int max_pivots = 50000;
  int bland_after_degenerate = 1000;
};

/// Bounded-variable dual simplex over row constraints  a.x (<=,=,>=) b  with
/// every structural variable boxed. The objective here is always
/// componentwise nonnegative, so the initial all-slack basis is dual
/// feasible and neither a phase 1 nor a big-M device is ever needed; adding
/// rows and tightening bounds both preserve dual feasibility of the carried
/// basis, which is what makes the cut loop and branching cheap.
///
/// The basis inverse is kept explicitly (dense) with rank-1 updates; a
/// cross-check between the pivot row and the pivot column triggers
/// refactorization when floating drift shows up. With an exact Scalar the
/// tolerances are all zero and the same code is an exact LP solver.
template <class Scalar>
class BoundedDualSimplex {
 public:
  BoundedDualSimplex(int num_structural, std::vector<Scalar> objective,
                     SimplexConfig<Scalar> config)
      : num_struct_(num_structural),
        cfg_(std::move(config)),
        cost_(std::move(objective)) {
    if (static_cast<int>(cost_.size()) != num_struct_)
      throw ParameterError("simplex: objective size mismatch");
    lower_.assign(num_struct_, Scalar(0));
    upper_.assign(num_struct_, Scalar(1));
    has_upper_.assign(num_struct_, true);
    state_.assign(num_struct_, AtLower);
    pos_in_basis_.assign(num_struct_, -1);
    dirty_ = true;
  }

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cols() const { return num_struct_ + num_rows(); }

  /// sense: 'L' (<=), 'E' (=), 'G' (>=). Coefficients reference structural
  /// columns. The new slack enters the basis, so a solved basis stays valid.
  int add_row(std::vector<std::pair<int, Scalar>> coeffs, char sense, Scalar rhs) {
    Row row;
    row.negated = sense == 'G';
    row.equality = sense == 'E';
    if (row.negated) {
      for (auto& [var, c] : coeffs) c = -c;
      rhs = -rhs;
    }
    row.coeffs = std::move(coeffs);
    row.rhs = std::move(rhs);
    int id = num_rows();
    rows_.push_back(std::move(row));

    lower_.push_back(Scalar(0));
    upper_.push_back(Scalar(0));
    has_upper_.push_back(rows_.back().equality);
    state_.push_back(Basic);
    pos_in_basis_.push_back(id);
    basis_.push_back(num_struct_ + id);

    if (!dirty_) {
      // extend the inverse: new basis is [[B,0],[v^T,1]] with v the new
      // row's coefficients on the old basic columns
      int m = id;
      Binv_.conservativeResize(m + 1, m + 1);
      for (int i = 0; i < m; ++i) {
        Binv_(i, m) = Scalar(0);
        Binv_(m, i) = Scalar(0);
      }
      Binv_(m, m) = Scalar(1);
      std::vector<Scalar> v(m, Scalar(0));
      for (auto [var, c] : rows_.back().coeffs) {
        int p = pos_in_basis_[var];
        if (state_[var] == Basic && p >= 0 && p < m) v[p] += c;
      }
      for (int col = 0; col < m; ++col) {
        Scalar acc(0);
        for (int i = 0; i < m; ++i)
          if (v[i] != Scalar(0)) acc += v[i] * Binv_(i, col);
        Binv_(m, col) = -acc;
      }
      beta_.push_back(slack_value_from_primal(id));
      reduced_.push_back(Scalar(0));
    }
    return id;
  }

  void set_bounds(int var, Scalar lo, Scalar hi) {
    lower_[var] = std::move(lo);
    upper_[var] = std::move(hi);
    has_upper_[var] = true;
    bounds_changed_ = true;
  }

  bool slack_basic(int row) const { return state_[num_struct_ + row] == Basic; }

  std::vector<int> basis_columns() const { return basis_; }
  /// Nonbasic structural states: 0 at lower, 1 at upper (basics report 0).
  std::vector<char> structural_states() const {
    std::vector<char> out(num_struct_, 0);
    for (int j = 0; j < num_struct_; ++j) out[j] = state_[j] == AtUpper ? 1 : 0;
    return out;
  }

  /// Installs a basis (one column per row; slack of row i is num_struct+i)
  /// and nonbasic structural states; triggers refactorization.
  void load_basis(const std::vector<int>& basis, const std::vector<char>& struct_states) {
    if (static_cast<int>(basis.size()) != num_rows())
      throw ParameterError("simplex: basis size mismatch");
    basis_ = basis;
    for (int j = 0; j < num_cols(); ++j) state_[j] = AtLower;
    for (int j = 0; j < num_struct_; ++j)
      if (struct_states[j]) state_[j] = AtUpper;
    std::fill(pos_in_basis_.begin(), pos_in_basis_.end(), -1);
    for (int r = 0; r < num_rows(); ++r) {
      state_[basis_[r]] = Basic;
      pos_in_basis_[basis_[r]] = r;
    }
    dirty_ = true;
  }

  /// Drops rows (each must currently have a basic slack, i.e. be inactive).
  /// The surviving basic columns minus the dropped slacks form a valid basis
  /// of the reduced system.
  void remove_rows(const std::vector<int>& row_ids) {
    std::vector<char> drop(num_rows(), 0);
    for (int r : row_ids) {
      if (!slack_basic(r))
        throw ParameterError("simplex: can only remove rows with basic slacks");
      drop[r] = 1;
    }
    std::vector<char> struct_states = structural_states();
    std::vector<int> new_id(num_rows(), -1);
    std::vector<Row> kept;
    for (int r = 0; r < num_rows(); ++r) {
      if (drop[r]) continue;
      new_id[r] = static_cast<int>(kept.size());
      kept.push_back(std::move(rows_[r]));
    }
    std::vector<int> remapped;
    for (int col : basis_) {
      if (col >= num_struct_) {
        int old_row = col - num_struct_;
        if (drop[old_row]) continue;  // dropped slack leaves the basis
        remapped.push_back(num_struct_ + new_id[old_row]);
      } else {
        remapped.push_back(col);
      }
    }
    rows_ = std::move(kept);
    if (static_cast<int>(remapped.size()) != num_rows())
      throw ContractViolation("simplex: basis count mismatch after removal");
    lower_.resize(num_struct_);
    upper_.resize(num_struct_);
    has_upper_.resize(num_struct_);
    state_.resize(num_struct_);
    for (int r = 0; r < num_rows(); ++r) {
      lower_.push_back(Scalar(0));
      upper_.push_back(Scalar(0));
      has_upper_.push_back(rows_[r].equality);
      state_.push_back(AtLower);
    }
    pos_in_basis_.assign(num_cols(), -1);
    load_basis(remapped, struct_states);
  }

  SimplexStatus solve() {
    refresh_if_needed();
    int degenerate_streak = 0;
    bool bland = false;
    for (int pivot = 0; pivot < cfg_.max_pivots; ++pivot) {
      int leave_row = pick_leaving(bland);
      if (leave_row < 0) return SimplexStatus::Optimal;

      // pivot row in column space: alpha_j = (e_r Binv) A_j
      std::vector<Scalar> rho(num_rows());
      for (int i = 0; i < num_rows(); ++i) rho[i] = Binv_(leave_row, i);
      std::vector<Scalar> alpha(num_cols(), Scalar(0));
      for (int i = 0; i < num_rows(); ++i) {
        if (rho[i] == Scalar(0)) continue;
        for (auto [var, c] : rows_[i].coeffs) alpha[var] += rho[i] * c;
        alpha[num_struct_ + i] += rho[i];
      }

      bool below = beta_[leave_row] < lower_[basis_[leave_row]];
      int enter = pick_entering(alpha, below);
      if (enter < 0) return SimplexStatus::Infeasible;

      // pivot column in basis coordinates
      std::vector<Scalar> column(num_rows(), Scalar(0));
      column_times_binv(enter, column);
      if (pivots_since_refactor_ > 0 && !consistent(alpha[enter], column[leave_row])) {
        refactorize();
        recompute_state();
        --pivot;
        continue;
      }

      Scalar ratio = reduced_[enter] / alpha[enter];
      bool degenerate = abs_value(reduced_[enter]) <= cfg_.dual_tol;
      degenerate_streak = degenerate ? degenerate_streak + 1 : 0;
      if (degenerate_streak > cfg_.bland_after_degenerate) bland = true;

      apply_pivot(leave_row, enter, below, alpha, column, ratio);
      ++pivots_since_refactor_;
      if (pivots_since_refactor_ >= refactor_interval()) {
        refactorize();
        recompute_state();
      }
    }
    return SimplexStatus::IterationLimit;
  }

  Scalar value(int col) const {
    if (state_[col] == Basic) return beta_[pos_in_basis_[col]];
    return state_[col] == AtUpper ? upper_[col] : lower_[col];
  }

  Scalar objective() const {
    Scalar acc(0);
    for (int j = 0; j < num_struct_; ++j)
      if (cost_[j] != Scalar(0)) acc += cost_[j] * value(j);
    return acc;
  }

  /// Row duals in the caller's orientation (sign restored for >= rows).
  std::vector<Scalar> duals() const {
    std::vector<Scalar> y(num_rows(), Scalar(0));
    for (int r = 0; r < num_rows(); ++r) {
      int col = basis_[r];
      if (col >= num_struct_ || cost_[col] == Scalar(0)) continue;
      for (int i = 0; i < num_rows(); ++i) y[i] += cost_[col] * Binv_(r, i);
    }
    for (int i = 0; i < num_rows(); ++i)
      if (rows_[i].negated) y[i] = -y[i];
    return y;
  }

  Scalar slack_of_row(int row) const { return value(num_struct_ + row); }

 private:
  enum State : char { AtLower, AtUpper, Basic };

  struct Row {
    std::vector<std::pair<int, Scalar>> coeffs;
    Scalar rhs{};
    bool negated = false;
    bool equality = false;
  };

  static Scalar abs_value(const Scalar& v) { return v < Scalar(0) ? Scalar(-v) : v; }

  int refactor_interval() const {
    if constexpr (std::is_same_v<Scalar, double>)
      return 600;
    else
      return 1 << 30;  // exact arithmetic never drifts
  }

  bool consistent(const Scalar& from_row, const Scalar& from_col) const {
    if constexpr (std::is_same_v<Scalar, double>) {
      double scale = 1.0 + std::abs(from_row);
      return std::abs(from_row - from_col) <= 1e-7 * scale;
    } else {
      if (from_row != from_col)
        throw ContractViolation("simplex: exact pivot mismatch");
      return true;
    }
  }

  Scalar slack_value_from_primal(int row) const {
    Scalar acc = rows_[row].rhs;
    for (auto [var, c] : rows_[row].coeffs) acc -= c * value(var);
    return acc;
  }

  void column_times_binv(int col, std::vector<Scalar>& out) const {
    if (col >= num_struct_) {
      int row = col - num_struct_;
      for (int i = 0; i < num_rows(); ++i) out[i] = Binv_(i, row);
      return;
    }
    for (int i = 0; i < num_rows(); ++i) out[i] = Scalar(0);
    for (int i = 0; i < num_rows(); ++i) {
      // structural columns are stored row-wise: gather coefficient of col
      for (auto [var, c] : rows_[i].coeffs)
        if (var == col) {
          for (int r = 0; r < num_rows(); ++r) out[r] += Binv_(r, i) * c;
          break;
        }
    }
  }

  void refresh_if_needed() {
    if (dirty_) {
      refactorize();
      recompute_state();
      dirty_ = false;
      bounds_changed_ = false;
    } else if (bounds_changed_) {
      repair_states();
      recompute_beta();
      bounds_changed_ = false;
    }
  }

  void refactorize() {
    int m = num_rows();
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> basis_matrix(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) basis_matrix(r, c) = Scalar(0);
    for (int pos = 0; pos < m; ++pos) {
      int col = basis_[pos];
      if (col >= num_struct_) {
        basis_matrix(col - num_struct_, pos) = Scalar(1);
      } else {
        for (int i = 0; i < m; ++i)
          for (auto [var, c] : rows_[i].coeffs)
            if (var == col) basis_matrix(i, pos) = c;
      }
    }
    if constexpr (std::is_same_v<Scalar, double>) {
      Binv_ = basis_matrix.partialPivLu().inverse();
    } else {
      Binv_ = exact_inverse(basis_matrix);
    }
    pivots_since_refactor_ = 0;
  }

  static Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> exact_inverse(
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a) {
    int m = static_cast<int>(a.rows());
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> inv(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) inv(r, c) = Scalar(r == c ? 1 : 0);
    for (int col = 0; col < m; ++col) {
      int pivot = -1;
      for (int r = col; r < m; ++r)
        if (a(r, col) != Scalar(0)) {
          pivot = r;
          break;
        }
      if (pivot < 0) throw ContractViolation("simplex: singular basis");
      if (pivot != col) {
        for (int c = 0; c < m; ++c) {
          std::swap(a(pivot, c), a(col, c));
          std::swap(inv(pivot, c), inv(col, c));
        }
      }
      Scalar scale = a(col, col);
      for (int c = 0; c < m; ++c) {
        a(col, c) /= scale;
        inv(col, c) /= scale;
      }
      for (int r = 0; r < m; ++r) {
        if (r == col || a(r, col) == Scalar(0)) continue;
        Scalar f = a(r, col);
        for (int c = 0; c < m; ++c) {
          a(r, c) -= f * a(col, c);
          inv(r, c) -= f * inv(col, c);
        }
      }
    }
    return inv;
  }

  void recompute_beta() {
    int m = num_rows();
    // rhs minus nonbasic contribution, then through the inverse
    std::vector<Scalar> adjusted(m);
    for (int i = 0; i < m; ++i) {
      Scalar acc = rows_[i].rhs;
      for (auto [var, c] : rows_[i].coeffs)
        if (state_[var] != Basic) acc -= c * value(var);
      int slack = num_struct_ + i;
      if (state_[slack] != Basic) acc -= value(slack);
      adjusted[i] = std::move(acc);
    }
    beta_.assign(m, Scalar(0));
    for (int r = 0; r < m; ++r) {
      Scalar acc(0);
      for (int i = 0; i < m; ++i)
        if (adjusted[i] != Scalar(0)) acc += Binv_(r, i) * adjusted[i];
      beta_[r] = std::move(acc);
    }
  }

  void recompute_reduced() {
    int m = num_rows();
    std::vector<Scalar> y(m, Scalar(0));
    for (int r = 0; r < m; ++r) {
      int col = basis_[r];
      if (col >= num_struct_ || cost_[col] == Scalar(0)) continue;
      for (int i = 0; i < m; ++i) y[i] += cost_[col] * Binv_(r, i);
    }
    reduced_.assign(num_cols(), Scalar(0));
    for (int j = 0; j < num_struct_; ++j) reduced_[j] = cost_[j];
    for (int i = 0; i < m; ++i) {
      if (y[i] == Scalar(0)) continue;
      for (auto [var, c] : rows_[i].coeffs) reduced_[var] -= y[i] * c;
      reduced_[num_struct_ + i] -= y[i];
    }
  }

  void repair_states() {
    // bound moves never change reduced costs; they can only leave a nonbasic
    // variable on a dual-infeasible side, fixed by switching bounds
    for (int j = 0; j < num_cols(); ++j) {
      if (state_[j] == Basic) continue;
      bool fixed = has_upper_[j] && !(lower_[j] < upper_[j]);
      if (fixed) continue;
      if (state_[j] == AtLower && reduced_[j] < -cfg_.dual_tol && has_upper_[j])
        state_[j] = AtUpper;
      else if (state_[j] == AtUpper && reduced_[j] > cfg_.dual_tol)
        state_[j] = AtLower;
    }
  }

  void recompute_state() {
    recompute_reduced();
    repair_states();
    recompute_beta();
  }

  int pick_leaving(bool bland) const {
    int best = -1;
    Scalar best_violation(0);
    for (int r = 0; r < num_rows(); ++r) {
      int col = basis_[r];
      Scalar violation(0);
      if (beta_[r] < lower_[col] - cfg_.feas_tol)
        violation = lower_[col] - beta_[r];
      else if (has_upper_[col] && beta_[r] > upper_[col] + cfg_.feas_tol)
        violation = beta_[r] - upper_[col];
      else
        continue;
      if (bland) {
        if (best < 0 || basis_[r] < basis_[best]) best = r;
      } else if (violation > best_violation) {
        best_violation = violation;
        best = r;
      }
    }
    return best;
  }

  // The minimum dual ratio |reduced|/|alpha| is mandatory for dual
  // feasibility; ties always break to the smallest column index, which is
  // the Bland-style anti-cycling choice (the `bland` flag only changes the
  // leaving rule).
  int pick_entering(const std::vector<Scalar>& alpha, bool below) const {
    int best = -1;
    Scalar best_num(0), best_den(1);  // |reduced| / |alpha| as a fraction
    for (int j = 0; j < num_cols(); ++j) {
      if (state_[j] == Basic) continue;
      if (has_upper_[j] && !(lower_[j] < upper_[j])) continue;  // fixed
      const Scalar& a = alpha[j];
      bool eligible = state_[j] == AtLower ? (below ? a < -cfg_.pivot_tol : a > cfg_.pivot_tol)
                                           : (below ? a > cfg_.pivot_tol : a < -cfg_.pivot_tol);
      if (!eligible) continue;
      Scalar num = abs_value(reduced_[j]);
      Scalar den = abs_value(a);
      if (best < 0 || num * best_den < best_num * den) {
        best = j;
        best_num = std::move(num);
        best_den = std::move(den);
      }
    }
    return best;
  }

  void apply_pivot(int leave_row, int enter, bool below,
                   const std::vector<Scalar>& alpha, const std::vector<Scalar>& column,
                   const Scalar& ratio) {
    int leave_col = basis_[leave_row];
    Scalar target = below ? lower_[leave_col] : upper_[leave_col];
    Scalar delta = (beta_[leave_row] - target) / alpha[enter];

    // primal update
    for (int r = 0; r < num_rows(); ++r) beta_[r] -= column[r] * delta;
    Scalar enter_value = value(enter) + delta;

    // dual update: d <- d - ratio * alpha (keeps nonbasics feasible)
    if (ratio != Scalar(0)) {
      for (int j = 0; j < num_cols(); ++j)
        if (alpha[j] != Scalar(0)) reduced_[j] -= ratio * alpha[j];
    }
    reduced_[enter] = Scalar(0);
    reduced_[leave_col] = -ratio;

    // basis inverse rank-1 update
    Scalar pivot_value = column[leave_row];
    for (int c = 0; c < num_rows(); ++c) Binv_(leave_row, c) /= pivot_value;
    for (int r = 0; r < num_rows(); ++r) {
      if (r == leave_row || column[r] == Scalar(0)) continue;
      Scalar f = column[r];
      for (int c = 0; c < num_rows(); ++c) Binv_(r, c) -= f * Binv_(leave_row, c);
    }

    state_[leave_col] = below ? AtLower : AtUpper;
    pos_in_basis_[leave_col] = -1;
    state_[enter] = Basic;
    pos_in_basis_[enter] = leave_row;
    basis_[leave_row] = enter;
    beta_[leave_row] = std::move(enter_value);
  }

  int num_struct_;
  SimplexConfig<Scalar> cfg_;
  std::vector<Scalar> cost_;

  std::vector<Row> rows_;
  std::vector<Scalar> lower_, upper_;
  std::vector<char> has_upper_;
  std::vector<char> state_;
  std::vector<int> pos_in_basis_;
  std::vector<int> basis_;

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> Binv_;
  std::vector<Scalar> beta_;
  std::vector<Scalar> reduced_;

  bool dirty_ = true;
  bool bounds_changed_ = false;
  int pivots_since_refactor_ = 0;
};

}  // namespace ecp
