#include "ecp/model.hpp"

#include <cmath>
#include <sstream>

#include "ecp/errors.hpp"

namespace ecp {

CutRow equity_lower_row(int j, int n) {
  RowBuilder builder(num_model_vars(n));
  for (int v = 1; v <= n; ++v) builder.add(x_index(v, j, n), 1);
  builder.add(w_index(j, n), -(n / j));
  for (int k = j + 1; k <= n; ++k) builder.add(w_index(k, n), -(n / k - n / (k - 1)));
  return builder.finish(Sense::GreaterEqual, 0, EquityLowerTag{j});
}

CutRow equity_upper_row(int j, int n) {
  auto ceil_div = [](int a, int b) { return (a + b - 1) / b; };
  RowBuilder builder(num_model_vars(n));
  for (int v = 1; v <= n; ++v) builder.add(x_index(v, j, n), 1);
  builder.add(w_index(j, n), -ceil_div(n, j));
  for (int k = j + 1; k <= n; ++k)
    builder.add(w_index(k, n), -(ceil_div(n, k) - ceil_div(n, k - 1)));
  return builder.finish(Sense::LessEqual, 0, EquityUpperTag{j});
}

Model build_model(const Graph& g, bool strengthen) {
  int n = g.num_vertices();
  if (n < 1) throw ParameterError("build_model: n must be >= 1");
  Model m;
  m.n = n;

  for (int v = 1; v <= n; ++v) {
    RowBuilder builder(m.num_vars());
    for (int j = 1; j <= n; ++j) builder.add(x_index(v, j, n), 1);
    m.rows.push_back(builder.finish(Sense::Equal, 1, AssignmentTag{v}));
  }
  for (auto [u, v] : g.edges()) {
    for (int j = 1; j <= n; ++j) {
      RowBuilder builder(m.num_vars());
      builder.add(x_index(u, j, n), 1);
      builder.add(x_index(v, j, n), 1);
      builder.add(w_index(j, n), -1);
      m.rows.push_back(builder.finish(Sense::LessEqual, 0, ConflictTag{u, v, j}));
    }
  }
  for (int j = 1; j <= n - 1; ++j) {
    RowBuilder builder(m.num_vars());
    builder.add(w_index(j + 1, n), 1);
    builder.add(w_index(j, n), -1);
    m.rows.push_back(builder.finish(Sense::LessEqual, 0, WOrderTag{j}));
  }
  for (int v = 1; v <= n; ++v) {
    if (!g.is_isolated(v)) continue;
    for (int j = 1; j <= n; ++j) {
      RowBuilder builder(m.num_vars());
      builder.add(x_index(v, j, n), 1);
      builder.add(w_index(j, n), -1);
      m.rows.push_back(builder.finish(Sense::LessEqual, 0, IsolatedTag{v, j}));
    }
  }
  for (int j = 1; j <= n - 1; ++j) {
    m.rows.push_back(equity_lower_row(j, n));
    m.rows.push_back(equity_upper_row(j, n));
  }

  if (strengthen)
    for (int v = 1; v <= n; ++v)
      for (int j = v + 1; j <= n; ++j) m.fixed_to_zero.push_back(x_index(v, j, n));
  return m;
}

bool is_feasible_point(const Model& m, const std::vector<double>& point, double tol) {
  if (static_cast<int>(point.size()) != m.num_vars())
    throw ParameterError("is_feasible_point: vector length mismatch");
  for (double value : point)
    if (value < -tol || value > 1.0 + tol) return false;
  for (int var : m.fixed_to_zero)
    if (point[var] > tol) return false;
  for (const auto& row : m.rows)
    if (!satisfies(row, point, tol)) return false;
  return true;
}

std::string to_lp_text(const Model& m) {
  int n = m.n;
  std::ostringstream out;
  out << "min";
  for (int j = 1; j <= n; ++j) out << (j == 1 ? " " : " + ") << "w[" << j << "]";
  out << "\nst\n";
  for (const auto& row : m.rows) {
    out << "  " << family_name(row.family) << ":";
    for (auto [var, c] : row.coeffs)
      out << " " << (c >= 0 ? "+" : "-") << std::llabs(c) << " " << var_name(var, n);
    switch (row.sense) {
      case Sense::LessEqual:
        out << " <= ";
        break;
      case Sense::Equal:
        out << " = ";
        break;
      case Sense::GreaterEqual:
        out << " >= ";
        break;
    }
    out << row.rhs << "\n";
  }
  out << "bounds\n  0 <= x <= 1, 0 <= w <= 1 (all binary)\n";
  if (!m.fixed_to_zero.empty()) {
    out << "fixed to zero\n ";
    for (int var : m.fixed_to_zero) out << " " << var_name(var, n);
    out << "\n";
  }
  return out.str();
}

}  // namespace ecp
