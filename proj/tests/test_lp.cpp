#include <cmath>
#include <random>

#include "doctest.h"
#include "ecp/coloring.hpp"
#include "ecp/cuts.hpp"
#include "ecp/lp.hpp"
#include "ecp/model.hpp"
#include "test_util.hpp"

using namespace ecp;
using namespace ecp::testutil;

namespace {

CutRow make_row(int num_vars, std::vector<std::pair<int, std::int64_t>> terms,
                Sense sense, std::int64_t rhs) {
  RowBuilder builder(num_vars);
  for (auto [var, c] : terms) builder.add(var, c);
  return builder.finish(sense, rhs, SColorTag{{1}});
}

void check_solution_invariants(const LpInstance& inst, const LpSolution& sol) {
  REQUIRE(sol.status == LpStatus::Optimal);
  for (int j = 0; j < inst.num_vars; ++j) {
    CHECK(sol.values[j] >= inst.lower[j] - 1e-7);
    CHECK(sol.values[j] <= inst.upper[j] + 1e-7);
  }
  for (std::size_t r = 0; r < inst.rows.size(); ++r) {
    const CutRow& row = inst.rows[r];
    double lhs = evaluate_lhs(row, sol.values);
    double rhs = static_cast<double>(row.rhs);
    switch (row.sense) {
      case Sense::LessEqual:
        CHECK(lhs <= rhs + 1e-7);
        break;
      case Sense::Equal:
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-7));
        break;
      case Sense::GreaterEqual:
        CHECK(lhs >= rhs - 1e-7);
        break;
    }
    // complementary slackness: active duals need tight rows
    if (row.sense != Sense::Equal && std::abs(sol.duals[r]) > 1e-6)
      CHECK(std::abs(lhs - rhs) <= 1e-6);
  }
}

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("zero objective toy is optimal at zero") {
  LpInstance inst;
  inst.num_vars = 2;
  inst.objective = {0.0, 0.0};
  inst.lower = {0.0, 0.0};
  inst.upper = {1.0, 1.0};
  inst.rows.push_back(make_row(2, {{0, 1}, {1, 1}}, Sense::LessEqual, 1));
  auto sol = solve(inst);
  CHECK(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_value == doctest::Approx(0.0));
  check_solution_invariants(inst, sol);
}

TEST_CASE("contradictory rows are infeasible") {
  LpInstance inst;
  inst.num_vars = 1;
  inst.objective = {0.0};
  inst.lower = {0.0};
  inst.upper = {1.0};
  inst.rows.push_back(make_row(1, {{0, 1}}, Sense::GreaterEqual, 1));
  inst.rows.push_back(make_row(1, {{0, 1}}, Sense::LessEqual, 0));
  CHECK(solve(inst).status == LpStatus::Infeasible);
}

TEST_CASE("a small LP with a known optimum") {
  // min x0 + x1 subject to x0 + 2 x1 >= 2, boxes [0,1]: optimum 1 at (0,1)
  LpInstance inst;
  inst.num_vars = 2;
  inst.objective = {1.0, 1.0};
  inst.lower = {0.0, 0.0};
  inst.upper = {1.0, 1.0};
  inst.rows.push_back(make_row(2, {{0, 1}, {1, 2}}, Sense::GreaterEqual, 2));
  auto sol = solve(inst);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_value == doctest::Approx(1.0));
  CHECK(sol.values[1] == doctest::Approx(1.0));
  check_solution_invariants(inst, sol);
}

TEST_CASE("C5 relaxation bounds chi_eq from below") {
  Model m = build_model(cycle(5), false);
  LpInstance inst = relaxation_instance(m);
  auto sol = solve(inst);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_value <= 3.0 + 1e-7);  // chi_eq(C5) = 3
  CHECK(sol.objective_value >= 1.0 - 1e-7);
  check_solution_invariants(inst, sol);
}

TEST_CASE("fixing variables to an eqcol reproduces it") {
  Graph g = cycle(5);
  Model m = build_model(g, false);
  auto eqcols = enumerate_eqcols(g, 3);
  REQUIRE_FALSE(eqcols.empty());
  auto target = to_vector(eqcols.front(), 5);
  LpInstance inst = relaxation_instance(m);
  for (int j = 0; j < inst.num_vars; ++j) inst.lower[j] = inst.upper[j] = target[j];
  auto sol = solve(inst);
  REQUIRE(sol.status == LpStatus::Optimal);
  for (int j = 0; j < inst.num_vars; ++j)
    CHECK(sol.values[j] == doctest::Approx(target[j]));
  CHECK(sol.objective_value == doctest::Approx(3.0));
}

TEST_CASE("resolve_with_rows: satisfied row keeps the objective") {
  Model m = build_model(cycle(5), false);
  LpInstance inst = relaxation_instance(m);
  auto base = solve(inst);
  REQUIRE(base.status == LpStatus::Optimal);

  // a row already satisfied by any point of the box
  auto loose = make_row(inst.num_vars, {{x_index(1, 1, 5), 1}}, Sense::LessEqual, 2);
  auto sol = resolve_with_rows(inst, {loose}, base);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_value == doctest::Approx(base.objective_value));
}

TEST_CASE("resolve_with_rows: valid cuts never decrease the optimum") {
  Graph g = cycle(5);
  Model m = build_model(g, false);
  LpInstance inst = relaxation_instance(m);
  auto base = solve(inst);
  REQUIRE(base.status == LpStatus::Optimal);
  std::vector<CutRow> cuts;
  for (auto [u, v] : g.edges())
    for (int j = 1; j <= 4; ++j) cuts.push_back(clique_cut(g, {u, v}, j));
  auto sol = resolve_with_rows(inst, cuts, base);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_value >= base.objective_value - 1e-9);
}

TEST_CASE("forcing color 1 empty on C5 is infeasible") {
  Model m = build_model(cycle(5), false);
  LpInstance inst = relaxation_instance(m);
  auto base = solve(inst);
  std::vector<std::pair<int, std::int64_t>> terms;
  for (int v = 1; v <= 5; ++v) terms.emplace_back(x_index(v, 1, 5), 1);
  auto sol = resolve_with_rows(inst, {make_row(inst.num_vars, terms, Sense::LessEqual, 0)}, base);
  CHECK(sol.status == LpStatus::Infeasible);
}

TEST_CASE("iteration limit surfaces as a status") {
  Model m = build_model(cycle(5), false);
  LpInstance inst = relaxation_instance(m);
  LpOptions opts;
  opts.max_pivots = 1;
  CHECK(solve(inst, opts).status == LpStatus::IterationLimit);
}

TEST_CASE("solving is deterministic") {
  Model m = build_model(random_graph(7, 50, 3), true);
  LpInstance inst = relaxation_instance(m);
  auto a = solve(inst);
  auto b = solve(inst);
  REQUIRE(a.status == LpStatus::Optimal);
  CHECK(a.objective_value == b.objective_value);
  CHECK(a.values == b.values);
}

TEST_CASE("exact mode agrees with the floating simplex within 1e-6") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 8; ++trial) {
    int n = 5 + static_cast<int>(rng() % 3);
    Graph g = random_graph(n, 25 + rng() % 55, rng());
    for (bool strengthen : {false, true}) {
      Model m = build_model(g, strengthen);
      LpInstance inst = relaxation_instance(m);
      auto approx = solve(inst);
      auto exact = solve_exact(inst);
      REQUIRE(approx.status == LpStatus::Optimal);
      REQUIRE(exact.status == LpStatus::Optimal);
      double exact_value = static_cast<double>(exact.objective_value);
      CHECK(std::abs(approx.objective_value - exact_value) <= 1e-6);
    }
  }
}

TEST_CASE("incremental LP matches stateless solves through rounds") {
  Graph g = random_graph(6, 45, 9);
  Model m = build_model(g, true);
  LpInstance inst = relaxation_instance(m);

  IncrementalLp inc(inst.num_vars, inst.objective);
  for (int j = 0; j < inst.num_vars; ++j) inc.set_bounds(j, inst.lower[j], inst.upper[j]);
  for (const auto& row : inst.rows) inc.add_row(row);
  auto warm = inc.solve();
  auto fresh = solve(inst);
  REQUIRE(warm.status == LpStatus::Optimal);
  CHECK(warm.objective_value == doctest::Approx(fresh.objective_value).epsilon(1e-9));

  // add clique cuts, compare against a stateless solve of the union
  std::vector<CutRow> cuts;
  for (auto [u, v] : g.edges()) cuts.push_back(clique_cut(g, {u, v}, 1));
  for (const auto& row : cuts) inc.add_row(row);
  auto warm2 = inc.solve();
  LpInstance ext = inst;
  ext.rows.insert(ext.rows.end(), cuts.begin(), cuts.end());
  auto fresh2 = solve(ext);
  REQUIRE(warm2.status == fresh2.status);
  if (warm2.status == LpStatus::Optimal)
    CHECK(warm2.objective_value == doctest::Approx(fresh2.objective_value).epsilon(1e-9));

  // bound change (branch-style fixing) then release
  inc.set_bounds(x_index(1, 1, 6), 1.0, 1.0);
  auto fixed_sol = inc.solve();
  LpInstance fixed_inst = ext;
  fixed_inst.lower[x_index(1, 1, 6)] = 1.0;
  auto fixed_fresh = solve(fixed_inst);
  REQUIRE(fixed_sol.status == fixed_fresh.status);
  if (fixed_sol.status == LpStatus::Optimal)
    CHECK(fixed_sol.objective_value ==
          doctest::Approx(fixed_fresh.objective_value).epsilon(1e-9));

  inc.set_bounds(x_index(1, 1, 6), 0.0, 1.0);
  auto released = inc.solve();
  REQUIRE(released.status == LpStatus::Optimal);
  CHECK(released.objective_value == doctest::Approx(fresh2.objective_value).epsilon(1e-9));
}

TEST_CASE("removing inactive rows keeps the optimum") {
  Graph g = random_graph(6, 40, 21);
  Model m = build_model(g, false);
  LpInstance inst = relaxation_instance(m);
  IncrementalLp inc(inst.num_vars, inst.objective);
  for (int j = 0; j < inst.num_vars; ++j) inc.set_bounds(j, inst.lower[j], inst.upper[j]);
  for (const auto& row : inst.rows) inc.add_row(row);
  // rows that can never be tight inside the box stay slack and removable
  std::vector<int> loose_handles;
  for (int j = 1; j <= 3; ++j) {
    std::vector<std::pair<int, std::int64_t>> terms;
    for (int v = 1; v <= 6; ++v) terms.emplace_back(x_index(v, j, 6), 1);
    loose_handles.push_back(inc.add_row(make_row(inst.num_vars, terms, Sense::LessEqual, 7)));
  }
  auto before = inc.solve();
  REQUIRE(before.status == LpStatus::Optimal);
  for (int h : loose_handles) CHECK(inc.slack(h) > 1e-6);

  auto removed = inc.remove_rows(loose_handles);
  CHECK(removed.size() == loose_handles.size());
  auto after = inc.solve();
  REQUIRE(after.status == LpStatus::Optimal);
  CHECK(after.objective_value == doctest::Approx(before.objective_value).epsilon(1e-9));

  // the row census excludes the removed rows now
  CHECK(inc.num_rows() == static_cast<int>(inst.rows.size()));
}

}  // TEST_SUITE
