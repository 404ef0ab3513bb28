#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "ecp/coloring.hpp"
#include "ecp/errors.hpp"
#include "ecp/model.hpp"
#include "test_util.hpp"

using namespace ecp;
using namespace ecp::testutil;

namespace {

std::map<std::string, int> rows_by_family(const Model& m) {
  std::map<std::string, int> counts;
  for (const auto& row : m.rows) ++counts[family_name(row.family)];
  return counts;
}

std::int64_t coeff_of(const CutRow& row, int var) {
  for (auto [id, c] : row.coeffs)
    if (id == var) return c;
  return 0;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("C5 model has the mandated row census") {
  Model m = build_model(cycle(5), false);
  auto counts = rows_by_family(m);
  CHECK(counts["assignment"] == 5);
  CHECK(counts["conflict"] == 25);
  CHECK(counts["w_order"] == 4);
  CHECK(counts["isolated"] == 0);
  CHECK(counts["equity_lower"] == 4);
  CHECK(counts["equity_upper"] == 4);
  CHECK(m.rows.size() == 42);
  CHECK(m.fixed_to_zero.empty());
}

TEST_CASE("an isolated vertex contributes one row per color") {
  Graph g(5, {{1, 2}, {2, 3}, {3, 4}});  // vertex 5 isolated
  Model m = build_model(g, false);
  CHECK(rows_by_family(m)["isolated"] == 5);
}

TEST_CASE("equity telescoping matches the n=6, j=3 example") {
  CutRow lower = equity_lower_row(3, 6);
  CHECK(lower.sense == Sense::GreaterEqual);
  CHECK(lower.rhs == 0);
  for (int v = 1; v <= 6; ++v) CHECK(coeff_of(lower, x_index(v, 3, 6)) == 1);
  CHECK(coeff_of(lower, w_index(3, 6)) == -2);  // floor(6/3)
  CHECK(coeff_of(lower, w_index(4, 6)) == 1);   // floor(6/4) - floor(6/3) = -1
  CHECK(coeff_of(lower, w_index(5, 6)) == 0);
  CHECK(coeff_of(lower, w_index(6, 6)) == 0);
}

TEST_CASE("strengthening fixes x_vj to zero for v < j") {
  Model m = build_model(cycle(5), true);
  CHECK(m.fixed_to_zero.size() == 10);  // pairs v < j over n = 5
  for (int var : m.fixed_to_zero) {
    int v = var / 5 + 1, j = var % 5 + 1;
    CHECK(v < j);
  }
}

TEST_CASE("every enumerated eqcol vector is model-feasible") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    int n = 5 + static_cast<int>(rng() % 3);
    Graph g = random_graph(n, 25 + rng() % 50, rng());
    Model m = build_model(g, false);
    for (int k = 1; k <= n; ++k)
      for (const auto& c : enumerate_eqcols(g, k))
        CHECK(is_feasible_point(m, to_vector(c, n)));
  }
}

TEST_CASE("the all-zero vector violates the assignment rows") {
  Model m = build_model(cycle(5), false);
  CHECK_FALSE(is_feasible_point(m, std::vector<double>(30, 0.0)));
}

TEST_CASE("a proper but inequitable coloring is rejected") {
  // star K_{1,4}: center 1, leaves 2..5; classes {1} and {2,3,4,5} as k=2
  Graph g = star(4);
  Model m = build_model(g, false);
  EquitableColoring c;
  c.k = 2;
  c.color_of = {0, 1, 2, 2, 2, 2};
  CHECK_FALSE(is_valid_eqcol(g, c));          // floor(5/2) = 2 > 1
  CHECK_FALSE(is_feasible_point(m, to_vector(c, 5)));
}

TEST_CASE("vector length mismatches are parameter errors") {
  Model m = build_model(cycle(5), false);
  CHECK_THROWS_AS(is_feasible_point(m, std::vector<double>(29, 0.0)), ParameterError);
}

TEST_CASE("0/1 model points are exactly the eqcol vectors (n <= 4)") {
  std::vector<Graph> graphs;
  graphs.push_back(path(4));
  graphs.push_back(Graph(4, {{1, 2}}));  // has two isolated vertices
  graphs.push_back(complete(3));
  for (const auto& g : graphs) {
    int n = g.num_vertices();
    Model m = build_model(g, false);
    std::set<std::vector<double>> eqcol_vectors;
    for (int k = 1; k <= n; ++k)
      for (const auto& c : enumerate_eqcols(g, k))
        eqcol_vectors.insert(to_vector(c, n));

    int nvars = m.num_vars();
    std::set<std::vector<double>> feasible;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nvars); ++mask) {
      std::vector<double> point(nvars);
      for (int i = 0; i < nvars; ++i) point[i] = (mask >> i & 1) ? 1.0 : 0.0;
      if (is_feasible_point(m, point)) feasible.insert(std::move(point));
    }
    CHECK(feasible == eqcol_vectors);
  }
}

TEST_CASE("strengthened model keeps a canonical representative per class") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 6; ++trial) {
    int n = 5 + static_cast<int>(rng() % 3);
    Graph g = random_graph(n, 30 + rng() % 40, rng());
    Model strengthened = build_model(g, true);
    for (int k = 1; k <= n; ++k) {
      auto list = enumerate_eqcols(g, k);
      if (list.empty()) continue;
      bool some_representative = false;
      for (const auto& c : list) {
        if (is_feasible_point(strengthened, to_vector(canonical_relabeling(c), n))) {
          some_representative = true;
          break;
        }
      }
      CHECK(some_representative);
    }
  }
}

TEST_CASE("lp text export mentions the objective and all rows") {
  Model m = build_model(cycle(5), true);
  std::string text = to_lp_text(m);
  CHECK(text.find("min") == 0);
  CHECK(text.find("w[5]") != std::string::npos);
  CHECK(text.find("st") != std::string::npos);
  CHECK(text.find("conflict") != std::string::npos);
  CHECK(text.find("equity_lower") != std::string::npos);
  CHECK(text.find("fixed to zero") != std::string::npos);
}

}  // TEST_SUITE
