#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "doctest.h"
#include "ecp/errors.hpp"
#include "ecp/graph.hpp"
#include "test_util.hpp"

using namespace ecp;
using namespace ecp::testutil;

namespace {

// exhaustive stable-set oracle for cross-checks
int brute_force_alpha(const Graph& g, const std::vector<int>& s) {
  int best = 0;
  int m = static_cast<int>(s.size());
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) subset.push_back(s[i]);
    if (is_stable_set(g, subset)) best = std::max(best, static_cast<int>(subset.size()));
  }
  return best;
}

// exhaustive maximum matching by recursion over edges
int brute_force_matching(const Graph& g) {
  auto edges = g.edges();
  std::vector<char> used(g.num_vertices() + 1, 0);
  std::function<int(std::size_t)> go = [&](std::size_t i) -> int {
    if (i == edges.size()) return 0;
    int best = go(i + 1);
    auto [u, v] = edges[i];
    if (!used[u] && !used[v]) {
      used[u] = used[v] = 1;
      best = std::max(best, 1 + go(i + 1));
      used[u] = used[v] = 0;
    }
    return best;
  };
  return go(0);
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("dimacs parses the 5-cycle") {
  std::istringstream in(
      "c the 5-cycle\n"
      "p edge 5 5\n"
      "e 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  Graph g = parse_dimacs(in);
  CHECK(g.num_vertices() == 5);
  CHECK(g.num_edges() == 5);
  CHECK(g == cycle(5));
}

TEST_CASE("dimacs parses K33 with duplicate and reversed edges collapsed") {
  std::istringstream in(
      "p edge 6 9\n"
      "e 1 4\ne 1 5\ne 1 6\ne 2 4\ne 2 5\ne 2 6\ne 3 4\ne 3 5\ne 3 6\n"
      "e 4 1\ne 1 4\n");
  Graph g = parse_dimacs(in);
  CHECK(g == complete_bipartite(3, 3));
  CHECK(g.num_edges() == 9);
}

TEST_CASE("dimacs errors") {
  auto expect_parse_error = [](const char* text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_dimacs(in), ParseError);
  };
  expect_parse_error("e 1 2\np edge 3 1\n");             // edge before p
  expect_parse_error("p edge 3 0\np edge 3 0\n");        // duplicate p
  expect_parse_error("p edge 3 1\ne 1 4\n");             // out of range
  expect_parse_error("p edge 3 1\ne 2 2\n");             // self-loop
  expect_parse_error("c only comments\n");               // missing p
  expect_parse_error("p col 3 1\n");                     // wrong format word
}

TEST_CASE("dimacs writer round-trips") {
  Graph g = random_graph(12, 40, 7);
  std::istringstream in(to_dimacs(g));
  CHECK(parse_dimacs(in) == g);
}

TEST_CASE("random_graph rejects densities outside (0,100)") {
  CHECK_THROWS_AS(random_graph(5, 0.0, 1), ParameterError);
  CHECK_THROWS_AS(random_graph(5, 100.0, 1), ParameterError);
  CHECK_THROWS_AS(random_graph(0, 50.0, 1), ParameterError);
}

TEST_CASE("random_graph is deterministic in the seed") {
  Graph a = random_graph(10, 50, 1);
  Graph b = random_graph(10, 50, 1);
  CHECK(a == b);
  Graph c = random_graph(10, 50, 2);
  CHECK(a.num_vertices() == c.num_vertices());
}

TEST_CASE("random_graph edge count stays within 5 sigma of the mean") {
  // n=70, density 10: mean 241.5, sigma = sqrt(2415 * 0.1 * 0.9) ~ 14.74
  Graph g = random_graph(70, 10, 7);
  double mean = 2415 * 0.10;
  double sigma = std::sqrt(2415 * 0.10 * 0.90);
  CHECK(std::abs(g.num_edges() - mean) <= 5 * sigma);
}

TEST_CASE("complement of K5 is edgeless and complement is an involution") {
  CHECK(complement(complete(5)).num_edges() == 0);
  for (std::uint64_t seed : {1, 2, 3}) {
    Graph g = random_graph(9, 35, seed);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("complement of C5 is again a 5-cycle") {
  Graph h = complement(cycle(5));
  CHECK(h.num_edges() == 5);
  for (int v = 1; v <= 5; ++v) CHECK(h.degree(v) == 2);
  CHECK(is_connected(h));
  CHECK_FALSE(bipartite_components(h)[0].is_bipartite);
}

TEST_CASE("stability number on named graphs") {
  CHECK(stability_number(cycle(5)) == 2);
  CHECK(stability_number(complete_bipartite(3, 3)) == 3);
  CHECK(stability_number(Graph(4)) == 4);
  CHECK(stability_number(cycle(5), std::vector<int>{}) == 0);
}

TEST_CASE("stability number agrees with brute force on random graphs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + static_cast<int>(rng() % 9);  // up to 12
    Graph g = random_graph(n, 20 + rng() % 60, rng());
    std::vector<int> s;
    for (int v = 1; v <= n; ++v)
      if (rng() % 4 != 0) s.push_back(v);
    CHECK(stability_number(g, s) == brute_force_alpha(g, s));
  }
}

TEST_CASE("grow_maximal_clique follows the weight-greedy rule") {
  std::vector<double> uniform(6, 1.0);
  CHECK(grow_maximal_clique(complete(4), uniform, 2) == std::vector<int>{1, 2, 3, 4});
  CHECK(grow_maximal_clique(cycle(5), uniform, 1) == std::vector<int>{1, 2});

  // triangle on {1,2,3} plus pendant edge 3-4, weights favoring 4
  Graph g(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
  std::vector<double> w{0, 0.1, 0.2, 0.1, 5.0};
  CHECK(grow_maximal_clique(g, w, 3) == std::vector<int>{3, 4});
}

TEST_CASE("grown cliques are maximal cliques") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 5 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, 30 + rng() % 50, rng());
    std::vector<double> w(n + 1);
    for (int v = 1; v <= n; ++v) w[v] = static_cast<double>(rng() % 1000) / 1000.0;
    int start = 1 + static_cast<int>(rng() % n);
    auto clique = grow_maximal_clique(g, w, start);
    CHECK(is_clique(g, clique));
    CHECK(std::find(clique.begin(), clique.end(), start) != clique.end());
    for (int v = 1; v <= n; ++v) {
      if (std::find(clique.begin(), clique.end(), v) != clique.end()) continue;
      bool extends = true;
      for (int u : clique)
        if (!g.adjacent(u, v)) {
          extends = false;
          break;
        }
      CHECK_FALSE(extends);
    }
  }
}

TEST_CASE("perfect matching on named graphs") {
  CHECK(has_perfect_matching(complete(4)));
  CHECK_FALSE(has_perfect_matching(complete(5)));  // odd n
  CHECK(has_perfect_matching(path(4)));
  CHECK_FALSE(has_perfect_matching(star(3)));
  // Petersen graph is 3-regular and has a perfect matching
  Graph petersen(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                      {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6},
                      {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}});
  CHECK(has_perfect_matching(petersen));
}

TEST_CASE("matching size agrees with brute force on random graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);  // up to 10
    Graph g = random_graph(n, 15 + rng() % 70, rng());
    CHECK(max_matching_size(g) == brute_force_matching(g));
  }
}

TEST_CASE("bipartite components") {
  auto c5 = bipartite_components(cycle(5));
  REQUIRE(c5.size() == 1);
  CHECK_FALSE(c5[0].is_bipartite);

  auto c4 = bipartite_components(cycle(4));
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].is_bipartite);

  Graph two_edges(4, {{1, 2}, {3, 4}});
  auto comps = bipartite_components(two_edges);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].is_bipartite);
  CHECK(comps[1].is_bipartite);
  CHECK(comps[0].vertices == std::vector<int>{1, 2});
  CHECK(comps[1].vertices == std::vector<int>{3, 4});

  // isolated vertices are their own bipartite components
  auto lone = bipartite_components(Graph(3));
  CHECK(lone.size() == 3);
}

TEST_CASE("induced subgraph keeps the right edges") {
  Graph g = wheel(6);
  std::vector<int> mapping;
  Graph h = induced_subgraph(g, {1, 2, 6}, &mapping);
  CHECK(mapping == std::vector<int>{1, 2, 6});
  CHECK(h.num_vertices() == 3);
  CHECK(h.num_edges() == 3);  // 1-2, 1-6, 2-6 survive
}

}  // TEST_SUITE
