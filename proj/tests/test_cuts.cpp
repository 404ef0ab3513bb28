#include <random>
#include <set>

#include "doctest.h"
#include "ecp/coloring.hpp"
#include "ecp/cuts.hpp"
#include "ecp/errors.hpp"
#include "test_util.hpp"

using namespace ecp;
using namespace ecp::testutil;

namespace {

std::int64_t coeff_of(const CutRow& row, int var) {
  for (auto [id, c] : row.coeffs)
    if (id == var) return c;
  return 0;
}

}  // namespace

TEST_SUITE("cuts") {

TEST_CASE("clique cut instantiation and preconditions") {
  Graph g = cycle(5);
  CutRow row = clique_cut(g, {1, 2}, 1);
  CHECK(coeff_of(row, x_index(1, 1, 5)) == 1);
  CHECK(coeff_of(row, x_index(2, 1, 5)) == 1);
  CHECK(coeff_of(row, w_index(1, 5)) == -1);
  CHECK(row.coeffs.size() == 3);
  CHECK(row.rhs == 0);
  CHECK(row.sense == Sense::LessEqual);

  CHECK_THROWS_AS(clique_cut(g, {1, 3}, 1), ParameterError);   // not a clique
  CHECK_THROWS_AS(clique_cut(g, {1}, 1), ParameterError);      // too small
  CHECK_THROWS_AS(clique_cut(g, {1, 2}, 5), ParameterError);   // j > n-1
}

TEST_CASE("all maximal-clique cuts of C5 are valid") {
  Graph g = cycle(5);
  for (auto [u, v] : g.edges())
    for (int j = 1; j <= 4; ++j) CHECK(check_validity(g, clique_cut(g, {u, v}, j)));
}

TEST_CASE("clique cut LHS at an eqcol never exceeds w_j") {
  Graph g = wheel(6);
  auto row = clique_cut(g, {1, 2, 6}, 2);
  for (int k = 1; k <= 6; ++k)
    for (const auto& c : enumerate_eqcols(g, k)) {
      std::int64_t lhs = evaluate_lhs(row, c, 6);
      CHECK(lhs <= 0);
      CHECK(lhs >= -1);  // sum over the clique is 0 or 1, w_j is 0 or 1
    }
}

TEST_CASE("block cut structure and validity") {
  CutRow row = block_cut(1, 3, 5);  // j = n-2
  CHECK(coeff_of(row, x_index(1, 3, 5)) == 1);
  CHECK(coeff_of(row, x_index(1, 4, 5)) == 1);
  CHECK(coeff_of(row, x_index(1, 5, 5)) == 1);
  CHECK(coeff_of(row, w_index(3, 5)) == -1);
  CHECK(row.coeffs.size() == 4);
  CHECK_THROWS_AS(block_cut(1, 4, 5), ParameterError);  // j > n-2

  Graph g = cycle(5);
  for (int v = 1; v <= 5; ++v)
    for (int j = 1; j <= 3; ++j) CHECK(check_validity(g, block_cut(v, j, 5)));
}

TEST_CASE("two-rank cut on C5 has empty Q") {
  Graph g = cycle(5);
  CutRow row = two_rank_cut(g, all_vertices(g), 1);
  for (int v = 1; v <= 5; ++v) CHECK(coeff_of(row, x_index(v, 1, 5)) == 1);
  CHECK(coeff_of(row, w_index(1, 5)) == -2);
  auto* tag = std::get_if<TwoRankTag>(&row.family);
  REQUIRE(tag != nullptr);
  CHECK(tag->q.empty());
  CHECK(check_validity(g, row));
}

TEST_CASE("two-rank cut on the wheel W6 lifts the hub") {
  Graph g = wheel(6);
  CutRow row = two_rank_cut(g, all_vertices(g), 1);
  for (int v = 1; v <= 5; ++v) CHECK(coeff_of(row, x_index(v, 1, 6)) == 1);
  CHECK(coeff_of(row, x_index(6, 1, 6)) == 2);  // hub dominates V
  CHECK(coeff_of(row, w_index(1, 6)) == -2);
  CHECK(check_validity(g, row));

  CHECK_THROWS_AS(two_rank_cut(cycle(6), all_vertices(cycle(6)), 1),
                  ParameterError);  // alpha(C6) = 3
}

TEST_CASE("two-rank empty variant: structure, validity, tightness at k=n") {
  Graph g = cycle(5);
  CutRow row = two_rank_empty_variant(g, all_vertices(g), 1);
  CHECK(coeff_of(row, x_index(2, 1, 5)) == 1);
  CHECK(coeff_of(row, x_index(2, 4, 5)) == 1);  // color n-1 block
  CHECK(coeff_of(row, w_index(1, 5)) == -2);
  CHECK(coeff_of(row, w_index(4, 5)) == -1);
  CHECK(coeff_of(row, w_index(5, 5)) == 1);
  CHECK(check_validity(g, row));

  // all-singletons coloring: LHS - RHS must vanish
  EquitableColoring singletons;
  singletons.k = 5;
  singletons.color_of = {0, 1, 2, 3, 4, 5};
  CHECK(is_tight(row, singletons, 5));

  Graph w6 = wheel(6);
  CHECK_THROWS_AS(two_rank_empty_variant(w6, all_vertices(w6), 1),
                  ParameterError);  // Q = {hub} nonempty
}

TEST_CASE("two-rank singleton variant dominates the plain cut coefficientwise") {
  Graph g = wheel(6);
  CutRow plain = two_rank_cut(g, all_vertices(g), 1);
  CutRow strong = two_rank_singleton_variant(g, all_vertices(g), 6, 1);
  CHECK(coeff_of(strong, x_index(6, 1, 6)) == 2);
  CHECK(coeff_of(strong, x_index(6, 6, 6)) == 1);
  CHECK(strong.rhs == plain.rhs);
  // identical except the extra +x_{q,n} term
  for (int var = 0; var < num_model_vars(6); ++var) {
    std::int64_t expected = coeff_of(plain, var) + (var == x_index(6, 6, 6) ? 1 : 0);
    CHECK(coeff_of(strong, var) == expected);
  }
  CHECK(check_validity(g, strong));
  CHECK_THROWS_AS(two_rank_singleton_variant(g, all_vertices(g), 3, 1), ParameterError);
}

TEST_CASE("gamma") {
  CHECK(gamma(10, 3, 2) == 2);
  CHECK(gamma(10, 2, 7) == 5);
  CHECK(gamma(9, 9, 4) == 1);
  CHECK(gamma(9, 9, 1) == 1);
  CHECK_THROWS_AS(gamma(5, 6, 2), ParameterError);
  CHECK_THROWS_AS(gamma(5, 2, 0), ParameterError);
}

TEST_CASE("subneighborhood cut matches the star example") {
  Graph g = star(4);  // center 1, leaves 2..5, n = 5
  std::vector<int> leaves{2, 3, 4, 5};
  CutRow row = subneighborhood_cut(g, 1, 1, leaves);
  CHECK(coeff_of(row, x_index(1, 1, 5)) == 4);  // gamma_1S = min(5,4)
  for (int v : leaves) CHECK(coeff_of(row, x_index(v, 1, 5)) == 1);
  CHECK(coeff_of(row, x_index(1, 2, 5)) == 1);  // 4 - min(3,4)
  CHECK(coeff_of(row, x_index(1, 3, 5)) == 2);  // 4 - min(2,4)
  CHECK(coeff_of(row, x_index(1, 4, 5)) == 2);  // 4 - min(2,4)
  CHECK(coeff_of(row, x_index(1, 5, 5)) == 3);  // 4 - min(1,4)
  CHECK(coeff_of(row, w_index(1, 5)) == -4);
  CHECK(check_validity(g, row));

  CHECK_THROWS_AS(subneighborhood_cut(g, 1, 1, {2, 1}), ParameterError);  // 1 not in N(1)
  CHECK_THROWS_AS(subneighborhood_cut(cycle(5), 1, 1, {2}), ParameterError);  // alpha < 2
}

TEST_CASE("subneighborhood coefficient of x_uk vanishes when gamma_k = gamma_j") {
  // n = 6, S of stability 2 inside N(u): gamma_jS = min(ceil(6/j), 2)
  Graph g = wheel(6);
  std::vector<int> s{1, 3};  // two non-adjacent rim neighbors of the hub
  CutRow row = subneighborhood_cut(g, 6, 2, s);
  // gamma_2 = min(3,2) = 2; gamma_3 = min(2,2) = 2 -> coefficient 0
  CHECK(coeff_of(row, x_index(6, 3, 6)) == 0);
  CHECK(coeff_of(row, x_index(6, 6, 6)) == 1);  // gamma_6 = 1
  CHECK(check_validity(g, row));
}

TEST_CASE("s-color cut coefficients follow b_Sk") {
  // n=7, S={1,2}: b_1 = 7, b_2 = 7, b_3 = 5, ...
  CutRow row = s_color_cut({1, 2}, 7);
  for (int v = 1; v <= 7; ++v) {
    CHECK(coeff_of(row, x_index(v, 1, 7)) == 1);
    CHECK(coeff_of(row, x_index(v, 2, 7)) == 1);
    CHECK(coeff_of(row, x_index(v, 3, 7)) == 0);
  }
  CHECK(coeff_of(row, w_index(1, 7)) == -7);
  CHECK(coeff_of(row, w_index(2, 7)) == 0);
  CHECK(coeff_of(row, w_index(3, 7)) == 2);  // -(b3 - b2) = -(5-7)
  CHECK_THROWS_AS(s_color_cut({}, 7), ParameterError);

  CutRow single = s_color_cut({1}, 7);
  CHECK(coeff_of(single, w_index(1, 7)) == -7);  // b_1 = 7
}

TEST_CASE("s-color cuts are valid by enumeration") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 6; ++trial) {
    int n = 5 + static_cast<int>(rng() % 3);
    Graph g = random_graph(n, 25 + rng() % 50, rng());
    std::vector<int> colors;
    for (int j = 1; j <= n; ++j)
      if (rng() % 2) colors.push_back(j);
    if (colors.empty()) colors.push_back(1);
    CHECK(check_validity(g, s_color_cut(colors, n)));
  }
}

TEST_CASE("outside-neighborhood cut structure and preconditions") {
  // u = 1 adjacent to 2..9; vertex 10 unattached: alpha(N(u)) = 8
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= 9; ++v) edges.emplace_back(1, v);
  Graph g(10, edges);
  CutRow row = outside_neighborhood_cut(g, 1, 2);
  CHECK(coeff_of(row, x_index(1, 2, 10)) == 4);    // floor(10/2) - 1
  CHECK(coeff_of(row, x_index(10, 2, 10)) == -1);  // outside N[u]
  CHECK(coeff_of(row, x_index(1, 5, 10)) == 3);    // b_{2,5} = 5 - 2
  CHECK(coeff_of(row, x_index(1, 3, 10)) == 2);    // 5 - 3
  CHECK(coeff_of(row, x_index(1, 4, 10)) == 3);    // floor(10/4) = 2
  CHECK(coeff_of(row, w_index(3, 10)) == -2);

  Graph w6 = wheel(6);
  CHECK_THROWS_AS(outside_neighborhood_cut(w6, 6, 1), ParameterError);  // universal hub
  CHECK_THROWS_AS(outside_neighborhood_cut(g, 1, 6), ParameterError);   // j > n/2
  CHECK_THROWS_AS(outside_neighborhood_cut(cycle(6), 1, 2), ParameterError);  // alpha too small
}

TEST_CASE("outside-neighborhood cuts are valid by enumeration") {
  std::mt19937_64 rng(55);
  int tested = 0;
  for (int trial = 0; trial < 40 && tested < 12; ++trial) {
    int n = 5 + static_cast<int>(rng() % 3);
    Graph g = random_graph(n, 20 + rng() % 40, rng());
    for (int u = 1; u <= n && tested < 12; ++u) {
      if (g.degree(u) == n - 1) continue;
      for (int j = 1; j <= n / 2 && tested < 12; ++j) {
        if (stability_number(g, g.neighbors(u)) < n / j) continue;
        CHECK(check_validity(g, outside_neighborhood_cut(g, u, j)));
        ++tested;
      }
    }
  }
  CHECK(tested > 0);
}

TEST_CASE("clique-neighborhood cut: RHS segments and validity") {
  // path 1-2-3-4-5 plus 6-7 edge: u=1, N(u)={2}, Q={6,7} disjoint from N[1]
  Graph g(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 7}});
  int n = 7;
  // alpha(N(1)) = 1 >= ceil(7/k)-1 requires k >= 4; pick j = k = 4
  CutRow row = clique_neighborhood_cut(g, 1, 4, 4, {6, 7});
  int cap = 2;  // ceil(7/4)
  CHECK(coeff_of(row, x_index(1, 4, n)) == cap - 1);
  CHECK(coeff_of(row, x_index(2, 4, n)) == 1);
  CHECK(coeff_of(row, x_index(6, 4, n)) == 1);
  CHECK(coeff_of(row, x_index(7, 4, n)) == 1);
  // j = k: RHS telescope begins at ceil(n/k): w_4 coefficient is -cap
  CHECK(coeff_of(row, w_index(4, n)) == -cap);
  // the n-1 and n segment is cap+1: jump at w_6 is -(cap+1 - cap) = -1
  CHECK(coeff_of(row, w_index(6, n)) == -1);
  CHECK(check_validity(g, row));

  CHECK_THROWS_AS(clique_neighborhood_cut(g, 1, 4, 4, {2, 6}), ParameterError);  // hits N[u]
  CHECK_THROWS_AS(clique_neighborhood_cut(g, 1, 4, 6, {6, 7}), ParameterError);  // k > n-2
  CHECK_THROWS_AS(clique_neighborhood_cut(g, 1, 2, 2, {6, 7}), ParameterError);  // alpha too small
}

TEST_CASE("clique-neighborhood cuts are valid by enumeration") {
  std::mt19937_64 rng(91);
  int tested = 0;
  for (int trial = 0; trial < 60 && tested < 10; ++trial) {
    int n = 6 + static_cast<int>(rng() % 2);
    Graph g = random_graph(n, 25 + rng() % 40, rng());
    for (int u = 1; u <= n && tested < 10; ++u) {
      int alpha = stability_number(g, g.neighbors(u));
      std::vector<char> closed(n + 1, 0);
      closed[u] = 1;
      for (int v : g.neighbors(u)) closed[v] = 1;
      for (int a = 1; a <= n && tested < 10; ++a) {
        if (closed[a]) continue;
        for (int b = a + 1; b <= n; ++b) {
          if (closed[b] || !g.adjacent(a, b)) continue;
          for (int k = 2; k <= n - 2 && tested < 10; ++k) {
            if (alpha < (n + k - 1) / k - 1) continue;
            for (int j = 1; j <= k && tested < 10; ++j) {
              CHECK(check_validity(g, clique_neighborhood_cut(g, u, j, k, {a, b})));
              ++tested;
            }
          }
        }
      }
    }
  }
  CHECK(tested > 0);
}

TEST_CASE("symmetry cuts: structure and canonical satisfaction") {
  CutRow r22 = symmetry_cut(2, 2, 5);
  CHECK(coeff_of(r22, x_index(2, 2, 5)) == 1);
  CHECK(coeff_of(r22, x_index(1, 1, 5)) == -1);
  CHECK(r22.coeffs.size() == 2);

  CutRow r32 = symmetry_cut(3, 2, 5);
  CHECK(coeff_of(r32, x_index(3, 2, 5)) == 1);
  CHECK(coeff_of(r32, x_index(1, 1, 5)) == -1);
  CHECK(coeff_of(r32, x_index(2, 1, 5)) == -1);

  CHECK_THROWS_AS(symmetry_cut(2, 3, 5), ParameterError);  // j > v

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    int n = 5 + static_cast<int>(rng() % 2);
    Graph g = random_graph(n, 30 + rng() % 40, rng());
    std::vector<CutRow> sym;
    for (int j = 2; j <= n; ++j)
      for (int v = j; v <= n; ++v) sym.push_back(symmetry_cut(v, j, n));
    for (int k = 1; k <= n; ++k)
      for (const auto& c : enumerate_eqcols(g, k)) {
        auto canon = canonical_relabeling(c);
        for (const auto& row : sym) CHECK(satisfies(row, canon, n));
      }
  }
}

TEST_CASE("check_validity rejects a garbage row") {
  Graph g = cycle(5);
  RowBuilder builder(num_model_vars(5));
  for (int v = 1; v <= 5; ++v) builder.add(x_index(v, 1, 5), 1);
  CutRow bogus = builder.finish(Sense::LessEqual, 0, SColorTag{{1}});
  CHECK_FALSE(check_validity(g, bogus));
}

TEST_CASE("rows round-trip through the certificate text form") {
  Graph g = wheel(6);
  std::vector<CutRow> rows;
  rows.push_back(clique_cut(g, {1, 2, 6}, 2));
  rows.push_back(block_cut(3, 2, 6));
  rows.push_back(two_rank_cut(g, all_vertices(g), 1));
  rows.push_back(two_rank_singleton_variant(g, all_vertices(g), 6, 1));
  rows.push_back(subneighborhood_cut(g, 6, 2, {1, 3}));
  rows.push_back(s_color_cut({2, 3}, 6));
  rows.push_back(symmetry_cut(3, 2, 6));
  Graph c5 = cycle(5);
  rows.push_back(two_rank_empty_variant(c5, all_vertices(c5), 1));
  Graph p7(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 7}});
  rows.push_back(clique_neighborhood_cut(p7, 1, 4, 4, {6, 7}));

  for (const auto& row : rows) {
    int n = 6;
    if (std::holds_alternative<TwoRankEmptyTag>(row.family)) n = 5;
    if (std::holds_alternative<CliqueNeighborhoodTag>(row.family)) n = 7;
    int parsed_n = 0;
    CutRow back = row_from_text(to_text(row, n), &parsed_n);
    CHECK(parsed_n == n);
    CHECK(back == row);
  }
  CHECK_THROWS_AS(row_from_text("clique n=5 j=1 missing colon"), ParseError);
  CHECK_THROWS_AS(row_from_text("wat n=5 : +1 x[1,1] <= 0"), ParseError);
}

}  // TEST_SUITE
