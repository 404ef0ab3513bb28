#pragma once

#include <vector>

#include "ecp/coloring.hpp"
#include "ecp/cut_row.hpp"
#include "ecp/graph.hpp"

namespace ecp {

/// Q(S) = { q in S : S is contained in N[q] }, the members of S adjacent to
/// every other member.
std::vector<int> closed_dominators(const Graph& g, const std::vector<int>& s);

/// sum_{v in q} x_vj <= w_j for a clique q, |q| >= 2, j <= n-1.
CutRow clique_cut(const Graph& g, const std::vector<int>& q, int j);

/// sum_{k=j..n} x_vk <= w_j for j <= n-2.
CutRow block_cut(int v, int j, int n);

/// sum_{v in S\Q} x_vj + 2 sum_{v in Q} x_vj <= 2 w_j, requires alpha(S) = 2;
/// Q is recomputed from (g, s), never trusted from the caller.
CutRow two_rank_cut(const Graph& g, const std::vector<int>& s, int j);

/// Dominating form for Q empty, j <= n-2:
/// sum_{v in S} x_vj + sum_v x_{v,n-1} <= 2 w_j + w_{n-1} - w_n.
CutRow two_rank_empty_variant(const Graph& g, const std::vector<int>& s, int j);

/// Dominating form for Q = {q}, j <= n-1:
/// sum_{v in S\{q}} x_vj + 2 x_qj + x_qn <= 2 w_j.
CutRow two_rank_singleton_variant(const Graph& g, const std::vector<int>& s,
                                  int q, int j);

/// min(ceil(n/k), alpha_s); requires 1 <= k <= n and alpha_s >= 1.
int gamma(int n, int k, int alpha_s);

/// gamma_jS x_uj + sum_{v in S} x_vj + sum_{k>j} (gamma_jS - gamma_kS) x_uk
/// <= gamma_jS w_j, for S subset of N(u) with alpha(S) >= 2 and j <= n-1.
CutRow subneighborhood_cut(const Graph& g, int u, int j, const std::vector<int>& s);

/// sum_{j in S} sum_v x_vj <= sum_k b_Sk (w_k - w_{k+1}), with
/// b_Sk = d_Sk floor(n/k) + min(d_Sk, n - k floor(n/k)).
CutRow s_color_cut(const std::vector<int>& colors, int n);

/// (floor(n/j)-1) x_uj - sum_{v outside N[u]} x_vj + sum_{k>j} b_jk x_uk
/// <= sum_{k>j} b_jk (w_k - w_{k+1}), with b_jk = floor(n/j) - floor(n/k);
/// requires u non-universal, j <= floor(n/2), alpha(N(u)) >= floor(n/j).
CutRow outside_neighborhood_cut(const Graph& g, int u, int j);

/// The (u,j,k,Q) family: q a nonempty clique disjoint from N[u],
/// j <= k <= n-2, alpha(N(u)) >= ceil(n/k) - 1.
CutRow clique_neighborhood_cut(const Graph& g, int u, int j, int k,
                               const std::vector<int>& q);

/// x_vj <= sum_{u=j-1..v-1} x_{u,j-1} for 2 <= j <= v <= n. Not valid for
/// the full polytope: it removes symmetric colorings while keeping every
/// canonically labeled one.
CutRow symmetry_cut(int v, int j, int n);

/// True iff every k-eqcol of g, for every feasible k, satisfies the row.
/// Exact integer evaluation; refuses instances above the oracle cap.
bool check_validity(const Graph& g, const CutRow& row,
                    const OracleLimits& limits = {});

}  // namespace ecp
