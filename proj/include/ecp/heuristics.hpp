#pragma once

#include <optional>
#include <vector>

#include "ecp/coloring.hpp"
#include "ecp/graph.hpp"

namespace ecp {

/// Greedy sequential coloring in largest-degree-first order with capacity
/// ceil(n/k), followed by size rebalancing; k grows until an equitable
/// coloring emerges (k = n always succeeds).
EquitableColoring initial_heuristic(const Graph& g);

/// Rounds the fractional point to the largest-x color per vertex, repairs
/// conflicts greedily, rebalances class sizes, and returns the result only
/// when it is a valid eqcol strictly better than incumbent_k.
std::optional<EquitableColoring> primal_heuristic(const Graph& g,
                                                  const std::vector<double>& point,
                                                  int incumbent_k);

}  // namespace ecp
