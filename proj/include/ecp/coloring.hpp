#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ecp/cut_row.hpp"
#include "ecp/graph.hpp"

namespace ecp {

/// A proper coloring whose class sizes differ by at most one. Colors are
/// 1..k; color_of[0] is unused.
struct EquitableColoring {
  int k = 0;
  std::vector<int> color_of;

  int n() const { return static_cast<int>(color_of.size()) - 1; }
  std::vector<int> class_of(int j) const;
  int class_size(int j) const;
  bool operator==(const EquitableColoring&) const = default;
};

/// Properness + equity + surjectivity + index ranges.
bool is_valid_eqcol(const Graph& g, const EquitableColoring& c);

/// The 0/1 vector (x_{1,1..n}, ..., x_{n,1..n}, w_{1..n}).
std::vector<double> to_vector(const EquitableColoring& c, int n);

/// Relabels classes by their smallest vertex: the class of vertex 1 becomes
/// color 1, the class of the smallest remaining vertex color 2, and so on.
EquitableColoring canonical_relabeling(const EquitableColoring& c);

/// Exact LHS of a row at a coloring's 0/1 vector, without materializing it.
std::int64_t evaluate_lhs(const CutRow& row, const EquitableColoring& c, int n);
bool is_tight(const CutRow& row, const EquitableColoring& c, int n);
bool satisfies(const CutRow& row, const EquitableColoring& c, int n);

struct OracleLimits {
  int max_vertices = 14;  // enumeration refuses larger instances
};

/// Enumerates every labeled k-eqcol by backtracking over vertices in index
/// order. The callback receives a reusable buffer; return false to stop.
void for_each_eqcol(const Graph& g, int k,
                    const std::function<bool(const EquitableColoring&)>& visit,
                    const OracleLimits& limits = {});

std::vector<EquitableColoring> enumerate_eqcols(const Graph& g, int k,
                                                const OracleLimits& limits = {});

/// Feasibility only; restricts the search to canonical labelings, which is
/// exact for existence and much faster than full enumeration.
bool admits_eqcol(const Graph& g, int k, const OracleLimits& limits = {});

/// A(G): the k in 1..n admitting no k-eqcol.
std::set<int> infeasible_k_set(const Graph& g, const OracleLimits& limits = {});

int chi_eq_exact(const Graph& g, const OracleLimits& limits = {});

/// Conjunction of structural requirements on a k-eqcol.
struct ColoringSpec {
  struct ClassIntersection {
    int color = 0;
    std::vector<int> set;
    int count = 0;  // require |C_color ∩ set| == count
  };
  struct ExactClass {
    int color = 0;
    std::vector<int> members;  // require C_color == members
  };
  std::vector<ClassIntersection> intersections;
  std::vector<ExactClass> exact_classes;
  std::vector<std::pair<int, int>> requires_member;  // (v, j): v in C_j
  std::vector<std::pair<int, int>> forbids_member;   // (v, j): v not in C_j
  std::vector<CutRow> tight_rows;                    // row holds with equality
};

bool satisfies(const Graph& g, const EquitableColoring& c, const ColoringSpec& spec);

/// Exhaustive witness search; absent when no k-eqcol matches the spec.
/// Throws ParameterError when the spec references a color above k.
std::optional<EquitableColoring> exists_eqcol_matching(const Graph& g, int k,
                                                       const ColoringSpec& spec,
                                                       const OracleLimits& limits = {});

}  // namespace ecp
