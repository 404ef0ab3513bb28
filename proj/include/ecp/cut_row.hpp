#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ecp {

// Variable indexing over the (x, w) space: the vector is ordered as
// (x_{1,1..n}, ..., x_{n,1..n}, w_{1..n}), all ids 0-based.
inline int x_index(int v, int j, int n) { return (v - 1) * n + (j - 1); }
inline int w_index(int j, int n) { return n * n + (j - 1); }
inline int num_model_vars(int n) { return n * n + n; }

enum class Sense { LessEqual, Equal, GreaterEqual };

// --- family tags: each generator records its parameters so a row
// round-trips to the call that produced it ---

struct CliqueTag {
  std::vector<int> clique;
  int color = 0;
  bool operator==(const CliqueTag&) const = default;
};
struct BlockTag {
  int vertex = 0;
  int color = 0;
  bool operator==(const BlockTag&) const = default;
};
struct TwoRankTag {
  std::vector<int> s;
  std::vector<int> q;
  int color = 0;
  bool operator==(const TwoRankTag&) const = default;
};
struct TwoRankEmptyTag {
  std::vector<int> s;
  int color = 0;
  bool operator==(const TwoRankEmptyTag&) const = default;
};
struct TwoRankSingletonTag {
  std::vector<int> s;
  int q = 0;
  int color = 0;
  bool operator==(const TwoRankSingletonTag&) const = default;
};
struct SubneighborhoodTag {
  int u = 0;
  int color = 0;
  std::vector<int> s;
  bool operator==(const SubneighborhoodTag&) const = default;
};
struct SColorTag {
  std::vector<int> colors;
  bool operator==(const SColorTag&) const = default;
};
struct OutsideNeighborhoodTag {
  int u = 0;
  int color = 0;
  bool operator==(const OutsideNeighborhoodTag&) const = default;
};
struct CliqueNeighborhoodTag {
  int u = 0;
  int j = 0;
  int k = 0;
  std::vector<int> clique;
  bool operator==(const CliqueNeighborhoodTag&) const = default;
};
struct SymmetryTag {
  int vertex = 0;
  int color = 0;
  bool operator==(const SymmetryTag&) const = default;
};

// model rows carry tags too, so the LP pool can tell them apart from cuts
struct AssignmentTag {
  int vertex = 0;
  bool operator==(const AssignmentTag&) const = default;
};
struct ConflictTag {
  int u = 0, v = 0, color = 0;
  bool operator==(const ConflictTag&) const = default;
};
struct WOrderTag {
  int color = 0;  // w_{color+1} <= w_{color}
  bool operator==(const WOrderTag&) const = default;
};
struct IsolatedTag {
  int vertex = 0, color = 0;
  bool operator==(const IsolatedTag&) const = default;
};
struct EquityLowerTag {
  int color = 0;
  bool operator==(const EquityLowerTag&) const = default;
};
struct EquityUpperTag {
  int color = 0;
  bool operator==(const EquityUpperTag&) const = default;
};

using FamilyTag =
    std::variant<CliqueTag, BlockTag, TwoRankTag, TwoRankEmptyTag,
                 TwoRankSingletonTag, SubneighborhoodTag, SColorTag,
                 OutsideNeighborhoodTag, CliqueNeighborhoodTag, SymmetryTag,
                 AssignmentTag, ConflictTag, WOrderTag, IsolatedTag,
                 EquityLowerTag, EquityUpperTag>;

/// Short family name ("clique", "two_rank", "equity_lower", ...).
std::string family_name(const FamilyTag& tag);

/// One linear inequality over (x, w) in sparse form. Coefficients are exact
/// integers for every family, which keeps validity checks tolerance-free.
struct CutRow {
  std::vector<std::pair<int, std::int64_t>> coeffs;  // sorted by variable id
  Sense sense = Sense::LessEqual;
  std::int64_t rhs = 0;
  FamilyTag family{};

  bool operator==(const CutRow& other) const {
    return coeffs == other.coeffs && sense == other.sense &&
           rhs == other.rhs && family == other.family;
  }
};

/// Accumulates coefficients (summing duplicates) and emits a sorted CutRow.
class RowBuilder {
 public:
  explicit RowBuilder(int num_vars) : coeff_(num_vars, 0) {}
  void add(int var, std::int64_t c) {
    if (coeff_[var] == 0 && c != 0) touched_.push_back(var);
    coeff_[var] += c;
  }
  CutRow finish(Sense sense, std::int64_t rhs, FamilyTag tag);

 private:
  std::vector<std::int64_t> coeff_;
  std::vector<int> touched_;
};

double evaluate_lhs(const CutRow& row, const std::vector<double>& point);

/// LHS - RHS for <=, RHS - LHS for >=, |LHS - RHS| for ==; positive means
/// violated.
double violation(const CutRow& row, const std::vector<double>& point);

bool satisfies(const CutRow& row, const std::vector<double>& point,
               double tol = 0.0);

/// One-line certificate form:
///   <family> n=<n> <params> : <sparse terms> <sense> <rhs>
std::string to_text(const CutRow& row, int n);

/// Parses the to_text form back; throws ParseError on malformed input.
/// When num_vertices is non-null it receives the n recorded in the line.
CutRow row_from_text(const std::string& line, int* num_vertices = nullptr);

/// Human-readable variable name ("x[v,j]" or "w[j]") for an id.
std::string var_name(int var, int n);

}  // namespace ecp
