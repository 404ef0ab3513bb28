#include "ecp/rank.hpp"

#include <algorithm>

#include "ecp/errors.hpp"

namespace ecp {

namespace {

// largest prime below 2^63
constexpr std::uint64_t kPrime = 9223372036854775783ULL;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t acc = 1;
  while (exp) {
    if (exp & 1) acc = mul_mod(acc, base);
    base = mul_mod(base, base);
    exp >>= 1;
  }
  return acc;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

std::uint64_t from_int(int value) {
  return value >= 0 ? static_cast<std::uint64_t>(value)
                    : kPrime - static_cast<std::uint64_t>(-value) % kPrime;
}

}  // namespace

AffineRankAccumulator::AffineRankAccumulator(int dimension) : dim_(dimension) {
  if (dimension <= 0) throw ParameterError("affine rank: dimension must be positive");
}

std::vector<std::uint64_t> AffineRankAccumulator::to_diff_row(
    const std::vector<std::pair<int, int>>& point) const {
  std::vector<std::uint64_t> row(dim_, 0);
  for (auto [idx, val] : point) row[idx] = from_int(val);
  for (auto [idx, val] : points_[0]) {
    std::uint64_t sub = from_int(val);
    row[idx] = row[idx] >= sub ? row[idx] - sub : row[idx] + kPrime - sub;
  }
  return row;
}

bool AffineRankAccumulator::reduce_mod_p(std::vector<std::uint64_t>& row) const {
  for (std::size_t r = 0; r < echelon_.size(); ++r) {
    std::uint64_t factor = row[pivot_col_[r]];
    if (factor == 0) continue;
    const auto& basis_row = echelon_[r];
    for (int c = pivot_col_[r]; c < dim_; ++c) {
      if (basis_row[c] == 0) continue;
      std::uint64_t sub = mul_mod(factor, basis_row[c]);
      row[c] = row[c] >= sub ? row[c] - sub : row[c] + kPrime - sub;
    }
  }
  return std::any_of(row.begin(), row.end(), [](std::uint64_t v) { return v != 0; });
}

void AffineRankAccumulator::insert_mod_p(std::vector<std::uint64_t> row) {
  int pivot = 0;
  while (pivot < dim_ && row[pivot] == 0) ++pivot;
  std::uint64_t scale = inv_mod(row[pivot]);
  for (int c = pivot; c < dim_; ++c) row[c] = mul_mod(row[c], scale);
  // keep rows ordered by pivot column
  std::size_t at = 0;
  while (at < echelon_.size() && pivot_col_[at] < pivot) ++at;
  echelon_.insert(echelon_.begin() + at, std::move(row));
  pivot_col_.insert(pivot_col_.begin() + at, pivot);
}

void AffineRankAccumulator::add_point(std::vector<std::pair<int, int>> point) {
  points_.push_back(std::move(point));
  if (points_.size() == 1) return;
  auto row = to_diff_row(points_.back());
  if (reduce_mod_p(row)) {
    basis_.push_back(static_cast<int>(points_.size()) - 1);
    insert_mod_p(std::move(row));
  }
}

AffineRankReport AffineRankAccumulator::finalize() const {
  AffineRankReport report;
  report.num_points = num_points();
  if (points_.empty()) return report;

  std::vector<int> basis = basis_;
  auto diff_of = [&](int index) {
    // integer difference points_[index] - points_[0], sparse
    std::vector<std::pair<int, int>> diff;
    const auto& p = points_[index];
    const auto& p0 = points_[0];
    std::size_t i = 0, j = 0;
    while (i < p.size() || j < p0.size()) {
      if (j == p0.size() || (i < p.size() && p[i].first < p0[j].first)) {
        diff.emplace_back(p[i].first, p[i].second);
        ++i;
      } else if (i == p.size() || p0[j].first < p[i].first) {
        diff.emplace_back(p0[j].first, -p0[j].second);
        ++j;
      } else {
        int v = p[i].second - p0[j].second;
        if (v != 0) diff.emplace_back(p[i].first, v);
        ++i;
        ++j;
      }
    }
    return diff;
  };

  // Certify: every point difference must lie in the row space of the basis.
  // The modular screen may only under-select (with vanishing probability), so
  // force-accept any point that fails the exact orthogonality test and retry.
  while (true) {
    std::vector<std::vector<std::pair<int, int>>> rows;
    rows.reserve(basis.size());
    for (int idx : basis) rows.push_back(diff_of(idx));
    std::vector<std::vector<BigInt>> nullspace;
    int rank = integer_row_space_nullspace(rows, dim_, &nullspace);
    if (rank != static_cast<int>(basis.size()))
      throw ContractViolation("affine rank: modular screen accepted a dependent row");

    bool all_in_span = true;
    for (std::size_t index = 1; index < points_.size() && all_in_span; ++index) {
      auto diff = diff_of(static_cast<int>(index));
      for (const auto& normal : nullspace) {
        BigInt acc = 0;
        for (auto [idx, val] : diff) acc += BigInt(val) * normal[idx];
        if (acc != 0) {
          basis.push_back(static_cast<int>(index));
          all_in_span = false;
          break;
        }
      }
    }
    if (all_in_span) {
      report.affine_dim = rank;
      report.basis_witness.push_back(0);
      for (int idx : basis) report.basis_witness.push_back(idx);
      return report;
    }
  }
}

int integer_row_space_nullspace(
    const std::vector<std::vector<std::pair<int, int>>>& rows, int dim,
    std::vector<std::vector<BigInt>>* nullspace) {
  // rational RREF; sizes here are tiny (rank bounded by dim)
  std::vector<std::vector<BigRat>> mat;
  mat.reserve(rows.size());
  for (const auto& sparse : rows) {
    std::vector<BigRat> dense(dim, BigRat(0));
    for (auto [idx, val] : sparse) dense[idx] = val;
    mat.push_back(std::move(dense));
  }
  std::vector<int> pivot_of_row;
  int rank = 0;
  for (int col = 0; col < dim && rank < static_cast<int>(mat.size()); ++col) {
    int pivot_row = -1;
    for (int r = rank; r < static_cast<int>(mat.size()); ++r)
      if (mat[r][col] != 0) {
        pivot_row = r;
        break;
      }
    if (pivot_row < 0) continue;
    std::swap(mat[rank], mat[pivot_row]);
    BigRat inv = mat[rank][col];
    for (int c = col; c < dim; ++c) mat[rank][c] /= inv;
    for (int r = 0; r < static_cast<int>(mat.size()); ++r) {
      if (r == rank || mat[r][col] == 0) continue;
      BigRat factor = mat[r][col];
      for (int c = col; c < dim; ++c) mat[r][c] -= factor * mat[rank][c];
    }
    pivot_of_row.push_back(col);
    ++rank;
  }

  if (nullspace) {
    nullspace->clear();
    std::vector<char> is_pivot(dim, 0);
    for (int col : pivot_of_row) is_pivot[col] = 1;
    for (int free_col = 0; free_col < dim; ++free_col) {
      if (is_pivot[free_col]) continue;
      std::vector<BigRat> v(dim, BigRat(0));
      v[free_col] = 1;
      for (int r = 0; r < rank; ++r) v[pivot_of_row[r]] = -mat[r][free_col];
      BigInt lcm = 1;
      for (const auto& entry : v) {
        BigInt den = denominator(entry);
        lcm = lcm / gcd(lcm, den) * den;
      }
      std::vector<BigInt> scaled(dim);
      for (int c = 0; c < dim; ++c)
        scaled[c] = numerator(v[c]) * (lcm / denominator(v[c]));
      nullspace->push_back(std::move(scaled));
    }
  }
  return rank;
}

}  // namespace ecp
