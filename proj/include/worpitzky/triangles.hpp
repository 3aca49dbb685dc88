#pragma once

/**
 * @file triangles.hpp
 * @brief Worpitzky number triangles and Stirling numbers of the second kind.
 *
 * Both Worpitzky triangles are indexed exactly as printed in their OEIS
 * entries: n >= 1 is the row, 1 <= k <= n the column, and every cell with
 * k > n reads as zero.
 *
 *   MWNT(n, k) = (1/k) sum_{i=0..k} (-1)^(k-i) C(k, i) i^n   (A028246)
 *   AWNT(n, k) =       sum_{i=0..k} (-1)^(k-i) C(k, i) i^n   (A019538)
 *
 * The triangles are evaluated from these alternating sums. stirling2() uses
 * the recurrence instead and exists so the two routes can check each other.
 */

#include "worpitzky/numeric.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace worpitzky {

enum class TriangleKind { kMwnt, kAwnt, kStirling2 };

std::string_view to_string(TriangleKind kind);
/// Accepts "mwnt", "awnt", "stirling2". Returns nullopt otherwise.
std::optional<TriangleKind> parse_triangle_kind(std::string_view name);

/// Alternative Worpitzky number. Throws DomainError when n == 0 or k == 0.
BigInt awnt(unsigned n, unsigned k);

/// Mirrored Worpitzky number. Throws DomainError when n == 0 or k == 0 and
/// InternalError if the alternating sum is not divisible by k.
BigInt mwnt(unsigned n, unsigned k);

/// S(n, k) from S(n,k) = k S(n-1,k) + S(n-1,k-1), S(0,0) = 1.
BigInt stirling2(unsigned n, unsigned k);

/// Materialized rows 1..max_n of one triangle. Immutable once built.
class Triangle {
 public:
  TriangleKind kind() const { return kind_; }
  unsigned max_n() const { return static_cast<unsigned>(rows_.size()); }

  /// Row n (1-based) holding k = 1..n.
  const std::vector<BigInt>& row(unsigned n) const;

  /// Cell (n, k). Zero for k > n; cells past max_n are computed on demand.
  BigInt at(unsigned n, unsigned k) const;

  /// Cells in row-major order (n = 1, 2, ...; k = 1..n).
  std::vector<BigInt> linearize() const;

 private:
  friend Triangle build_triangle(TriangleKind kind, unsigned max_n);
  Triangle(TriangleKind kind, std::vector<std::vector<BigInt>> rows)
      : kind_(kind), rows_(std::move(rows)) {}

  TriangleKind kind_;
  std::vector<std::vector<BigInt>> rows_;
};

/// Builds rows 1..max_n and verifies them against the Stirling recurrence and
/// the factorial right diagonal before returning. Throws DomainError for
/// max_n == 0 and InternalError if a self-check fails.
Triangle build_triangle(TriangleKind kind, unsigned max_n);

/// Value of a single cell of @p kind, computed directly.
BigInt triangle_cell(TriangleKind kind, unsigned n, unsigned k);

/// 1-based row-major index of cell (n, k): n(n-1)/2 + k.
std::size_t linear_index(unsigned n, unsigned k);

struct CellPosition {
  unsigned n;
  unsigned k;
};
/// Inverse of linear_index. Throws DomainError for index 0.
CellPosition cell_position(std::size_t index);

}  // namespace worpitzky
