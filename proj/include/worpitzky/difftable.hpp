#pragma once

#include "worpitzky/numeric.hpp"

#include <cstddef>
#include <vector>

namespace worpitzky {

/// Non-empty ordered run of sequence values a_0, a_1, ...
class Sequence {
 public:
  /// Throws DomainError if @p values is empty.
  explicit Sequence(std::vector<Rational> values);

  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<Rational> values_;
};

/// rows[0] is the sequence itself; rows[r][c] = rows[r-1][c+1] - rows[r-1][c].
/// The table is built down to the single-entry row.
struct DifferenceTable {
  std::vector<std::vector<Rational>> rows;
  /// main_diagonal[r] == rows[r][0].
  std::vector<Rational> main_diagonal;
};

/// Shallowest constant row of a difference table.
struct DegreeReport {
  std::size_t degree = 0;
  Rational constant_row_value;
  /// Number of entries in the constant row.
  std::size_t witnesses = 0;
};

DifferenceTable build_table(const Sequence& seq);

/// Finds the smallest d such that rows[d] holds at least @p min_witnesses
/// entries, all equal. Throws NotPolynomialError (carrying the deepest row
/// inspected) when no such row exists, and DomainError if min_witnesses < 2
/// or the table came from a single value.
DegreeReport detect_degree(const DifferenceTable& table, std::size_t min_witnesses = 2);

/// D_k = sum_{i=0..k} (-1)^(k-i) C(k, i) a_i, computed without building the
/// table. Throws OutOfRangeError when k >= seq.size().
Rational diagonal_direct(const Sequence& seq, std::size_t k);

}  // namespace worpitzky
