#include "worpitzky/triangles.hpp"

#include "worpitzky/errors.hpp"

#include <string>

namespace worpitzky {

namespace {

void require_positive(unsigned n, unsigned k, const char* name) {
  if (n == 0 || k == 0) {
    throw DomainError(std::string(name) + "(" + std::to_string(n) + ", " + std::to_string(k) +
                      ") is defined only for n >= 1, k >= 1");
  }
}

// sum_{i=0..k} (-1)^(k-i) C(k, i) i^n, with 0^n = 0 for n >= 1.
BigInt alternating_power_sum(unsigned n, unsigned k) {
  BigInt sum = 0;
  for (unsigned i = 1; i <= k; ++i) {
    BigInt term = binomial(k, i) * pow(BigInt(i), n);
    if ((k - i) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

}  // namespace

std::string_view to_string(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::kMwnt:
      return "mwnt";
    case TriangleKind::kAwnt:
      return "awnt";
    case TriangleKind::kStirling2:
      return "stirling2";
  }
  return "unknown";
}

std::optional<TriangleKind> parse_triangle_kind(std::string_view name) {
  if (name == "mwnt") return TriangleKind::kMwnt;
  if (name == "awnt") return TriangleKind::kAwnt;
  if (name == "stirling2") return TriangleKind::kStirling2;
  return std::nullopt;
}

BigInt awnt(unsigned n, unsigned k) {
  require_positive(n, k, "AWNT");
  return alternating_power_sum(n, k);
}

BigInt mwnt(unsigned n, unsigned k) {
  require_positive(n, k, "MWNT");
  const BigInt sum = alternating_power_sum(n, k);
  if (sum % k != 0) {
    throw InternalError("MWNT(" + std::to_string(n) + ", " + std::to_string(k) +
                        "): alternating sum " + sum.str() + " is not divisible by k");
  }
  return sum / k;
}

BigInt stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  // prev[j] = S(m-1, j) while building row m.
  std::vector<BigInt> prev(k + 1, BigInt(0));
  prev[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<BigInt> cur(k + 1, BigInt(0));
    for (unsigned j = 1; j <= std::min(m, k); ++j) cur[j] = j * prev[j] + prev[j - 1];
    prev = std::move(cur);
  }
  return prev[k];
}

BigInt triangle_cell(TriangleKind kind, unsigned n, unsigned k) {
  switch (kind) {
    case TriangleKind::kMwnt:
      return mwnt(n, k);
    case TriangleKind::kAwnt:
      return awnt(n, k);
    case TriangleKind::kStirling2:
      require_positive(n, k, "S2");
      return stirling2(n, k);
  }
  throw InternalError("unknown triangle kind");
}

const std::vector<BigInt>& Triangle::row(unsigned n) const {
  if (n == 0 || n > rows_.size()) {
    throw OutOfRangeError("row " + std::to_string(n) + " outside 1.." +
                          std::to_string(rows_.size()));
  }
  return rows_[n - 1];
}

BigInt Triangle::at(unsigned n, unsigned k) const {
  if (n == 0 || k == 0) throw DomainError("triangle cells are indexed from (1, 1)");
  if (k > n) return 0;
  if (n <= rows_.size()) return rows_[n - 1][k - 1];
  return triangle_cell(kind_, n, k);
}

std::vector<BigInt> Triangle::linearize() const {
  std::vector<BigInt> cells;
  cells.reserve(rows_.size() * (rows_.size() + 1) / 2);
  for (const auto& r : rows_) cells.insert(cells.end(), r.begin(), r.end());
  return cells;
}

Triangle build_triangle(TriangleKind kind, unsigned max_n) {
  if (max_n == 0) throw DomainError("a triangle needs at least one row");

  std::vector<std::vector<BigInt>> rows;
  rows.reserve(max_n);
  for (unsigned n = 1; n <= max_n; ++n) {
    std::vector<BigInt> r;
    r.reserve(n);
    for (unsigned k = 1; k <= n; ++k) {
      const BigInt value = triangle_cell(kind, n, k);

      // Independent route through the Stirling recurrence.
      const BigInt s = stirling2(n, k);
      BigInt expected = s;
      if (kind == TriangleKind::kAwnt) expected = factorial(k) * s;
      if (kind == TriangleKind::kMwnt) expected = factorial(k - 1) * s;
      if (value != expected) {
        throw InternalError(std::string(to_string(kind)) + "(" + std::to_string(n) + ", " +
                            std::to_string(k) + ") = " + value.str() +
                            " disagrees with the Stirling route " + expected.str());
      }
      r.push_back(value);
    }

    BigInt diagonal = 1;
    if (kind == TriangleKind::kAwnt) diagonal = factorial(n);
    if (kind == TriangleKind::kMwnt) diagonal = factorial(n - 1);
    if (r.back() != diagonal) {
      throw InternalError(std::string(to_string(kind)) + " right diagonal at n = " +
                          std::to_string(n) + " is " + r.back().str() + ", expected " +
                          diagonal.str());
    }
    rows.push_back(std::move(r));
  }
  return Triangle(kind, std::move(rows));
}

std::size_t linear_index(unsigned n, unsigned k) {
  if (n == 0 || k == 0 || k > n) throw DomainError("cell outside the triangle");
  return static_cast<std::size_t>(n) * (n - 1) / 2 + k;
}

CellPosition cell_position(std::size_t index) {
  if (index == 0) throw DomainError("linear indices start at 1");
  unsigned n = 1;
  while (static_cast<std::size_t>(n) * (n + 1) / 2 < index) ++n;
  return {n, static_cast<unsigned>(index - static_cast<std::size_t>(n) * (n - 1) / 2)};
}

}  // namespace worpitzky
