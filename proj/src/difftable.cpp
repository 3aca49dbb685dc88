#include "worpitzky/difftable.hpp"

#include "worpitzky/errors.hpp"

#include <algorithm>
#include <string>

namespace worpitzky {

Sequence::Sequence(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("a sequence needs at least one value");
}

DifferenceTable build_table(const Sequence& seq) {
  DifferenceTable table;
  table.rows.reserve(seq.size());
  table.rows.push_back(seq.values());
  while (table.rows.back().size() > 1) {
    const auto& prev = table.rows.back();
    std::vector<Rational> next;
    next.reserve(prev.size() - 1);
    for (std::size_t c = 0; c + 1 < prev.size(); ++c) next.push_back(prev[c + 1] - prev[c]);
    table.rows.push_back(std::move(next));
  }
  table.main_diagonal.reserve(table.rows.size());
  for (const auto& row : table.rows) table.main_diagonal.push_back(row.front());
  return table;
}

DegreeReport detect_degree(const DifferenceTable& table, std::size_t min_witnesses) {
  if (min_witnesses < 2) throw DomainError("min_witnesses must be at least 2");
  if (table.rows.empty() || table.rows.front().size() < 2) {
    throw DomainError("degree detection needs at least two sequence values");
  }

  std::size_t deepest = 0;
  for (std::size_t d = 0; d < table.rows.size(); ++d) {
    const auto& row = table.rows[d];
    if (row.size() < min_witnesses) break;
    deepest = d;
    const bool constant =
        std::all_of(row.begin(), row.end(), [&](const Rational& v) { return v == row.front(); });
    if (constant) return DegreeReport{d, row.front(), row.size()};
  }
  throw NotPolynomialError("not polynomial within observed window: no row 0.." +
                               std::to_string(deepest) + " with at least " +
                               std::to_string(min_witnesses) + " entries is constant",
                           deepest);
}

Rational diagonal_direct(const Sequence& seq, std::size_t k) {
  if (k >= seq.size()) {
    throw OutOfRangeError("diagonal index " + std::to_string(k) + " needs " +
                          std::to_string(k + 1) + " values, sequence has " +
                          std::to_string(seq.size()));
  }
  const auto kk = static_cast<unsigned>(k);
  Rational sum;
  for (unsigned i = 0; i <= kk; ++i) {
    const Rational term = Rational(binomial(kk, i)) * seq[i];
    if ((kk - i) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

}  // namespace worpitzky
