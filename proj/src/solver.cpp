#include "worpitzky/solver.hpp"

#include "worpitzky/errors.hpp"
#include "worpitzky/triangles.hpp"

#include <string>

namespace worpitzky {

namespace {

void require_diagonal(std::span<const Rational> diagonal, std::size_t d) {
  if (diagonal.size() < d + 1) {
    throw DomainError("degree " + std::to_string(d) + " needs " + std::to_string(d + 1) +
                      " diagonal entries, got " + std::to_string(diagonal.size()));
  }
}

// Past the constant row the table is all zeros; anything else means the
// window misreported the degree.
void require_zero_tail(std::span<const Rational> diagonal, std::size_t d) {
  for (std::size_t k = d + 1; k < diagonal.size(); ++k) {
    if (!diagonal[k].is_zero()) {
      throw InconsistencyError("sequence inconsistent with degree-" + std::to_string(d) +
                               " polynomial on this grid: diagonal entry " + std::to_string(k) +
                               " is " + diagonal[k].to_string() + ", expected 0");
    }
  }
}

// Column k of the triangle must vanish above the diagonal for the current
// step to have a single unknown.
void require_upper_zeros(TriangleKind kind, unsigned k) {
  for (unsigned n = 1; n < k; ++n) {
    if (triangle_cell(kind, n, k) != 0) {
      throw InternalError(std::string(to_string(kind)) + "(" + std::to_string(n) + ", " +
                          std::to_string(k) + ") is nonzero above the diagonal");
    }
  }
}

void require_leading(const Rational& leading, std::size_t d, std::size_t k) {
  if (d > 0 && leading.is_zero()) {
    throw InconsistencyError("sequence inconsistent with degree-" + std::to_string(d) +
                             " polynomial on this grid: leading coefficient vanishes at k = " +
                             std::to_string(k));
  }
}

std::string render_coefficient(const Rational& c) {
  const std::string s = c.to_display_string();
  return s.find('/') == std::string::npos ? s : "(" + s + ")";
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (coefficients_.size() > 1 && coefficients_.back().is_zero()) coefficients_.pop_back();
  if (coefficients_.empty()) coefficients_.emplace_back(0);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Polynomial::to_string(const std::string& variable) const {
  std::string out;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const Rational& c = coefficients_[i];
    if (c.is_zero()) continue;
    if (out.empty()) {
      out = render_coefficient(c);
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      out += render_coefficient(c.sign() < 0 ? -c : c);
    }
    if (i >= 1) out += variable;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

AffineMap::AffineMap(Rational x0, Rational h) : x0_(std::move(x0)), h_(std::move(h)) {
  if (h_.is_zero()) throw DomainError("affine map step h must be nonzero");
}

Polynomial solve_start_zero(std::span<const Rational> diagonal, std::size_t d) {
  require_diagonal(diagonal, d);
  require_zero_tail(diagonal, d);

  const auto top = static_cast<unsigned>(d);
  const Triangle awnt_table = build_triangle(TriangleKind::kAwnt, std::max(top, 1u));
  std::vector<Rational> c(d + 1);
  c[0] = diagonal[0];
  for (unsigned k = top; k >= 1; --k) {
    require_upper_zeros(TriangleKind::kAwnt, k);
    Rational residual = diagonal[k];
    for (unsigned n = k + 1; n <= top; ++n) residual -= c[n] * Rational(awnt_table.at(n, k));
    c[k] = residual / Rational(awnt_table.at(k, k));
    if (k == top) require_leading(c[k], d, k);
  }
  return Polynomial(std::move(c));
}

Polynomial solve_start_one(std::span<const Rational> diagonal, std::size_t d) {
  require_diagonal(diagonal, d);
  require_zero_tail(diagonal, d);

  const auto top = static_cast<unsigned>(d + 1);
  const Triangle mwnt_table = build_triangle(TriangleKind::kMwnt, top);
  std::vector<Rational> c(d + 1);
  for (unsigned k = top; k >= 1; --k) {
    require_upper_zeros(TriangleKind::kMwnt, k);
    Rational residual = diagonal[k - 1];
    for (unsigned n = k + 1; n <= top; ++n) residual -= c[n - 1] * Rational(mwnt_table.at(n, k));
    c[k - 1] = residual / Rational(mwnt_table.at(k, k));
    if (k == top) require_leading(c[k - 1], d, k);
  }
  return Polynomial(std::move(c));
}

Polynomial compose_affine(const Polynomial& poly_in_g, const AffineMap& map) {
  const auto& c = poly_in_g.coefficients();
  std::vector<Rational> out(c.size());
  const Rational shift = -map.x0();
  for (unsigned n = 0; n < c.size(); ++n) {
    if (c[n].is_zero()) continue;
    const Rational scale = c[n] / pow(map.h(), n);
    // ((x - x0)/h)^n = h^-n sum_j C(n, j) x^j (-x0)^(n-j)
    for (unsigned j = 0; j <= n; ++j) {
      out[j] += scale * Rational(binomial(n, j)) * pow(shift, n - j);
    }
  }
  return Polynomial(std::move(out));
}

FitResult fit(const Sequence& seq, const AffineMap& map, Convention convention,
              std::size_t min_witnesses) {
  if (seq.size() < 2) throw DomainError("fitting needs at least two sequence values");

  const DifferenceTable table = build_table(seq);
  const DegreeReport report = detect_degree(table, min_witnesses);
  if (seq.size() < report.degree + 2) {
    throw NotPolynomialError("degree " + std::to_string(report.degree) + " needs at least " +
                                 std::to_string(report.degree + 2) + " samples",
                             report.degree);
  }

  FitResult result;
  result.degree_report = report;
  if (convention == Convention::kStartOne) {
    result.map = AffineMap(map.x0() - map.h(), map.h());
    result.poly_in_g = solve_start_one(table.main_diagonal, report.degree);
  } else {
    result.map = map;
    result.poly_in_g = solve_start_zero(table.main_diagonal, report.degree);
  }
  result.poly_in_x = compose_affine(result.poly_in_g, result.map);

  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Rational x = map.sample(i);
    const Rational via_g = result.poly_in_g(result.map(x));
    const Rational via_x = result.poly_in_x(x);
    if (via_g != seq[i] || via_x != seq[i]) {
      throw InconsistencyError("fit verification failed at sample " + std::to_string(i) +
                               " (x = " + x.to_string() + "): expected " + seq[i].to_string() +
                               ", got " + via_g.to_string() + " in g and " + via_x.to_string() +
                               " in x");
    }
  }
  return result;
}

}  // namespace worpitzky
