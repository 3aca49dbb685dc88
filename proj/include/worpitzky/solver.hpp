#pragma once

/**
 * @file solver.hpp
 * @brief Coefficient recovery from the main diagonal of a difference table.
 *
 * For samples taken at x = 0, 1, 2, ... the k-th main diagonal entry is
 *
 *   D_k = sum_{n=k..d} c_n AWNT(n, k)            (k >= 1, c_0 = D_0)
 *
 * and for samples at x = 1, 2, 3, ...
 *
 *   D_{k-1} = sum_{n=k..d+1} c_{n-1} MWNT(n, k)   (k >= 1).
 *
 * Both triangles vanish for n < k, so walking k from the top down isolates
 * one new coefficient per step. Arbitrary arithmetic grids x0, x0 + h, ...
 * are handled by fitting over g(x) = (x - x0) / h and expanding back.
 */

#include "worpitzky/difftable.hpp"
#include "worpitzky/numeric.hpp"

#include <span>
#include <string>
#include <vector>

namespace worpitzky {

/// Dense polynomial c_0 + c_1 x + ... + c_d x^d with c_d != 0 (except the
/// zero polynomial, stored as a single 0 coefficient).
class Polynomial {
 public:
  Polynomial() : coefficients_{Rational(0)} {}
  /// Trailing zero coefficients are trimmed.
  explicit Polynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  std::size_t degree() const { return coefficients_.size() - 1; }
  const Rational& operator[](std::size_t power) const { return coefficients_[power]; }

  /// Horner evaluation; x^0 = 1 so p(0) = c_0.
  Rational operator()(const Rational& x) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// "3x^5 + 1x^4 - (1/3)x + 9" with decimal rendering where exact.
  std::string to_string(const std::string& variable = "x") const;

 private:
  std::vector<Rational> coefficients_;
};

/// g(x) = (x - x0) / h, sending x0, x0 + h, x0 + 2h, ... to 0, 1, 2, ...
class AffineMap {
 public:
  AffineMap() : x0_(0), h_(1) {}
  /// Throws DomainError when h == 0.
  AffineMap(Rational x0, Rational h);

  const Rational& x0() const { return x0_; }
  const Rational& h() const { return h_; }

  Rational operator()(const Rational& x) const { return (x - x0_) / h_; }
  /// Grid point with integer index i: x0 + i h.
  Rational sample(std::size_t i) const { return x0_ + Rational(static_cast<std::int64_t>(i)) * h_; }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;

 private:
  Rational x0_;
  Rational h_;
};

enum class Convention { kAuto, kStartZero, kStartOne };

struct FitResult {
  /// Coefficients over the integer index g(x).
  Polynomial poly_in_g;
  /// Coefficients over the original variable x.
  Polynomial poly_in_x;
  /// The map defining g. For start-one fits this is shifted one step left so
  /// the first sample sits at g = 1.
  AffineMap map;
  DegreeReport degree_report;
};

/// Back-substitution with AWNT multipliers. @p diagonal comes from samples at
/// x = 0, 1, 2, ...; entries past index d must be zero. Throws
/// InconsistencyError naming the failing k otherwise, and DomainError when the
/// diagonal is shorter than d + 1.
Polynomial solve_start_zero(std::span<const Rational> diagonal, std::size_t d);

/// Back-substitution with MWNT multipliers for samples at x = 1, 2, 3, ...
/// Same error contract as solve_start_zero.
Polynomial solve_start_one(std::span<const Rational> diagonal, std::size_t d);

/// q(x) = p((x - x0) / h), by binomial expansion of each power of g.
Polynomial compose_affine(const Polynomial& poly_in_g, const AffineMap& map);

/// Samples seq[i] = p(map.sample(i)). Builds the difference table, detects the
/// degree, solves, recomposes to x and checks both polynomials against every
/// sample. kAuto behaves as kStartZero.
FitResult fit(const Sequence& seq, const AffineMap& map, Convention convention = Convention::kAuto,
              std::size_t min_witnesses = 2);

}  // namespace worpitzky
