#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force references that share no code path with the solver.
 *
 * vandermonde_fit() solves the full linear system for the coefficients;
 * efdt_sum() evaluates Euler's finite difference sum for f(x) = (z - b x)^n
 * term by term. Both are exact and deliberately naive.
 */

#include "worpitzky/numeric.hpp"
#include "worpitzky/solver.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace worpitzky {

struct Point {
  Rational x;
  Rational y;
};

/// Unique polynomial of degree <= points.size() - 1 through @p points, by
/// Gaussian elimination with partial pivoting. Throws SingularError on a
/// repeated x and DomainError on an empty input.
Polynomial vandermonde_fit(const std::vector<Point>& points);

struct EfdtParams {
  Rational z;
  Rational b;
  unsigned n = 0;
  unsigned k = 0;
};

/// sum_{i=0..k} (-1)^i C(k, i) (z - b i)^n
Rational efdt_sum(const EfdtParams& params);

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Triangle identities, the diagonal formula, the finite difference theorem
/// and a batch of randomized solver-vs-Vandermonde fits. Deterministic for a
/// given seed.
std::vector<CheckOutcome> run_self_checks(std::uint64_t seed = 20240601);

}  // namespace worpitzky
