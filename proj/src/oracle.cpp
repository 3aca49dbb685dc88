#include "worpitzky/oracle.hpp"

#include "worpitzky/difftable.hpp"
#include "worpitzky/errors.hpp"
#include "worpitzky/triangles.hpp"

#include <random>

namespace worpitzky {

Polynomial vandermonde_fit(const std::vector<Point>& points) {
  const std::size_t m = points.size();
  if (m == 0) throw DomainError("vandermonde_fit needs at least one point");

  // Augmented matrix [V | y] with V[r][c] = x_r^c.
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    Rational power(1);
    for (std::size_t c = 0; c < m; ++c) {
      a[r][c] = power;
      power *= points[r].x;
    }
    a[r][m] = points[r].y;
  }

  auto magnitude = [](const Rational& v) { return v.sign() < 0 ? -v : v; };
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < m; ++r) {
      if (magnitude(a[r][col]) > magnitude(a[pivot][col])) pivot = r;
    }
    if (a[pivot][col].is_zero()) {
      throw SingularError("Vandermonde system is singular (repeated x values)");
    }
    std::swap(a[col], a[pivot]);
    for (std::size_t r = col + 1; r < m; ++r) {
      if (a[r][col].is_zero()) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= m; ++c) a[r][c] -= factor * a[col][c];
    }
  }

  std::vector<Rational> coeffs(m);
  for (std::size_t r = m; r-- > 0;) {
    Rational acc = a[r][m];
    for (std::size_t c = r + 1; c < m; ++c) acc -= a[r][c] * coeffs[c];
    coeffs[r] = acc / a[r][r];
  }
  return Polynomial(std::move(coeffs));
}

Rational efdt_sum(const EfdtParams& p) {
  Rational sum;
  for (unsigned i = 0; i <= p.k; ++i) {
    const Rational term =
        Rational(binomial(p.k, i)) * pow(p.z - p.b * Rational(static_cast<std::int64_t>(i)), p.n);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

namespace {

Rational random_rational(std::mt19937_64& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

CheckOutcome check_triangle_identities() {
  CheckOutcome out{"triangle identities (1 <= k <= n <= 12)", true, ""};
  for (unsigned n = 1; n <= 12 && out.passed; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      const BigInt a = awnt(n, k);
      const BigInt w = mwnt(n, k);
      const BigInt s = stirling2(n, k);
      if (a != factorial(k) * s || w != factorial(k - 1) * s || a != k * w) {
        out = {out.name, false, "fails at (" + std::to_string(n) + ", " + std::to_string(k) + ")"};
        break;
      }
    }
  }
  return out;
}

CheckOutcome check_shifted_sum() {
  CheckOutcome out{"start-one multiplier identity (0 <= q <= 10, 1 <= k <= 10)", true, ""};
  for (unsigned q = 0; q <= 10; ++q) {
    for (unsigned k = 1; k <= 10; ++k) {
      BigInt sum = 0;
      for (unsigned i = 1; i <= k; ++i) {
        const BigInt term = binomial(k - 1, i - 1) * pow(BigInt(i), q);
        sum += (k - i) % 2 == 0 ? term : BigInt(-term);
      }
      if (sum != mwnt(q + 1, k)) {
        return {out.name, false, "fails at q = " + std::to_string(q) + ", k = " + std::to_string(k)};
      }
    }
  }
  return out;
}

CheckOutcome check_efdt(std::mt19937_64& rng) {
  CheckOutcome out{"finite difference theorem (n <= k <= 10, 20 random z, b)", true, ""};
  for (int trial = 0; trial < 20; ++trial) {
    const Rational z = random_rational(rng, 20, 7);
    const Rational b = random_rational(rng, 20, 7);
    for (unsigned k = 1; k <= 10; ++k) {
      for (unsigned n = 0; n <= k; ++n) {
        const Rational got = efdt_sum({z, b, n, k});
        const Rational want = n < k ? Rational(0) : pow(b, k) * Rational(factorial(k));
        if (got != want) {
          return {out.name, false,
                  "fails at n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                      ", z = " + z.to_string() + ", b = " + b.to_string()};
        }
      }
    }
  }
  for (unsigned n = 1; n <= 9; ++n) {
    for (unsigned k = 1; k <= 9; ++k) {
      Rational v = efdt_sum({Rational(0), Rational(-1), n, k});
      if (k % 2 == 1) v = -v;
      if (v != Rational(awnt(n, k))) {
        return {out.name, false,
                "z = 0, b = -1 does not reproduce AWNT(" + std::to_string(n) + ", " +
                    std::to_string(k) + ")"};
      }
    }
  }
  return out;
}

CheckOutcome check_diagonal_formula(std::mt19937_64& rng) {
  CheckOutcome out{"main diagonal closed form (100 random sequences)", true, ""};
  std::uniform_int_distribution<std::size_t> len(1, 12);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> values(len(rng));
    for (auto& v : values) v = random_rational(rng, 1000, 30);
    const Sequence seq(values);
    const DifferenceTable table = build_table(seq);
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (diagonal_direct(seq, k) != table.main_diagonal[k]) {
        return {out.name, false, "trial " + std::to_string(trial) + ", k = " + std::to_string(k)};
      }
    }
  }
  return out;
}

CheckOutcome check_fit_against_vandermonde(std::mt19937_64& rng) {
  CheckOutcome out{"fit agrees with Vandermonde solve (100 random polynomials)", true, ""};
  std::uniform_int_distribution<int> degree_dist(0, 8);
  std::uniform_int_distribution<int> extra(2, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = static_cast<std::size_t>(degree_dist(rng));
    std::vector<Rational> coeffs(d + 1);
    for (auto& c : coeffs) c = random_rational(rng, 50, 10);
    while (coeffs.back().is_zero()) coeffs.back() = random_rational(rng, 50, 10);
    const Polynomial truth(coeffs);

    Rational h = random_rational(rng, 5, 4);
    while (h.is_zero()) h = random_rational(rng, 5, 4);
    const AffineMap map(random_rational(rng, 20, 5), h);

    const std::size_t count = d + static_cast<std::size_t>(extra(rng));
    std::vector<Rational> ys;
    std::vector<Point> points;
    for (std::size_t i = 0; i < count; ++i) {
      const Rational x = map.sample(i);
      ys.push_back(truth(x));
      points.push_back({x, ys.back()});
    }
    try {
      const FitResult result = fit(Sequence(ys), map);
      if (result.poly_in_x != truth || vandermonde_fit(points) != truth) {
        return {out.name, false, "trial " + std::to_string(trial) + ": coefficients differ"};
      }
    } catch (const Error& e) {
      return {out.name, false, "trial " + std::to_string(trial) + ": " + e.what()};
    }
  }
  return out;
}

}  // namespace

std::vector<CheckOutcome> run_self_checks(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CheckOutcome> outcomes;
  outcomes.push_back(check_triangle_identities());
  outcomes.push_back(check_shifted_sum());
  outcomes.push_back(check_efdt(rng));
  outcomes.push_back(check_diagonal_formula(rng));
  outcomes.push_back(check_fit_against_vandermonde(rng));
  return outcomes;
}

}  // namespace worpitzky
