// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include "worpitzky/difftable.hpp"
#include "worpitzky/errors.hpp"
#include "worpitzky/oeis.hpp"
#include "worpitzky/oracle.hpp"
#include "worpitzky/solver.hpp"
#include "worpitzky/triangles.hpp"

#include "test_support.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace worpitzky;
using namespace worpitzky::testing;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool passed;
  std::string detail;
};

Verdict fail(const std::string& why) { return {false, why}; }

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x.to_string();
  return "(" + s + ")";
}

Verdict golden_start_zero() {
  const auto t0 = Clock::now();
  const FitResult r = fit(Sequence(rationals(kFromZeroSequence)), AffineMap(Rational(0), Rational(1)),
                          Convention::kStartZero);
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (r.degree_report.degree != 6) return fail("degree " + std::to_string(r.degree_report.degree));
  if (r.poly_in_x.coefficients() != rationals(kFromZeroCoefficients)) return fail(join(r.poly_in_x.coefficients()));
  if (secs >= 1.0) return fail("took " + std::to_string(secs) + " s");
  return {true, "c = " + join(r.poly_in_x.coefficients()) + ", " + std::to_string(secs) + " s"};
}

Verdict golden_start_one() {
  const FitResult r = fit(Sequence(rationals(kFromOneSequence)), AffineMap(Rational(1), Rational(1)),
                          Convention::kStartOne);
  if (r.poly_in_x.coefficients() != rationals(kFromOneCoefficients)) return fail(join(r.poly_in_x.coefficients()));
  return {true, "c = " + join(r.poly_in_x.coefficients())};
}

Verdict golden_affine() {
  const FitResult r = fit(Sequence(rationals(kAffineSequence)),
                          AffineMap(parse_scalar("3.3"), parse_scalar("0.1")), Convention::kAuto);
  const std::vector<Rational> expected_g = {Rational(147279189, 100000), Rational(20649095, 100000),
                                            Rational(118405, 10000),     Rational(3439, 10000),
                                            Rational(505, 100000),       Rational(3, 100000)};
  if (r.poly_in_g.coefficients() != expected_g) return fail("g: " + join(r.poly_in_g.coefficients()));
  if (r.poly_in_x.coefficients() != rationals(kAffineCoefficientsX)) return fail("x: " + join(r.poly_in_x.coefficients()));
  return {true, "p(x) = " + r.poly_in_x.to_string()};
}

Verdict triangle_fidelity() {
  const Triangle m = build_triangle(TriangleKind::kMwnt, 9);
  const Triangle a = build_triangle(TriangleKind::kAwnt, 9);
  int cells = 0;
  for (unsigned n = 1; n <= 9; ++n) {
    for (unsigned k = 1; k <= 9; ++k) {
      if (m.at(n, k) != kMwntTable[n - 1][k - 1]) return fail("MWNT(" + std::to_string(n) + "," + std::to_string(k) + ")");
      if (a.at(n, k) != kAwntTable[n - 1][k - 1]) return fail("AWNT(" + std::to_string(n) + "," + std::to_string(k) + ")");
      cells += 2;
    }
  }
  return {true, std::to_string(cells) + " cells"};
}

Verdict identity_suite() {
  const auto t0 = Clock::now();
  for (unsigned n = 1; n <= 12; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      const BigInt s = stirling2(n, k);
      if (awnt(n, k) != factorial(k) * s) return fail("AWNT = k!S at " + std::to_string(n) + "," + std::to_string(k));
      if (mwnt(n, k) != factorial(k - 1) * s) return fail("MWNT = (k-1)!S at " + std::to_string(n) + "," + std::to_string(k));
      if (awnt(n, k) != k * mwnt(n, k)) return fail("AWNT = k MWNT at " + std::to_string(n) + "," + std::to_string(k));
    }
  }
  for (unsigned q = 0; q <= 10; ++q) {
    for (unsigned k = 1; k <= 10; ++k) {
      BigInt sum = 0;
      for (unsigned i = 1; i <= k; ++i) {
        const BigInt term = binomial(k - 1, i - 1) * pow(BigInt(i), q);
        sum += (k - i) % 2 == 0 ? term : BigInt(-term);
      }
      if (sum != mwnt(q + 1, k)) return fail("shifted sum at q=" + std::to_string(q) + " k=" + std::to_string(k));
    }
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational z = random_rational(rng, 25, 9);
    const Rational b = random_rational(rng, 25, 9);
    for (unsigned k = 1; k <= 10; ++k) {
      for (unsigned n = 0; n < k; ++n) {
        if (!efdt_sum({z, b, n, k}).is_zero()) return fail("EFDT n<k at n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
      if (efdt_sum({z, b, k, k}) != pow(b, k) * Rational(factorial(k))) return fail("EFDT n=k at k=" + std::to_string(k));
    }
  }
  for (unsigned k = 1; k <= 12; ++k) {
    for (unsigned n = 1; n < k; ++n) {
      if (awnt(n, k) != 0) return fail("AWNT nonzero above diagonal");
    }
    if (awnt(k, k) != factorial(k)) return fail("AWNT(k,k) != k!");
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs >= 5.0) return fail("took " + std::to_string(secs) + " s");
  return {true, std::to_string(secs) + " s"};
}

Verdict oracle_equivalence() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> degree(0, 8);
  std::uniform_int_distribution<int> extra(2, 6);
  for (int trial = 0; trial < 500; ++trial) {
    const auto d = static_cast<std::size_t>(degree(rng));
    std::vector<Rational> c(d + 1);
    for (auto& x : c) x = random_rational(rng, 50, 10);
    c.back() = random_nonzero(rng, 50, 10);
    const AffineMap map(random_rational(rng, 50, 10), random_nonzero(rng, 10, 10));

    std::vector<Rational> ys;
    std::vector<Point> points;
    const std::size_t count = d + static_cast<std::size_t>(extra(rng));
    for (std::size_t i = 0; i < count; ++i) {
      const Rational x = map.sample(i);
      ys.push_back(evaluate(c, x));
      points.push_back({x, ys.back()});
    }
    const FitResult r = fit(Sequence(ys), map);
    const Polynomial oracle = vandermonde_fit(points);
    if (r.poly_in_x != oracle) return fail("trial " + std::to_string(trial) + ": fit " + join(r.poly_in_x.coefficients()) + " vs oracle " + join(oracle.coefficients()));
    if (r.poly_in_x.coefficients() != c) return fail("trial " + std::to_string(trial) + ": generator not recovered");
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs >= 60.0) return fail("took " + std::to_string(secs) + " s");
  return {true, "500 polynomials, " + std::to_string(secs) + " s"};
}

Verdict diagonal_equivalence() {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<std::size_t> len(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> v(len(rng));
    for (auto& x : v) x = random_rational(rng, 10000, 100);
    const Sequence seq(v);
    const DifferenceTable t = build_table(seq);
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (diagonal_direct(seq, k) != t.main_diagonal[k]) return fail("trial " + std::to_string(trial) + " k=" + std::to_string(k));
    }
  }
  return {true, "200 sequences"};
}

Verdict expanded_example() {
  int brackets = 0;
  for (const auto& col : kExpandedExample) {
    BigInt rhs = 0;
    for (unsigned j = 0; j < 6; ++j) {
      const unsigned n = 6 - j;
      const BigInt bracket = expanded_bracket(col.binomials, col.k, n);
      if (bracket != col.multipliers[j] || bracket != awnt(n, col.k)) {
        return fail("bracket c_" + std::to_string(n) + " at k=" + std::to_string(col.k) + " = " + bracket.str());
      }
      rhs += bracket * kFromZeroCoefficients[n];
      ++brackets;
    }
    if (rhs != col.diagonal) return fail("column k=" + std::to_string(col.k) + " sums to " + rhs.str());
  }
  if (expanded_bracket({1, 6, 15, 20, 15, 6, 1}, 6, 6) != 720) return fail("c_6 bracket at k=6");
  if (expanded_bracket({1, 6, 15, 20, 15, 6, 1}, 6, 5) != 0) return fail("c_5 bracket at k=6");
  if (expanded_bracket({1, 5, 10, 10, 5, 1}, 5, 6) != 1800) return fail("c_6 bracket at k=5");
  return {true, std::to_string(brackets) + " brackets"};
}

Verdict oeis_crosscheck() {
  const std::filesystem::path fixtures = WORPITZKY_TEST_FIXTURE_DIR;
  std::string detail;
  for (const char* id : {"A019538", "A028246"}) {
    const auto known = oeis::known_triangle(id);
    const oeis::BFile b = oeis::fetch_bfile(id, oeis::Source::kFixture, fixtures);
    const auto report = oeis::crosscheck_triangle(known->kind, b, 45, known->orientation);
    if (!report.ok()) {
      const auto& m = *report.first_mismatch;
      return fail(std::string(id) + " mismatch at (" + std::to_string(m.n) + "," + std::to_string(m.k) + ")");
    }
    detail += (detail.empty() ? "" : ", ") + std::string(id) + " " + std::to_string(report.matched) + "/45";
  }
  return {true, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"golden start-zero fit (4x^6 + ... + 10 at x = 0..7)", golden_start_zero},
      {"golden start-one fit (2x^6 + ... + 17 at x = 1..8)", golden_start_one},
      {"golden affine fit x0=3.3 h=0.1 (3x^5 + ... + 9 at x = 3.3..3.9)", golden_affine},
      {"triangle fidelity (printed 9x9 MWNT and AWNT)", triangle_fidelity},
      {"identity suite", identity_suite},
      {"oracle equivalence (500 random polynomials)", oracle_equivalence},
      {"main diagonal closed form (200 sequences)", diagonal_equivalence},
      {"expanded worked example brackets", expanded_example},
      {"OEIS fixture crosscheck", oeis_crosscheck},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    std::cout << (v.passed ? "[PASS] " : "[FAIL] ") << name << " -- " << v.detail << '\n';
    if (!v.passed) ++failures;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
