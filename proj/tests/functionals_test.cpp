#include <gtest/gtest.h>

#include <random>

#include "cohomtab/functionals.hpp"
#include "cohomtab/identity_suite.hpp"
#include "cohomtab/sheaf_library.hpp"
#include "cohomtab/supernatural.hpp"

using namespace cohomtab;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

CohomologyTable t2() { return stock_table(StockSheaf::fixture_t2(), {-10, 10}); }
CohomologyTable t3() { return stock_table(StockSheaf::fixture_t3(), {-10, 10}); }

}  // namespace

TEST(DegreeSequence, Validates) {
  EXPECT_THROW(DegreeSequence({1}), std::invalid_argument);
  EXPECT_THROW(DegreeSequence({0, 0}), std::invalid_argument);
  EXPECT_THROW(DegreeSequence({2, 1, 3}), std::invalid_argument);
  EXPECT_EQ(DegreeSequence({-1, 1, 2, 3}).s(), 2);
  EXPECT_EQ(DegreeSequence({-1, 1, 2, 3}).to_string(), "(-1,1,2,3)");
}

TEST(VandermondeWeight, Examples) {
  EXPECT_EQ(vandermonde_weights(DegreeSequence({-1, 1, 2, 3})), ints({2, 12, 16, 6}));
  EXPECT_EQ(vandermonde_weights(DegreeSequence({0, 1})), ints({1, 1}));
  EXPECT_EQ(vandermonde_weights(DegreeSequence({0, 1, 2})), ints({1, 2, 1}));
  EXPECT_EQ(vandermonde_weights(DegreeSequence({-1, 0, 1, 2, 5})), ints({120, 432, 540, 240, 12}));
  EXPECT_EQ(vandermonde_weights(DegreeSequence({-3, -1, 0, 2})), ints({6, 30, 30, 6}));
  EXPECT_THROW(vandermonde_weight(DegreeSequence({0, 1}), 2), IndexRange);
}

TEST(VandermondeWeight, AlwaysPositive) {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const DegreeSequence d = random_degrees(rng, static_cast<int>(rng() % 7), -10, 10);
    for (const auto& r : vandermonde_weights(d)) ASSERT_GT(r, 0);
  }
}

TEST(PhiBounds, Examples) {
  EXPECT_EQ(phi_bounds(2, 2), (BoundSequence{0, 1, 1, 1}));
  EXPECT_EQ(phi_bounds(2, 6), (BoundSequence{0, 1, 1, 1, 2, 3, 4, 5}));
  EXPECT_EQ(phi_bounds(0, 3), (BoundSequence{-1, 0, 1, 2, 2}));
  EXPECT_EQ(phi_bounds(2, 3), (BoundSequence{0, 1, 1, 1, 2}));
  EXPECT_EQ(phi_bounds(1, 1), (BoundSequence{0, 0, 0}));
  EXPECT_EQ(phi_bounds(0, 0), (BoundSequence{-1, -1}));
  EXPECT_THROW(phi_bounds(3, 2), IndexRange);
}

TEST(EvaluateL, HilbertSchemeCertificates) {
  EXPECT_EQ(evaluate_L(DegreeSequence({-1, 1, 2, 3}), phi_bounds(2, 2), t3()), -4);
  EXPECT_EQ(evaluate_L(DegreeSequence({-1, 0, 1, 2, 5}), phi_bounds(2, 3), t2()), -12);
  EXPECT_EQ(evaluate_L(DegreeSequence({-1, 1, 2, 3}), BoundSequence(4, -1), t3()), 0);
}

TEST(EvaluateL, NeedsEvaluableTwists) {
  const CohomologyTable bare(2, {-1, 1});
  EXPECT_THROW(evaluate_L(DegreeSequence({0, 5}), BoundSequence{0, 0}, bare), OutOfWindow);
  EXPECT_THROW(evaluate_L(DegreeSequence({0, 1}), BoundSequence{0}, bare), std::invalid_argument);
}

TEST(FunctionalTable, MatchesPrintedCoefficients) {
  const DegreeSequence d({-1, 1, 2, 3});
  const CohomologyTable f = functional_table(d, phi_bounds(2, 2), 3);
  const std::map<std::pair<int, int>, long> expected{
      {{0, 1}, 2}, {{0, -1}, -12}, {{0, -2}, 16}, {{0, -3}, -6},
      {{1, -1}, 12}, {{1, -2}, -16}, {{1, -3}, 6}};
  for (int i = 0; i <= 3; ++i) {
    for (int e = f.window().lo; e <= f.window().hi; ++e) {
      auto it = expected.find({i, e});
      EXPECT_EQ(f.stored(i, e), it == expected.end() ? 0 : it->second) << i << "," << e;
    }
  }
  const std::string grid =
      "                         | 3\n"
      "                         | 2\n"
      "       6 -16  12         | 1\n"
      "  -6  16 -12       2     | 0\n"
      "-------------------------+----\n"
      "  -3  -2  -1   0   1   2 | d\\i\n";
  EXPECT_EQ(render(f, {f.window().lo, f.window().hi + 1, true}), grid);
}

TEST(FunctionalTable, MatchesSecondPrintedTable) {
  const CohomologyTable f = functional_table(DegreeSequence({-1, 0, 1, 2, 5}), phi_bounds(2, 3), 3);
  // Printed by display column: row 0 at -5,-2,-1,0,1; row 1 at -4,-1,0,1; row 2 at -3.
  const std::map<std::pair<int, int>, long> by_column{
      {{0, -5}, 12}, {{0, -2}, -240}, {{0, -1}, 540}, {{0, 0}, -432}, {{0, 1}, 120},
      {{1, -4}, -12}, {{1, -1}, 240}, {{1, 0}, -540}, {{1, 1}, 432}, {{2, -3}, 12}};
  int nonzero = 0;
  for (int i = 0; i <= 3; ++i) {
    for (int e = f.window().lo; e <= f.window().hi; ++e) {
      auto it = by_column.find({i, e + i});
      EXPECT_EQ(f.stored(i, e), it == by_column.end() ? 0 : it->second) << i << "," << e;
      nonzero += f.stored(i, e) != 0;
    }
  }
  EXPECT_EQ(nonzero, 10);
}

TEST(FunctionalTable, DiagonalSegmentsAndDotProduct) {
  Rng rng(2);
  const CohomologyTable ip = stock_table(StockSheaf::conic_point_p3(), {-12, 12});
  for (int trial = 0; trial < 100; ++trial) {
    const int s = 1 + static_cast<int>(rng() % 6);
    const int j = static_cast<int>(rng() % static_cast<unsigned>(s + 1));
    const DegreeSequence d = random_degrees(rng, s, -8, 8);
    const BoundSequence psi = phi_bounds(j, s);
    const int n = 3;
    const CohomologyTable f = functional_table(d, psi, n);
    int nonzero = 0;
    int expected_nonzero = 0;
    for (int i = 0; i < d.size(); ++i) {
      const int top = std::min(psi[static_cast<std::size_t>(i)], n);
      expected_nonzero += top + 1;
      for (int row = 0; row <= n; ++row) {
        const Rational want = row <= top ? ((i + row) % 2 == 0 ? vandermonde_weight(d, i)
                                                                : Rational(-vandermonde_weight(d, i)))
                                         : Rational(0);
        ASSERT_EQ(f.stored(row, -d[i]), want);
      }
    }
    Rational dot = 0;
    for (int row = 0; row <= n; ++row) {
      for (int e = f.window().lo; e <= f.window().hi; ++e) {
        nonzero += f.stored(row, e) != 0;
        dot += f.stored(row, e) * ip.entry(row, e);
      }
    }
    ASSERT_EQ(nonzero, expected_nonzero);
    ASSERT_EQ(dot, evaluate_L(d, psi, ip));
  }
}

TEST(InterpolationCheck, Examples) {
  const CohomologyTable ip = stock_table(StockSheaf::point_ideal_p2(), {-8, 6});
  EXPECT_EQ(interpolation_check(DegreeSequence({-3, -1, 0, 2}), ip), 0);
  const CohomologyTable gz = supernatural_table(SupernaturalSpec::of(RootSequence({3, -2})), {-8, 8});
  EXPECT_EQ(interpolation_check(DegreeSequence({-5, -1, 4, 6}), gz), 0);

  const CohomologyTable spike = CohomologyTable::generate(0, {-3, 3}, [](int, int d) {
    return Rational(d == 0 ? 1 : 0);
  });
  EXPECT_THROW(interpolation_check(DegreeSequence({0, 1}), spike), NotPolynomial);
  // r_0 γ_{0,0} - r_1 χ_{-1} = 1 - 0: the contract fails without the polynomial check.
  EXPECT_EQ(evaluate_L(DegreeSequence({0, 1}), infinite_bounds(0), spike), 1);
}

TEST(InterpolationCheck, VanishesOnGenerators) {
  SuiteOptions opts;
  opts.trials = 300;
  const SuiteResult r = interpolation_suite(opts);
  EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(PureBetti, Examples) {
  const BettiTable b = pure_betti(DegreeSequence({0, 1, 2}));
  const std::map<std::pair<int, int>, Rational> want{
      {{0, 0}, Rational(1)}, {{1, 1}, Rational(2)}, {{2, 2}, Rational(1)}};
  EXPECT_EQ(b.entries, want);
  const BettiTable h = pure_betti(DegreeSequence({-1, 1, 2, 3}));
  EXPECT_EQ(h.entries.at({0, -1}), 2);
  EXPECT_EQ(h.entries.at({1, 1}), 12);
  EXPECT_EQ(h.entries.at({2, 2}), 16);
  EXPECT_EQ(h.entries.at({3, 3}), 6);
  Rational alternating = 0;
  for (const auto& [key, v] : b.entries) alternating += key.first % 2 == 0 ? v : Rational(-v);
  EXPECT_EQ(alternating, 0);
}

TEST(Pairing, Examples) {
  const CohomologyTable ip = stock_table(StockSheaf::point_ideal_p2(), {-8, 6});
  BettiTable unit;
  unit.entries[{0, 0}] = 1;
  EXPECT_EQ(pairing(unit, ip), ip.entry(0, 0));
  unit.entries.clear();
  unit.entries[{0, -3}] = 1;
  EXPECT_EQ(pairing(unit, ip), 9);

  // O_{P^1} generator: 1·γ_{0,0} - 2(γ_{0,-1} - γ_{1,-1}) + (γ_{0,-2} - γ_{1,-2}) = 1 - 0 - 1.
  const CohomologyTable line = supernatural_table(SupernaturalSpec::of(RootSequence({-1})), {-4, 4});
  EXPECT_EQ(pairing(pure_betti(DegreeSequence({0, 1, 2})), line), 0);
  EXPECT_EQ(pairing(pure_betti(DegreeSequence({0, 1, 2})), line),
            evaluate_L(DegreeSequence({0, 1, 2}), BoundSequence{0, 1, 2}, line));
  EXPECT_EQ(pairing(pure_betti(DegreeSequence({-2, 1, 3})), line), 2 * 3 - 0 + 3 * (0 - 2));
}

TEST(PairingCTau, SaturationAndReductions) {
  Rng rng(9);
  const auto catalog = stock_catalog();
  for (int trial = 0; trial < 200; ++trial) {
    const int s = 1 + static_cast<int>(rng() % 5);
    const DegreeSequence d = random_degrees(rng, s, -8, 8);
    const StockSheaf& sheaf = catalog[rng() % catalog.size()];
    const CohomologyTable t = stock_table(sheaf, {-10, 10});
    const BettiTable beta = pure_betti(d);
    const int tau = static_cast<int>(rng() % static_cast<unsigned>(std::min(s, t.ambient()) + 1));

    // Large c: the first sum plus complete j = τ terms, computed directly.
    Rational direct = 0;
    for (int i = 0; i < d.size(); ++i) {
      for (int j = 0; j <= std::min(i, t.ambient()); ++j) {
        if (j < tau || j <= i - 2 || (j == tau && i - j <= 1)) {
          const Rational term = vandermonde_weight(d, i) * t.entry(j, -d[i]);
          direct += (i - j) % 2 == 0 ? term : Rational(-term);
        }
      }
    }
    ASSERT_EQ(pairing_c_tau(beta, t, 100, tau), direct);

    if (tau >= 1) ASSERT_EQ(pairing_c_tau(beta, t, d[tau] - 1, tau), evaluate_L(d, phi_bounds(tau, s), t));
    if (tau + 1 <= s) {
      ASSERT_EQ(pairing_c_tau(beta, t, d[tau + 1], tau), evaluate_L(d, phi_bounds(tau + 1, s), t));
      // The literal double sum already includes k = d_{τ+1} at c = d_{τ+1} - 1.
      ASSERT_EQ(pairing_c_tau(beta, t, d[tau + 1] - 1, tau), evaluate_L(d, phi_bounds(tau + 1, s), t));
    }
  }
  const CohomologyTable t = stock_table(StockSheaf::point_ideal_p2(), {-4, 4});
  EXPECT_THROW(pairing_c_tau(pure_betti(DegreeSequence({0, 1})), t, 0, 3), IndexRange);
}

TEST(ChiExpansion, Examples) {
  EXPECT_EQ(chi_expansion_coefficients(DegreeSequence({4, 9})), ints({1}));
  EXPECT_EQ(chi_expansion_coefficients(DegreeSequence({0, 1, 2})), ints({1, 1}));
  // A_0 = (d1-d0)(d2-d0), A_1 = (d1-d0)(d3-d1)(d3-d2), A_2 = (d2-d1)(d3-d1)(d3-d2)
  EXPECT_EQ(chi_expansion_coefficients(DegreeSequence({0, 1, 3, 7})), ints({3, 1 * 6 * 4, 2 * 6 * 4}));
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    for (const auto& a : chi_expansion_coefficients(random_degrees(rng, static_cast<int>(rng() % 7), -9, 9))) {
      ASSERT_GE(a, 0);
    }
  }
}

TEST(ChiExpansion, IdentityOnSmallCases) {
  Rng rng(6);
  const DegreeSequence d({0, 1, 2});
  for (int trial = 0; trial < 50; ++trial) {
    const CohomologyTable t = random_table(rng, 1, {-2, 0}, false);
    const IdentitySides sides = chi_expansion_sides(d, t);
    ASSERT_EQ(sides.lhs, sides.rhs);
  }
  const CohomologyTable ip = stock_table(StockSheaf::point_ideal_p2(), {-8, 6});
  EXPECT_TRUE(chi_expansion_sides(DegreeSequence({-3, -1, 0, 2}), ip).holds());
}

TEST(MessyIdentity, CasesAndRanges) {
  const std::vector<Rational> d = ints({-2, 1, 3, 4, 9});
  for (int ell = 0; ell <= 4; ++ell) {
    EXPECT_TRUE(messy_identity_check(d, ell, ell - 1));
    EXPECT_TRUE(messy_identity_check(d, ell, -1));
    const IdentitySides sides = messy_identity_sides(d, ell, ell - 1);
    EXPECT_EQ(sides.lhs, sides.rhs);
  }
  EXPECT_THROW(messy_identity_check(d, 5, 0), IndexRange);
  EXPECT_THROW(messy_identity_check(d, 2, 2), IndexRange);
  EXPECT_THROW(messy_identity_check(d, 2, -2), IndexRange);
  EXPECT_THROW(messy_identity_check(ints({1}), 0, -1), IndexRange);
}

TEST(CertificateSearch, HilbertSchemeTables) {
  const auto c3 = certificate_search(t3(), {-4, 4}, 2);
  ASSERT_TRUE(c3.has_value());
  EXPECT_EQ(c3->degrees, DegreeSequence({-1, 1, 2, 3}));
  EXPECT_EQ(c3->j, 2);
  EXPECT_EQ(c3->value, -4);

  const auto c2 = certificate_search(t2(), {-5, 5}, 3);
  ASSERT_TRUE(c2.has_value());
  EXPECT_EQ(c2->degrees, DegreeSequence({-1, 0, 1, 2, 5}));
  EXPECT_EQ(c2->j, 2);
  EXPECT_EQ(c2->value, -12);
}

TEST(CertificateSearch, NoneOnSheafTables) {
  EXPECT_FALSE(certificate_search(stock_table(StockSheaf::point_ideal_p2(), {-8, 8}), {-6, 6}, 4));
  EXPECT_FALSE(certificate_search(stock_table(StockSheaf::skew_lines_p3(), {-8, 8}), {-5, 5}, 3));
  EXPECT_FALSE(certificate_search(stock_table(StockSheaf::conic_point_p3(), {-8, 8}), {-5, 5}, 3));
  // T2 survives the smaller search that catches T3.
  EXPECT_FALSE(certificate_search(t2(), {-4, 4}, 2));
}

TEST(CertificateSearch, ReportsPositiveJZeroAsNegatedValue) {
  // A single negative h^0 entry: -L(d,φ^0) sees it first through j = 0 or j = 1.
  const CohomologyTable bad = CohomologyTable::generate(1, {-6, 6}, [](int i, int d) {
    return Rational(i == 0 && d == 0 ? -1 : 0);
  });
  const auto c = certificate_search(bad, {-3, 3}, 1);
  ASSERT_TRUE(c.has_value());
  EXPECT_LT(c->value, 0);
  Rational v = evaluate_L(c->degrees, phi_bounds(c->j, c->degrees.s()), bad);
  EXPECT_EQ(c->j == 0 ? Rational(-v) : v, c->value);
}
