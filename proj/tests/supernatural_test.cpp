#include <gtest/gtest.h>

#include <random>

#include "cohomtab/supernatural.hpp"

using namespace cohomtab;

namespace {

SupernaturalSpec spec(std::vector<int> roots) { return SupernaturalSpec::of(RootSequence(std::move(roots))); }

}  // namespace

TEST(SupernaturalEntry, Examples) {
  EXPECT_EQ(supernatural_entry(spec({3, -2}), 1, 2), 4);
  EXPECT_EQ(supernatural_entry(spec({3, -2}), 2, -5), 24);
  EXPECT_EQ(supernatural_entry(spec({3, -2}), 1, 3), 0);
  EXPECT_EQ(supernatural_entry(spec({3, -2}), 0, 4), 6);
  EXPECT_EQ(supernatural_entry(spec({0, -2}), 1, -1), 1);
  EXPECT_EQ(supernatural_entry(spec({0, -2}), 2, -3), 3);
  EXPECT_EQ(supernatural_entry(spec({0, -2}), 2, -4), 8);
  EXPECT_EQ(supernatural_entry(SupernaturalSpec(RootSequence(), 2, Rational(3, 2)), 0, -100), Rational(3, 2));
  EXPECT_EQ(supernatural_entry(SupernaturalSpec(RootSequence({1}), 3), 3, -5), 0);
}

TEST(SupernaturalSpec, ValidatesScaleAndAmbient) {
  EXPECT_THROW(SupernaturalSpec(RootSequence({1}), 1, Rational(0)), std::invalid_argument);
  EXPECT_THROW(SupernaturalSpec(RootSequence({1}), 1, Rational(-1)), std::invalid_argument);
  EXPECT_THROW(SupernaturalSpec(RootSequence({1, 0}), 1), std::invalid_argument);
}

TEST(SupernaturalTable, ExampleWindow) {
  const CohomologyTable t = supernatural_table(spec({3, -2}), {-5, 4});
  EXPECT_EQ(t.stored(0, 4), 6);
  const int row1[] = {0, 1, 2};
  for (int d : row1) EXPECT_GT(t.stored(1, d), 0);
  EXPECT_EQ(t.stored(1, -1), 4);
  EXPECT_EQ(t.stored(1, 0), 6);
  EXPECT_EQ(t.stored(1, 1), 6);
  EXPECT_EQ(t.stored(1, 2), 4);
  EXPECT_EQ(t.stored(2, -3), 6);
  EXPECT_EQ(t.stored(2, -4), 14);
  EXPECT_EQ(t.stored(2, -5), 24);
  EXPECT_EQ(t.row_sup(1), RowSup::finite(2));
  EXPECT_EQ(t.row_sup(2), RowSup::finite(-3));
  EXPECT_EQ(t.row_sup(0), RowSup::pos_inf());
  EXPECT_EQ(t.entry(2, -30), 33 * 28);
  EXPECT_EQ(t.entry(0, 30), 27 * 32);
}

TEST(SupernaturalTable, TailsOnlyWhenExact) {
  const CohomologyTable inner = supernatural_table(spec({3, -2}), {0, 1});
  EXPECT_FALSE(inner.tails().upper.has_value());
  EXPECT_FALSE(inner.tails().lower.has_value());
  const CohomologyTable edge = supernatural_table(spec({3, -2}), {0, 2});
  EXPECT_TRUE(edge.tails().upper.has_value());
  EXPECT_FALSE(edge.tails().lower.has_value());
  const CohomologyTable point = supernatural_table(SupernaturalSpec(RootSequence(), 1, Rational(5)), {0, 0});
  EXPECT_EQ(point.entry(0, 99), 5);
  EXPECT_EQ(point.entry(0, -99), 5);
  EXPECT_EQ(point.entry(1, -99), 0);
}

TEST(HilbertPolynomial, Examples) {
  EXPECT_EQ(hilbert_polynomial(spec({3, -2})).to_string(), "d^2 - d - 6");
  EXPECT_EQ(hilbert_polynomial(SupernaturalSpec(RootSequence(), 0, Rational(2, 7))),
            Polynomial::constant(Rational(2, 7)));
  for (int k = 2; k < 8; ++k) {
    EXPECT_EQ(hilbert_polynomial(spec({0, -k})), Polynomial({Rational(0), Rational(k), Rational(1)}));
  }
}

TEST(SupernaturalProperties, OneRowPerColumnAndEulerConsistency) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int s = static_cast<int>(rng() % 6);
    std::vector<int> pool;
    for (int v = -8; v <= 8; ++v) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(s));
    std::sort(pool.rbegin(), pool.rend());
    Rational scale(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 9) + 1);
    scale.canonicalize();
    const SupernaturalSpec sp(RootSequence(pool), s + static_cast<int>(rng() % 2), scale);
    const Polynomial chi = hilbert_polynomial(sp);
    for (int d = -12; d <= 12; ++d) {
      int nonzero = 0;
      Rational euler = 0;
      for (int i = 0; i <= sp.ambient; ++i) {
        const Rational v = supernatural_entry(sp, i, d);
        ASSERT_GE(v, 0);
        if (v != 0) ++nonzero;
        euler += i % 2 == 0 ? v : Rational(-v);
      }
      const bool is_root = std::find(pool.begin(), pool.end(), d) != pool.end();
      ASSERT_EQ(nonzero, is_root ? 0 : 1);
      ASSERT_EQ(euler, chi(static_cast<long>(d)));
    }
    if (s >= 1) {
      const CohomologyTable t = supernatural_table(sp, {-12, 12});
      for (const Corner& c : corners(t)) {
        ASSERT_EQ(c.degree, sp.roots[c.row] - 1);
        ASSERT_EQ(c.value, supernatural_entry(sp, c.row, c.degree));
        ASSERT_GT(c.value, 0);
      }
    }
  }
}
