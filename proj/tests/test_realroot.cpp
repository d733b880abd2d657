#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lhv/realroot.hpp"

using namespace lhv;

namespace {

// Product of (x - roots[i]), times a positive scale.
IntPolynomial from_roots(const std::vector<long>& roots, long scale = 1) {
  IntPolynomial p{scale};
  for (long r : roots) p = p * IntPolynomial{-r, 1};
  return p;
}

}  // namespace

TEST(RealRoot, SquarefreePart) {
  EXPECT_EQ(squarefree_part(IntPolynomial{1, 2, 1}), (IntPolynomial{1, 1}));
  EXPECT_EQ(squarefree_part(IntPolynomial{1, 4, 1}), (IntPolynomial{1, 4, 1}));
  EXPECT_EQ(squarefree_part(IntPolynomial{0, 0, 0, 1}), (IntPolynomial{0, 1}));
}

TEST(RealRoot, SquarefreeDecomposition) {
  const IntPolynomial f = from_roots({-1, -1, -1, 2, 2, 5});
  const auto parts = squarefree_decomposition(f);
  IntPolynomial product{1};
  for (std::size_t i = 0; i < parts.size(); ++i) product = product * pow(parts[i], static_cast<unsigned>(i + 1));
  EXPECT_EQ(primitive_part(product), primitive_part(f));
}

TEST(RealRoot, SturmCounts) {
  const SturmSequence s(from_roots({-3, -1, 2}));
  EXPECT_EQ(s.count_real_roots(), 3u);
  EXPECT_EQ(s.count_roots(-3, 2), 2u);  // (a, b]
  EXPECT_EQ(s.count_roots(-4, 2), 3u);
  EXPECT_EQ(s.count_roots(0, 1), 0u);
  EXPECT_EQ(SturmSequence(IntPolynomial{1, 0, 1}).count_real_roots(), 0u);
}

TEST(RealRoot, CauchyBound) {
  const IntPolynomial f = from_roots({-7, 3, 6});
  const Rational b = cauchy_bound(f);
  EXPECT_GT(b, 7);
}

TEST(RealRoot, IsRealRooted) {
  EXPECT_TRUE(is_real_rooted(IntPolynomial{1, 4, 1}));
  EXPECT_FALSE(is_real_rooted(IntPolynomial{0, 7, 42, 63, 42, 7}));
  EXPECT_TRUE(is_real_rooted(IntPolynomial{}));
  EXPECT_TRUE(is_real_rooted(IntPolynomial{5}));
  EXPECT_FALSE(is_real_rooted(IntPolynomial{1, 0, 1}));
  EXPECT_TRUE(is_real_rooted(from_roots({-2, -2, -2, 0, 0})));
}

TEST(RealRoot, RandomProductsOfLinearFactors) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    std::vector<long> roots(1 + rng() % 7);
    for (auto& r : roots) r = static_cast<long>(rng() % 11) - 5;
    const IntPolynomial f = from_roots(roots, 1 + static_cast<long>(rng() % 3));
    EXPECT_TRUE(is_real_rooted(f));
    EXPECT_FALSE(is_real_rooted(f * IntPolynomial{1, 1, 1}));
    const RootIsolation iso = isolate_roots(f);
    EXPECT_EQ(iso.root_count(), roots.size());
  }
}

TEST(RealRoot, IsolateRoots) {
  {
    const RootIsolation iso = isolate_roots(IntPolynomial{0, 1, 1});
    ASSERT_EQ(iso.root_count(), 2u);
    ASSERT_EQ(iso.intervals.size(), 2u);
    EXPECT_TRUE(iso.intervals[0].lo <= -1 && -1 <= iso.intervals[0].hi);
    EXPECT_TRUE(iso.intervals[1].lo <= 0 && 0 <= iso.intervals[1].hi);
  }
  {
    const RootIsolation iso = isolate_roots(pow(IntPolynomial{1, 1}, 3));
    ASSERT_EQ(iso.intervals.size(), 1u);
    EXPECT_EQ(iso.intervals[0].multiplicity, 3u);
    EXPECT_TRUE(iso.intervals[0].lo <= -1 && -1 <= iso.intervals[0].hi);
  }
  {
    // -2 - sqrt 3 ~ -3.732, -2 + sqrt 3 ~ -0.268
    RootIsolation iso = isolate_roots(IntPolynomial{1, 4, 1});
    refine_roots(iso, IntPolynomial{1, 4, 1}, Rational(1, 1000));
    ASSERT_EQ(iso.intervals.size(), 2u);
    EXPECT_TRUE(iso.intervals[0].lo < Rational(-37320, 10000) && Rational(-37321, 10000) < iso.intervals[0].hi);
    EXPECT_TRUE(iso.intervals[1].lo < Rational(-2679, 10000) && Rational(-2680, 10000) < iso.intervals[1].hi);
    for (const auto& i : iso.intervals) EXPECT_LE(i.hi - i.lo, Rational(1, 1000));
  }
  EXPECT_THROW(isolate_roots(IntPolynomial{1, 0, 1}), NotRealRooted);
  EXPECT_THROW(isolate_roots(IntPolynomial{}), std::invalid_argument);
}

TEST(RealRoot, Interlacing) {
  EXPECT_TRUE(interlaces(IntPolynomial{1, 1}, IntPolynomial{0, 1, 1}));
  EXPECT_TRUE(interlaces(IntPolynomial{1, 4, 1}, IntPolynomial{0, 2, 2}));
  EXPECT_FALSE(interlaces(IntPolynomial{1, 4, 1}, IntPolynomial{0, 7, 42, 63, 42, 7}));
  EXPECT_EQ(check_interlacing(IntPolynomial{1, 4, 1}, IntPolynomial{0, 7, 42, 63, 42, 7}),
            Interlacing::kNotRealRooted);
  EXPECT_TRUE(interlaces(IntPolynomial{1, 4, 1}, IntPolynomial{0, 1, 4, 1}));
  // Same degree, roots in the wrong order.
  EXPECT_FALSE(interlaces(IntPolynomial{0, 1, 3}, IntPolynomial{0, 3, 1}));
  EXPECT_TRUE(interlaces(IntPolynomial{0, 3, 1}, IntPolynomial{0, 1, 3}));
}

// f <= g iff the roots of f and g alternate with those of g leading; checked
// against sorted integer roots.
TEST(RealRoot, InterlacingAgainstSortedRoots) {
  std::mt19937_64 rng(23);
  auto alternates = [](std::vector<long> a, std::vector<long> b) {
    // a: roots of f, b: roots of g, both sorted descending.
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    if (!(b.size() == a.size() || b.size() == a.size() + 1)) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (b[i] < a[i]) return false;
      if (i + 1 < b.size() && a[i] < b[i + 1]) return false;
    }
    return true;
  };
  int agree = 0;
  for (int t = 0; t < 400; ++t) {
    std::vector<long> a(rng() % 4), b(rng() % 5);
    for (auto& r : a) r = -static_cast<long>(rng() % 7);
    for (auto& r : b) r = -static_cast<long>(rng() % 7);
    const bool want = alternates(a, b);
    EXPECT_EQ(interlaces(from_roots(a), from_roots(b)), want) << ::testing::PrintToString(a) << " "
                                                              << ::testing::PrintToString(b);
    agree += want;
  }
  EXPECT_GT(agree, 10);
}

TEST(RealRoot, InterlacingSequence) {
  const std::vector<IntPolynomial> row{{0, 3, 1}, {0, 2, 2}, {0, 1, 3}, {0, 1, 4, 1}};
  EXPECT_TRUE(is_interlacing_sequence(row));
  EXPECT_TRUE(is_interlacing_sequence(std::vector<IntPolynomial>{{1}, {1, 1}}));
  EXPECT_FALSE(is_interlacing_sequence(std::vector<IntPolynomial>{{0, 1, 3}, {0, 3, 1}}));
}

TEST(RealRoot, Witness) {
  const InterlacingWitness w = explain_interlacing(IntPolynomial{1, 4, 1}, IntPolynomial{0, 1, 4, 1});
  EXPECT_EQ(w.verdict, Interlacing::kInterlaces);
  ASSERT_EQ(w.roots.size(), 3u);
  EXPECT_EQ(w.mult_f, (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(w.mult_g, (std::vector<std::size_t>{1, 1, 1}));
}
