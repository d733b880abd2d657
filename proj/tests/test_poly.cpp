#include <gtest/gtest.h>

#include <random>

#include "lhv/poly.hpp"

using namespace lhv;

namespace {

const IntPolynomial kX = IntPolynomial::x();

IntPolynomial random_poly(std::mt19937_64& rng, std::size_t max_deg) {
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::vector<Integer> c(rng() % (max_deg + 1) + 1);
  for (auto& v : c) v = coeff(rng);
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST(Poly, Arithmetic) {
  EXPECT_EQ(add(IntPolynomial{1, 1}, kX), (IntPolynomial{1, 2}));
  EXPECT_EQ(mul(IntPolynomial{1, 1}, IntPolynomial{1, 1}), (IntPolynomial{1, 2, 1}));
  EXPECT_EQ(shift(IntPolynomial{0, 3, 1}, 1), (IntPolynomial{0, 0, 3, 1}));
  EXPECT_EQ(pow(IntPolynomial{1, 1}, 4), (IntPolynomial{1, 4, 6, 4, 1}));
  EXPECT_TRUE((IntPolynomial{1, -1} + IntPolynomial{-1, 1}).is_zero());
  EXPECT_EQ(IntPolynomial{}.degree(), -1);
}

TEST(Poly, BigCoefficients) {
  const IntPolynomial p = pow(IntPolynomial{1, 1}, 80);
  EXPECT_EQ(p.coeff(40).get_str(), "107507208733336176461620");
}

TEST(Poly, Reverse) {
  EXPECT_EQ(reverse(IntPolynomial{1, 4, 1}, 2), (IntPolynomial{1, 4, 1}));
  EXPECT_EQ(reverse(kX, 1), (IntPolynomial{1}));
  EXPECT_EQ(reverse(IntPolynomial{0, 3, 1}, 3), (IntPolynomial{0, 1, 3}));
  EXPECT_THROW(reverse(IntPolynomial{1, 1, 1}, 1), std::invalid_argument);
}

TEST(Poly, Veronese) {
  const IntPolynomial sq{1, 2, 1};
  EXPECT_EQ(veronese(sq, 2, 0), (IntPolynomial{1, 1}));
  EXPECT_EQ(veronese(sq, 2, 1), (IntPolynomial{2}));
  EXPECT_EQ(veronese(sq, 1, 0), sq);
  EXPECT_EQ(veronese(shift(pow(IntPolynomial{1, 1}, 3), 3), 2, 0), (IntPolynomial{0, 0, 3, 1}));
}

TEST(Poly, VeroneseShiftIdentity) {
  EXPECT_TRUE(veronese_shift_identity_check(IntPolynomial{1, 2, 1}, 2, 0, 1));
  EXPECT_TRUE(veronese_shift_identity_check(IntPolynomial{1}, 3, 2, 2));
  EXPECT_TRUE(veronese_shift_identity_check(pow(geometric_sum(3), 2), 3, 1, 2));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const IntPolynomial f = random_poly(rng, 8);
    const unsigned r = 1 + rng() % 4;
    for (unsigned i = 0; i < r; ++i)
      for (unsigned j = 0; j < r; ++j) EXPECT_TRUE(veronese_shift_identity_check(f, r, i, j));
  }
}

TEST(Poly, SymmetryAndGamma) {
  const IntPolynomial ex{0, 7, 42, 63, 42, 7};
  EXPECT_TRUE(is_symmetric(ex, 6));
  EXPECT_FALSE(is_symmetric(ex, 5));
  const auto g = gamma_vector(IntPolynomial{0, 1, 7, 1}, 4);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[0], 0);
  EXPECT_EQ(g[1], 1);
  EXPECT_EQ(g[2], 5);
  EXPECT_EQ(from_gamma_vector(g, 4), (IntPolynomial{0, 1, 7, 1}));
  EXPECT_THROW(gamma_vector(IntPolynomial{1, 2}, 2), NotSymmetric);
}

TEST(Poly, GammaRoundTrip) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = rng() % 8;
    std::vector<Integer> gamma(n / 2 + 1);
    for (auto& v : gamma) v = static_cast<long>(rng() % 20) - 5;
    const IntPolynomial f = from_gamma_vector(gamma, n);
    EXPECT_TRUE(f.is_zero() || is_symmetric(f, n));
    EXPECT_EQ(from_gamma_vector(gamma_vector(f, n), n), f);
  }
}

TEST(Poly, UnimodalAndSigns) {
  EXPECT_TRUE(is_unimodal(IntPolynomial{1, 4, 1}));
  EXPECT_FALSE(is_unimodal(IntPolynomial{2, 1, 2}));
  EXPECT_TRUE(has_nonnegative_coefficients(IntPolynomial{0, 3}));
  EXPECT_FALSE(has_nonnegative_coefficients(IntPolynomial{1, -1}));
}

TEST(Poly, Eval) {
  EXPECT_EQ(eval(IntPolynomial{1, 4, 1}, 1), 6);
  EXPECT_EQ(eval(IntPolynomial{0, 1, 1}, 0), 0);
  EXPECT_EQ(eval(IntPolynomial{1, 11, 11, 1}, 1), 24);
  EXPECT_EQ(eval(IntPolynomial{1, 1}, Rational(1, 2)), Rational(3, 2));
  EXPECT_EQ(sign_at(IntPolynomial{-1, 0, 1}, Rational(1, 2)), -1);
  EXPECT_EQ(sign_at(IntPolynomial{-1, 0, 1}, 1), 0);
}

TEST(Poly, GcdAndDivision) {
  const IntPolynomial a = IntPolynomial{1, 1} * IntPolynomial{2, 3};
  const IntPolynomial b = IntPolynomial{1, 1} * IntPolynomial{-1, 5};
  EXPECT_EQ(gcd(a, b), (IntPolynomial{1, 1}));
  EXPECT_EQ(divide_exact(a, IntPolynomial{2, 3}), (IntPolynomial{1, 1}));
  EXPECT_THROW(divide_exact(a, IntPolynomial{1, 2}), std::domain_error);
  EXPECT_EQ(content(IntPolynomial{4, 6, 2}), 2);
  EXPECT_EQ(primitive_part(IntPolynomial{-4, -6, -2}), (IntPolynomial{2, 3, 1}));
  EXPECT_EQ(derivative(IntPolynomial{1, 4, 1}), (IntPolynomial{4, 2}));
}

TEST(Poly, BinomialAndGeometric) {
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(geometric_sum(3), (IntPolynomial{1, 1, 1}));
  EXPECT_TRUE(geometric_sum(0).is_zero());
}

TEST(Poly, TextFormat) {
  EXPECT_EQ(to_string(IntPolynomial{1, 4, 1}), "1 + 4*x + x^2");
  EXPECT_EQ(to_string(IntPolynomial{}), "0");
  EXPECT_EQ(to_string(IntPolynomial{0, -1, 0, 2}), "-x + 2*x^3");
  EXPECT_EQ(to_compact_string(IntPolynomial{0, 7, 10, 1}), "7x+10x^2+x^3");
  EXPECT_EQ(parse_polynomial("1+4x+x^2"), (IntPolynomial{1, 4, 1}));
  EXPECT_EQ(parse_polynomial("1 + 4*x + x^2"), (IntPolynomial{1, 4, 1}));
  EXPECT_EQ(parse_polynomial("0"), IntPolynomial{});
  EXPECT_EQ(parse_polynomial("x^2 - x"), (IntPolynomial{0, -1, 1}));
  EXPECT_THROW(parse_polynomial("1+y"), std::invalid_argument);
  EXPECT_THROW(parse_polynomial(""), std::invalid_argument);
}

TEST(Poly, TextRoundTrip) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const IntPolynomial f = random_poly(rng, 7);
    EXPECT_EQ(parse_polynomial(to_string(f)), f);
    EXPECT_EQ(parse_polynomial(to_compact_string(f)), f);
  }
}
