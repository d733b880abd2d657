#include <gtest/gtest.h>

#include "lhv/localh.hpp"
#include "lhv/realroot.hpp"
#include "oracles.hpp"

using namespace lhv;

namespace {

Face simplex(std::size_t n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Face(std::move(v));
}

const IntPolynomial kExample{0, 7, 42, 63, 42, 7};

}  // namespace

TEST(LocalH, Trivial) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_TRUE(local_h(trivial(simplex(n))).is_zero());
  EXPECT_EQ(local_h(trivial(Face{})), (IntPolynomial{1}));
}

TEST(LocalH, BarycentricIsDerangementPolynomial) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto t = barycentric(trivial(simplex(n)));
    EXPECT_EQ(local_h(t), oracle::derangement_poly(n)) << n;
    EXPECT_EQ(local_h_direct(t), oracle::derangement_poly(n)) << n;
  }
  EXPECT_EQ(local_h(barycentric(trivial(simplex(3)))), (IntPolynomial{0, 1, 1}));
}

TEST(LocalH, StellarOfFullFace) {
  // The cone over the boundary: l = x + ... + x^{n-1}.
  for (std::size_t n = 2; n <= 6; ++n)
    EXPECT_EQ(local_h(stellar(trivial(simplex(n)), simplex(n))), shift(geometric_sum(static_cast<unsigned>(n - 1)), 1));
}

TEST(LocalH, EdgewiseCounterexample) {
  const auto gamma = stellar(trivial(simplex(6)), simplex(6));
  const auto ell = local_h(edgewise(gamma, 2));
  EXPECT_EQ(ell, kExample);
  EXPECT_FALSE(is_real_rooted(ell));
}

TEST(LocalH, SymmetricNonnegativeAndRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed)
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto gamma = random_triangulation(simplex(n), seed % 7, seed);
      for (const auto& t : {gamma, barycentric(gamma), edgewise(gamma, 2)}) {
        const auto ell = local_h(t);
        EXPECT_TRUE(ell.is_zero() || is_symmetric(ell, n));
        EXPECT_TRUE(has_nonnegative_coefficients(ell));
        EXPECT_EQ(ell, local_h_direct(t));
        EXPECT_EQ(h_from_local(t), h_polynomial(t.total()));
      }
    }
}

TEST(LocalH, Table) {
  const auto t = barycentric(trivial(simplex(3)));
  const auto table = local_h_table(t);
  ASSERT_EQ(table.h.size(), 8u);
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    const Face f = table.face_of(mask);
    EXPECT_EQ(table.ell[mask], oracle::derangement_poly(f.size()));
    EXPECT_EQ(table.h[mask], h_polynomial(restriction(t, f).total(), static_cast<long>(f.size())));
  }
  EXPECT_EQ(h_from_local(t), (IntPolynomial{1, 4, 1}));
  EXPECT_EQ(h_from_local(trivial(simplex(4))), (IntPolynomial{1}));
}

TEST(Uniform, HAndPPolynomials) {
  const auto sd = f_triangle(UniformKind::barycentric(), 6);
  for (std::size_t m = 0; m <= 6; ++m) {
    EXPECT_EQ(h_uniform(sd, m), oracle::eulerian(m));
    EXPECT_EQ(p_poly(sd, m, 0), h_uniform(sd, m));
    EXPECT_EQ(ell_mk(sd, m, 0), h_uniform(sd, m));
  }
  EXPECT_EQ(p_poly(sd, 2, 1), (IntPolynomial{0, 2}));
  const auto esd2 = f_triangle(UniformKind::edgewise(2), 3);
  EXPECT_EQ(p_poly(esd2, 3, 3), (IntPolynomial{0, 0, 3, 1}));
}

// p_{F,n,k} counts descents over w in S_{n+1} with w(1) = k + 1 for sd.
TEST(Uniform, PPolyAgainstDescentOracle) {
  const auto sd = f_triangle(UniformKind::barycentric(), 5);
  for (std::size_t n = 0; n <= 5; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<long> c(n + 1, 0);
      oracle::permutations(n + 1, [&](const std::vector<int>& w) {
        if (w[0] == static_cast<int>(k + 1)) ++c[oracle::des(w)];
      });
      EXPECT_EQ(p_poly(sd, n, k), oracle::from_counts(c)) << n << "," << k;
    }
}

TEST(Uniform, EllMk) {
  const auto sd = f_triangle(UniformKind::barycentric(), 6);
  EXPECT_EQ(ell_mk(sd, 3, 3), (IntPolynomial{0, 1, 1}));
  EXPECT_EQ(ell_mk(sd, 4, 2), (IntPolynomial{0, 4, 9, 1}));
  for (std::size_t n = 0; n <= 6; ++n)
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(ell_mk(sd, n, k), oracle::d_nk(n, k));
  EXPECT_EQ(ell_mkj(sd, 3, 1, 2), (IntPolynomial{0, 1, 3}));
  EXPECT_THROW(ell_mkj(sd, 4, 2, 4), std::invalid_argument);
  EXPECT_THROW(p_poly(sd, 7, 0), std::invalid_argument);
}

TEST(Uniform, EllMkFromLocal) {
  for (const auto kind : {UniformKind::barycentric(), UniformKind::edgewise(3)}) {
    const auto f = f_triangle(kind, 5);
    std::vector<IntPolynomial> local;
    for (std::size_t j = 0; j <= 5; ++j) local.push_back(local_h(subdivide(trivial(simplex(j)), kind)));
    for (std::size_t m = 0; m <= 5; ++m)
      for (std::size_t k = 0; k <= m; ++k) EXPECT_EQ(ell_mk(f, m, k), ell_mk_from_local(local, m, k));
  }
}

TEST(Uniform, CoefficientMatrix) {
  const auto c = c_coefficients(trivial(simplex(3)));
  EXPECT_EQ(c.n(), 3u);
  for (std::size_t k = 0; k <= 3; ++k)
    for (std::size_t j = 0; j + k <= 3; ++j) EXPECT_EQ(c(k, j), (k == 3 && j == 0) ? 1 : 0);
  const auto sd = f_triangle(UniformKind::barycentric(), 3);
  EXPECT_EQ(local_h_via_uniform(sd, c), ell_mkj(sd, 3, 3, 0));
  CoefficientMatrix m(2);
  m.at(0, 1) = 5;
  EXPECT_EQ(m(0, 1), 5);
  EXPECT_THROW(m.at(2, 1), std::out_of_range);
}

// The c-coefficients of a stellar cone: l_F = 0 except for the full face,
// whose local h is x + ... + x^{n-1}; and the empty face, with l = 1.
TEST(Uniform, StellarCoefficients) {
  const auto c = c_coefficients(stellar(trivial(simplex(6)), simplex(6)));
  EXPECT_EQ(c(6, 0), 1);
  for (std::size_t j = 1; j <= 5; ++j) EXPECT_EQ(c(0, j), 1);
  EXPECT_EQ(local_h_via_uniform(f_triangle(UniformKind::edgewise(2), 6), c), kExample);
}

TEST(Uniform, ViaUniformEqualsDirect) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed)
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto gamma = random_triangulation(simplex(n), seed % 7, seed);
      const auto c = c_coefficients(gamma);
      for (const auto kind : {UniformKind::barycentric(), UniformKind::edgewise(2)}) {
        const auto delta = compose(subdivide(identity(gamma.total()), kind), gamma);
        EXPECT_EQ(local_h(delta), local_h_via_uniform(f_triangle(kind, n), c));
      }
    }
}

TEST(SecondSd, Values) {
  EXPECT_EQ(second_sd_local_h(0), (IntPolynomial{1}));
  EXPECT_TRUE(second_sd_local_h(1).is_zero());
  // sd^2 of an edge is a path with four edges: h = 1 + 3x, l = 3x.
  EXPECT_EQ(second_sd_local_h(2), (IntPolynomial{0, 3}));
  EXPECT_EQ(local_h(iterated_sd(simplex(2), 2)), (IntPolynomial{0, 3}));
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(second_sd_local_h(n), local_h(iterated_sd(simplex(n), 2)));
}
