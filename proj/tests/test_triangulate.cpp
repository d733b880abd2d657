#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lhv/triangulate.hpp"
#include "oracles.hpp"

using namespace lhv;

namespace {

Face simplex(std::size_t n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Face(std::move(v));
}

long factorial(std::size_t n) {
  long f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<long>(i);
  return f;
}

}  // namespace

TEST(Triangulation, Trivial) {
  const auto t = trivial(simplex(3));
  EXPECT_EQ(t.base(), t.total());
  EXPECT_NO_THROW(validate(t));
  EXPECT_EQ(carrier(t, Face{2}), Face{2});
  EXPECT_EQ(carrier(t, Face{1, 3}), (Face{1, 3}));
  EXPECT_EQ(restriction(t, Face{1, 2}), trivial(Face{1, 2}));
}

TEST(Triangulation, RejectsBadCarriers) {
  const auto base = SimplicialComplex::simplex({1, 2});
  // Vertex 3 carried by {1} but sits strictly inside the edge.
  Triangulation bad(base, SimplicialComplex::from_facets({{1, 3}, {3, 2}}), {{1, Face{1}}, {2, Face{2}}, {3, Face{1}}});
  EXPECT_THROW(validate(bad), InvalidTriangulation);
  Triangulation ok(base, SimplicialComplex::from_facets({{1, 3}, {3, 2}}), {{1, Face{1}}, {2, Face{2}}, {3, Face{1, 2}}});
  EXPECT_NO_THROW(validate(ok));
  // Only half of the edge is covered.
  Triangulation half(base, SimplicialComplex::from_facets({{1, 3}, {2}}), {{1, Face{1}}, {2, Face{2}}, {3, Face{1, 2}}});
  EXPECT_THROW(validate(half), InvalidTriangulation);
}

TEST(Triangulation, RestrictionOfEmptyFace) {
  const auto r = restriction(barycentric(trivial(simplex(3))), Face{});
  EXPECT_EQ(r.total().f_vector(), (std::vector<std::size_t>{1}));
  EXPECT_EQ(h_polynomial(r.total(), 0), (IntPolynomial{1}));
}

TEST(Barycentric, SmallCases) {
  const auto edge = barycentric(trivial(simplex(2)));
  EXPECT_EQ(edge.total().vertices().size(), 3u);
  EXPECT_EQ(edge.total().facets().size(), 2u);
  const auto tri = barycentric(trivial(simplex(3)));
  const auto r = restriction(tri, Face{1, 2});
  EXPECT_EQ(r.total().f_vector(), (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(carrier(tri, tri.total().facets().front()), simplex(3));
}

TEST(Barycentric, FacetCountsAndFlag) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto t = barycentric(trivial(simplex(n)));
    EXPECT_EQ(static_cast<long>(t.total().facets().size()), factorial(n));
    EXPECT_EQ(t.total().vertices().size(), (std::size_t{1} << n) - 1);
    EXPECT_TRUE(is_flag(t.total()));
    EXPECT_NO_THROW(validate(t));
  }
  const auto fig = Triangulation(identity(SimplicialComplex::from_facets({{1, 4, 3}, {4, 3, 5}, {4, 5, 2}})));
  EXPECT_EQ(barycentric(fig).total().facets().size(), 18u);
}

TEST(Edgewise, SmallCases) {
  const std::vector<Vertex> order{1, 2};
  const auto e = edgewise(trivial(simplex(2)), 2, order);
  EXPECT_EQ(e.total().f_vector(), (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(edgewise(trivial(simplex(2)), 3).total().f_vector(), (std::vector<std::size_t>{1, 4, 3}));
  EXPECT_EQ(h_polynomial(edgewise(trivial(simplex(3)), 2).total()), oracle::word_ascents(3, 2));
  EXPECT_EQ(edgewise(trivial(simplex(4)), 1).total().f_vector(), trivial(simplex(4)).total().f_vector());
}

TEST(Edgewise, HPolynomialMatchesWords) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned r = 1; r <= 4; ++r) {
      const auto t = edgewise(trivial(simplex(n)), r);
      EXPECT_NO_THROW(validate(t));
      EXPECT_EQ(h_polynomial(t.total()), oracle::word_ascents(n, r)) << "n=" << n << " r=" << r;
      long pw = 1;
      for (std::size_t i = 1; i < n; ++i) pw *= r;
      EXPECT_EQ(static_cast<long>(t.total().facets().size()), pw);
      // Lattice points with coordinate sum r on n coordinates.
      EXPECT_EQ(static_cast<long>(t.total().vertices().size()),
                oracle::binom(static_cast<long>(n + r - 1), static_cast<long>(r)));
    }
}

TEST(Edgewise, VertexOrderDoesNotChangeCounts) {
  std::mt19937_64 rng(2);
  const auto base = random_triangulation(simplex(4), 3, 9);
  for (int t = 0; t < 3; ++t) {
    std::vector<Vertex> order = base.total().vertices();
    std::shuffle(order.begin(), order.end(), rng);
    const auto e = edgewise(base, 3, order);
    EXPECT_NO_THROW(validate(e));
    EXPECT_EQ(e.total().f_vector(), edgewise(base, 3).total().f_vector());
  }
}

TEST(Stellar, Basics) {
  const auto s = stellar(trivial(simplex(3)), simplex(3));
  EXPECT_EQ(s.total().facets().size(), 3u);
  EXPECT_EQ(h_polynomial(s.total()), (IntPolynomial{1, 1, 1}));
  const auto e = stellar(trivial(simplex(2)), simplex(2));
  EXPECT_EQ(e.total().f_vector(), (std::vector<std::size_t>{1, 3, 2}));
  // Subdividing an edge of a triangle splits the triangle in two.
  const auto t = stellar(trivial(simplex(3)), Face{1, 2});
  EXPECT_EQ(t.total().facets().size(), 2u);
  EXPECT_NO_THROW(validate(t));
  EXPECT_EQ(t.vertex_carrier(4), (Face{1, 2}));
}

TEST(Stellar, OnThreeTriangles) {
  const auto fig = identity(SimplicialComplex::from_facets({{1, 4, 3}, {4, 3, 5}, {4, 5, 2}}));
  const auto t = stellar(fig, Face{3, 4});
  EXPECT_EQ(t.total().facets().size(), 5u);
  EXPECT_NO_THROW(validate(t));
}

TEST(Compose, CarriersCompose) {
  const auto inner = stellar(trivial(simplex(3)), Face{1, 2});
  const auto outer = barycentric(identity(inner.total()));
  const auto t = compose(outer, inner);
  EXPECT_NO_THROW(validate(t));
  const auto direct = barycentric(inner);
  EXPECT_EQ(t.total(), direct.total());
  for (const auto& [v, c] : direct.vertex_carriers()) EXPECT_EQ(t.vertex_carrier(v), c);
}

TEST(IteratedSd, Counts) {
  const auto p = iterated_sd(simplex(2), 2);
  EXPECT_EQ(p.total().vertices().size(), 5u);
  EXPECT_EQ(p.total().facets().size(), 4u);
  EXPECT_EQ(iterated_sd(simplex(3), 2).total().facets().size(), 36u);
  EXPECT_EQ(iterated_sd(simplex(3), 0), trivial(simplex(3)));
}

TEST(Random, Deterministic) {
  EXPECT_EQ(random_triangulation(simplex(4), 0, 77), trivial(simplex(4)));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto a = random_triangulation(simplex(4), 5, seed);
    EXPECT_EQ(a, random_triangulation(simplex(4), 5, seed));
    EXPECT_EQ(a.total().vertices().size(), 9u);
    EXPECT_NO_THROW(validate(a));
  }
}

TEST(Random, CarrierMonotoneAndRestrictionsCompose) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto t = random_triangulation(simplex(4), 6, seed);
    for (const auto& g : t.total().faces())
      for (const auto& h : t.total().faces())
        if (g.is_subset_of(h)) EXPECT_TRUE(carrier(t, g).is_subset_of(carrier(t, h)));
    for (const auto& f : t.base().faces()) {
      const auto rf = restriction(t, f);
      EXPECT_NO_THROW(validate(rf));
      for (const auto& f2 : rf.base().faces()) EXPECT_EQ(restriction(rf, f2), restriction(t, f2));
    }
  }
}

TEST(RestrictionTable, MatchesExplicitRestrictions) {
  const auto t = barycentric(random_triangulation(simplex(4), 4, 3));
  const RestrictionTable table(t);
  for (const auto& f : t.base().faces())
    EXPECT_EQ(table.f_vector(table.mask_of(f)), restriction(t, f).total().f_vector()) << to_string(f);
}

TEST(FTriangle, Trivial) {
  const auto f = f_triangle(UniformKind::trivial(), 5);
  for (std::size_t j = 0; j <= 5; ++j)
    for (std::size_t i = 0; i <= j; ++i)
      EXPECT_EQ(static_cast<long>(f(i, j)), oracle::binom(static_cast<long>(j), static_cast<long>(i)));
}

TEST(FTriangle, Barycentric) {
  const auto f = f_triangle(UniformKind::barycentric(), 3);
  EXPECT_EQ(f(1, 3), 7u);
  EXPECT_EQ(f(2, 3), 12u);
  EXPECT_EQ(f(3, 3), 6u);
  const auto g = f_triangle(UniformKind::barycentric(), 6);
  for (std::size_t j = 1; j <= 6; ++j) {
    EXPECT_EQ(static_cast<long>(g(j, j)), factorial(j));
    EXPECT_EQ(g(1, j), (1u << j) - 1);
  }
}

TEST(FTriangle, Of) {
  const auto s = f_triangle_of(stellar(trivial(simplex(3)), simplex(3)));
  EXPECT_EQ(s(1, 3), 4u);
  EXPECT_EQ(s(3, 3), 3u);
  EXPECT_EQ(f_triangle_of(barycentric(trivial(simplex(4)))), f_triangle(UniformKind::barycentric(), 4));
  EXPECT_EQ(f_triangle_of(edgewise(trivial(simplex(4)), 3)), f_triangle(UniformKind::edgewise(3), 4));
  const auto lopsided = stellar(trivial(simplex(3)), Face{1, 2});
  EXPECT_THROW(f_triangle_of(lopsided), NotUniform);
  EXPECT_THROW(FTriangle({{1}, {1, 0}}), std::invalid_argument);
}

TEST(UniformKind, Parse) {
  EXPECT_EQ(UniformKind::parse("sd"), UniformKind::barycentric());
  EXPECT_EQ(UniformKind::parse("esd:3"), UniformKind::edgewise(3));
  EXPECT_EQ(UniformKind::parse("trivial"), UniformKind::trivial());
  EXPECT_EQ(UniformKind::edgewise(4).name(), "esd:4");
  EXPECT_THROW(UniformKind::parse("esd:0"), std::invalid_argument);
  EXPECT_THROW(UniformKind::parse("foo"), std::invalid_argument);
}
