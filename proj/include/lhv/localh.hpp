#pragma once

// Local h-polynomials of triangulations of a simplex, and the polynomial
// families attached to an f-triangle: h_F(sigma_m), p_{F,m,k}, l_{F,m,k}
// and l_{F,m,k,j}.

#include <cstddef>
#include <span>
#include <vector>

#include "lhv/poly.hpp"
#include "lhv/triangulate.hpp"

namespace lhv {

/// l_V(T, x) = sum over F in V of (-1)^{n-|F|} h(T_F, x), each h taken with
/// ambient degree |F|. Requires T.base() to be a single simplex.
IntPolynomial local_h(const Triangulation& t);

/// Same value, building every restriction explicitly. Slower; kept as an
/// independent path for cross-checks.
IntPolynomial local_h_direct(const Triangulation& t);

/// h(T_F) and l_F(T_F) for every face F of the base simplex, indexed by the
/// subset mask over base_vertices.
struct LocalHTable {
  std::vector<Vertex> base_vertices;
  std::vector<IntPolynomial> h;
  std::vector<IntPolynomial> ell;

  Face face_of(std::uint32_t mask) const;
};
LocalHTable local_h_table(const Triangulation& t);

/// sum over F of l_F(T_F), with each l_F computed by local_h_direct on an
/// explicitly built restriction.
IntPolynomial h_from_local(const Triangulation& t);

/// c_{k,j} for k + j <= n.
class CoefficientMatrix {
 public:
  explicit CoefficientMatrix(std::size_t n);

  std::size_t n() const { return n_; }
  const Integer& operator()(std::size_t k, std::size_t j) const;
  Integer& at(std::size_t k, std::size_t j);

  friend bool operator==(const CoefficientMatrix&, const CoefficientMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::vector<Integer>> c_;  // c_[k][j], j <= n - k
};

/// c_{k,j}(T) = sum over (n-k)-subsets F of [x^j] l_F(T_F).
CoefficientMatrix c_coefficients(const Triangulation& t);

/// h_F(sigma_m, x) = sum_i f(i, m) x^i (1-x)^{m-i}.
IntPolynomial h_uniform(const FTriangle& f, std::size_t m);
/// sum_i C(k,i) (x-1)^i h_F(sigma_{m-i}); needs k <= m <= F.n().
IntPolynomial p_poly(const FTriangle& f, std::size_t m, std::size_t k);
/// sum_i (-1)^i C(k,i) h_F(sigma_{m-i}); needs k <= m <= F.n().
IntPolynomial ell_mk(const FTriangle& f, std::size_t m, std::size_t k);
/// sum_{i <= m-k} C(m-k,i) l_F(sigma_{m-i}), given local[j] = l_F(sigma_j)
/// for j = 0..m.
IntPolynomial ell_mk_from_local(std::span<const IntPolynomial> local, std::size_t m, std::size_t k);
/// sum_i (-1)^i C(k,i) p_{F,m-i,j}; needs k + j <= m <= F.n().
IntPolynomial ell_mkj(const FTriangle& f, std::size_t m, std::size_t k, std::size_t j);

/// sum over k + j <= n of c_{k,j} l_{F,n,k,j}, n = c.n().
IntPolynomial local_h_via_uniform(const FTriangle& f, const CoefficientMatrix& c);

/// Local h-polynomial of the second barycentric subdivision of the
/// (n-1)-simplex, from derangement counts and d_{n,k,j}.
IntPolynomial second_sd_local_h(std::size_t n);

}  // namespace lhv
