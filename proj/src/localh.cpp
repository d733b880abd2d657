#include "lhv/localh.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "lhv/perm.hpp"

namespace lhv {

namespace {

void require_simplex_base(const Triangulation& t) {
  if (t.base().facets().size() != 1)
    throw std::invalid_argument("local h-polynomial needs a triangulation of a single simplex");
}

IntPolynomial signed_if(bool negative, IntPolynomial p) { return negative ? -p : p; }

}  // namespace

Face LocalHTable::face_of(std::uint32_t mask) const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < base_vertices.size(); ++i)
    if (mask & (1u << i)) out.push_back(base_vertices[i]);
  return Face(std::move(out));
}

LocalHTable local_h_table(const Triangulation& t) {
  require_simplex_base(t);
  const RestrictionTable table(t);
  LocalHTable out;
  out.base_vertices = table.base_vertices();
  const std::size_t n = out.base_vertices.size();
  const std::size_t subsets = std::size_t{1} << n;
  out.h.resize(subsets);
  for (std::size_t m = 0; m < subsets; ++m)
    out.h[m] = h_polynomial_from_f_vector(table.f_vector(static_cast<std::uint32_t>(m)),
                                          static_cast<std::size_t>(std::popcount(m)));
  // Moebius inversion over subsets.
  out.ell = out.h;
  for (std::size_t bit = 0; bit < n; ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t m = 0; m < subsets; ++m)
      if (m & b) out.ell[m] -= out.ell[m ^ b];
  }
  return out;
}

IntPolynomial local_h(const Triangulation& t) {
  require_simplex_base(t);
  const RestrictionTable table(t);
  const std::size_t n = table.base_vertices().size();
  IntPolynomial sum;
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
    const auto size = static_cast<std::size_t>(std::popcount(m));
    sum += signed_if((n - size) % 2 == 1,
                     h_polynomial_from_f_vector(table.f_vector(static_cast<std::uint32_t>(m)), size));
  }
  return sum;
}

IntPolynomial local_h_direct(const Triangulation& t) {
  require_simplex_base(t);
  const std::size_t n = t.base().vertices().size();
  IntPolynomial sum;
  for (const auto& f : t.base().faces()) {
    const Triangulation r = restriction(t, f);
    sum += signed_if((n - f.size()) % 2 == 1, h_polynomial(r.total(), static_cast<long>(f.size())));
  }
  return sum;
}

IntPolynomial h_from_local(const Triangulation& t) {
  require_simplex_base(t);
  IntPolynomial sum;
  for (const auto& f : t.base().faces()) sum += local_h_direct(restriction(t, f));
  return sum;
}

// ---------------------------------------------------------------------------

CoefficientMatrix::CoefficientMatrix(std::size_t n) : n_(n), c_(n + 1) {
  for (std::size_t k = 0; k <= n; ++k) c_[k].assign(n - k + 1, 0);
}

const Integer& CoefficientMatrix::operator()(std::size_t k, std::size_t j) const {
  if (k > n_ || j > n_ - k) throw std::out_of_range("c_{k,j} needs k + j <= n");
  return c_[k][j];
}

Integer& CoefficientMatrix::at(std::size_t k, std::size_t j) {
  if (k > n_ || j > n_ - k) throw std::out_of_range("c_{k,j} needs k + j <= n");
  return c_[k][j];
}

CoefficientMatrix c_coefficients(const Triangulation& t) {
  const LocalHTable table = local_h_table(t);
  const std::size_t n = table.base_vertices.size();
  CoefficientMatrix c(n);
  for (std::size_t m = 0; m < table.ell.size(); ++m) {
    const std::size_t k = n - static_cast<std::size_t>(std::popcount(m));
    const auto& ell = table.ell[m];
    for (std::size_t j = 0; j < ell.coeffs().size(); ++j) {
      if (j > n - k) throw std::domain_error("local h-polynomial of degree above |F|");
      c.at(k, j) += ell.coeffs()[j];
    }
  }
  return c;
}

// ---------------------------------------------------------------------------

namespace {

void check_range(const FTriangle& f, std::size_t m, std::size_t k) {
  if (k > m) throw std::invalid_argument("need k <= m, got m = " + std::to_string(m) + ", k = " + std::to_string(k));
  if (m > f.n())
    throw std::invalid_argument("m = " + std::to_string(m) + " exceeds the f-triangle size " + std::to_string(f.n()));
}

}  // namespace

IntPolynomial h_uniform(const FTriangle& f, std::size_t m) {
  if (m > f.n()) throw std::invalid_argument("m exceeds the f-triangle size");
  std::vector<std::size_t> fv(m + 1);
  for (std::size_t i = 0; i <= m; ++i) fv[i] = static_cast<std::size_t>(f(i, m));
  return h_polynomial_from_f_vector(fv, m);
}

IntPolynomial p_poly(const FTriangle& f, std::size_t m, std::size_t k) {
  check_range(f, m, k);
  const IntPolynomial x_minus_1{-1, 1};
  IntPolynomial sum;
  for (std::size_t i = 0; i <= k; ++i)
    sum += binomial(static_cast<unsigned>(k), static_cast<unsigned>(i)) *
           (pow(x_minus_1, static_cast<unsigned>(i)) * h_uniform(f, m - i));
  return sum;
}

IntPolynomial ell_mk(const FTriangle& f, std::size_t m, std::size_t k) {
  check_range(f, m, k);
  IntPolynomial sum;
  for (std::size_t i = 0; i <= k; ++i)
    sum += signed_if(i % 2 == 1, binomial(static_cast<unsigned>(k), static_cast<unsigned>(i)) * h_uniform(f, m - i));
  return sum;
}

IntPolynomial ell_mk_from_local(std::span<const IntPolynomial> local, std::size_t m, std::size_t k) {
  if (k > m || local.size() <= m) throw std::invalid_argument("ell_mk_from_local: index out of range");
  IntPolynomial sum;
  for (std::size_t i = 0; i <= m - k; ++i)
    sum += binomial(static_cast<unsigned>(m - k), static_cast<unsigned>(i)) * local[m - i];
  return sum;
}

IntPolynomial ell_mkj(const FTriangle& f, std::size_t m, std::size_t k, std::size_t j) {
  if (k + j > m)
    throw std::invalid_argument("l_{m,k,j} is only defined for k + j <= m, got m = " + std::to_string(m) +
                                ", k = " + std::to_string(k) + ", j = " + std::to_string(j));
  check_range(f, m, k);
  IntPolynomial sum;
  for (std::size_t i = 0; i <= k; ++i)
    sum += signed_if(i % 2 == 1, binomial(static_cast<unsigned>(k), static_cast<unsigned>(i)) * p_poly(f, m - i, j));
  return sum;
}

IntPolynomial local_h_via_uniform(const FTriangle& f, const CoefficientMatrix& c) {
  const std::size_t n = c.n();
  if (n > f.n()) throw std::invalid_argument("coefficient matrix larger than the f-triangle");
  IntPolynomial sum;
  for (std::size_t k = 0; k <= n; ++k)
    for (std::size_t j = 0; j + k <= n; ++j)
      if (c(k, j) != 0) sum += c(k, j) * ell_mkj(f, n, k, j);
  return sum;
}

IntPolynomial second_sd_local_h(std::size_t n) {
  IntPolynomial sum;
  for (std::size_t k = 0; k <= n; ++k) {
    const auto d = derangement_counts(n - k);
    IntPolynomial inner;
    for (std::size_t j = 0; j < d.size() && j + k <= n; ++j)
      if (d[j] != 0) inner += d[j] * d_nkj(n, k, j);
    sum += binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * inner;
  }
  return sum;
}

}  // namespace lhv
