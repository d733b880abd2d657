#pragma once

// Triangulations of a base complex, carried by per-vertex carrier faces.
//
// The carrier of a face G of the subdivision is the union of the carriers of
// its vertices. Every construction here (stellar moves, barycentric and
// edgewise subdivision, and their compositions) has the property that this
// union is the smallest base face containing G; validity is checked
// combinatorially, never topologically.

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lhv/complex.hpp"

namespace lhv {

class Triangulation {
 public:
  /// Requires a nonempty carrier in `base` for every vertex of `total` and
  /// no others; throws std::invalid_argument otherwise.
  Triangulation(SimplicialComplex base, SimplicialComplex total, std::map<Vertex, Face> carriers);

  const SimplicialComplex& base() const { return base_; }
  const SimplicialComplex& total() const { return total_; }
  const std::map<Vertex, Face>& vertex_carriers() const { return carriers_; }
  const Face& vertex_carrier(Vertex v) const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  SimplicialComplex base_;
  SimplicialComplex total_;
  std::map<Vertex, Face> carriers_;
};

class InvalidTriangulation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Union of the vertex carriers of G; throws std::invalid_argument if G is
/// not a face of t.total().
Face carrier(const Triangulation& t, const Face& g);

/// Faces of t.total() whose carrier lies in F, as a triangulation of 2^F.
/// Throws std::invalid_argument if F is not a face of t.base().
Triangulation restriction(const Triangulation& t, const Face& f);

/// The simplex 2^V subdividing itself.
Triangulation trivial(const Face& v);
/// A complex subdividing itself.
Triangulation identity(const SimplicialComplex& k);

/// Order complex of the nonempty faces of t.total(), carried into t.base().
Triangulation barycentric(const Triangulation& t);

/// r-fold edgewise subdivision of t.total() with respect to a vertex order
/// (ascending ids when `order` is empty), carried into t.base().
Triangulation edgewise(const Triangulation& t, unsigned r, std::span<const Vertex> order = {});

/// Stellar subdivision of t.total() at the face G (|G| >= 1). The new vertex
/// gets id max + 1 and carrier carrier(t, G).
Triangulation stellar(const Triangulation& t, const Face& g);

/// Carrier composition; requires outer.base() == inner.total().
Triangulation compose(const Triangulation& outer, const Triangulation& inner);

/// k-fold barycentric subdivision of 2^V.
Triangulation iterated_sd(const Face& v, unsigned k);

/// `steps` stellar moves on 2^V. Each step lists the faces of dimension >= 1
/// of the current subdivision in canonical order (size, then lexicographic)
/// and picks index mt19937_64() % count, the generator seeded with `seed`.
Triangulation random_triangulation(const Face& v, std::size_t steps, std::uint64_t seed);

/// Throws InvalidTriangulation describing the first violated invariant:
/// carriers of faces are base faces, every restriction to a base face F is
/// pure of dimension |F| - 1, and each base vertex has exactly one preimage.
void validate(const Triangulation& t);

/// f-vectors of all restrictions, indexed by subsets of the base vertex set
/// (at most 24 base vertices).
class RestrictionTable {
 public:
  explicit RestrictionTable(const Triangulation& t);

  const std::vector<Vertex>& base_vertices() const { return base_vertices_; }
  std::uint32_t mask_of(const Face& base_face) const;
  Face face_of(std::uint32_t mask) const;
  /// (f_{-1}, ..., f_{d}) of the faces with carrier inside the subset,
  /// trailing zeros dropped.
  std::vector<std::size_t> f_vector(std::uint32_t mask) const;

 private:
  std::vector<Vertex> base_vertices_;
  std::size_t width_ = 0;                 // max face size + 1
  std::vector<std::size_t> counts_;       // [mask * width_ + size]
};

/// Face counts f(i, j) of restrictions of a uniform triangulation to
/// (j-1)-dimensional faces, 0 <= i <= j <= n.
class FTriangle {
 public:
  /// rows[j][i] = f(i, j); throws std::invalid_argument on malformed data.
  explicit FTriangle(std::vector<std::vector<std::uint64_t>> rows);

  std::size_t n() const { return rows_.size() - 1; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const;
  const std::vector<std::vector<std::uint64_t>>& rows() const { return rows_; }

  friend bool operator==(const FTriangle&, const FTriangle&) = default;

 private:
  std::vector<std::vector<std::uint64_t>> rows_;
};

class NotUniform : public std::domain_error {
 public:
  NotUniform(Face first, Face second);
  const Face& first() const { return first_; }
  const Face& second() const { return second_; }

 private:
  Face first_, second_;
};

/// The common f-triangle of t; throws NotUniform with two base faces of equal
/// dimension whose restrictions have different f-vectors.
FTriangle f_triangle_of(const Triangulation& t);

struct UniformKind {
  enum class Kind { kTrivial, kBarycentric, kEdgewise };
  Kind kind = Kind::kTrivial;
  unsigned r = 1;

  static UniformKind trivial() { return {Kind::kTrivial, 1}; }
  static UniformKind barycentric() { return {Kind::kBarycentric, 1}; }
  static UniformKind edgewise(unsigned r) { return {Kind::kEdgewise, r}; }
  /// "trivial", "sd", or "esd:R".
  static UniformKind parse(std::string_view text);
  std::string name() const;

  friend bool operator==(const UniformKind&, const UniformKind&) = default;
};

/// The subdivision of the given kind applied on top of t.
Triangulation subdivide(const Triangulation& t, UniformKind kind);

/// f-triangle of size n, read off the subdivision of the (n-1)-simplex.
/// Results are memoised.
FTriangle f_triangle(UniformKind kind, std::size_t n);

}  // namespace lhv
