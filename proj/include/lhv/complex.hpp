#pragma once

// Finite abstract simplicial complexes stored by their facets.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lhv/poly.hpp"

namespace lhv {

using Vertex = int;

/// A strictly increasing set of vertex ids. The empty face is allowed.
class Face {
 public:
  Face() = default;
  Face(std::initializer_list<Vertex> vertices);
  /// Sorts the input; throws std::invalid_argument on repeated vertices.
  explicit Face(std::vector<Vertex> vertices);

  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  Vertex operator[](std::size_t i) const { return v_[i]; }
  const std::vector<Vertex>& vertices() const { return v_; }

  bool contains(Vertex v) const;
  bool is_subset_of(const Face& other) const;

  friend bool operator==(const Face&, const Face&) = default;
  /// Lexicographic on the sorted vertex lists.
  friend auto operator<=>(const Face& a, const Face& b) { return a.v_ <=> b.v_; }

 private:
  struct Sorted {};
  Face(Sorted, std::vector<Vertex> vertices) : v_(std::move(vertices)) {}
  friend Face face_union(const Face&, const Face&);
  friend Face face_without(const Face&, Vertex);
  friend Face face_with(const Face&, Vertex);

  std::vector<Vertex> v_;
};

Face face_union(const Face& a, const Face& b);
Face face_without(const Face& f, Vertex v);
Face face_with(const Face& f, Vertex v);
/// Size first, then lexicographic; the enumeration order of faces().
bool canonical_less(const Face& a, const Face& b);
std::string to_string(const Face& f);

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept;
};

/// An immutable simplicial complex. The void complex has no faces at all;
/// the empty complex {∅} has exactly the empty face.
class SimplicialComplex {
 public:
  /// The void complex.
  SimplicialComplex();

  /// Drops duplicate and dominated facets; facets end up in canonical order.
  static SimplicialComplex from_facets(std::vector<Face> facets);
  static SimplicialComplex simplex(const Face& vertices);

  bool is_void() const { return facets_.empty(); }
  const std::vector<Face>& facets() const { return facets_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  /// Largest facet size minus one; -1 for both the empty and the void complex.
  long dimension() const;
  bool is_pure() const;

  /// Every face, in canonical order. Computed once and shared by copies.
  const std::vector<Face>& faces() const;
  bool contains(const Face& f) const;
  /// (f_{-1}, f_0, ..., f_{d}); empty for the void complex.
  std::vector<std::size_t> f_vector() const;

  /// Optional provenance labels, for display only.
  const std::map<Vertex, std::string>& labels() const { return labels_; }
  SimplicialComplex with_labels(std::map<Vertex, std::string> labels) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets_ == b.facets_;
  }

 private:
  struct FaceCache;
  std::vector<Face> facets_;
  std::vector<Vertex> vertices_;
  std::map<Vertex, std::string> labels_;
  std::shared_ptr<FaceCache> cache_;
};

/// h(K, x) = sum_i f_{i-1} x^i (1-x)^{n-i}. `n` defaults to dim + 1 and must
/// be at least that (std::invalid_argument otherwise).
IntPolynomial h_polynomial(const SimplicialComplex& k, long n = -1);
IntPolynomial h_polynomial_from_f_vector(const std::vector<std::size_t>& f, std::size_t n);
/// Inverse of the h-transform: f_{i-1} for i = 0..n.
std::vector<Integer> f_vector_from_h(const IntPolynomial& h, std::size_t n);

/// Every minimal nonface has exactly two vertices.
bool is_flag(const SimplicialComplex& k);

}  // namespace lhv
