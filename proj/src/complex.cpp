#include "lhv/complex.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace lhv {

Face::Face(std::initializer_list<Vertex> vertices) : Face(std::vector<Vertex>(vertices)) {}

Face::Face(std::vector<Vertex> vertices) : v_(std::move(vertices)) {
  std::sort(v_.begin(), v_.end());
  if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
    throw std::invalid_argument("face has a repeated vertex");
}

bool Face::contains(Vertex v) const { return std::binary_search(v_.begin(), v_.end(), v); }

bool Face::is_subset_of(const Face& other) const {
  return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

Face face_union(const Face& a, const Face& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(), std::back_inserter(out));
  return Face(Face::Sorted{}, std::move(out));
}

Face face_without(const Face& f, Vertex v) {
  std::vector<Vertex> out;
  out.reserve(f.size());
  for (Vertex u : f.v_)
    if (u != v) out.push_back(u);
  return Face(Face::Sorted{}, std::move(out));
}

Face face_with(const Face& f, Vertex v) {
  std::vector<Vertex> out = f.v_;
  auto it = std::lower_bound(out.begin(), out.end(), v);
  if (it == out.end() || *it != v) out.insert(it, v);
  return Face(Face::Sorted{}, std::move(out));
}

bool canonical_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string to_string(const Face& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f[i]);
  }
  return out + "}";
}

std::size_t FaceHash::operator()(const Face& f) const noexcept {
  std::size_t h = f.size() * 0x9e3779b97f4a7c15ULL;
  for (Vertex v : f) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL + (h >> 29);
  return h;
}

// ---------------------------------------------------------------------------

struct SimplicialComplex::FaceCache {
  std::once_flag once;
  std::vector<Face> faces;
};

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<FaceCache>()) {}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> facets) {
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  std::size_t max_size = 0;
  for (const auto& f : facets) max_size = std::max(max_size, f.size());
  const bool uniform_size =
      std::all_of(facets.begin(), facets.end(), [&](const Face& f) { return f.size() == max_size; });

  if (!uniform_size) {
    std::unordered_map<Vertex, std::vector<std::size_t>> incident;
    for (std::size_t i = 0; i < facets.size(); ++i)
      for (Vertex v : facets[i]) incident[v].push_back(i);
    std::vector<Face> kept;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      const Face& f = facets[i];
      bool dominated = false;
      if (f.empty()) {
        dominated = max_size > 0;
      } else {
        for (std::size_t j : incident[f[0]]) {
          if (facets[j].size() > f.size() && f.is_subset_of(facets[j])) {
            dominated = true;
            break;
          }
        }
      }
      if (!dominated) kept.push_back(f);
    }
    facets = std::move(kept);
  }
  std::sort(facets.begin(), facets.end(), canonical_less);

  SimplicialComplex k;
  std::vector<Vertex> vertices;
  for (const auto& f : facets) vertices.insert(vertices.end(), f.begin(), f.end());
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  k.facets_ = std::move(facets);
  k.vertices_ = std::move(vertices);
  return k;
}

SimplicialComplex SimplicialComplex::simplex(const Face& vertices) { return from_facets({vertices}); }

long SimplicialComplex::dimension() const {
  std::size_t max_size = 0;
  for (const auto& f : facets_) max_size = std::max(max_size, f.size());
  return static_cast<long>(max_size) - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Face& f) { return f.size() == facets_.front().size(); });
}

const std::vector<Face>& SimplicialComplex::faces() const {
  std::call_once(cache_->once, [this] {
    std::vector<Face> all;
    for (const auto& facet : facets_) {
      const std::size_t d = facet.size();
      if (d > 30) throw std::length_error("facet too large for face enumeration");
      for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        std::vector<Vertex> sub;
        sub.reserve(static_cast<std::size_t>(std::popcount(mask)));
        for (std::size_t i = 0; i < d; ++i)
          if (mask & (1u << i)) sub.push_back(facet[i]);
        all.emplace_back(std::move(sub));
      }
    }
    std::sort(all.begin(), all.end(), canonical_less);
    all.erase(std::unique(all.begin(), all.end()), all.end());
    cache_->faces = std::move(all);
  });
  return cache_->faces;
}

bool SimplicialComplex::contains(const Face& f) const {
  const auto& all = faces();
  return std::binary_search(all.begin(), all.end(), f, canonical_less);
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  if (is_void()) return {};
  std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 2), 0);
  for (const auto& face : faces()) ++f[face.size()];
  return f;
}

SimplicialComplex SimplicialComplex::with_labels(std::map<Vertex, std::string> labels) const {
  SimplicialComplex out = *this;
  out.labels_ = std::move(labels);
  return out;
}

// ---------------------------------------------------------------------------

IntPolynomial h_polynomial_from_f_vector(const std::vector<std::size_t>& f, std::size_t n) {
  if (f.size() > n + 1)
    throw std::invalid_argument("h_polynomial: complex of dimension " + std::to_string(f.size() - 2) +
                                " exceeds n - 1 = " + std::to_string(static_cast<long>(n) - 1));
  const IntPolynomial one_minus_x{1, -1};
  IntPolynomial h;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    h += Integer(static_cast<unsigned long>(f[i])) * shift(pow(one_minus_x, static_cast<unsigned>(n - i)), i);
  }
  return h;
}

IntPolynomial h_polynomial(const SimplicialComplex& k, long n) {
  const long ambient = n < 0 ? k.dimension() + 1 : n;
  return h_polynomial_from_f_vector(k.f_vector(), static_cast<std::size_t>(ambient));
}

std::vector<Integer> f_vector_from_h(const IntPolynomial& h, std::size_t n) {
  // With y = x / (1 - x): sum_i f_{i-1} y^i = sum_k h_k y^k (1 + y)^{n-k}.
  IntPolynomial f;
  for (std::size_t k = 0; k <= n; ++k) {
    const Integer c = h.coeff(k);
    if (c != 0) f += c * shift(pow(IntPolynomial{1, 1}, static_cast<unsigned>(n - k)), k);
  }
  std::vector<Integer> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = f.coeff(i);
  return out;
}

bool is_flag(const SimplicialComplex& k) {
  std::unordered_map<Vertex, std::vector<Vertex>> adjacency;
  for (const auto& face : k.faces()) {
    if (face.size() != 2) continue;
    adjacency[face[0]].push_back(face[1]);
    adjacency[face[1]].push_back(face[0]);
  }
  for (auto& [v, nbrs] : adjacency) std::sort(nbrs.begin(), nbrs.end());

  // Flag iff every clique of the 1-skeleton is a face: whenever a vertex is
  // adjacent to all of a face G, G plus that vertex must be a face.
  for (const auto& face : k.faces()) {
    if (face.size() < 2) continue;
    std::vector<Vertex> common = adjacency[face[0]];
    for (std::size_t i = 1; i < face.size() && !common.empty(); ++i) {
      const auto& next = adjacency[face[i]];
      std::vector<Vertex> tmp;
      std::set_intersection(common.begin(), common.end(), next.begin(), next.end(), std::back_inserter(tmp));
      common = std::move(tmp);
    }
    for (Vertex v : common)
      if (!k.contains(face_with(face, v))) return false;
  }
  return true;
}

}  // namespace lhv
