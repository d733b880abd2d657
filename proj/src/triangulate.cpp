#include "lhv/triangulate.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <cctype>
#include <utility>

namespace lhv {

Triangulation::Triangulation(SimplicialComplex base, SimplicialComplex total, std::map<Vertex, Face> carriers)
    : base_(std::move(base)), total_(std::move(total)), carriers_(std::move(carriers)) {
  if (carriers_.size() != total_.vertices().size())
    throw std::invalid_argument("carrier map does not match the vertex set of the subdivision");
  for (Vertex v : total_.vertices()) {
    auto it = carriers_.find(v);
    if (it == carriers_.end()) throw std::invalid_argument("vertex " + std::to_string(v) + " has no carrier");
    if (it->second.empty()) throw std::invalid_argument("vertex " + std::to_string(v) + " has an empty carrier");
    if (!base_.contains(it->second))
      throw std::invalid_argument("carrier " + to_string(it->second) + " of vertex " + std::to_string(v) +
                                  " is not a base face");
  }
}

const Face& Triangulation::vertex_carrier(Vertex v) const {
  auto it = carriers_.find(v);
  if (it == carriers_.end()) throw std::out_of_range("no vertex " + std::to_string(v));
  return it->second;
}

Face carrier(const Triangulation& t, const Face& g) {
  if (!t.total().contains(g)) throw std::invalid_argument(to_string(g) + " is not a face of the subdivision");
  Face out;
  for (Vertex v : g) out = face_union(out, t.vertex_carrier(v));
  return out;
}

namespace {

SimplicialComplex complex_from_faces(const std::vector<Face>& faces) {
  // Faces are closed under subsets; the maximal ones are those not covered
  // by a face one size larger.
  std::unordered_set<Face, FaceHash> covered;
  for (const auto& f : faces)
    for (Vertex v : f) covered.insert(face_without(f, v));
  std::vector<Face> facets;
  for (const auto& f : faces)
    if (!covered.count(f)) facets.push_back(f);
  return SimplicialComplex::from_facets(std::move(facets));
}

std::map<Vertex, Face> restrict_carriers(const std::map<Vertex, Face>& carriers, const SimplicialComplex& k) {
  std::map<Vertex, Face> out;
  for (Vertex v : k.vertices()) out.emplace(v, carriers.at(v));
  return out;
}

}  // namespace

Triangulation restriction(const Triangulation& t, const Face& f) {
  if (!t.base().contains(f)) throw std::invalid_argument(to_string(f) + " is not a face of the base complex");
  std::vector<Face> kept;
  for (const auto& g : t.total().faces()) {
    bool inside = true;
    for (Vertex v : g) {
      if (!t.vertex_carrier(v).is_subset_of(f)) {
        inside = false;
        break;
      }
    }
    if (inside) kept.push_back(g);
  }
  SimplicialComplex total = complex_from_faces(kept);
  auto carriers = restrict_carriers(t.vertex_carriers(), total);
  return Triangulation(SimplicialComplex::simplex(f), std::move(total), std::move(carriers));
}

Triangulation trivial(const Face& v) { return identity(SimplicialComplex::simplex(v)); }

Triangulation identity(const SimplicialComplex& k) {
  std::map<Vertex, Face> carriers;
  for (Vertex v : k.vertices()) carriers.emplace(v, Face{v});
  return Triangulation(k, k, std::move(carriers));
}

Triangulation barycentric(const Triangulation& t) {
  const auto& faces = t.total().faces();
  std::unordered_map<Face, Vertex, FaceHash> id;
  std::map<Vertex, Face> carriers;
  std::map<Vertex, std::string> labels;
  Vertex next = 1;
  for (const auto& g : faces) {
    if (g.empty()) continue;
    id.emplace(g, next);
    carriers.emplace(next, carrier(t, g));
    labels.emplace(next, "b" + to_string(g));
    ++next;
  }
  if (id.empty()) return Triangulation(t.base(), t.total(), {});

  std::vector<Face> facets;
  for (const auto& h : t.total().facets()) {
    std::vector<Vertex> order(h.begin(), h.end());
    do {
      std::vector<Vertex> chain;
      std::vector<Vertex> prefix;
      for (Vertex v : order) {
        prefix.push_back(v);
        chain.push_back(id.at(Face(prefix)));
      }
      facets.emplace_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  auto total = SimplicialComplex::from_facets(std::move(facets)).with_labels(std::move(labels));
  return Triangulation(t.base(), std::move(total), std::move(carriers));
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct CliqueFinder {
  std::size_t n;
  std::vector<Bits> adj;
  std::vector<std::vector<std::size_t>> cliques;

  explicit CliqueFinder(std::size_t size) : n(size), adj(size, Bits((size + 63) / 64, 0)) {}

  void connect(std::size_t a, std::size_t b) {
    adj[a][b / 64] |= 1ULL << (b % 64);
    adj[b][a / 64] |= 1ULL << (a % 64);
  }

  static bool none(const Bits& s) {
    return std::all_of(s.begin(), s.end(), [](std::uint64_t w) { return w == 0; });
  }
  static std::size_t count_and(const Bits& a, const Bits& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
  }
  static Bits intersect(const Bits& a, const Bits& b) {
    Bits out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
    return out;
  }

  void run() {
    Bits all((n + 63) / 64, 0);
    for (std::size_t i = 0; i < n; ++i) all[i / 64] |= 1ULL << (i % 64);
    std::vector<std::size_t> r;
    expand(r, all, Bits(all.size(), 0));
  }

  void expand(std::vector<std::size_t>& r, Bits p, Bits x) {
    if (none(p)) {
      if (none(x)) cliques.push_back(r);
      return;
    }
    std::size_t pivot = 0, best = 0;
    bool have = false;
    for (std::size_t w = 0; w < p.size(); ++w) {
      for (std::uint64_t bits = p[w] | x[w]; bits; bits &= bits - 1) {
        const std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        const std::size_t c = count_and(p, adj[u]);
        if (!have || c > best) pivot = u, best = c, have = true;
      }
    }
    for (std::size_t w = 0; w < p.size(); ++w) {
      for (std::uint64_t bits = p[w] & ~adj[pivot][w]; bits; bits &= bits - 1) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        r.push_back(v);
        expand(r, intersect(p, adj[v]), intersect(x, adj[v]));
        r.pop_back();
        p[v / 64] &= ~(1ULL << (v % 64));
        x[v / 64] |= 1ULL << (v % 64);
      }
    }
  }
};

// Nonzero entries (vertex, multiplicity) of a lattice point, by vertex id.
using LatticePoint = std::vector<std::pair<Vertex, unsigned>>;

void compositions(unsigned r, std::size_t parts, std::vector<unsigned>& cur,
                  std::vector<std::vector<unsigned>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(r);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned a = r + 1; a-- > 0;) {
    cur.push_back(a);
    compositions(r - a, parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Triangulation edgewise(const Triangulation& t, unsigned r, std::span<const Vertex> order) {
  if (r < 1) throw std::invalid_argument("edgewise subdivision needs r >= 1");
  const auto& vertices = t.total().vertices();
  std::vector<Vertex> ord(order.begin(), order.end());
  if (ord.empty()) ord = vertices;
  {
    std::vector<Vertex> sorted = ord;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != vertices) throw std::invalid_argument("edgewise order is not a permutation of the vertex set");
  }
  std::unordered_map<Vertex, std::size_t> pos;
  for (std::size_t i = 0; i < ord.size(); ++i) pos[ord[i]] = i;

  if (vertices.empty()) return Triangulation(t.base(), t.total(), {});

  std::vector<std::vector<LatticePoint>> facet_cliques;
  std::set<LatticePoint> points;
  for (const auto& h : t.total().facets()) {
    std::vector<Vertex> hv(h.begin(), h.end());
    std::sort(hv.begin(), hv.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
    std::vector<std::vector<unsigned>> comps;
    std::vector<unsigned> cur;
    compositions(r, hv.size(), cur, comps);

    std::vector<std::vector<unsigned>> iota;
    for (const auto& c : comps) {
      std::vector<unsigned> s(c.size());
      std::partial_sum(c.begin(), c.end(), s.begin());
      iota.push_back(std::move(s));
    }
    CliqueFinder finder(comps.size());
    for (std::size_t a = 0; a < comps.size(); ++a) {
      for (std::size_t b = a + 1; b < comps.size(); ++b) {
        bool up = true, down = true;
        for (std::size_t i = 0; i < hv.size(); ++i) {
          const long d = static_cast<long>(iota[a][i]) - static_cast<long>(iota[b][i]);
          up = up && (d == 0 || d == 1);
          down = down && (d == 0 || d == -1);
        }
        if (up || down) finder.connect(a, b);
      }
    }
    finder.run();

    std::vector<LatticePoint> local;
    for (const auto& c : comps) {
      LatticePoint p;
      for (std::size_t i = 0; i < hv.size(); ++i)
        if (c[i]) p.emplace_back(hv[i], c[i]);
      std::sort(p.begin(), p.end());
      points.insert(p);
      local.push_back(std::move(p));
    }
    for (const auto& clique : finder.cliques) {
      std::vector<LatticePoint> pts;
      for (std::size_t i : clique) pts.push_back(local[i]);
      facet_cliques.push_back(std::move(pts));
    }
  }

  std::map<LatticePoint, Vertex> id;
  std::map<Vertex, Face> carriers;
  std::map<Vertex, std::string> labels;
  Vertex next = 1;
  for (const auto& p : points) {
    std::vector<Vertex> supp;
    std::string label = "(";
    for (const auto& [v, c] : p) {
      supp.push_back(v);
      if (label.size() > 1) label += ',';
      label += std::to_string(v) + ":" + std::to_string(c);
    }
    id.emplace(p, next);
    carriers.emplace(next, carrier(t, Face(supp)));
    labels.emplace(next, label + ")");
    ++next;
  }
  std::vector<Face> facets;
  for (const auto& clique : facet_cliques) {
    std::vector<Vertex> f;
    for (const auto& p : clique) f.push_back(id.at(p));
    facets.emplace_back(std::move(f));
  }
  auto total = SimplicialComplex::from_facets(std::move(facets)).with_labels(std::move(labels));
  return Triangulation(t.base(), std::move(total), std::move(carriers));
}

Triangulation stellar(const Triangulation& t, const Face& g) {
  if (g.empty()) throw std::invalid_argument("stellar subdivision needs a nonempty face");
  const Face c = carrier(t, g);
  const auto& vertices = t.total().vertices();
  const Vertex w = vertices.empty() ? 1 : vertices.back() + 1;

  std::vector<Face> facets;
  for (const auto& h : t.total().facets()) {
    if (!g.is_subset_of(h)) {
      facets.push_back(h);
      continue;
    }
    for (Vertex v : g) facets.push_back(face_with(face_without(h, v), w));
  }
  auto labels = t.total().labels();
  labels[w] = "s" + to_string(g);
  auto total = SimplicialComplex::from_facets(std::move(facets)).with_labels(std::move(labels));
  auto carriers = restrict_carriers(t.vertex_carriers(), t.total());
  carriers.emplace(w, c);
  // A singleton move replaces its vertex outright.
  for (auto it = carriers.begin(); it != carriers.end();) {
    if (!std::binary_search(total.vertices().begin(), total.vertices().end(), it->first))
      it = carriers.erase(it);
    else
      ++it;
  }
  return Triangulation(t.base(), std::move(total), std::move(carriers));
}

Triangulation compose(const Triangulation& outer, const Triangulation& inner) {
  if (!(outer.base() == inner.total()))
    throw std::invalid_argument("compose: outer base differs from inner subdivision");
  std::map<Vertex, Face> carriers;
  for (const auto& [v, f] : outer.vertex_carriers()) carriers.emplace(v, carrier(inner, f));
  return Triangulation(inner.base(), outer.total(), std::move(carriers));
}

Triangulation iterated_sd(const Face& v, unsigned k) {
  Triangulation t = trivial(v);
  for (unsigned i = 0; i < k; ++i) t = barycentric(t);
  return t;
}

Triangulation random_triangulation(const Face& v, std::size_t steps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Triangulation t = trivial(v);
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<Face> eligible;
    for (const auto& g : t.total().faces())
      if (g.size() >= 2) eligible.push_back(g);
    if (eligible.empty()) break;
    const std::size_t pick = static_cast<std::size_t>(rng() % eligible.size());
    t = stellar(t, eligible[pick]);
  }
  return t;
}

// ---------------------------------------------------------------------------

namespace {

struct CarrierMasks {
  std::vector<Vertex> base_vertices;
  std::unordered_map<Vertex, std::uint32_t> vertex_mask;

  explicit CarrierMasks(const Triangulation& t) : base_vertices(t.base().vertices()) {
    if (base_vertices.size() > 20) throw std::length_error("more than 20 base vertices");
    for (const auto& [v, f] : t.vertex_carriers()) vertex_mask.emplace(v, mask_of(f));
  }
  std::uint32_t mask_of(const Face& f) const {
    std::uint32_t m = 0;
    for (Vertex v : f) {
      auto it = std::lower_bound(base_vertices.begin(), base_vertices.end(), v);
      if (it == base_vertices.end() || *it != v)
        throw std::invalid_argument(std::to_string(v) + " is not a base vertex");
      m |= 1u << (it - base_vertices.begin());
    }
    return m;
  }
  std::uint32_t face_mask(const Face& g) const {
    std::uint32_t m = 0;
    for (Vertex v : g) m |= vertex_mask.at(v);
    return m;
  }
};

}  // namespace

void validate(const Triangulation& t) {
  const auto& base = t.base();
  const auto& faces = t.total().faces();
  if (base.is_void() != t.total().is_void()) throw InvalidTriangulation("exactly one of base and subdivision is void");
  if (base.is_void()) return;
  const CarrierMasks masks(t);

  std::vector<std::uint32_t> cm(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    cm[i] = masks.face_mask(faces[i]);
    const Face c = carrier(t, faces[i]);
    if (!base.contains(c))
      throw InvalidTriangulation("carrier " + to_string(c) + " of face " + to_string(faces[i]) + " is not a base face");
  }

  auto index_of = [&](const Face& f) {
    return static_cast<std::size_t>(std::lower_bound(faces.begin(), faces.end(), f, canonical_less) - faces.begin());
  };
  // covers[i]: carrier masks of the faces one vertex larger than faces[i].
  std::vector<std::vector<std::uint32_t>> covers(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (Vertex v : faces[i]) covers[index_of(face_without(faces[i], v))].push_back(cm[i]);

  for (const auto& f : base.faces()) {
    const std::uint32_t fm = masks.mask_of(f);
    bool top = false;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if ((cm[i] & ~fm) != 0) continue;
      if (faces[i].size() > f.size())
        throw InvalidTriangulation("restriction to " + to_string(f) + " contains the oversized face " +
                                   to_string(faces[i]));
      if (faces[i].size() == f.size()) {
        top = true;
        continue;
      }
      const bool extends =
          std::any_of(covers[i].begin(), covers[i].end(), [&](std::uint32_t c) { return (c & ~fm) == 0; });
      if (!extends)
        throw InvalidTriangulation("restriction to " + to_string(f) + " is not pure: " + to_string(faces[i]) +
                                   " is maximal");
    }
    if (!top) throw InvalidTriangulation("restriction to " + to_string(f) + " has dimension below " +
                                         std::to_string(static_cast<long>(f.size()) - 1));
  }

  for (Vertex b : base.vertices()) {
    std::size_t preimages = 0;
    for (const auto& [v, c] : t.vertex_carriers())
      if (c.size() == 1 && c[0] == b) ++preimages;
    if (preimages != 1)
      throw InvalidTriangulation("base vertex " + std::to_string(b) + " has " + std::to_string(preimages) +
                                 " preimages");
  }
}

// ---------------------------------------------------------------------------

RestrictionTable::RestrictionTable(const Triangulation& t) {
  const CarrierMasks masks(t);
  base_vertices_ = masks.base_vertices;
  const auto& faces = t.total().faces();
  std::size_t max_size = 0;
  for (const auto& g : faces) max_size = std::max(max_size, g.size());
  width_ = max_size + 1;
  const std::size_t subsets = std::size_t{1} << base_vertices_.size();
  counts_.assign(subsets * width_, 0);
  for (const auto& g : faces) ++counts_[masks.face_mask(g) * width_ + g.size()];
  // Zeta transform over subsets: exact-carrier counts become restriction counts.
  for (std::size_t bit = 0; bit < base_vertices_.size(); ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t m = 0; m < subsets; ++m) {
      if (!(m & b)) continue;
      for (std::size_t s = 0; s < width_; ++s) counts_[m * width_ + s] += counts_[(m ^ b) * width_ + s];
    }
  }
}

std::uint32_t RestrictionTable::mask_of(const Face& base_face) const {
  std::uint32_t m = 0;
  for (Vertex v : base_face) {
    auto it = std::lower_bound(base_vertices_.begin(), base_vertices_.end(), v);
    if (it == base_vertices_.end() || *it != v) throw std::invalid_argument(std::to_string(v) + " is not a base vertex");
    m |= 1u << (it - base_vertices_.begin());
  }
  return m;
}

Face RestrictionTable::face_of(std::uint32_t mask) const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < base_vertices_.size(); ++i)
    if (mask & (1u << i)) out.push_back(base_vertices_[i]);
  return Face(std::move(out));
}

std::vector<std::size_t> RestrictionTable::f_vector(std::uint32_t mask) const {
  std::vector<std::size_t> f(counts_.begin() + static_cast<std::ptrdiff_t>(mask * width_),
                             counts_.begin() + static_cast<std::ptrdiff_t>((mask + 1) * width_));
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

// ---------------------------------------------------------------------------

FTriangle::FTriangle(std::vector<std::vector<std::uint64_t>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("f-triangle needs at least the row j = 0");
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const auto& row = rows_[j];
    if (row.size() != j + 1) throw std::invalid_argument("f-triangle row " + std::to_string(j) + " has wrong length");
    if (row[0] != 1) throw std::invalid_argument("f-triangle needs f(0, j) = 1");
    if (row[j] < 1) throw std::invalid_argument("f-triangle needs f(j, j) >= 1");
    if (j >= 1 && row[1] < j) throw std::invalid_argument("f-triangle needs f(1, j) >= j");
  }
}

std::uint64_t FTriangle::operator()(std::size_t i, std::size_t j) const {
  if (j >= rows_.size() || i > j) throw std::out_of_range("f-triangle index out of range");
  return rows_[j][i];
}

NotUniform::NotUniform(Face first, Face second)
    : std::domain_error("restrictions to " + to_string(first) + " and " + to_string(second) +
                        " have different f-vectors"),
      first_(std::move(first)),
      second_(std::move(second)) {}

FTriangle f_triangle_of(const Triangulation& t) {
  if (t.base().is_void() || !t.base().is_pure()) throw std::invalid_argument("f-triangle needs a pure base complex");
  const std::size_t n = static_cast<std::size_t>(t.base().dimension() + 1);
  const RestrictionTable table(t);
  std::vector<std::vector<std::uint64_t>> rows(n + 1);
  std::vector<Face> witness(n + 1);
  std::vector<bool> seen(n + 1, false);
  for (const auto& f : t.base().faces()) {
    auto fv = table.f_vector(table.mask_of(f));
    if (fv.size() > f.size() + 1)
      throw InvalidTriangulation("restriction to " + to_string(f) + " has dimension above " +
                                 std::to_string(static_cast<long>(f.size()) - 1));
    std::vector<std::uint64_t> row(f.size() + 1, 0);
    std::copy(fv.begin(), fv.end(), row.begin());
    const std::size_t j = f.size();
    if (!seen[j]) {
      rows[j] = std::move(row);
      witness[j] = f;
      seen[j] = true;
    } else if (rows[j] != row) {
      throw NotUniform(witness[j], f);
    }
  }
  return FTriangle(std::move(rows));
}

UniformKind UniformKind::parse(std::string_view text) {
  if (text == "trivial") return trivial();
  if (text == "sd") return barycentric();
  if (text.starts_with("esd:")) {
    const std::string digits(text.substr(4));
    if (!digits.empty() && digits.size() < 6 && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      const unsigned r = static_cast<unsigned>(std::stoul(digits));
      if (r >= 1) return edgewise(r);
    }
  }
  throw std::invalid_argument("unknown subdivision kind '" + std::string(text) + "' (expected trivial, sd or esd:R)");
}

std::string UniformKind::name() const {
  switch (kind) {
    case Kind::kTrivial: return "trivial";
    case Kind::kBarycentric: return "sd";
    case Kind::kEdgewise: return "esd:" + std::to_string(r);
  }
  return "?";
}

Triangulation subdivide(const Triangulation& t, UniformKind kind) {
  switch (kind.kind) {
    case UniformKind::Kind::kTrivial: return t;
    case UniformKind::Kind::kBarycentric: return barycentric(t);
    case UniformKind::Kind::kEdgewise: return edgewise(t, kind.r);
  }
  return t;
}

FTriangle f_triangle(UniformKind kind, std::size_t n) {
  static std::mutex mu;
  static std::map<std::tuple<int, unsigned, std::size_t>, FTriangle> memo;
  const auto key = std::make_tuple(static_cast<int>(kind.kind), kind.r, n);
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 1);
  FTriangle out = f_triangle_of(subdivide(trivial(Face(v)), kind));
  std::lock_guard lock(mu);
  memo.emplace(key, out);
  return out;
}

}  // namespace lhv
