#include "lhv/io.hpp"

#include <fstream>
#include <limits>

#include "lhv/perm.hpp"

namespace lhv {

SchemaError::SchemaError(std::string pointer, const std::string& message)
    : std::runtime_error((pointer.empty() ? std::string("/") : pointer) + ": " + message),
      pointer_(std::move(pointer)) {}

namespace {

std::string child(const std::string& pointer, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') escaped += "~0";
    else if (c == '/') escaped += "~1";
    else escaped += c;
  }
  return pointer + "/" + escaped;
}

std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

const Json& member(const Json& j, const std::string& key, const std::string& pointer) {
  if (!j.is_object()) throw SchemaError(pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(child(pointer, key), "missing required member");
  return *it;
}

Vertex vertex_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer()) throw SchemaError(pointer, "expected an integer vertex id");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<Vertex>::min() || v > std::numeric_limits<Vertex>::max())
    throw SchemaError(pointer, "vertex id out of range");
  return static_cast<Vertex>(v);
}

Vertex vertex_key(const std::string& key, const std::string& pointer) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || key.empty() || v < std::numeric_limits<Vertex>::min() ||
      v > std::numeric_limits<Vertex>::max())
    throw SchemaError(pointer, "object key '" + key + "' is not a vertex id");
  return static_cast<Vertex>(v);
}

Face face_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_array()) throw SchemaError(pointer, "expected an array of vertex ids");
  std::vector<Vertex> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(vertex_from_json(j[i], child(pointer, i)));
  try {
    return Face(std::move(v));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(pointer, e.what());
  }
}

Json face_to_json(const Face& f) { return Json(f.vertices()); }

}  // namespace

Json to_json(const IntPolynomial& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(c.get_str());
  return out;
}

Json to_json(const SimplicialComplex& k) {
  Json out;
  out["vertices"] = k.vertices();
  Json facets = Json::array();
  for (const auto& f : k.facets()) facets.push_back(face_to_json(f));
  out["facets"] = std::move(facets);
  if (!k.labels().empty()) {
    Json labels = Json::object();
    for (const auto& [v, text] : k.labels()) labels[std::to_string(v)] = text;
    out["labels"] = std::move(labels);
  }
  return out;
}

Json to_json(const Triangulation& t) {
  Json out;
  out["base"] = to_json(t.base());
  out["total"] = to_json(t.total());
  Json carriers = Json::object();
  for (const auto& [v, f] : t.vertex_carriers()) carriers[std::to_string(v)] = face_to_json(f);
  out["carrier"] = std::move(carriers);
  return out;
}

Json to_json(const CoefficientMatrix& c) {
  Json entries = Json::array();
  for (std::size_t k = 0; k <= c.n(); ++k)
    for (std::size_t j = 0; j + k <= c.n(); ++j)
      if (c(k, j) != 0) entries.push_back(Json::array({k, j, c(k, j).get_str()}));
  return Json{{"n", c.n()}, {"c", std::move(entries)}};
}

Json to_json(const FTriangle& f) { return Json{{"n", f.n()}, {"f", f.rows()}}; }

IntPolynomial polynomial_from_json(const Json& j, const std::string& pointer) {
  if (j.is_string()) {
    try {
      return parse_polynomial(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(pointer, e.what());
    }
  }
  if (!j.is_array()) throw SchemaError(pointer, "expected a coefficient array");
  std::vector<Integer> c;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& e = j[i];
    if (e.is_number_integer()) {
      c.emplace_back(std::to_string(e.get<long long>()));
    } else if (e.is_string()) {
      Integer z;
      const std::string s = e.get<std::string>();
      if (s.empty() || z.set_str(s, 10) != 0) throw SchemaError(child(pointer, i), "not a decimal integer");
      c.push_back(z);
    } else {
      throw SchemaError(child(pointer, i), "expected a decimal string");
    }
  }
  return IntPolynomial(std::move(c));
}

SimplicialComplex complex_from_json(const Json& j, const std::string& pointer) {
  const Json& facets_json = member(j, "facets", pointer);
  const std::string fp = child(pointer, "facets");
  if (!facets_json.is_array()) throw SchemaError(fp, "expected an array of faces");
  std::vector<Face> facets;
  for (std::size_t i = 0; i < facets_json.size(); ++i) facets.push_back(face_from_json(facets_json[i], child(fp, i)));
  SimplicialComplex k = SimplicialComplex::from_facets(std::move(facets));

  if (auto it = j.find("vertices"); it != j.end()) {
    const std::string vp = child(pointer, "vertices");
    if (!it->is_array()) throw SchemaError(vp, "expected an array of vertex ids");
    std::vector<Vertex> v;
    for (std::size_t i = 0; i < it->size(); ++i) v.push_back(vertex_from_json((*it)[i], child(vp, i)));
    std::sort(v.begin(), v.end());
    if (v != k.vertices()) throw SchemaError(vp, "vertex list differs from the union of the facets");
  }
  if (auto it = j.find("labels"); it != j.end()) {
    const std::string lp = child(pointer, "labels");
    if (!it->is_object()) throw SchemaError(lp, "expected an object");
    std::map<Vertex, std::string> labels;
    for (const auto& [key, value] : it->items()) {
      if (!value.is_string()) throw SchemaError(child(lp, key), "expected a string");
      labels[vertex_key(key, child(lp, key))] = value.get<std::string>();
    }
    k = k.with_labels(std::move(labels));
  }
  return k;
}

Triangulation triangulation_from_json(const Json& j, const std::string& pointer) {
  SimplicialComplex base = complex_from_json(member(j, "base", pointer), child(pointer, "base"));
  SimplicialComplex total = complex_from_json(member(j, "total", pointer), child(pointer, "total"));
  const Json& cj = member(j, "carrier", pointer);
  const std::string cp = child(pointer, "carrier");
  if (!cj.is_object()) throw SchemaError(cp, "expected an object keyed by vertex id");
  std::map<Vertex, Face> carriers;
  for (const auto& [key, value] : cj.items()) {
    const Vertex v = vertex_key(key, child(cp, key));
    Face f = face_from_json(value, child(cp, key));
    if (!std::binary_search(total.vertices().begin(), total.vertices().end(), v))
      throw SchemaError(child(cp, key), "not a vertex of the subdivision");
    if (f.empty() || !base.contains(f)) throw SchemaError(child(cp, key), "carrier must be a nonempty base face");
    carriers.emplace(v, std::move(f));
  }
  for (Vertex v : total.vertices())
    if (!carriers.count(v)) throw SchemaError(child(cp, std::to_string(v)), "missing carrier");
  Triangulation t(std::move(base), std::move(total), std::move(carriers));
  try {
    validate(t);
  } catch (const InvalidTriangulation& e) {
    throw SchemaError(pointer, e.what());
  }
  return t;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", path + ": " + e.what());
  }
}

Config config_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("", "config must be an object");
  Config c;
  for (const auto& [key, value] : j.items()) {
    const std::string p = child("", key);
    if (key == "prng") {
      if (!value.is_string() || value.get<std::string>() != "mt19937_64")
        throw SchemaError(p, "only \"mt19937_64\" is supported");
      c.prng = value.get<std::string>();
    } else if (key == "enumeration_bound") {
      if (!value.is_number_unsigned() || value.get<std::size_t>() > kMaxEnumeration)
        throw SchemaError(p, "expected an integer in [0, " + std::to_string(kMaxEnumeration) + "]");
      c.enumeration_bound = value.get<std::size_t>();
    } else if (key == "format") {
      if (!value.is_string() || (value != "text" && value != "json" && value != "csv"))
        throw SchemaError(p, "expected \"text\", \"json\" or \"csv\"");
      c.format = value.get<std::string>();
    } else {
      throw SchemaError(p, "unknown config key");
    }
  }
  return c;
}

Config load_config(const std::string& path) { return config_from_json(read_json_file(path)); }

}  // namespace lhv
