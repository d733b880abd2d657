#pragma once

// JSON encodings of the library's values and the optional CLI config file.
//
//   polynomial     ["c0", "c1", ...]            decimal strings (integers accepted on input)
//   complex        {"vertices": [..], "facets": [[..], ..], "labels": {"v": "text"}}
//   triangulation  {"base": complex, "total": complex, "carrier": {"v": [base ids]}}
//   c-matrix       {"n": n, "c": [[k, j, value], ...]}
//   f-triangle     {"n": n, "f": [[f(0,0)], [f(0,1), f(1,1)], ...]}

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "lhv/complex.hpp"
#include "lhv/localh.hpp"
#include "lhv/triangulate.hpp"

namespace lhv {

using Json = nlohmann::json;

/// Input that does not match a schema; pointer() is a JSON pointer to the
/// offending value.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string pointer, const std::string& message);
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

Json to_json(const IntPolynomial& f);
Json to_json(const SimplicialComplex& k);
Json to_json(const Triangulation& t);
Json to_json(const CoefficientMatrix& c);
Json to_json(const FTriangle& f);

IntPolynomial polynomial_from_json(const Json& j, const std::string& pointer = "");
SimplicialComplex complex_from_json(const Json& j, const std::string& pointer = "");
/// Also runs validate(); violations surface as SchemaError at the root.
Triangulation triangulation_from_json(const Json& j, const std::string& pointer = "");

/// Parses a file; syntax errors become SchemaError with an empty pointer.
Json read_json_file(const std::string& path);

/// Optional config file:
///   {"prng": "mt19937_64", "enumeration_bound": 8, "format": "text"}
/// Every key is optional. The only supported generator is mt19937_64.
struct Config {
  std::string prng = "mt19937_64";
  std::size_t enumeration_bound = 8;
  std::string format = "text";
};
Config config_from_json(const Json& j);
Config load_config(const std::string& path);

}  // namespace lhv
