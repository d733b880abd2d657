#pragma once

// The three tables of d-polynomials: d_{n,k} (table 1), d_{n,1,j} (table 2)
// and d_{n,2,j} (table 3), regenerated from enumeration.

#include <cstddef>
#include <string>
#include <vector>

#include "lhv/io.hpp"
#include "lhv/poly.hpp"

namespace lhv {

struct PolyTable {
  std::string title;
  std::string column_prefix;  // "k" or "j"
  std::size_t columns = 0;    // column indices 0..columns-1
  struct Row {
    std::size_t n;
    std::vector<IntPolynomial> cells;  // cells[i] is column i; rows may be short
  };
  std::vector<Row> rows;
};

/// which in {1, 2, 3}; n_max <= 8. Throws std::invalid_argument otherwise.
PolyTable build_table(int which, std::size_t n_max);

/// Aligned columns, polynomials in the compact table notation.
std::string render_text(const PolyTable& t);
/// Header "n,k=0,k=1,..." then one line per row; missing cells left empty.
std::string render_csv(const PolyTable& t);
Json render_json(const PolyTable& t);

}  // namespace lhv
