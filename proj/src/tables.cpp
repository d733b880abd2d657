#include "lhv/tables.hpp"

#include <algorithm>
#include <stdexcept>

#include "lhv/perm.hpp"

namespace lhv {

PolyTable build_table(int which, std::size_t n_max) {
  if (which < 1 || which > 3) throw std::invalid_argument("table must be 1, 2 or 3");
  if (n_max > 8) throw std::invalid_argument("tables are limited to n <= 8");
  PolyTable t;
  t.columns = n_max + 1;
  if (which == 1) {
    t.title = "d_{n,k}(x)";
    t.column_prefix = "k";
    for (std::size_t n = 0; n <= n_max; ++n) {
      PolyTable::Row row{n, {}};
      for (std::size_t k = 0; k <= n; ++k) row.cells.push_back(d_nk(n, k));
      t.rows.push_back(std::move(row));
    }
    return t;
  }
  const std::size_t k = static_cast<std::size_t>(which - 1);
  t.title = "d_{n," + std::to_string(k) + ",j}(x)";
  t.column_prefix = "j";
  for (std::size_t n = std::max<std::size_t>(k, 1); n <= n_max; ++n) {
    PolyTable::Row row{n, {}};
    for (std::size_t j = 0; j <= n; ++j) row.cells.push_back(d_nkj(n, k, j));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string render_text(const PolyTable& t) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"n"};
  for (std::size_t c = 0; c < t.columns; ++c) header.push_back(t.column_prefix + "=" + std::to_string(c));
  grid.push_back(std::move(header));
  for (const auto& row : t.rows) {
    std::vector<std::string> line{std::to_string(row.n)};
    for (const auto& p : row.cells) line.push_back(to_compact_string(p));
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(t.columns + 1, 0);
  for (const auto& line : grid)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());

  std::string out = t.title + "\n";
  for (const auto& line : grid) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) text += "  ";
      text += line[c];
      if (c + 1 < line.size()) text.append(width[c] - line[c].size(), ' ');
    }
    out += text + "\n";
  }
  return out;
}

std::string render_csv(const PolyTable& t) {
  std::string out = "n";
  for (std::size_t c = 0; c < t.columns; ++c) out += "," + t.column_prefix + "=" + std::to_string(c);
  out += "\n";
  for (const auto& row : t.rows) {
    out += std::to_string(row.n);
    for (std::size_t c = 0; c < t.columns; ++c) {
      out += ",";
      if (c < row.cells.size()) out += to_compact_string(row.cells[c]);
    }
    out += "\n";
  }
  return out;
}

Json render_json(const PolyTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json cells = Json::array();
    for (const auto& p : row.cells) cells.push_back(to_json(p));
    rows.push_back(Json{{"n", row.n}, {"cells", std::move(cells)}});
  }
  return Json{{"title", t.title}, {"column", t.column_prefix}, {"rows", std::move(rows)}};
}

}  // namespace lhv
