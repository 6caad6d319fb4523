#pragma once

// File formats.
//
//   Complex JSON   {"generators": [[int,...],...]} or {"sets": [[int,...],...]}
//   CW JSON        {"cells": [{"id": int, "attach": [int,...]},...]}
//   Graph JSON     {"vertices": int, "edges": [[int,int],...]}
//   Matrix JSON    {"n": int, "labels": [str,...], "entries": [[str,...],...]}
//                  (big integers as decimal strings, rationals as "p/q")
//   Spectrum JSON  {"eigenvalues": [float,...], "tol": float}
//   Polynomial     {"coeffs": [str,...]} ascending
//   RingReport     [{"op": str, "pass": bool, "first_diff": [i,j] | null},...]
//   Zeta grid CSV  header re,im,abs,arg; row-major, im outer
//
// Explicit set lists are closure-verified on load.  All writers are
// deterministic: same input, same bytes.

#include "kount/complex.hpp"
#include "kount/cw.hpp"
#include "kount/exact.hpp"
#include "kount/graph.hpp"
#include "kount/matrix.hpp"
#include "kount/ring.hpp"
#include "kount/spectra.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace kount::io {

using nlohmann::json;

inline json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return j;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

namespace detail {

inline std::vector<Simplex> simplex_list(const json& arr, const char* what) {
  if (!arr.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<Simplex> out;
  for (const json& item : arr) {
    if (!item.is_array() || item.empty())
      throw std::invalid_argument(std::string(what) + " entries must be nonempty arrays");
    std::vector<int> verts;
    for (const json& v : item) {
      if (!v.is_number_integer())
        throw std::invalid_argument("vertex labels must be positive integers");
      verts.push_back(v.get<int>());
    }
    out.emplace_back(std::move(verts));
  }
  return out;
}

}  // namespace detail

// ---- complexes --------------------------------------------------------

inline json complex_to_json(const SimplicialComplex& g) {
  json sets = json::array();
  for (const Simplex& s : g.simplices()) sets.push_back(s.vertices());
  return json{{"sets", sets}};
}

inline SimplicialComplex complex_from_json(const json& j) {
  if (j.contains("generators"))
    return SimplicialComplex::closure(detail::simplex_list(j["generators"], "generators"));
  if (j.contains("sets"))
    return SimplicialComplex::from_sets(detail::simplex_list(j["sets"], "sets"));
  throw std::invalid_argument("complex JSON needs a \"generators\" or \"sets\" key");
}

inline json cw_to_json(const CWComplex& cw) {
  json cells = json::array();
  for (const auto& c : cw.cells()) cells.push_back(json{{"id", c.id}, {"attach", c.attach}});
  return json{{"cells", cells}};
}

inline CWComplex cw_from_json(const json& j) {
  if (!j.contains("cells") || !j["cells"].is_array())
    throw std::invalid_argument("CW JSON needs a \"cells\" array");
  std::vector<std::pair<int, std::vector<int>>> cells;
  for (const json& c : j["cells"]) {
    if (!c.contains("id") || !c["id"].is_number_integer())
      throw std::invalid_argument("each cell needs an integer \"id\"");
    std::vector<int> attach;
    if (c.contains("attach"))
      for (const json& a : c["attach"]) attach.push_back(a.get<int>());
    cells.emplace_back(c["id"].get<int>(), std::move(attach));
  }
  return CWComplex::from_cells(cells);
}

using AnyComplex = std::variant<SimplicialComplex, CWComplex>;

inline AnyComplex any_complex_from_json(const json& j) {
  if (j.contains("cells")) return cw_from_json(j);
  return complex_from_json(j);
}

inline AnyComplex load_complex(const std::string& path) {
  return any_complex_from_json(parse_json(read_file(path)));
}

inline Graph graph_from_json(const json& j) {
  if (!j.contains("vertices") || !j["vertices"].is_number_integer())
    throw std::invalid_argument("graph JSON needs integer \"vertices\"");
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges"))
    for (const json& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("edges must be [a,b] pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  return Graph(j["vertices"].get<int>(), edges);
}

// ---- matrices ---------------------------------------------------------

inline std::vector<std::string> simplex_labels(const SimplicialComplex& g) {
  std::vector<std::string> out;
  out.reserve(g.size());
  for (const Simplex& s : g.simplices()) out.push_back(s.str());
  return out;
}

inline std::vector<std::string> cell_labels(const CWComplex& cw) {
  std::vector<std::string> out;
  out.reserve(cw.size());
  for (const auto& c : cw.cells()) out.push_back("cell " + std::to_string(c.id));
  return out;
}

template <class T>
json matrix_to_json(const Matrix<T>& m, const std::vector<std::string>& labels = {}) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.order(); ++j) row.push_back(to_decimal(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"n", m.order()}, {"labels", labels}, {"entries", rows}};
}

inline IntMatrix int_matrix_from_json(const json& j) {
  const std::size_t n = j.at("n").get<std::size_t>();
  std::vector<Int> entries;
  entries.reserve(n * n);
  for (const json& row : j.at("entries"))
    for (const json& v : row) entries.push_back(parse_int(v.get<std::string>()));
  return IntMatrix(n, std::move(entries));
}

template <class T>
std::string matrix_to_csv(const Matrix<T>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (j) out += ",";
      out += to_decimal(m(i, j));
    }
    out += "\n";
  }
  return out;
}

// ---- spectra ----------------------------------------------------------

inline json spectrum_to_json(const Spectrum& s) {
  return json{{"eigenvalues", s.eigenvalues}, {"tol", s.tol}};
}

inline json polynomial_to_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const Int& c : p.coeffs) coeffs.push_back(to_decimal(c));
  return json{{"coeffs", coeffs}};
}

inline std::string format_double(double v, const char* fmt = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

inline std::string zeta_grid_to_csv(const ZetaGrid& grid) {
  std::string out = "re,im,abs,arg\n";
  for (std::size_t r = 0; r < grid.im_values.size(); ++r)
    for (std::size_t c = 0; c < grid.re_values.size(); ++c) {
      out += format_double(grid.re_values[c], "%.6g");
      out += ",";
      out += format_double(grid.im_values[r], "%.6g");
      out += ",";
      out += format_double(grid.abs_values[grid.index(r, c)]);
      out += ",";
      out += format_double(grid.arg_values[grid.index(r, c)]);
      out += "\n";
    }
  return out;
}

inline std::string histogram_to_csv(const Histogram& h) {
  std::string out = "bin_lo,bin_hi,mass\n";
  const double width = (h.hi - h.lo) / static_cast<double>(h.mass.size());
  for (std::size_t i = 0; i < h.mass.size(); ++i) {
    out += format_double(h.lo + width * static_cast<double>(i));
    out += ",";
    out += format_double(h.lo + width * static_cast<double>(i + 1));
    out += ",";
    out += format_double(h.mass[i]);
    out += "\n";
  }
  return out;
}

// ---- ring reports -----------------------------------------------------

inline json ring_report_to_json(const RingReport& r) {
  json j{{"op", r.op}, {"pass", r.pass}, {"first_diff", nullptr}};
  if (r.first_diff) j["first_diff"] = {r.first_diff->first, r.first_diff->second};
  return j;
}

inline json ring_reports_to_json(const std::vector<RingReport>& reports) {
  json arr = json::array();
  for (const RingReport& r : reports) arr.push_back(ring_report_to_json(r));
  return arr;
}

inline std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace kount::io
