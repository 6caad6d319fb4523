#pragma once

// Shared test helpers: reference-matrix loading, independent oracles, and
// seeded random inputs.

#include "kount/complex.hpp"
#include "kount/constructions.hpp"
#include "kount/cw.hpp"
#include "kount/matrix.hpp"
#include "kount/prng.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace kount::test {

inline std::string golden_dir() { return KOUNT_GOLDEN_DIR; }

inline std::string golden_path(const std::string& name) { return golden_dir() + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Reference matrices are whitespace-separated integer rows.
inline IntMatrix read_reference_matrix(const std::string& name) {
  std::istringstream in(read_file(golden_path(name)));
  std::vector<std::vector<long long>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::vector<long long> row;
    long long v;
    while (ss >> v) row.push_back(v);
    rows.push_back(std::move(row));
  }
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = Int(rows[i][j]);
  return m;
}

// Cofactor-expansion determinant: the slow independent oracle for small
// matrices.
inline Int naive_det(const IntMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return Int(1);
  if (n == 1) return m(0, 0);
  Int det(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const Int term = m(0, j) * naive_det(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

// The octahedron-with-cell CW complex from the worked examples.
inline CWComplex octahedron_with_cell() {
  const SimplicialComplex oct = cross_polytope_complex(2);
  CWComplex cw = CWComplex::embed(oct);
  std::vector<int> all;
  for (int i = 1; i <= static_cast<int>(oct.size()); ++i) all.push_back(i);
  return cw.attach_cell(all);
}

inline CWComplex c4_with_disc() {
  CWComplex cw = CWComplex::embed(cycle_complex(4));
  return cw.attach_cell({1, 2, 3, 4, 5, 6, 7, 8});
}

// Deterministic stream of random complexes for property tests.
struct RandomComplexStream {
  Rng master;
  int max_vertices;
  int max_generators;

  RandomComplexStream(std::uint64_t seed, int max_n, int max_m)
      : master(seed), max_vertices(max_n), max_generators(max_m) {}

  SimplicialComplex next() {
    const int n = 1 + static_cast<int>(master.uniform(max_vertices));
    const int m = 1 + static_cast<int>(master.uniform(max_generators));
    return random_complex(n, m, master.next());
  }
};

}  // namespace kount::test
