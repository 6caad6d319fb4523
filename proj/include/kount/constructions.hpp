#pragma once

// Standard complexes, joins, seeded random complexes, and barycentric
// refinement.

#include "kount/complex.hpp"
#include "kount/graph.hpp"
#include "kount/prng.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace kount {

inline SimplicialComplex point_complex() { return SimplicialComplex::closure({Simplex{1}}); }

// Two isolated vertices (the 0-sphere); joining with it suspends a complex.
inline SimplicialComplex two_point_complex() {
  return SimplicialComplex::closure({Simplex{1}, Simplex{2}});
}

// Whitney complex of the cycle graph C_n (n >= 3).  Built directly; for
// n = 3 the cycle is a triangle, so the 2-simplex is included.
inline SimplicialComplex cycle_complex(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  if (n == 3) return SimplicialComplex::closure({Simplex{1, 2, 3}});
  std::vector<Simplex> gens;
  for (int i = 1; i < n; ++i) gens.push_back(Simplex{i, i + 1});
  gens.push_back(Simplex{1, n});
  return SimplicialComplex::closure(gens);
}

// All nonempty subsets of {1..n}.
inline SimplicialComplex complete_complex(int n) {
  if (n < 1) throw std::invalid_argument("complete complex needs at least 1 vertex");
  std::vector<int> all;
  for (int i = 1; i <= n; ++i) all.push_back(i);
  return SimplicialComplex::closure({Simplex(all)});
}

// Star graph with n spikes: center 1, leaves 2..n+1.
inline SimplicialComplex star_complex(int spikes) {
  if (spikes < 1) throw std::invalid_argument("star needs at least 1 spike");
  std::vector<Simplex> gens;
  for (int i = 2; i <= spikes + 1; ++i) gens.push_back(Simplex{1, i});
  return SimplicialComplex::closure(gens);
}

// Boundary of the (d+1)-dimensional cross polytope: 2(d+1) vertices in
// opposite pairs (i, 2(d+1)+1-i); top cells pick one vertex per pair.
// d = 2 is the octahedron (26 sets, f = (6,12,8)).
inline SimplicialComplex cross_polytope_complex(int d) {
  if (d < 0) throw std::invalid_argument("cross polytope dimension must be >= 0");
  const int pairs = d + 1;
  std::vector<Simplex> gens;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    std::vector<int> cell;
    for (int p = 0; p < pairs; ++p)
      cell.push_back(mask & (1u << p) ? 2 * pairs - p : p + 1);
    gens.push_back(Simplex(std::move(cell)));
  }
  return SimplicialComplex::closure(gens);
}

// Join: G ∪ H' ∪ {x ∪ y}, with H relabeled past G's largest label.
inline SimplicialComplex join(const SimplicialComplex& g, const SimplicialComplex& h) {
  const int offset = g.max_label();
  std::vector<Simplex> sets;
  for (const Simplex& x : g.simplices()) sets.push_back(x);
  for (const Simplex& y : h.simplices()) sets.push_back(y.shifted(offset));
  for (const Simplex& x : g.simplices())
    for (const Simplex& y : h.simplices()) sets.push_back(x.union_with(y.shifted(offset)));
  return SimplicialComplex::from_sets(std::move(sets));
}

inline SimplicialComplex suspension(const SimplicialComplex& g) {
  return join(g, two_point_complex());
}

// Seeded random complex: m times draw k uniform in {1..n}, then k vertices
// from {1..n} with replacement (deduplicated), and close the generators.
inline SimplicialComplex random_complex(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 1) throw std::invalid_argument("random complex needs n >= 1 and m >= 1");
  Rng rng(seed);
  std::vector<Simplex> gens;
  for (int j = 0; j < m; ++j) {
    const int k = 1 + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(n)));
    std::vector<int> verts;
    for (int i = 0; i < k; ++i)
      verts.push_back(1 + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(n))));
    gens.push_back(Simplex(std::move(verts)));  // Simplex deduplicates
  }
  return SimplicialComplex::closure(gens);
}

// Order complex of the inclusion poset: vertex i+1 per set of G (canonical
// rank), simplices = chains x_1 ⊂ x_2 ⊂ ... .  Preserves dimension.
inline SimplicialComplex barycentric_refinement(const SimplicialComplex& g) {
  if (g.empty()) return SimplicialComplex{};
  std::vector<Simplex> chains;
  std::vector<int> chain;
  // Extending only by strict supersets of the top element enumerates every
  // chain exactly once.
  auto extend = [&](auto&& self, std::size_t top) -> void {
    chain.push_back(static_cast<int>(top) + 1);
    chains.push_back(Simplex(chain));
    for (std::size_t next = top + 1; next < g.size(); ++next)
      if (g.simplex(top).subset_of(g.simplex(next)) && g.simplex(top).card() < g.simplex(next).card())
        self(self, next);
    chain.pop_back();
  };
  for (std::size_t i = 0; i < g.size(); ++i) extend(extend, i);
  return SimplicialComplex::from_sets(std::move(chains));
}

}  // namespace kount
