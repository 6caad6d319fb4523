#pragma once

// Simple undirected graphs and their Whitney (clique) complexes, plus the
// parametrized Gauss-Bonnet and Poincare-Hopf identities which hold exactly
// in rational arithmetic:
//
//   f_G(t) = 1 + sum_{vertices} F_{S(x)}(t)
//   f_G(t) = 1 + t * sum_{vertices} f_{S_g(x)}(t),   g locally injective,
//
// where S(x) is the Whitney complex of the unit-sphere subgraph of x and
// S_g(x) keeps only neighbours with smaller g-value.

#include "kount/complex.hpp"
#include "kount/prng.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace kount {

class Graph {
 public:
  Graph() = default;

  // Vertices are 1..n.  Rejects self-loops and duplicate edges.
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
      : n_(vertex_count), adj_(static_cast<std::size_t>(std::max(vertex_count, 0)) + 1) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
      if (a == b) throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
      if (a < 1 || b < 1 || a > n_ || b > n_)
        throw std::invalid_argument("edge endpoint out of range");
      auto key = std::minmax(a, b);
      if (!seen.insert(key).second)
        throw std::invalid_argument("duplicate edge (" + std::to_string(key.first) + "," +
                                    std::to_string(key.second) + ")");
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  int vertex_count() const { return n_; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  bool adjacent(int a, int b) const {
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= n_; ++a)
      for (int b : adj_[a])
        if (a < b) out.emplace_back(a, b);
    return out;
  }

  Graph induced(const std::vector<int>& verts) const {
    // Relabels the kept vertices 1..k in ascending original order.
    std::vector<int> sorted(verts);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::map<int, int> relabel;
    for (std::size_t i = 0; i < sorted.size(); ++i) relabel[sorted[i]] = static_cast<int>(i) + 1;
    std::vector<std::pair<int, int>> kept;
    for (std::size_t i = 0; i < sorted.size(); ++i)
      for (std::size_t j = i + 1; j < sorted.size(); ++j)
        if (adjacent(sorted[i], sorted[j])) kept.emplace_back(relabel[sorted[i]], relabel[sorted[j]]);
    return Graph(static_cast<int>(sorted.size()), kept);
  }

  static constexpr int kMaxWhitneyVertices = 25;

  // Whitney complex: closure of the maximal cliques (Bron-Kerbosch with
  // pivoting).  Desk-scale graphs only.
  SimplicialComplex whitney() const {
    if (n_ > kMaxWhitneyVertices)
      throw std::invalid_argument("clique enumeration limited to " +
                                  std::to_string(kMaxWhitneyVertices) + " vertices");
    std::vector<Simplex> cliques;
    std::vector<int> r, p, x;
    for (int v = 1; v <= n_; ++v) p.push_back(v);
    bron_kerbosch(r, p, x, cliques);
    return SimplicialComplex::closure(cliques);
  }

 private:
  void bron_kerbosch(std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                     std::vector<Simplex>& out) const {
    if (p.empty() && x.empty()) {
      if (!r.empty()) out.push_back(Simplex(r));
      return;
    }
    // Pivot on the vertex with the most candidates among P ∪ X.
    int pivot = 0;
    std::size_t best = 0;
    for (const auto* side : {&p, &x}) {
      for (int u : *side) {
        std::size_t deg = 0;
        for (int v : p)
          if (adjacent(u, v)) ++deg;
        if (pivot == 0 || deg > best) {
          pivot = u;
          best = deg;
        }
      }
    }
    std::vector<int> candidates;
    for (int v : p)
      if (pivot == 0 || !adjacent(pivot, v)) candidates.push_back(v);
    for (int v : candidates) {
      std::vector<int> p2, x2;
      for (int u : p)
        if (adjacent(v, u)) p2.push_back(u);
      for (int u : x)
        if (adjacent(v, u)) x2.push_back(u);
      r.push_back(v);
      bron_kerbosch(r, std::move(p2), std::move(x2), out);
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  }

  int n_ = 0;
  std::vector<std::vector<int>> adj_;
};

// f_G(t) - 1 - sum_x F_{S(x)}(t); zero for every graph and every t.
inline Rat gauss_bonnet_residual(const Graph& g, const Rat& t) {
  const Rat lhs = g.whitney().f_vector().f_eval(t);
  Rat rhs(1);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const SimplicialComplex sphere = g.induced(g.neighbors(v)).whitney();
    rhs += sphere.f_vector().antiderivative_eval(t);
  }
  return lhs - rhs;
}

// f_G(t) - 1 - t * sum_x f_{S_g(x)}(t) for locally injective vertex values g;
// zero for every graph, g, and t.
inline Rat poincare_hopf_residual(const Graph& g, const std::vector<Rat>& values, const Rat& t) {
  if (static_cast<int>(values.size()) != g.vertex_count())
    throw std::invalid_argument("need one value per vertex");
  for (int v = 1; v <= g.vertex_count(); ++v)
    for (int u : g.neighbors(v))
      if (values[u - 1] == values[v - 1])
        throw std::invalid_argument("vertex values must be locally injective");
  const Rat lhs = g.whitney().f_vector().f_eval(t);
  Rat sum(0);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    std::vector<int> below;
    for (int u : g.neighbors(v))
      if (values[u - 1] < values[v - 1]) below.push_back(u);
    sum += g.induced(below).whitney().f_vector().f_eval(t);
  }
  return lhs - Rat(1) - t * sum;
}

// Seeded Erdos-Renyi graph: every pair becomes an edge with probability 1/2
// (one PRNG draw per pair, ascending pair order).
inline Graph random_graph(int vertex_count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int a = 1; a <= vertex_count; ++a)
    for (int b = a + 1; b <= vertex_count; ++b)
      if (rng.uniform(2) == 1) edges.emplace_back(a, b);
  return Graph(vertex_count, edges);
}

}  // namespace kount
