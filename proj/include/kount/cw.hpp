#pragma once

// Discrete CW complexes: an ordered list of cells, each attached to a set of
// earlier cells.  The build order is a filtration; the closure of a cell is
// itself plus the closures of everything it attaches to.  Every simplicial
// complex embeds by attaching each simplex to its facets.

#include "kount/complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace kount {

class CWComplex {
 public:
  struct Cell {
    int id = 0;
    std::vector<int> attach;          // ids of earlier cells
    int dim = 0;                      // 0 if attach empty, else 1 + max dim over attach
    std::vector<std::size_t> closure; // sorted ranks, includes the cell itself
  };

  CWComplex() = default;

  // Cells in build order; attach sets may only reference earlier ids.
  static CWComplex from_cells(const std::vector<std::pair<int, std::vector<int>>>& cells) {
    CWComplex out;
    for (const auto& [id, attach] : cells) out.append(id, attach);
    return out;
  }

  // Simplicial complex as a CW complex: one cell per simplex in canonical
  // order, attached to its facets.  Reproduces |W^-(x)| = 2^{|x|} - 1.
  static CWComplex embed(const SimplicialComplex& g) {
    CWComplex out;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Simplex& s = g.simplex(i);
      std::vector<int> attach;
      if (s.card() > 1) {
        const auto& verts = s.vertices();
        for (std::size_t drop = 0; drop < verts.size(); ++drop) {
          std::vector<int> facet;
          for (std::size_t j = 0; j < verts.size(); ++j)
            if (j != drop) facet.push_back(verts[j]);
          attach.push_back(static_cast<int>(*g.rank(Simplex(std::move(facet)))) + 1);
        }
      }
      out.append(static_cast<int>(i) + 1, attach);
    }
    return out;
  }

  // Returns a copy with one new cell attached to the given ids.
  CWComplex attach_cell(const std::vector<int>& attach_ids, int new_id = 0) const {
    CWComplex out(*this);
    if (new_id == 0) {
      new_id = 1;
      for (const Cell& c : cells_) new_id = std::max(new_id, c.id + 1);
    }
    out.append(new_id, attach_ids);
    return out;
  }

  std::size_t size() const { return cells_.size(); }
  const Cell& cell(std::size_t i) const { return cells_[i]; }
  const std::vector<Cell>& cells() const { return cells_; }

  const std::vector<std::size_t>& closure_ranks(std::size_t i) const { return cells_[i].closure; }
  int omega(std::size_t i) const { return cells_[i].dim % 2 == 0 ? 1 : -1; }

  std::size_t rank_of_id(int id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end())
      throw std::invalid_argument("unknown cell id " + std::to_string(id));
    return it->second;
  }

  FVector f_vector() const {
    FVector f;
    for (const Cell& c : cells_) {
      if (f.counts.size() <= static_cast<std::size_t>(c.dim)) f.counts.resize(c.dim + 1, 0);
      ++f.counts[c.dim];
    }
    return f;
  }

 private:
  void append(int id, const std::vector<int>& attach_ids) {
    if (by_id_.count(id)) throw std::invalid_argument("duplicate cell id " + std::to_string(id));
    Cell c;
    c.id = id;
    c.attach = attach_ids;
    std::sort(c.attach.begin(), c.attach.end());
    c.attach.erase(std::unique(c.attach.begin(), c.attach.end()), c.attach.end());
    std::vector<std::size_t> closure;
    int dim = 0;
    for (int a : c.attach) {
      const std::size_t r = rank_of_id(a);  // throws on forward/unknown references
      dim = std::max(dim, cells_[r].dim + 1);
      closure.insert(closure.end(), cells_[r].closure.begin(), cells_[r].closure.end());
    }
    c.dim = c.attach.empty() ? 0 : dim;
    closure.push_back(cells_.size());
    std::sort(closure.begin(), closure.end());
    closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
    c.closure = std::move(closure);
    by_id_.emplace(id, cells_.size());
    cells_.push_back(std::move(c));
  }

  std::vector<Cell> cells_;
  std::map<int, std::size_t> by_id_;
};

}  // namespace kount
