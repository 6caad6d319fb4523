#pragma once

// Finite abstract simplicial complexes: a set of simplices closed under
// taking nonempty subsets, kept in canonical order (ascending cardinality,
// then lexicographic).  Immutable after construction.

#include "kount/numbers.hpp"
#include "kount/simplex.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace kount {

// f-vector plus the generating function machinery built on it:
//   f_G(t)  = 1 + sum_k f_k t^{k+1}
//   F_G(t)  = t + sum_k f_k t^{k+2}/(k+2)        (antiderivative, F(0) = 0)
//   f'_G(1) = sum_k (k+1) f_k
struct FVector {
  std::vector<std::int64_t> counts;  // counts[k] = number of k-dimensional simplices

  int dim() const { return static_cast<int>(counts.size()) - 1; }

  std::int64_t total() const {
    std::int64_t s = 0;
    for (auto c : counts) s += c;
    return s;
  }

  std::int64_t euler_characteristic() const {
    std::int64_t chi = 0;
    int sign = 1;
    for (auto c : counts) {
      chi += sign * c;
      sign = -sign;
    }
    return chi;
  }

  // Ascending coefficients of f_G: [1, f_0, f_1, ...].
  std::vector<Int> f_polynomial() const {
    std::vector<Int> coeffs;
    coeffs.reserve(counts.size() + 1);
    coeffs.emplace_back(1);
    for (auto c : counts) coeffs.emplace_back(c);
    return coeffs;
  }

  Rat f_eval(const Rat& t) const {
    Rat acc(1);
    Rat power(1);
    for (auto c : counts) {
      power *= t;
      acc += Rat(c) * power;
    }
    return acc;
  }

  Int f_derivative_at_one() const {
    Int s(0);
    for (std::size_t k = 0; k < counts.size(); ++k) s += Int(counts[k]) * Int(k + 1);
    return s;
  }

  Rat antiderivative_eval(const Rat& t) const {
    Rat acc = t;
    Rat power = t;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      power *= t;  // t^{k+2}
      acc += Rat(counts[k]) * power / Rat(k + 2);
    }
    return acc;
  }
};

// f-function of a bare collection of sets (a star, say — not a complex):
// 1 + sum over members of t^{cardinality}.
inline Rat f_of_collection(const std::vector<std::size_t>& cards, const Rat& t) {
  Rat acc(1);
  for (auto c : cards) {
    Rat power(1);
    for (std::size_t i = 0; i < c; ++i) power *= t;
    acc += power;
  }
  return acc;
}

// Parity sign omega(x) = (-1)^{dim(x)}.  chi(G) = sum_x omega(x).
inline int omega_of_card(std::size_t card) { return card % 2 == 1 ? 1 : -1; }

class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // the empty complex

  // Downward closure of the generators, minus the empty set, in canonical
  // order.  Idempotent: closing a complex reproduces it.
  static SimplicialComplex closure(const std::vector<Simplex>& generators) {
    std::map<Simplex, int> seen;
    for (const Simplex& g : generators) {
      if (g.card() > kMaxGeneratorCard)
        throw std::invalid_argument("generator exceeds " + std::to_string(kMaxGeneratorCard) +
                                    " vertices");
      const auto& verts = g.vertices();
      const std::uint32_t full = (1u << g.card()) - 1u;
      for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::vector<int> sub;
        for (std::size_t b = 0; b < g.card(); ++b)
          if (mask & (1u << b)) sub.push_back(verts[b]);
        seen.emplace(Simplex(std::move(sub)), 0);
      }
    }
    SimplicialComplex out;
    out.simplices_.reserve(seen.size());
    for (auto& [s, unused] : seen) out.simplices_.push_back(s);
    out.build_index();
    return out;
  }

  // Explicit set list.  Verifies the closure property; `keep_order` preserves
  // the given ordering (used by the ring's disjoint union), otherwise the
  // list is canonically sorted.
  static SimplicialComplex from_sets(std::vector<Simplex> sets, bool keep_order = false) {
    SimplicialComplex out;
    out.simplices_ = std::move(sets);
    if (!keep_order) std::sort(out.simplices_.begin(), out.simplices_.end());
    out.build_index();
    if (out.index_.size() != out.simplices_.size())
      throw std::invalid_argument("duplicate sets in complex");
    for (const Simplex& s : out.simplices_) {
      if (s.card() == 1) continue;
      const auto& verts = s.vertices();
      for (std::size_t drop = 0; drop < verts.size(); ++drop) {
        std::vector<int> facet;
        facet.reserve(verts.size() - 1);
        for (std::size_t i = 0; i < verts.size(); ++i)
          if (i != drop) facet.push_back(verts[i]);
        if (!out.contains(Simplex(std::move(facet))))
          throw std::invalid_argument("set list is not closed under subsets (missing a facet of " +
                                      s.str() + ")");
      }
    }
    return out;
  }

  std::size_t size() const { return simplices_.size(); }
  bool empty() const { return simplices_.empty(); }
  const Simplex& simplex(std::size_t i) const { return simplices_[i]; }
  const std::vector<Simplex>& simplices() const { return simplices_; }

  bool contains(const Simplex& s) const { return index_.find(s) != index_.end(); }

  std::optional<std::size_t> rank(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Core W^-(x): all members contained in x.  |W^-(x)| = 2^{|x|} - 1.
  std::vector<std::size_t> core_ranks(const Simplex& x) const {
    require_member(x);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < simplices_.size(); ++i)
      if (simplices_[i].subset_of(x)) out.push_back(i);
    return out;
  }

  // Star W^+(x): all members containing x.  Generally not a subcomplex.
  std::vector<std::size_t> star_ranks(const Simplex& x) const {
    require_member(x);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < simplices_.size(); ++i)
      if (x.subset_of(simplices_[i])) out.push_back(i);
    return out;
  }

  std::vector<Simplex> core(const Simplex& x) const { return collect(core_ranks(x)); }
  std::vector<Simplex> star(const Simplex& x) const { return collect(star_ranks(x)); }

  int omega(std::size_t i) const { return omega_of_card(simplices_[i].card()); }

  FVector f_vector() const {
    FVector f;
    for (const Simplex& s : simplices_) {
      const std::size_t k = s.card() - 1;
      if (f.counts.size() <= k) f.counts.resize(k + 1, 0);
      ++f.counts[k];
    }
    return f;
  }

  std::int64_t euler_characteristic() const {
    std::int64_t chi = 0;
    for (const Simplex& s : simplices_) chi += omega_of_card(s.card());
    return chi;
  }

  int max_label() const {
    int m = 0;
    for (const Simplex& s : simplices_) m = std::max(m, s.max_label());
    return m;
  }

  SimplicialComplex canonicalized() const {
    std::vector<Simplex> sets = simplices_;
    return from_sets(std::move(sets), /*keep_order=*/false);
  }

  bool operator==(const SimplicialComplex& other) const {
    return simplices_ == other.simplices_;
  }

  static constexpr std::size_t kMaxGeneratorCard = 25;

 private:
  void build_index() {
    index_.clear();
    for (std::size_t i = 0; i < simplices_.size(); ++i) index_.emplace(simplices_[i], i);
  }

  void require_member(const Simplex& x) const {
    if (!contains(x)) throw std::invalid_argument("simplex " + x.str() + " is not in the complex");
  }

  std::vector<Simplex> collect(const std::vector<std::size_t>& ranks) const {
    std::vector<Simplex> out;
    out.reserve(ranks.size());
    for (auto r : ranks) out.push_back(simplices_[r]);
    return out;
  }

  std::vector<Simplex> simplices_;
  std::map<Simplex, std::size_t> index_;
};

}  // namespace kount
