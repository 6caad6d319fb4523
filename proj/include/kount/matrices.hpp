#pragma once

// The counting matrix K, connection matrix L, the parametrized family L_t,
// and their Green inverses from the closed star formulas:
//
//   K(x,y)      = |W^-(x) ∩ W^-(y)|  ( = 2^{|x ∩ y|} - 1 for simplicial G )
//   K^{-1}(x,y) = omega(x) omega(y) |W^+(x) ∩ W^+(y)|
//   L(x,y)      = 1 iff x ∩ y nonempty
//   L^{-1}(x,y) = omega(x) omega(y) chi(W^+(x) ∩ W^+(y))
//   L_t(x,y)    = 1 - f_{W^-(x) ∩ W^-(y)}(t)
//   g_t(x,y)    = omega(x) omega(y) (1 - f_{W^+(x) ∩ W^+(y)}(t))
//
// The parametrized family interpolates the two unimodular cases: L_1 = -K
// and L_{-1} = L.  Its exact laws are det(L_t) = (-1)^{|G|} t^{f'_G(1)},
// sum_{x,y} g_t(x,y) = 1 - f_G(t), and the Green pairing L_t * g_{1/t} = I,
// which is self-paired precisely at t = 1 and t = -1 where g_t itself is
// the inverse.
//
// Inverses come from the formulas, never from elimination; exact inversion
// lives in exact.hpp as the independent test oracle.

#include "kount/complex.hpp"
#include "kount/cw.hpp"
#include "kount/matrix.hpp"
#include "kount/parallel.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace kount {

// Core/star rank lists, signs, and cardinalities for either kind of complex.
struct Incidence {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> cores;  // sorted ranks of W^-(x)
  std::vector<std::vector<std::size_t>> stars;  // sorted ranks of W^+(x)
  std::vector<int> omegas;
  std::vector<std::size_t> cards;  // simplex cardinalities; empty for CW inputs

  static Incidence of(const SimplicialComplex& g) {
    Incidence inc;
    inc.n = g.size();
    inc.cores.resize(inc.n);
    inc.stars.resize(inc.n);
    inc.omegas.resize(inc.n);
    inc.cards.resize(inc.n);
    for (std::size_t i = 0; i < inc.n; ++i) {
      inc.omegas[i] = g.omega(i);
      inc.cards[i] = g.simplex(i).card();
    }
    parallel_for(0, inc.n, [&](std::size_t i) {
      for (std::size_t j = 0; j < inc.n; ++j)
        if (g.simplex(j).subset_of(g.simplex(i))) inc.cores[i].push_back(j);
    });
    inc.fill_stars();
    return inc;
  }

  static Incidence of(const CWComplex& cw) {
    Incidence inc;
    inc.n = cw.size();
    inc.cores.resize(inc.n);
    inc.stars.resize(inc.n);
    inc.omegas.resize(inc.n);
    for (std::size_t i = 0; i < inc.n; ++i) {
      inc.cores[i] = cw.closure_ranks(i);
      inc.omegas[i] = cw.omega(i);
    }
    inc.fill_stars();
    return inc;
  }

  void fill_stars() {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r : cores[i]) stars[r].push_back(i);
    // cores are scanned in ascending i, so each star list is already sorted
  }
};

namespace detail {

inline std::size_t sorted_intersection_count(const std::vector<std::size_t>& a,
                                             const std::vector<std::size_t>& b) {
  std::size_t count = 0, i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

template <class Fn>
void for_each_common(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                     Fn&& fn) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      fn(a[i]);
      ++i;
      ++j;
    }
  }
}

inline IntMatrix counting_from(const Incidence& inc) {
  IntMatrix k(inc.n);
  parallel_for(0, inc.n, [&](std::size_t i) {
    for (std::size_t j = i; j < inc.n; ++j) {
      const Int v(sorted_intersection_count(inc.cores[i], inc.cores[j]));
      k(i, j) = v;
      k(j, i) = v;
    }
  });
  return k;
}

inline IntMatrix green_star_from(const Incidence& inc) {
  IntMatrix kinv(inc.n);
  parallel_for(0, inc.n, [&](std::size_t i) {
    for (std::size_t j = i; j < inc.n; ++j) {
      Int v(sorted_intersection_count(inc.stars[i], inc.stars[j]));
      v *= inc.omegas[i] * inc.omegas[j];
      kinv(i, j) = v;
      kinv(j, i) = v;
    }
  });
  return kinv;
}

}  // namespace detail

inline IntMatrix counting_matrix(const SimplicialComplex& g) {
  return detail::counting_from(Incidence::of(g));
}

inline IntMatrix counting_matrix(const CWComplex& cw) {
  return detail::counting_from(Incidence::of(cw));
}

inline IntMatrix green_star_inverse(const SimplicialComplex& g) {
  return detail::green_star_from(Incidence::of(g));
}

inline IntMatrix green_star_inverse(const CWComplex& cw) {
  return detail::green_star_from(Incidence::of(cw));
}

inline IntMatrix connection_matrix(const SimplicialComplex& g) {
  const std::size_t n = g.size();
  IntMatrix l(n);
  parallel_for(0, n, [&](std::size_t i) {
    for (std::size_t j = i; j < n; ++j) {
      const Int v(g.simplex(i).intersection_size(g.simplex(j)) > 0 ? 1 : 0);
      l(i, j) = v;
      l(j, i) = v;
    }
  });
  return l;
}

inline IntMatrix connection_green_inverse(const SimplicialComplex& g) {
  const Incidence inc = Incidence::of(g);
  IntMatrix linv(inc.n);
  parallel_for(0, inc.n, [&](std::size_t i) {
    for (std::size_t j = i; j < inc.n; ++j) {
      // chi of the star intersection: signed count over common members.
      std::int64_t chi = 0;
      detail::for_each_common(inc.stars[i], inc.stars[j],
                              [&](std::size_t r) { chi += inc.omegas[r]; });
      Int v(chi);
      v *= inc.omegas[i] * inc.omegas[j];
      linv(i, j) = v;
      linv(j, i) = v;
    }
  });
  return linv;
}

// L_t.  The intersection core W^-(x) ∩ W^-(y) is the full simplex on
// x ∩ y, whose f-function is (1+t)^m with m = |x ∩ y|, so the entry is
// 1 - (1+t)^m; empty intersections give 0 (the numerator vanishes
// identically).
inline RatMatrix parametrized_matrix(const SimplicialComplex& g, const Rat& t) {
  if (t == 0) throw std::domain_error("L_t requires t != 0");
  const std::size_t n = g.size();
  std::size_t max_card = 0;
  for (const Simplex& s : g.simplices()) max_card = std::max(max_card, s.card());
  std::vector<Rat> entry_by_m(max_card + 1, Rat(0));  // entry for |x ∩ y| = m
  {
    Rat one_plus_t = Rat(1) + t;
    Rat numer_pow(1);  // (1+t)^m
    for (std::size_t m = 1; m <= max_card; ++m) {
      numer_pow *= one_plus_t;
      entry_by_m[m] = Rat(1) - numer_pow;
    }
  }
  RatMatrix lt(n);
  parallel_for(0, n, [&](std::size_t i) {
    for (std::size_t j = i; j < n; ++j) {
      const Rat& v = entry_by_m[g.simplex(i).intersection_size(g.simplex(j))];
      lt(i, j) = v;
      lt(j, i) = v;
    }
  });
  return lt;
}

// Green matrix of L_t: g_t(x,y) = omega(x) omega(y) (1 - f_{W^+ ∩ W^+}(t))
// with the f-function of a collection 1 + sum_z t^{|z|}.
inline RatMatrix parametrized_green(const SimplicialComplex& g, const Rat& t) {
  if (t == 0) throw std::domain_error("g_t requires t != 0");
  const Incidence inc = Incidence::of(g);
  std::size_t max_card = 0;
  for (auto c : inc.cards) max_card = std::max(max_card, c);
  std::vector<Rat> t_pow(max_card + 1, Rat(1));
  for (std::size_t c = 1; c <= max_card; ++c) t_pow[c] = t_pow[c - 1] * t;
  RatMatrix gt(inc.n);
  parallel_for(0, inc.n, [&](std::size_t i) {
    for (std::size_t j = i; j < inc.n; ++j) {
      Rat common(0);  // sum of t^{|z|} over z in W^+(x) ∩ W^+(y)
      detail::for_each_common(inc.stars[i], inc.stars[j],
                              [&](std::size_t r) { common += t_pow[inc.cards[r]]; });
      Rat v = -common;  // 1 - (1 + common)
      v *= inc.omegas[i] * inc.omegas[j];
      gt(i, j) = v;
      gt(j, i) = v;
    }
  });
  return gt;
}

// Supercharge Q = K - K^{-1}; sigma(Q) = -sigma(Q).
template <class ComplexT>
IntMatrix supercharge(const ComplexT& x) {
  return counting_matrix(x) - green_star_inverse(x);
}

// Potential V(x) = sum_y K^{-1}(x,y); the energy theorem gives
// sum_x V(x) = |G|.
template <class ComplexT>
std::vector<Int> potential(const ComplexT& x) {
  const IntMatrix kinv = green_star_inverse(x);
  std::vector<Int> v(kinv.order(), Int(0));
  for (std::size_t i = 0; i < kinv.order(); ++i)
    for (std::size_t j = 0; j < kinv.order(); ++j) v[i] += kinv(i, j);
  return v;
}

template <class ComplexT>
Int total_energy(const ComplexT& x) {
  Int total(0);
  for (const Int& vi : potential(x)) total += vi;
  return total;
}

}  // namespace kount
