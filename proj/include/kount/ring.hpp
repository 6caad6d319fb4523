#pragma once

// The ring of complexes on the matrix side: disjoint union <-> direct sum,
// Cartesian product <-> Kronecker product.  The product of complexes is not
// itself a simplicial complex, so it is represented only at matrix level.
// representation_check also evaluates the written product entry formula
// 2^{|a ∩ c| + |b ∩ d|} - 1 against the Kronecker product and reports where
// they differ; the verdict is data, not an assertion.

#include "kount/complex.hpp"
#include "kount/exact.hpp"
#include "kount/matrices.hpp"
#include "kount/matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kount {

struct RingReport {
  std::string op;
  bool pass = false;
  std::optional<std::pair<std::size_t, std::size_t>> first_diff;
};

// G's sets followed by H's sets relabeled past G's largest label.  The
// returned complex keeps exactly that order, which makes its counting
// matrix equal to K(G) ⊕ K(H) entry for entry.
inline SimplicialComplex disjoint_union(const SimplicialComplex& g, const SimplicialComplex& h) {
  const int offset = g.max_label();
  std::vector<Simplex> sets;
  sets.reserve(g.size() + h.size());
  for (const Simplex& x : g.simplices()) sets.push_back(x);
  for (const Simplex& y : h.simplices()) sets.push_back(y.shifted(offset));
  return SimplicialComplex::from_sets(std::move(sets), /*keep_order=*/true);
}

template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
  const std::size_t n = a.order(), m = b.order();
  Matrix<T> out(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(n + i, n + j) = b(i, j);
  return out;
}

// Pair order is row-major lexicographic: (i,j) -> i*m + j.
template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  const std::size_t n = a.order(), m = b.order();
  Matrix<T> out(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const T& aik = a(i, k);
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = 0; l < m; ++l) out(i * m + j, k * m + l) = aik * b(j, l);
    }
  return out;
}

// The written product entry formula, indexed by pairs (a,b) in the same
// lexicographic order as kronecker(K(G), K(H)).
inline IntMatrix product_counting_matrix(const SimplicialComplex& g, const SimplicialComplex& h) {
  const std::size_t n = g.size(), m = h.size();
  IntMatrix out(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t gi = g.simplex(i).intersection_size(g.simplex(k));
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = 0; l < m; ++l) {
          const std::size_t e = gi + h.simplex(j).intersection_size(h.simplex(l));
          Int v(1);
          v <<= e;
          out(i * m + j, k * m + l) = v - 1;
        }
    }
  return out;
}

template <class T>
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix<T>& a,
                                                                    const Matrix<T>& b) {
  if (a.order() != b.order()) return std::make_pair(std::size_t(0), std::size_t(0));
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      if (a(i, j) != b(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

// kron(A,B) and kron(B,A) are conjugate by the perfect-shuffle permutation
// (i*m+j) -> (j*n+i); verified by permuted-index equality.
template <class T>
bool commutation_similar(const Matrix<T>& a, const Matrix<T>& b) {
  const std::size_t n = a.order(), m = b.order();
  const Matrix<T> ab = kronecker(a, b);
  const Matrix<T> ba = kronecker(b, a);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < m; ++l)
          if (ab(i * m + j, k * m + l) != ba(j * n + i, l * n + k)) return false;
  return true;
}

// Full consistency report: direct sum exactness, product formula vs
// Kronecker (with first differing entry), and unimodularity of both
// product candidates.
inline std::vector<RingReport> representation_check(const SimplicialComplex& g,
                                                    const SimplicialComplex& h) {
  std::vector<RingReport> reports;
  const IntMatrix kg = counting_matrix(g);
  const IntMatrix kh = counting_matrix(h);

  {
    RingReport r;
    r.op = "direct_sum";
    const IntMatrix lhs = counting_matrix(disjoint_union(g, h));
    const IntMatrix rhs = direct_sum(kg, kh);
    r.first_diff = first_difference(lhs, rhs);
    r.pass = !r.first_diff.has_value();
    reports.push_back(std::move(r));
  }
  const IntMatrix kron = kronecker(kg, kh);
  {
    RingReport r;
    r.op = "product_vs_kronecker";
    r.first_diff = first_difference(product_counting_matrix(g, h), kron);
    r.pass = !r.first_diff.has_value();
    reports.push_back(std::move(r));
  }
  {
    RingReport r;
    r.op = "kronecker_unimodular";
    r.pass = kron.order() <= kMaxExactOrder && det_exact(kron) == 1;
    reports.push_back(std::move(r));
  }
  {
    RingReport r;
    r.op = "product_formula_unimodular";
    const IntMatrix prod = product_counting_matrix(g, h);
    r.pass = prod.order() <= kMaxExactOrder && det_exact(prod) == 1;
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace kount
