#pragma once

// Exact linear algebra over big integers and rationals: fraction-free
// (Bareiss) determinants and leading minors, Gauss-Jordan inversion as the
// independent oracle, characteristic polynomials by determinant
// interpolation, and the palindrome test that encodes spectral symmetry.

#include "kount/matrix.hpp"
#include "kount/numbers.hpp"
#include "kount/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace kount {

inline constexpr std::size_t kMaxExactOrder = 500;     // det / inverse
inline constexpr std::size_t kMaxCharPolyOrder = 200;  // interpolation nodes

struct Polynomial {
  std::vector<Int> coeffs;  // ascending; degree = coeffs.size() - 1

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  double eval_double(double x) const {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + to_double(coeffs[i]);
    return acc;
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const Int& c : coeffs) m = std::max(m, std::abs(to_double(c)));
    return m;
  }

  // |p(x)| relative to the evaluation magnitude sum_k |c_k| |x|^k, the scale
  // at which cancellation happens; near machine epsilon iff x is a root to
  // working precision.
  double root_residual(double x) const {
    double acc = 0.0, scale = 0.0;
    const double ax = std::abs(x);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      acc = acc * x + to_double(coeffs[i]);
      scale = scale * ax + std::abs(to_double(coeffs[i]));
    }
    return std::abs(acc) / std::max(scale, 1.0);
  }
};

// c_k = (-1)^n c_{n-k}: palindromic for even n, anti-palindromic for odd.
// For a det-1 matrix this is exactly sigma(K) = sigma(K^{-1}).
inline bool palindrome_check(const Polynomial& p) {
  const std::size_t n = p.degree();
  const bool negate = n % 2 == 1;
  for (std::size_t k = 0; k <= n; ++k) {
    const Int& mirror = p.coeffs[n - k];
    if (p.coeffs[k] != (negate ? Int(-mirror) : mirror)) return false;
  }
  return true;
}

namespace detail {

// One fraction-free elimination pass.  Returns the determinant, or nullopt
// with `minors` filled as far as possible when `track_minors` hits a zero
// pivot (row swaps are disabled in that mode so pivots stay principal
// minors).
template <class T>
std::optional<T> bareiss(std::vector<T>& a, std::size_t n, bool track_minors,
                         std::vector<T>* minors) {
  T prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == T(0)) {
      if (track_minors) return std::nullopt;
      std::size_t pivot_row = k + 1;
      while (pivot_row < n && a[pivot_row * n + k] == T(0)) ++pivot_row;
      if (pivot_row == n) return T(0);
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[pivot_row * n + j]);
      sign = -sign;
    }
    const T pivot = a[k * n + k];
    if (track_minors) minors->push_back(pivot);
    for (std::size_t i = k + 1; i < n; ++i) {
      const T head = a[i * n + k];
      for (std::size_t j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * pivot - head * a[k * n + j]) / prev;
      a[i * n + k] = T(0);
    }
    prev = pivot;
  }
  T det = a[(n - 1) * n + (n - 1)];
  if (track_minors) minors->push_back(det);
  if (sign < 0) det = -det;
  return det;
}

// Symmetric fraction-free elimination: updates the upper triangle only and
// mirrors.  Bails out on a zero pivot (caller falls back to the general
// pass).
template <class T>
std::optional<T> bareiss_symmetric(std::vector<T>& a, std::size_t n) {
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const T pivot = a[k * n + k];
    if (pivot == T(0)) return std::nullopt;
    for (std::size_t i = k + 1; i < n; ++i) {
      const T head = a[k * n + i];  // = a[i][k] by symmetry
      for (std::size_t j = i; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * pivot - head * a[k * n + j]) / prev;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) a[j * n + i] = a[i * n + j];
    prev = pivot;
  }
  return a[(n - 1) * n + (n - 1)];
}

}  // namespace detail

// Exact determinant; the empty matrix has determinant 1.
template <class T>
T det_exact(const Matrix<T>& m) {
  const std::size_t n = m.order();
  if (n > kMaxExactOrder)
    throw std::invalid_argument("exact determinant limited to order " +
                                std::to_string(kMaxExactOrder));
  if (n == 0) return T(1);
  std::vector<T> a(m.data());
  if (m.is_symmetric()) {
    if (auto det = detail::bareiss_symmetric(a, n)) return *det;
    a = m.data();  // zero pivot: redo with row swaps
  }
  return *detail::bareiss(a, n, false, static_cast<std::vector<T>*>(nullptr));
}

// All n leading principal minors.  All positive certifies positive
// definiteness for symmetric input.
inline std::vector<Int> leading_minors(const IntMatrix& m) {
  const std::size_t n = m.order();
  if (n > kMaxExactOrder)
    throw std::invalid_argument("leading minors limited to order " + std::to_string(kMaxExactOrder));
  std::vector<Int> minors;
  if (n == 0) return minors;
  std::vector<Int> a(m.data());
  if (detail::bareiss(a, n, true, &minors)) return minors;
  // A zero pivot stopped the fraction-free pass; finish each remaining
  // block with an independent determinant.
  for (std::size_t k = minors.size(); k < n; ++k) {
    const std::size_t order = k + 1;
    IntMatrix block(order);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) block(i, j) = m(i, j);
    minors.push_back(det_exact(block));
  }
  return minors;
}

// Exact inverse via Gauss-Jordan over rationals.  Test oracle for the
// Green-Star formula; throws on singular input.
inline RatMatrix inverse_exact(const IntMatrix& m) {
  const std::size_t n = m.order();
  if (n > kMaxExactOrder)
    throw std::invalid_argument("exact inverse limited to order " + std::to_string(kMaxExactOrder));
  std::vector<Rat> a;
  a.reserve(n * 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.emplace_back(m(i, j));
    for (std::size_t j = 0; j < n; ++j) a.emplace_back(i == j ? 1 : 0);
  }
  const std::size_t w = 2 * n;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    while (pivot_row < n && a[pivot_row * w + k] == 0) ++pivot_row;
    if (pivot_row == n) throw std::domain_error("matrix is singular");
    if (pivot_row != k)
      for (std::size_t j = 0; j < w; ++j) std::swap(a[k * w + j], a[pivot_row * w + j]);
    const Rat pivot = a[k * w + k];
    for (std::size_t j = 0; j < w; ++j) a[k * w + j] /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i * w + k] == 0) continue;
      const Rat factor = a[i * w + k];
      for (std::size_t j = 0; j < w; ++j) a[i * w + j] -= factor * a[k * w + j];
    }
  }
  RatMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a[i * w + n + j];
  return inv;
}

// Characteristic polynomial p(x) = det(M - xI), exactly.  Evaluates the
// determinant at n+1 integer nodes centered at zero (independent, run
// concurrently) and interpolates by divided differences; the coefficients
// must come out integral, which is asserted.
inline Polynomial char_poly(const IntMatrix& m) {
  const std::size_t n = m.order();
  if (n > kMaxCharPolyOrder)
    throw std::invalid_argument("characteristic polynomial limited to order " +
                                std::to_string(kMaxCharPolyOrder));
  if (n == 0) return Polynomial{{Int(1)}};
  const long long lo = -static_cast<long long>(n / 2);
  std::vector<Int> values(n + 1);
  parallel_for(0, n + 1, [&](std::size_t idx) {
    const long long node = lo + static_cast<long long>(idx);
    IntMatrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= Int(node);
    values[idx] = det_exact(shifted);
  });

  // Divided differences over the nodes lo, lo+1, ..., lo+n.
  std::vector<Rat> dd(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) dd[i] = Rat(values[i]);
  for (std::size_t level = 1; level < dd.size(); ++level)
    for (std::size_t i = dd.size() - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rat(level);

  // Expand the Newton form to monomial coefficients.
  std::vector<Rat> poly{dd[n]};
  for (std::size_t i = n; i-- > 0;) {
    const Rat node(lo + static_cast<long long>(i));
    poly.insert(poly.begin(), Rat(0));
    for (std::size_t j = 0; j + 1 < poly.size(); ++j) poly[j] -= node * poly[j + 1];
    poly[0] += dd[i];
  }

  Polynomial p;
  p.coeffs.reserve(poly.size());
  for (const Rat& c : poly) {
    if (denominator(c) != 1)
      throw std::runtime_error("characteristic polynomial interpolation produced a non-integer");
    p.coeffs.push_back(numerator(c));
  }
  return p;
}

}  // namespace kount
