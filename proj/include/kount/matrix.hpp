#pragma once

// Dense square matrices over an exact scalar (Int, Rat) or double.
// Row-major, immutable by convention once assembled.

#include "kount/numbers.hpp"
#include "kount/parallel.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace kount {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n, T(0)) {}
  Matrix(std::size_t n, std::vector<T> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n * n) throw std::invalid_argument("entry count does not match order");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t order() const { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  const std::vector<T>& data() const { return a_; }

  bool operator==(const Matrix& other) const { return n_ == other.n_ && a_ == other.a_; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  T sum() const {
    T s(0);
    for (const T& v : a_) s += v;
    return s;
  }

  Matrix operator*(const Matrix& other) const {
    if (n_ != other.n_) throw std::invalid_argument("order mismatch in matrix product");
    Matrix out(n_);
    parallel_for(0, n_, [&](std::size_t i) {
      for (std::size_t k = 0; k < n_; ++k) {
        const T& aik = (*this)(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < n_; ++j) out(i, j) += aik * other(k, j);
      }
    });
    return out;
  }

  Matrix operator-(const Matrix& other) const {
    if (n_ != other.n_) throw std::invalid_argument("order mismatch in matrix difference");
    Matrix out(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - other.a_[i];
    return out;
  }

  template <class U>
  Matrix<U> cast() const {
    std::vector<U> entries;
    entries.reserve(a_.size());
    for (const T& v : a_) entries.emplace_back(v);
    return Matrix<U>(n_, std::move(entries));
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

inline RatMatrix to_rational(const IntMatrix& m) {
  std::vector<Rat> entries;
  entries.reserve(m.order() * m.order());
  for (const Int& v : m.data()) entries.emplace_back(v);
  return RatMatrix(m.order(), std::move(entries));
}

// Exact product check A*B == I.  Runs in int64 when a-priori bounds allow
// (exactness guaranteed by the bound check), otherwise in big integers.
inline bool product_is_identity(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.order();
  if (b.order() != n) return false;
  Int max_a(0), max_b(0);
  for (const Int& v : a.data()) max_a = std::max(max_a, Int(abs(v)));
  for (const Int& v : b.data()) max_b = std::max(max_b, Int(abs(v)));
  if (n > 0 && max_a * max_b * Int(n) < Int(std::int64_t(1) << 62) &&
      max_a < Int(std::int64_t(1) << 31) && max_b < Int(std::int64_t(1) << 31)) {
    std::vector<std::int64_t> fa(n * n), fb(n * n);
    for (std::size_t i = 0; i < n * n; ++i) fa[i] = a.data()[i].convert_to<std::int64_t>();
    for (std::size_t i = 0; i < n * n; ++i) fb[i] = b.data()[i].convert_to<std::int64_t>();
    bool ok = true;
    parallel_for(0, n, [&](std::size_t i) {
      std::vector<std::int64_t> row(n, 0);
      for (std::size_t k = 0; k < n; ++k) {
        const std::int64_t aik = fa[i * n + k];
        if (aik == 0) continue;
        for (std::size_t j = 0; j < n; ++j) row[j] += aik * fb[k * n + j];
      }
      for (std::size_t j = 0; j < n; ++j)
        if (row[j] != (i == j ? 1 : 0)) ok = false;
    });
    return ok;
  }
  return a * b == IntMatrix::identity(n);
}

inline bool product_is_identity(const RatMatrix& a, const RatMatrix& b) {
  return a * b == RatMatrix::identity(a.order());
}

}  // namespace kount
