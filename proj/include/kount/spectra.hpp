#pragma once

// Floating-point spectral analysis: a cyclic Jacobi eigensolver for the
// symmetric exact matrices, the counting zeta function
//
//   zeta(s) = sum_k lambda_k^{-s},   lambda_k > 0, real log branch,
//
// its reflection residual, dense grids over a complex rectangle, and
// density-of-states histograms.

#include "kount/matrix.hpp"
#include "kount/numbers.hpp"
#include "kount/parallel.hpp"
#include "kount/prng.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace kount {

inline constexpr std::size_t kMaxSpectralOrder = 2000;

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  double tol = 0.0;                 // solver tolerance used

  std::size_t size() const { return eigenvalues.size(); }
};

// Cyclic Jacobi on the full symmetric matrix.  Sweeps rotate away every
// off-diagonal pair until off(A) < tol * ||A||_F.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n,
                                              double tol = 1e-13) {
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
  };
  double fro = 0.0;
  for (double v : a) fro += v * v;
  fro = std::sqrt(fro);
  if (fro == 0.0 || n < 2) {
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a[i * n + i];
    std::sort(diag.begin(), diag.end());
    return diag;
  }
  const double target = tol * fro;
  for (int sweep = 0; sweep < 100 && off_norm() > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) <= 1e-3 * target / static_cast<double>(n)) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a[i * n + i];
  std::sort(diag.begin(), diag.end());
  return diag;
}

inline Spectrum eigenvalues_sym(const IntMatrix& m, double tol = 1e-13) {
  const std::size_t n = m.order();
  if (n > kMaxSpectralOrder)
    throw std::invalid_argument("float spectral ops limited to order " +
                                std::to_string(kMaxSpectralOrder));
  if (!m.is_symmetric()) throw std::invalid_argument("eigenvalue solver needs a symmetric matrix");
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    a[i] = to_double(m.data()[i]);
    if (!std::isfinite(a[i]))
      throw std::invalid_argument("matrix entry overflows double; use the exact routines");
  }
  Spectrum s;
  s.tol = tol;
  s.eigenvalues = jacobi_eigenvalues(std::move(a), n, tol);
  return s;
}

// max_k |lambda_k * lambda_{n+1-k} - 1| over the sorted spectrum.
inline double spectral_symmetry_residual(const Spectrum& s) {
  double worst = 0.0;
  const std::size_t n = s.size();
  for (std::size_t k = 0; k < n; ++k)
    worst = std::max(worst, std::abs(s.eigenvalues[k] * s.eigenvalues[n - 1 - k] - 1.0));
  return worst;
}

inline int unit_eigenvalue_multiplicity(const Spectrum& s, double tol = 1e-7) {
  int count = 0;
  for (double v : s.eigenvalues)
    if (std::abs(v - 1.0) <= tol) ++count;
  return count;
}

inline std::complex<double> zeta(const Spectrum& s, std::complex<double> z) {
  std::complex<double> acc(0.0, 0.0);
  for (double lambda : s.eigenvalues) {
    if (lambda <= 0.0) throw std::domain_error("zeta needs a positive spectrum");
    acc += std::exp(-z * std::log(lambda));
  }
  return acc;
}

// The spectral reflection zeta(s) = conj(zeta(-conj(s))) holds exactly when
// the spectrum pairs into reciprocals; it implies the mirror symmetry of
// |zeta| about the imaginary axis.  Returns the worst sampled violation
// max |zeta(a+ib) - conj(zeta(-a+ib))|, scaled by the sample magnitude:
// |zeta| itself grows like lambda_max^4 at the region edge, so an absolute
// deviation says nothing.
inline double functional_equation_residual(const Spectrum& s, int sample_count = 100,
                                           std::uint64_t seed = 7) {
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < sample_count; ++i) {
    const double a = rng.uniform_real(-4.0, 4.0);
    const double b = rng.uniform_real(0.0, 30.0);
    const std::complex<double> left = zeta(s, {a, b});
    const std::complex<double> right = std::conj(zeta(s, {-a, b}));
    worst = std::max(worst, std::abs(left - right) / std::max(1.0, std::abs(left)));
  }
  return worst;
}

struct ZetaGrid {
  double re_min = -4.0, re_max = 4.0;
  double im_min = 0.0, im_max = 30.0;
  double step = 0.05;
  std::vector<double> re_values, im_values;
  std::vector<double> abs_values, arg_values;  // row-major: im outer, re inner

  std::size_t index(std::size_t im_idx, std::size_t re_idx) const {
    return im_idx * re_values.size() + re_idx;
  }
};

// Dense evaluation of |zeta| and arg zeta over the rectangle.  Axis values
// are k*step offset from the origin, so a symmetric region pairs +a/-a
// exactly in floating point.
inline ZetaGrid zeta_grid(const Spectrum& s, double re_min = -4.0, double re_max = 4.0,
                          double im_min = 0.0, double im_max = 30.0, double step = 0.05) {
  if (step <= 0.0) throw std::invalid_argument("grid step must be positive");
  ZetaGrid grid;
  grid.re_min = re_min;
  grid.re_max = re_max;
  grid.im_min = im_min;
  grid.im_max = im_max;
  grid.step = step;
  for (long long k = std::llround(std::ceil(re_min / step - 1e-9));
       k <= std::llround(std::floor(re_max / step + 1e-9)); ++k)
    grid.re_values.push_back(static_cast<double>(k) * step);
  for (long long k = std::llround(std::ceil(im_min / step - 1e-9));
       k <= std::llround(std::floor(im_max / step + 1e-9)); ++k)
    grid.im_values.push_back(static_cast<double>(k) * step);
  const std::size_t rows = grid.im_values.size();
  const std::size_t cols = grid.re_values.size();
  grid.abs_values.assign(rows * cols, 0.0);
  grid.arg_values.assign(rows * cols, 0.0);
  std::vector<double> logs;
  logs.reserve(s.size());
  for (double lambda : s.eigenvalues) {
    if (lambda <= 0.0) throw std::domain_error("zeta needs a positive spectrum");
    logs.push_back(std::log(lambda));
  }
  parallel_for(0, rows, [&](std::size_t r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::complex<double> z(grid.re_values[c], grid.im_values[r]);
      std::complex<double> acc(0.0, 0.0);
      for (double lg : logs) acc += std::exp(-z * lg);
      grid.abs_values[grid.index(r, c)] = std::abs(acc);
      grid.arg_values[grid.index(r, c)] = std::arg(acc);
    }
  });
  return grid;
}

// Worst relative deviation |grid(a,b) - grid(-a,b)| / max(1, grid(a,b))
// over all samples of a grid with a symmetric real axis.
inline double zeta_grid_mirror_residual(const ZetaGrid& grid) {
  const std::size_t cols = grid.re_values.size();
  double worst = 0.0;
  for (std::size_t c = 0; c < cols; ++c) {
    const std::size_t cm = cols - 1 - c;
    if (grid.re_values[c] != -grid.re_values[cm])
      throw std::invalid_argument("mirror residual needs a symmetric real axis");
    for (std::size_t r = 0; r < grid.im_values.size(); ++r) {
      const double x = grid.abs_values[grid.index(r, c)];
      const double y = grid.abs_values[grid.index(r, cm)];
      worst = std::max(worst, std::abs(x - y) / std::max(1.0, std::max(x, y)));
    }
  }
  return worst;
}

struct Histogram {
  double lo = 0.0, hi = 0.0;
  std::vector<double> mass;  // sums to 1 for nonempty input
};

inline Histogram histogram(const std::vector<double>& values, double lo, double hi,
                           std::size_t bins) {
  if (bins < 1) throw std::invalid_argument("histogram needs at least one bin");
  if (!(hi > lo)) throw std::invalid_argument("histogram needs hi > lo");
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  h.mass.assign(bins, 0.0);
  if (values.empty()) return h;
  const double weight = 1.0 / static_cast<double>(values.size());
  for (double v : values) {
    auto bin = static_cast<long long>((v - lo) / (hi - lo) * static_cast<double>(bins));
    bin = std::clamp<long long>(bin, 0, static_cast<long long>(bins) - 1);
    h.mass[static_cast<std::size_t>(bin)] += weight;
  }
  return h;
}

// Normalized eigenvalue histogram over [lambda_min, lambda_max].
inline Histogram density_of_states(const Spectrum& s, std::size_t bins) {
  if (s.eigenvalues.empty()) return histogram({}, 0.0, 1.0, bins);
  const double lo = s.eigenvalues.front();
  const double hi = s.eigenvalues.back();
  return histogram(s.eigenvalues, lo, hi > lo ? hi : lo + 1.0, bins);
}

}  // namespace kount
