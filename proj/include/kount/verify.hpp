#pragma once

// The machine-checkable form of the headline results: exact unimodularity,
// the Green-Star product, positive definiteness via leading minors, the
// energy identity, spectral palindromicity, the reciprocal pairing of
// eigenvalues, the zeta reflection, and the parametrized L_t identities.

#include "kount/complex.hpp"
#include "kount/cw.hpp"
#include "kount/exact.hpp"
#include "kount/matrices.hpp"
#include "kount/spectra.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace kount {

struct CheckResult {
  std::string name;
  bool pass = false;
  bool exact = true;       // integer/rational verdict vs float residual
  double residual = 0.0;   // residual checks only
  double tolerance = 0.0;  // residual checks only
  std::string note;
  double seconds = 0.0;
};

struct VerifyReport {
  std::size_t n = 0;
  std::vector<std::int64_t> f_vector;
  std::int64_t euler_characteristic = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const CheckResult* first_failure() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
};

struct VerifyOptions {
  int functional_samples = 100;
  double functional_tol_per_n = 1e-6;    // tolerance = value * n
  double pairing_tol_per_kappa = 1e-7;   // tolerance = value * cond(K)
  std::vector<Rat> t_samples{Rat(2), Rat(-2), Rat(1) / Rat(3)};
  std::uint64_t seed = 7;
  bool spectral = true;  // float residual checks on top of the exact ones
};

namespace detail {

template <class Fn>
CheckResult timed_check(const std::string& name, Fn&& fn) {
  CheckResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  fn(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline void core_checks(VerifyReport& report, const IntMatrix& k, const IntMatrix& kinv,
                        const VerifyOptions& opt) {
  const std::size_t n = k.order();

  report.checks.push_back(timed_check("unimodular", [&](CheckResult& r) {
    r.pass = det_exact(k) == 1;
  }));
  report.checks.push_back(timed_check("green_star_inverse", [&](CheckResult& r) {
    r.pass = product_is_identity(k, kinv);
  }));
  report.checks.push_back(timed_check("positive_definite", [&](CheckResult& r) {
    r.pass = true;
    for (const Int& minor : leading_minors(k))
      if (minor <= 0) r.pass = false;
  }));
  report.checks.push_back(timed_check("energy", [&](CheckResult& r) {
    r.pass = kinv.sum() == Int(n);
  }));
  report.checks.push_back(timed_check("spectral_palindrome", [&](CheckResult& r) {
    if (n > kMaxCharPolyOrder) {
      r.pass = true;
      r.note = "skipped: order above " + std::to_string(kMaxCharPolyOrder);
      return;
    }
    r.pass = palindrome_check(char_poly(k));
  }));

  if (!opt.spectral || n > kMaxSpectralOrder) return;
  const Spectrum spec = eigenvalues_sym(k);
  report.checks.push_back(timed_check("reciprocal_pairing", [&](CheckResult& r) {
    r.exact = false;
    r.residual = spectral_symmetry_residual(spec);
    const double kappa =
        n == 0 ? 1.0 : spec.eigenvalues.back() / std::max(spec.eigenvalues.front(), 1e-300);
    r.tolerance = opt.pairing_tol_per_kappa * std::max(kappa, 1.0);
    r.pass = r.residual <= r.tolerance;
  }));
  report.checks.push_back(timed_check("zeta_reflection", [&](CheckResult& r) {
    r.exact = false;
    r.residual = functional_equation_residual(spec, opt.functional_samples, opt.seed);
    r.tolerance = opt.functional_tol_per_n * std::max<double>(static_cast<double>(n), 1.0);
    r.pass = r.residual <= r.tolerance;
  }));
}

}  // namespace detail

inline VerifyReport run_verify(const SimplicialComplex& g, const VerifyOptions& opt = {}) {
  VerifyReport report;
  report.n = g.size();
  report.f_vector = g.f_vector().counts;
  report.euler_characteristic = g.euler_characteristic();

  const IntMatrix k = counting_matrix(g);
  const IntMatrix kinv = green_star_inverse(g);
  detail::core_checks(report, k, kinv, opt);

  report.checks.push_back(detail::timed_check("connection_energy", [&](CheckResult& r) {
    const IntMatrix l = connection_matrix(g);
    const IntMatrix linv = connection_green_inverse(g);
    r.pass = product_is_identity(l, linv) && linv.sum() == Int(g.euler_characteristic());
  }));

  const FVector f = g.f_vector();
  for (const Rat& t : opt.t_samples) {
    report.checks.push_back(
        detail::timed_check("parametrized_t=" + to_decimal(t), [&](CheckResult& r) {
          const RatMatrix lt = parametrized_matrix(g, t);
          // The Green matrix of L_t is g_{1/t}; t = 1 and t = -1 are the
          // self-paired unimodular cases.
          bool ok = product_is_identity(lt, parametrized_green(g, Rat(1) / t));
          // det L_t = (-1)^n t^{f'_G(1)}
          Rat expected_det(g.size() % 2 == 0 ? 1 : -1);
          const Int exponent = f.f_derivative_at_one();
          for (Int e(0); e < exponent; ++e) expected_det *= t;
          ok = ok && det_exact(lt) == expected_det;
          ok = ok && parametrized_green(g, t).sum() == Rat(1) - f.f_eval(t);
          r.pass = ok;
        }));
  }
  report.checks.push_back(detail::timed_check("counting_is_minus_L1", [&](CheckResult& r) {
    const RatMatrix l1 = parametrized_matrix(g, Rat(1));
    const RatMatrix minus_k = to_rational(k);
    r.pass = true;
    for (std::size_t i = 0; i < l1.order() && r.pass; ++i)
      for (std::size_t j = 0; j < l1.order(); ++j)
        if (l1(i, j) != -minus_k(i, j)) {
          r.pass = false;
          break;
        }
  }));
  return report;
}

inline VerifyReport run_verify(const CWComplex& cw, const VerifyOptions& opt = {}) {
  VerifyReport report;
  report.n = cw.size();
  report.f_vector = cw.f_vector().counts;
  report.euler_characteristic = cw.f_vector().euler_characteristic();

  const IntMatrix k = counting_matrix(cw);
  const IntMatrix kinv = green_star_inverse(cw);
  detail::core_checks(report, k, kinv, opt);
  return report;
}

}  // namespace kount
