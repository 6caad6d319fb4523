// Walks through the library on the star complex and the octahedron with an
// attached cell: the counting matrix, its formula inverse, potentials, the
// spectrum, and the zeta function.

#include "kount/constructions.hpp"
#include "kount/cw.hpp"
#include "kount/exact.hpp"
#include "kount/matrices.hpp"
#include "kount/spectra.hpp"

#include <cstdio>

using namespace kount;

namespace {

void print_matrix(const char* title, const IntMatrix& m) {
  std::printf("%s (%zux%zu)\n", title, m.order(), m.order());
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j)
      std::printf("%4s", to_decimal(m(i, j)).c_str());
    std::printf("\n");
  }
}

}  // namespace

int main() {
  const auto star3 = star_complex(3);
  std::printf("star complex with 3 spikes: n=%zu, chi=%lld\n", star3.size(),
              static_cast<long long>(star3.euler_characteristic()));

  const auto k = counting_matrix(star3);
  const auto kinv = green_star_inverse(star3);
  print_matrix("K", k);
  print_matrix("K^{-1} (Green-Star formula)", kinv);
  std::printf("det K = %s, product with formula inverse is identity: %s\n",
              to_decimal(det_exact(k)).c_str(), product_is_identity(k, kinv) ? "yes" : "no");
  std::printf("total potential energy sum K^{-1} = %s (= n)\n",
              to_decimal(total_energy(star3)).c_str());

  const auto spec = eigenvalues_sym(k);
  std::printf("eigenvalues:");
  for (double v : spec.eigenvalues) std::printf(" %.6f", v);
  std::printf("\nzeta(1) = %.6f (= trace of K^{-1})\n", zeta(spec, {1, 0}).real());
  std::printf("zeta reflection residual over 100 samples: %.3g\n",
              functional_equation_residual(spec));

  // A discrete CW complex: one 3-cell attached to the whole octahedron.
  CWComplex occ = CWComplex::embed(cross_polytope_complex(2));
  std::vector<int> all;
  for (int i = 1; i <= 26; ++i) all.push_back(i);
  occ = occ.attach_cell(all);
  const auto k27 = counting_matrix(occ);
  std::printf("\noctahedron with attached cell: n=%zu, K(27,27)=%s, energy=%s\n", occ.size(),
              to_decimal(k27(26, 26)).c_str(), to_decimal(total_energy(occ)).c_str());
  const auto spec27 = eigenvalues_sym(k27);
  std::printf("spectrum range [%.6f, %.4f], eigenvalue-1 multiplicity %d\n",
              spec27.eigenvalues.front(), spec27.eigenvalues.back(),
              unit_eigenvalue_multiplicity(spec27));
  return 0;
}
