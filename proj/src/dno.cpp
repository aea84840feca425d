#include "wwlab/dno.hpp"

#include <vector>

#include "wwlab/errors.hpp"
#include "wwlab/operators.hpp"

namespace wwlab {

using namespace ops;

SpectralField dn_closed(int order, const SpectralField& h, const SpectralField& psi) {
  switch (order) {
    case 0:
      return abs_d(psi);
    case 1:
      return -1.0 * div_f_grad(h, psi) - abs_d(mul(h, abs_d(psi)));
    case 2: {
      SpectralField h2 = mul(h, h);
      return 0.5 * laplacian(mul(h2, abs_d(psi))) + 0.5 * abs_d(mul(h2, laplacian(psi))) +
             abs_d(mul(h, abs_d(mul(h, abs_d(psi)))));
    }
    default:
      throw InvalidArgument("closed forms exist for orders 0, 1 and 2 only");
  }
}

SpectralField dn_recursive(int order, const SpectralField& h, const SpectralField& psi, int max_order) {
  if (order < 0) throw InvalidArgument("negative expansion order");
  if (order > max_order) throw InvalidArgument("expansion order exceeds the configured maximum");
  // powers[k] = h^k / k!
  std::vector<SpectralField> powers{SpectralField(h.lattice())};
  std::vector<SpectralField> terms{abs_d(psi)};
  for (int n = 1; n <= order; ++n) {
    powers.push_back(n == 1 ? h : (1.0 / n) * mul(powers[n - 1], h));
    SpectralField g = -1.0 * abs_d_pow(div_f_grad(powers[n], psi), n - 1);
    for (int l = 0; l < n; ++l) g -= abs_d_pow(mul(powers[n - l], terms[l]), n - l);
    terms.push_back(g);
  }
  return terms[order];
}

SpectralField dn_polarized_g2(const SpectralField& h1, const SpectralField& h2, const SpectralField& psi) {
  SpectralField hh = mul(h1, h2);
  SpectralField dpsi = abs_d(psi);
  return 0.5 * laplacian(mul(hh, dpsi)) + 0.5 * abs_d(mul(hh, laplacian(psi))) +
         0.5 * abs_d(mul(h1, abs_d(mul(h2, dpsi)))) + 0.5 * abs_d(mul(h2, abs_d(mul(h1, dpsi))));
}

}  // namespace wwlab
