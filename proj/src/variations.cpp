#include "wwlab/variations.hpp"

#include "wwlab/errors.hpp"
#include "wwlab/operators.hpp"

namespace wwlab {

using namespace ops;

SurfaceState quadratic_forcing(const SpectralField& h1, const SpectralField& psi1) {
  SpectralField dpsi = abs_d(psi1);
  SpectralField fh = -2.0 * (div_f_grad(h1, psi1) + abs_d(mul(h1, dpsi)));
  SpectralField fpsi = mul(dpsi, dpsi) - grad_dot(psi1, psi1);
  return SurfaceState(fh, fpsi);
}

SurfaceState cubic_mixed_forcing(const SpectralField& h1, const SpectralField& psi1, const SpectralField& h2,
                                 const SpectralField& psi2) {
  SpectralField d1 = abs_d(psi1), d2 = abs_d(psi2);
  SpectralField q1 = -1.0 * (div_f_grad(h1, psi2) + abs_d(mul(h1, d2)) + div_f_grad(h2, psi1) + abs_d(mul(h2, d1)));
  SpectralField q2 = mul(d1, d2) - grad_dot(psi1, psi2);
  return SurfaceState(q1, q2);
}

SpectralField surface_tension_cubic_divergence(const SpectralField& h, double tau) {
  const auto& lat = h.lattice();
  SpectralField grad_sq = grad_dot(h, h);
  SpectralField out = partial(mul(partial(h, 0), grad_sq), 0);
  if (lat.dim() == 2) out += partial(mul(partial(h, 1), grad_sq), 1);
  return (-3.0 * tau) * out;
}

SpectralField surface_tension_cubic_expanded(const SpectralField& h, double tau) {
  SpectralField hx = partial(h, 0);
  SpectralField hxx = partial(hx, 0);
  if (h.lattice().dim() == 1) return (-9.0 * tau) * mul(hxx, mul(hx, hx));
  SpectralField hy = partial(h, 1);
  SpectralField hyy = partial(hy, 1);
  SpectralField hxy = partial(hx, 1);
  SpectralField hx2 = mul(hx, hx), hy2 = mul(hy, hy);
  SpectralField sum = 3.0 * mul(hxx, hx2) + 3.0 * mul(hyy, hy2) + 4.0 * mul(hxy, mul(hx, hy)) + mul(hx2, hyy) +
                      mul(hy2, hxx);
  return (-3.0 * tau) * sum;
}

SurfaceState cubic_pure_forcing(const SpectralField& h1, const SpectralField& psi1, const DispersionLaw& law) {
  SpectralField dpsi = abs_d(psi1);
  SpectralField hh = mul(h1, h1);
  SpectralField h_dpsi = mul(h1, dpsi);
  SpectralField c1 =
      3.0 * (laplacian(mul(hh, dpsi)) + abs_d(mul(hh, laplacian(psi1))) + 2.0 * abs_d(mul(h1, abs_d(h_dpsi))));
  SpectralField c2 = -6.0 * mul(mul(h1, laplacian(psi1)) + abs_d(h_dpsi), dpsi);
  if (law.tau() != 0.0) c2 += surface_tension_cubic_expanded(h1, law.tau());
  return SurfaceState(c1, c2);
}

int mixed_weight(int dim) {
  if (dim == 2) return 3;
  if (dim == 1) return 6;
  throw InvalidArgument("dimension must be 1 or 2");
}

SurfaceState third_variation(const SpectralField& h1, const SpectralField& psi1, const SpectralField& h2,
                             const SpectralField& psi2, const DispersionLaw& law) {
  SurfaceState q = cubic_mixed_forcing(h1, psi1, h2, psi2);
  SurfaceState c = cubic_pure_forcing(h1, psi1, law);
  return static_cast<double>(mixed_weight(h1.lattice().dim())) * q + c;
}

}  // namespace wwlab
