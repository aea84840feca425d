#include "wwlab/operators.hpp"

namespace wwlab::ops {

SpectralField abs_d(const SpectralField& f) { return apply_multiplier(f, symbols::abs_d(1.0)); }

SpectralField abs_d_pow(const SpectralField& f, int k) {
  if (k == 0) return f;
  return apply_multiplier(f, symbols::abs_d(k));
}

SpectralField partial(const SpectralField& f, int axis) { return apply_multiplier(f, symbols::partial(axis)); }

SpectralField laplacian(const SpectralField& f) { return apply_multiplier(f, symbols::laplacian()); }

SpectralField mul(const SpectralField& a, const SpectralField& b) { return pointwise_product(a, b); }

SpectralField div_f_grad(const SpectralField& f, const SpectralField& g) {
  SpectralField out = partial(mul(f, partial(g, 0)), 0);
  if (f.lattice().dim() == 2) out += partial(mul(f, partial(g, 1)), 1);
  return out;
}

SpectralField grad_dot(const SpectralField& a, const SpectralField& b) {
  SpectralField out = mul(partial(a, 0), partial(b, 0));
  if (a.lattice().dim() == 2) out += mul(partial(a, 1), partial(b, 1));
  return out;
}

}  // namespace wwlab::ops
