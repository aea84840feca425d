#pragma once

#include "wwlab/spectral.hpp"

/// Differential operators on spectral fields, all realized as multipliers.
namespace wwlab::ops {

SpectralField abs_d(const SpectralField& f);
SpectralField abs_d_pow(const SpectralField& f, int k);
SpectralField partial(const SpectralField& f, int axis);
SpectralField laplacian(const SpectralField& f);
SpectralField mul(const SpectralField& a, const SpectralField& b);
/// div(f grad g).
SpectralField div_f_grad(const SpectralField& f, const SpectralField& g);
/// grad a . grad b.
SpectralField grad_dot(const SpectralField& a, const SpectralField& b);

}  // namespace wwlab::ops
