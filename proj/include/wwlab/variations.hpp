#pragma once

#include "wwlab/dispersion.hpp"
#include "wwlab/spectral.hpp"

namespace wwlab {

/// Second alpha-derivative of the nonlinearity at the zero solution:
///   f_h   = -2[div(h1 grad psi1) + |D|(h1 |D| psi1)]
///   f_psi = (|D| psi1)^2 - |grad psi1|^2
SurfaceState quadratic_forcing(const SpectralField& h1, const SpectralField& psi1);

/// (Qt1, Qt2), the part of the third derivative bilinear in the first and second iterates.
///   Qt1 = -div(h1 grad psi2) - |D|(h1 |D| psi2) - div(h2 grad psi1) - |D|(h2 |D| psi1)
///   Qt2 = |D| psi1 |D| psi2 - grad psi1 . grad psi2
SurfaceState cubic_mixed_forcing(const SpectralField& h1, const SpectralField& psi1, const SpectralField& h2,
                                 const SpectralField& psi2);

/// (C1, C2), the part of the third derivative cubic in the first iterate.
///   C1 = 3[Lap(h1^2 |D| psi1) + |D|(h1^2 Lap psi1) + 2|D|(h1 |D|(h1 |D| psi1))]
///   C2 = -6[h1 Lap psi1 + |D|(h1 |D| psi1)] |D| psi1 + (surface tension term)
SurfaceState cubic_pure_forcing(const SpectralField& h1, const SpectralField& psi1, const DispersionLaw& law);

/// -3 tau div(grad h |grad h|^2), evaluated in divergence form.
SpectralField surface_tension_cubic_divergence(const SpectralField& h, double tau);

/// The same term from its expanded partial-derivative form:
///   2d: -3 tau [3 h_xx h_x^2 + 3 h_yy h_y^2 + 4 h_x h_y h_xy + h_x^2 h_yy + h_y^2 h_xx]
///   1d: -9 tau h_xx h_x^2
SpectralField surface_tension_cubic_expanded(const SpectralField& h, double tau);

/// Weight of the mixed piece in the third derivative: 3 in 2d, 6 in 1d.
int mixed_weight(int dim);

/// Full third derivative, mixed_weight(dim) * (Qt1, Qt2) + (C1, C2).
SurfaceState third_variation(const SpectralField& h1, const SpectralField& psi1, const SpectralField& h2,
                             const SpectralField& psi2, const DispersionLaw& law);

}  // namespace wwlab
