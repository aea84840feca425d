#pragma once

#include "wwlab/spectral.hpp"

namespace wwlab {

/// Terms of the expansion G(h) psi = G0 psi + G1(h) psi + G2(h) psi + ...
///
///   G0 = |D|
///   G1(h) psi = -div(h grad psi) - |D|(h |D| psi)
///   G2(h) psi = 1/2 Lap(h^2 |D| psi) + 1/2 |D|(h^2 Lap psi) + |D|(h |D|(h |D| psi))
SpectralField dn_closed(int order, const SpectralField& h, const SpectralField& psi);

inline constexpr int kDefaultMaxDnOrder = 3;

/// G_n = |D|^{n-1} D(h^n/n! D psi) - sum_{l<n} |D|^{n-l}(h^{n-l}/(n-l)! G_l psi),
/// with D(f D g) = -div(f grad g).
SpectralField dn_recursive(int order, const SpectralField& h, const SpectralField& psi,
                           int max_order = kDefaultMaxDnOrder);

/// Symmetric bilinear form of G2 in h; dn_polarized_g2(h, h, psi) = G2(h) psi.
SpectralField dn_polarized_g2(const SpectralField& h1, const SpectralField& h2, const SpectralField& psi);

}  // namespace wwlab
