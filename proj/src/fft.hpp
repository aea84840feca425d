#pragma once

#include <vector>

#include "wwlab/spectral.hpp"

namespace wwlab::detail {

/// Samples of a field on the padded physical grid, P^d points.
std::vector<Complex> to_physical(const SpectralField& field);

/// Forward transform of padded samples, keeping only the modes inside `band`.
SpectralField from_physical(std::vector<Complex>& samples, const FrequencyLattice& lattice, const Band& band,
                            bool real);

}  // namespace wwlab::detail
