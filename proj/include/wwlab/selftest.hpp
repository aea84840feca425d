#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wwlab/dispersion.hpp"
#include "wwlab/multipliers.hpp"

namespace wwlab {

/// Determinant, semigroup and energy identities of the per-mode propagator over random (|xi|, t).
std::vector<AuditReport> propagator_identity_audit(const DispersionLaw& law, std::size_t samples, std::uint64_t seed);

/// Recursive against closed DN terms, homogeneity, self-adjointness of G1 and single-mode values,
/// on random real fields with at most 8 modes.
std::vector<AuditReport> dno_selftest(std::size_t fields, std::uint64_t seed);

/// Every audit used by the verify command, with the bound audits at scale N and angle delta.
std::vector<AuditReport> verify_suite(int n, double delta, std::size_t samples, std::uint64_t seed);

}  // namespace wwlab
