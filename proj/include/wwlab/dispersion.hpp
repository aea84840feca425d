#pragma once

#include <string>

#include "wwlab/spectral.hpp"

namespace wwlab {

enum class WaveKind { kGravityCapillary, kSurfaceTension, kGravity };

std::string to_string(WaveKind kind);

/// lambda(r) = sqrt(g r + tau r^3).
class DispersionLaw {
 public:
  DispersionLaw(double g, double tau);

  double g() const { return g_; }
  double tau() const { return tau_; }
  WaveKind kind() const;
  double lambda(double r) const;
  /// lambda(r)^2 / r = g + tau r^2, finite at r = 0.
  double lambda_sq_over_r(double r) const { return g_ + tau_ * r * r; }

 private:
  double g_;
  double tau_;
};

struct PropagatorSymbols {
  double l1;  ///< cos(lambda t)
  double l2;  ///< sin(lambda t) |xi| / lambda
  double l3;  ///< -sin(lambda t) lambda / |xi|
};

PropagatorSymbols propagator_symbols(const DispersionLaw& law, double r, double t);
PropagatorSymbols propagator_symbols(const DispersionLaw& law, const Vec2& xi, double t);

/// Placement of L2 and L3 in the per-mode 2x2 propagator.
///
/// kExact is exp(t L) for dh/dt = |D| psi, dpsi/dt = -(g - tau Lap) h:
///   h' = L1 H + L2 Psi,  psi' = L3 H + L1 Psi.
/// kTransposed swaps the off-diagonal entries:
///   h' = L1 H + L3 Psi,  psi' = L2 H + L1 Psi.
enum class PropagatorForm { kExact, kTransposed };

std::string to_string(PropagatorForm form);

/// Row-major 2x2 matrix acting on (H, Psi).
struct PropagatorMatrix {
  double hh, hpsi, psih, psipsi;
};

PropagatorMatrix propagator_matrix(const DispersionLaw& law, double r, double t,
                                   PropagatorForm form = PropagatorForm::kExact);

SurfaceState apply_propagator(const DispersionLaw& law, const SurfaceState& state, double t,
                              PropagatorForm form = PropagatorForm::kExact);

/// sin(x)/x with the removable point filled in.
double sinc(double x);

}  // namespace wwlab
