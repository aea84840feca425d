#include "wwlab/dispersion.hpp"

#include <algorithm>
#include <cmath>

#include "wwlab/errors.hpp"

namespace wwlab {

std::string to_string(WaveKind kind) {
  switch (kind) {
    case WaveKind::kGravityCapillary: return "gravity-capillary";
    case WaveKind::kSurfaceTension: return "surface-tension";
    case WaveKind::kGravity: return "gravity";
  }
  return "unknown";
}

std::string to_string(PropagatorForm form) { return form == PropagatorForm::kExact ? "exact" : "transposed"; }

DispersionLaw::DispersionLaw(double g, double tau) : g_(g), tau_(tau) {
  if (!(g >= 0.0) || !(tau >= 0.0) || !(g + tau > 0.0))
    throw InvalidArgument("dispersion law needs g >= 0, tau >= 0 and g + tau > 0");
}

WaveKind DispersionLaw::kind() const {
  if (tau_ == 0.0) return WaveKind::kGravity;
  if (g_ == 0.0) return WaveKind::kSurfaceTension;
  return WaveKind::kGravityCapillary;
}

double DispersionLaw::lambda(double r) const { return std::sqrt(r * (g_ + tau_ * r * r)); }

double sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
  }
  return std::sin(x) / x;
}

PropagatorSymbols propagator_symbols(const DispersionLaw& law, double r, double t) {
  const double lam = law.lambda(r);
  const double sc = t * sinc(lam * t);
  return {std::cos(lam * t), r * sc, -law.lambda_sq_over_r(r) * sc};
}

PropagatorSymbols propagator_symbols(const DispersionLaw& law, const Vec2& xi, double t) {
  return propagator_symbols(law, xi.norm(), t);
}

PropagatorMatrix propagator_matrix(const DispersionLaw& law, double r, double t, PropagatorForm form) {
  auto l = propagator_symbols(law, r, t);
  if (form == PropagatorForm::kExact) return {l.l1, l.l2, l.l3, l.l1};
  return {l.l1, l.l3, l.l2, l.l1};
}

SurfaceState apply_propagator(const DispersionLaw& law, const SurfaceState& state, double t, PropagatorForm form) {
  const auto& lat = state.lattice();
  SpectralField h(lat), psi(lat);
  Band band = Band::hull(state.h.band(), state.psi.band());
  if (band.empty()) return SurfaceState(h, psi);
  const int m = lat.max_wavenumber();
  const int ym = lat.dim() == 1 ? 0 : m;
  for (int kx = std::max(band.axis[0].lo, -m); kx <= std::min(band.axis[0].hi, m); ++kx) {
    for (int ky = std::max(band.axis[1].lo, -ym); ky <= std::min(band.axis[1].hi, ym); ++ky) {
      const Complex a = state.h.at(kx, ky), b = state.psi.at(kx, ky);
      if (a == Complex{} && b == Complex{}) continue;
      auto p = propagator_matrix(law, Vec2(kx, ky).norm(), t, form);
      h.set(kx, ky, p.hh * a + p.hpsi * b);
      psi.set(kx, ky, p.psih * a + p.psipsi * b);
    }
  }
  psi.restrict_to(band);
  h.restrict_to(band);
  const bool real = state.h.is_real() && state.psi.is_real();
  h.mark_real(real);
  psi.mark_real(real);
  return SurfaceState(h, psi);
}

}  // namespace wwlab
