#pragma once

#include <optional>
#include <string>

#include "wwlab/multipliers.hpp"
#include "wwlab/spectral.hpp"

namespace wwlab {

/// Annular sector {r_lo N <= |xi| <= r_hi N, |arg xi| <= half_width} centered on the positive
/// first axis; in 1d the interval [r_lo N, r_hi N].  Boundaries are closed.
struct SectorRegion {
  int dim = 2;
  double n = 1.0;
  double r_lo = 1.0;
  double r_hi = 2.0;
  double half_width = 0.0;

  SectorRegion() = default;
  SectorRegion(int dim_, double n_, double r_lo_, double r_hi_, double half_width_);

  double radius_lo() const { return r_lo * n; }
  double radius_hi() const { return r_hi * n; }
  bool contains(const Vec2& xi) const;
  FrequencyRegion predicate() const;
  std::string describe() const;
  bool operator==(const SectorRegion&) const = default;
};

/// {N <= |xi| <= 2N, |theta| <= delta}, or [N, 2N] in 1d.
SectorRegion datum_support(int dim, int n, double delta);

/// Output sector: 2d quadratic [2N,4N] x delta/2, 2d cubic [2N,6N] x delta,
/// 1d quadratic [2N,4N], 1d cubic [3N,6N].  `half_width` overrides the 2d angle.
SectorRegion sector_E(int dim, int n, double delta, Order order, std::optional<double> half_width = {});

/// Support of psi0(xi - eta) psi0(eta): [sqrt2 N, 4N] x delta in 2d, [2N, 4N] in 1d.
SectorRegion quadratic_support(int dim, int n, double delta);

struct GridRequest {
  FrequencyLattice lattice;
  /// Highest iterate order the realization must support without overflow.
  Order max_order = Order::kCubic;
};

/// h0 = 0 and psi0 = N^{-(s+1)} on the sector (2d) or N^{-(s+1/2)} on [N, 2N] (1d).
struct SectorDatum {
  int dim = 2;
  int n = 0;
  double delta = 0.0;
  double s = 0.0;
  SectorRegion support;
  std::optional<SurfaceState> grid;

  double amplitude_exponent() const { return dim == 2 ? s + 1.0 : s + 0.5; }
  double amplitude() const;
};

SectorDatum make_sector_datum(int dim, int n, double delta, double s, std::optional<GridRequest> grid = {});

/// Smallest power-of-two lattice whose usable band covers frequencies up to order * 2N.
FrequencyLattice lattice_for(int dim, int n, Order order, Padding padding = Padding::kTwo);

/// X^s = H^{s+1/2} x H^s, Y^s = H^{s-1/2} x H^s.
enum class Space { kX, kY };
/// Which components enter a state norm.
enum class Component { kFull, kHeight, kPotential };

std::string to_string(Space space);
std::string to_string(Component component);

/// Sum of the component norms, optionally restricted to a region.
double state_norm(const SurfaceState& state, double s, Space space, const std::optional<SectorRegion>& region = {},
                  Component component = Component::kFull);

/// Norm of the datum: from its grid realization when present, otherwise the continuum
/// integral A^2 * integral over the sector of <xi>^{2s}.
double datum_norm(const SectorDatum& datum, Space space);

}  // namespace wwlab
