#pragma once

#include <vector>

#include "wwlab/sector.hpp"

namespace wwlab {

struct WeightedNode {
  Vec2 at;
  double weight;
};

/// Node counts of a polar tensor rule; in 1d only `radial` is used.
struct PolarResolution {
  int radial = 16;
  int angular = 16;
};

/// Integration measure over frequency space restricted to sectors.
class SupportMeasure {
 public:
  virtual ~SupportMeasure() = default;
  /// Nodes covering `region`.
  virtual std::vector<WeightedNode> region_nodes(const SectorRegion& region, const PolarResolution& res) const = 0;
  /// Nodes covering {v in region : c - v in region}.
  virtual std::vector<WeightedNode> pair_nodes(const SectorRegion& region, const Vec2& c,
                                               const PolarResolution& res) const = 0;
  virtual bool is_lattice() const = 0;
};

/// Lebesgue measure.  Gauss-Legendre in angle, and in radius over the exact admissible
/// radial intervals of each angle (at most two, from the two annulus conditions and the
/// two wedge half-planes of the shifted sector).
class ContinuumMeasure final : public SupportMeasure {
 public:
  std::vector<WeightedNode> region_nodes(const SectorRegion& region, const PolarResolution& res) const override;
  std::vector<WeightedNode> pair_nodes(const SectorRegion& region, const Vec2& c,
                                       const PolarResolution& res) const override;
  bool is_lattice() const override { return false; }
};

/// Counting measure on integer wave vectors, unit weight per point.
class LatticeMeasure final : public SupportMeasure {
 public:
  std::vector<WeightedNode> region_nodes(const SectorRegion& region, const PolarResolution& res) const override;
  std::vector<WeightedNode> pair_nodes(const SectorRegion& region, const Vec2& c,
                                       const PolarResolution& res) const override;
  bool is_lattice() const override { return true; }
};

/// Radial intervals of {rho e(phi) in region} intersected with {c - rho e(phi) in region},
/// for a direction with |phi| <= region.half_width.
std::vector<std::pair<double, double>> admissible_radii(const SectorRegion& region, const Vec2& c, double phi);

}  // namespace wwlab
