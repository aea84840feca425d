#include "wwlab/sector_quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "wwlab/errors.hpp"
#include "wwlab/quadrature.hpp"

namespace wwlab {

std::vector<std::pair<double, double>> admissible_radii(const SectorRegion& region, const Vec2& c, double phi) {
  const double r_in = region.radius_lo(), r_out = region.radius_hi();
  const double delta = region.half_width;
  const Vec2 e(std::cos(phi), std::sin(phi));
  const double b = dot(c, e);
  const double q = c.norm_sq();

  // |c - rho e| <= r_out
  const double disc = b * b - q + r_out * r_out;
  if (disc < 0.0) return {};
  double lo = std::max(r_in, b - std::sqrt(disc));
  double hi = std::min(r_out, b + std::sqrt(disc));

  // c - rho e inside the wedge |arg| <= delta: two half-planes.
  const Vec2 n1(std::sin(delta), -std::cos(delta));
  const Vec2 n2(std::sin(delta), std::cos(delta));
  const double s1 = std::sin(delta - phi), s2 = std::sin(delta + phi);
  const double c1 = dot(c, n1), c2 = dot(c, n2);
  if (s1 > 0.0)
    hi = std::min(hi, c1 / s1);
  else if (c1 < 0.0)
    return {};
  if (s2 > 0.0)
    hi = std::min(hi, c2 / s2);
  else if (c2 < 0.0)
    return {};
  if (!(lo < hi)) return {};

  // |c - rho e| >= r_in removes one open interval.
  const double disc_in = b * b - q + r_in * r_in;
  if (disc_in <= 0.0) return {{lo, hi}};
  const double e1 = b - std::sqrt(disc_in), e2 = b + std::sqrt(disc_in);
  std::vector<std::pair<double, double>> out;
  if (lo < std::min(hi, e1)) out.emplace_back(lo, std::min(hi, e1));
  if (std::max(lo, e2) < hi) out.emplace_back(std::max(lo, e2), hi);
  return out;
}

std::vector<WeightedNode> ContinuumMeasure::region_nodes(const SectorRegion& region,
                                                         const PolarResolution& res) const {
  std::vector<WeightedNode> out;
  auto radial = gauss_legendre(res.radial, region.radius_lo(), region.radius_hi());
  if (region.dim == 1) {
    for (int i = 0; i < res.radial; ++i) out.push_back({Vec2(radial.nodes[i], 0.0), radial.weights[i]});
    return out;
  }
  if (!(region.half_width > 0.0)) throw InvalidArgument("2d sector quadrature needs a positive half-width");
  auto angular = gauss_legendre(res.angular, -region.half_width, region.half_width);
  for (int j = 0; j < res.angular; ++j)
    for (int i = 0; i < res.radial; ++i)
      out.push_back({polar(radial.nodes[i], angular.nodes[j]), radial.weights[i] * angular.weights[j] * radial.nodes[i]});
  return out;
}

std::vector<WeightedNode> ContinuumMeasure::pair_nodes(const SectorRegion& region, const Vec2& c,
                                                       const PolarResolution& res) const {
  std::vector<WeightedNode> out;
  if (region.dim == 1) {
    const double lo = std::max(region.radius_lo(), c.x - region.radius_hi());
    const double hi = std::min(region.radius_hi(), c.x - region.radius_lo());
    if (!(lo < hi)) return out;
    auto rule = gauss_legendre(res.radial, lo, hi);
    for (int i = 0; i < res.radial; ++i) out.push_back({Vec2(rule.nodes[i], 0.0), rule.weights[i]});
    return out;
  }
  auto angular = gauss_legendre(res.angular, -region.half_width, region.half_width);
  auto unit = gauss_legendre(res.radial, 0.0, 1.0);
  for (int j = 0; j < res.angular; ++j) {
    const double phi = angular.nodes[j];
    for (auto [lo, hi] : admissible_radii(region, c, phi)) {
      const double len = hi - lo;
      for (int i = 0; i < res.radial; ++i) {
        const double rho = lo + len * unit.nodes[i];
        out.push_back({polar(rho, phi), angular.weights[j] * unit.weights[i] * len * rho});
      }
    }
  }
  return out;
}

std::vector<WeightedNode> LatticeMeasure::region_nodes(const SectorRegion& region, const PolarResolution&) const {
  std::vector<WeightedNode> out;
  const int kmax = static_cast<int>(std::ceil(region.radius_hi()));
  const int ymax = region.dim == 2 ? kmax : 0;
  for (int kx = 0; kx <= kmax; ++kx)
    for (int ky = -ymax; ky <= ymax; ++ky)
      if (region.contains(Vec2(kx, ky))) out.push_back({Vec2(kx, ky), 1.0});
  return out;
}

std::vector<WeightedNode> LatticeMeasure::pair_nodes(const SectorRegion& region, const Vec2& c,
                                                     const PolarResolution& res) const {
  std::vector<WeightedNode> out;
  if (c.x != std::round(c.x) || c.y != std::round(c.y)) throw InvalidArgument("lattice measure needs integer shifts");
  for (const auto& node : region_nodes(region, res))
    if (region.contains(c - node.at)) out.push_back(node);
  return out;
}

}  // namespace wwlab
