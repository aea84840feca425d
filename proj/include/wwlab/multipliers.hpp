#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "wwlab/dispersion.hpp"
#include "wwlab/vec.hpp"

namespace wwlab {

enum class Order { kQuadratic = 2, kCubic = 3 };

std::string to_string(Order order);

struct QuadraticSymbols {
  double m1;  ///< xi.eta - |xi||eta|, paired with h(xi - eta) psi(eta)
  double m2;  ///< ((xi-eta).eta + |xi-eta||eta|)/2, paired with psi(xi - eta) psi(eta)
};

QuadraticSymbols m_symbols(const Vec2& xi, const Vec2& eta);
/// Same values from m1 = |xi||eta|(cos t1 - 1), m2 = |xi-eta||eta|(cos t2 + 1)/2.
QuadraticSymbols m_symbols_angle_form(const Vec2& xi, const Vec2& eta);

/// Cubic symbols with zeta = xi - nu - eta:
///   p1  pairs with h(zeta) h(nu) psi(eta),
///   p21 pairs with h(zeta) psi(nu) psi(eta),
///   p22 pairs with h(zeta) h(nu) h(eta).
struct CubicSymbols {
  double p1;
  double p21;
  double p22;
};

CubicSymbols p_symbols(const Vec2& xi, const Vec2& nu, const Vec2& eta, double tau, int dim);

/// One audited ratio over a sample set.
struct AuditReport {
  std::string check;
  std::size_t samples = 0;
  double measured_min = std::numeric_limits<double>::infinity();
  double measured_max = -std::numeric_limits<double>::infinity();
  double claimed_lo = -std::numeric_limits<double>::infinity();
  double claimed_hi = std::numeric_limits<double>::infinity();
  /// Informational checks carry no claimed band and always pass.
  bool informational = false;
  bool pass = true;
  std::vector<double> worst_point;
};

/// Band of -p22 / (tau N^4) over the cubic datum support.
struct P22Band {
  double lo;
  double hi;
};

/// Calibrated at N = 64 by a dense sweep, widened by 10% on each side.
P22Band calibrated_p22_band(int dim);

/// Support and multiplier bounds over pairs (quadratic) or triples (cubic) drawn from the datum support.
std::vector<AuditReport> support_and_bound_audit(int n, double delta, int dim, Order order, std::size_t samples,
                                                 std::uint64_t seed);

/// Dominant and parasitic terms of the second-iterate integrand in 2d.
std::vector<AuditReport> propagator_combo_audit(const DispersionLaw& law, int n, double delta, double a,
                                                std::size_t samples, std::uint64_t seed);

/// |lambda(zeta) +- lambda(nu) +- lambda(eta)| / N^{3/2} over cubic triples in 2d.
std::vector<AuditReport> phase_combination_audit(const DispersionLaw& law, int n, double delta, std::size_t samples,
                                                 std::uint64_t seed);

/// Smallest admissible cap exponent of a law: 3/2 with surface tension, 1/2 for gravity.
double minimal_cap_exponent(const DispersionLaw& law);

}  // namespace wwlab
