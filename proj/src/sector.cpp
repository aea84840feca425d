#include "wwlab/sector.hpp"

#include <cmath>
#include <sstream>

#include "wwlab/errors.hpp"
#include "wwlab/quadrature.hpp"

namespace wwlab {

namespace {
constexpr double kBoundaryTol = 1e-12;
}

SectorRegion::SectorRegion(int dim_, double n_, double r_lo_, double r_hi_, double half_width_)
    : dim(dim_), n(n_), r_lo(r_lo_), r_hi(r_hi_), half_width(dim_ == 1 ? 0.0 : half_width_) {
  if (dim != 1 && dim != 2) throw InvalidArgument("region dimension must be 1 or 2");
  if (!(r_lo < r_hi)) throw InvalidArgument("region needs r_lo < r_hi");
  if (half_width < 0.0) throw InvalidArgument("region half-width must be nonnegative");
}

bool SectorRegion::contains(const Vec2& xi) const {
  const double lo = radius_lo(), hi = radius_hi();
  if (dim == 1) return xi.y == 0.0 && xi.x >= lo * (1 - kBoundaryTol) && xi.x <= hi * (1 + kBoundaryTol);
  const double r2 = xi.norm_sq();
  if (r2 < lo * lo * (1 - kBoundaryTol) || r2 > hi * hi * (1 + kBoundaryTol)) return false;
  if (xi.x <= 0.0 && half_width < M_PI / 2) return false;
  return std::abs(xi.angle()) <= half_width + kBoundaryTol;
}

FrequencyRegion SectorRegion::predicate() const {
  SectorRegion copy = *this;
  return [copy](const Vec2& xi) { return copy.contains(xi); };
}

std::string SectorRegion::describe() const {
  std::ostringstream os;
  os << "[" << r_lo << "N, " << r_hi << "N]";
  if (dim == 2) os << " x |theta| <= " << half_width;
  return os.str();
}

SectorRegion datum_support(int dim, int n, double delta) { return {dim, static_cast<double>(n), 1.0, 2.0, delta}; }

SectorRegion sector_E(int dim, int n, double delta, Order order, std::optional<double> half_width) {
  const double nn = n;
  if (dim == 1) return order == Order::kQuadratic ? SectorRegion(1, nn, 2.0, 4.0, 0.0) : SectorRegion(1, nn, 3.0, 6.0, 0.0);
  if (order == Order::kQuadratic) return {2, nn, 2.0, 4.0, half_width.value_or(delta / 2.0)};
  return {2, nn, 2.0, 6.0, half_width.value_or(delta)};
}

SectorRegion quadratic_support(int dim, int n, double delta) {
  if (dim == 1) return {1, static_cast<double>(n), 2.0, 4.0, 0.0};
  return {2, static_cast<double>(n), std::sqrt(2.0), 4.0, delta};
}

double SectorDatum::amplitude() const { return std::pow(static_cast<double>(n), -amplitude_exponent()); }

FrequencyLattice lattice_for(int dim, int n, Order order, Padding padding) {
  const int need = static_cast<int>(order) * 2 * n;
  int m = 4;
  while (m / 2 - 1 < need) m *= 2;
  return FrequencyLattice(dim, m, padding);
}

SectorDatum make_sector_datum(int dim, int n, double delta, double s, std::optional<GridRequest> grid) {
  if (dim != 1 && dim != 2) throw InvalidArgument("datum dimension must be 1 or 2");
  if (n <= 0) throw InvalidArgument("datum needs N > 0");
  if (dim == 2 && (!(delta > 0.0) || delta > M_PI / 2)) throw InvalidArgument("datum needs 0 < delta <= pi/2");
  SectorDatum d;
  d.dim = dim;
  d.n = n;
  d.delta = dim == 2 ? delta : 0.0;
  d.s = s;
  d.support = datum_support(dim, n, d.delta);
  if (!grid) return d;

  const FrequencyLattice& lat = grid->lattice;
  if (lat.dim() != dim) throw InvalidArgument("lattice dimension does not match the datum");
  const int need = static_cast<int>(grid->max_order) * 2 * n;
  if (need > lat.max_wavenumber()) {
    std::ostringstream msg;
    msg << "lattice band |k| <= " << lat.max_wavenumber() << " cannot hold order-" << static_cast<int>(grid->max_order)
        << " supports up to " << need;
    throw SupportOverflow(msg.str());
  }
  SpectralField psi(lat);
  const double amp = d.amplitude();
  const int ymax = dim == 2 ? 2 * n : 0;
  for (int kx = 0; kx <= 2 * n; ++kx)
    for (int ky = -ymax; ky <= ymax; ++ky)
      if (d.support.contains(Vec2(kx, ky))) psi.set(kx, ky, amp);
  psi.mark_real(false);
  SpectralField h(lat);
  d.grid = SurfaceState(h, psi);
  return d;
}

std::string to_string(Space space) { return space == Space::kX ? "X" : "Y"; }

std::string to_string(Component component) {
  switch (component) {
    case Component::kFull: return "full";
    case Component::kHeight: return "height";
    case Component::kPotential: return "potential";
  }
  return "unknown";
}

double state_norm(const SurfaceState& state, double s, Space space, const std::optional<SectorRegion>& region,
                  Component component) {
  FrequencyRegion pred = region ? region->predicate() : FrequencyRegion{};
  const double sh = space == Space::kX ? s + 0.5 : s - 0.5;
  double out = 0.0;
  if (component != Component::kPotential) out += sobolev_norm(state.h, sh, pred);
  if (component != Component::kHeight) out += sobolev_norm(state.psi, s, pred);
  return out;
}

double datum_norm(const SectorDatum& datum, Space space) {
  if (datum.grid) return state_norm(*datum.grid, datum.s, space);
  const double a = datum.amplitude();
  const double lo = datum.n, hi = 2.0 * datum.n;
  if (datum.dim == 2) {
    const double s1 = datum.s + 1.0;
    const double radial = std::abs(s1) < 1e-14 ? 0.5 * std::log((1 + hi * hi) / (1 + lo * lo))
                                               : (std::pow(1 + hi * hi, s1) - std::pow(1 + lo * lo, s1)) / (2.0 * s1);
    return a * std::sqrt(2.0 * datum.delta * radial);
  }
  auto rule = gauss_legendre(64, lo, hi);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * std::pow(1.0 + rule.nodes[i] * rule.nodes[i], datum.s);
  return a * std::sqrt(acc);
}

}  // namespace wwlab
