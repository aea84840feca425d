#include "wwlab/duhamel.hpp"

#include <cmath>
#include <sstream>

#include "wwlab/errors.hpp"
#include "wwlab/quadrature.hpp"
#include "wwlab/variations.hpp"

namespace wwlab {

QuadratureSpec QuadratureSpec::for_cap(int n, double a, int nodes) {
  QuadratureSpec q;
  q.outer_nodes = nodes;
  q.inner_nodes = nodes;
  q.cap_exponent = a;
  q.cap = std::pow(static_cast<double>(n), -a) / 100.0;
  return q;
}

std::vector<double> QuadratureSpec::times() const {
  std::vector<double> out;
  for (int k = 1; k <= output_times; ++k) out.push_back(cap * k / output_times);
  return out;
}

void QuadratureSpec::validate() const {
  if (outer_nodes < 4 || inner_nodes < 4) throw InvalidArgument("time quadrature needs at least 4 nodes");
  if (!(cap > 0.0)) throw InvalidArgument("time cap must be positive");
  if (output_times < 1) throw InvalidArgument("need at least one output time");
}

std::string to_string(Backend backend) { return backend == Backend::kGrid ? "grid" : "sector"; }

std::string to_string(Piece piece) {
  switch (piece) {
    case Piece::kWhole: return "whole";
    case Piece::kMixed: return "mixed";
    case Piece::kPure: return "pure";
  }
  return "unknown";
}

void check_phase_cap(const DispersionLaw& law, double r_max, double cap) {
  const double phase = law.lambda(r_max) * cap;
  if (std::cos(phase) < 0.5 || phase > M_PI / 3) {
    std::ostringstream msg;
    msg << "time cap violated: lambda(" << r_max << ") T = " << phase << " exceeds pi/3";
    throw InvalidArgument(msg.str());
  }
}

namespace {

double l2(const SurfaceState& s) {
  double acc = 0.0;
  for (const auto& c : s.h.data()) acc += std::norm(c);
  for (const auto& c : s.psi.data()) acc += std::norm(c);
  return std::sqrt(acc);
}

SurfaceState duhamel_once(const DispersionLaw& law, const std::function<SurfaceState(double)>& forcing, double t,
                          int nodes, const FrequencyLattice& lattice, PropagatorForm form) {
  SurfaceState acc(lattice);
  if (t == 0.0) return acc;
  auto rule = gauss_legendre(nodes, 0.0, t);
  for (int j = 0; j < nodes; ++j)
    acc += rule.weights[j] * apply_propagator(law, forcing(rule.nodes[j]), t - rule.nodes[j], form);
  return acc;
}

}  // namespace

DuhamelResult duhamel(const DispersionLaw& law, const std::function<SurfaceState(double)>& forcing, double t,
                      int nodes, const FrequencyLattice& lattice, PropagatorForm form, bool check_convergence) {
  if (nodes < 1) throw InvalidArgument("Duhamel quadrature needs nodes");
  SurfaceState coarse = duhamel_once(law, forcing, t, nodes, lattice, form);
  if (!check_convergence) return {coarse, 0.0};
  SurfaceState fine = duhamel_once(law, forcing, t, 2 * nodes, lattice, form);
  SurfaceState diff = fine + (-1.0) * coarse;
  const double ref = l2(fine);
  return {fine, ref > 0 ? l2(diff) / ref : l2(diff)};
}

Spectrum spectrum_of(const SurfaceState& state) {
  Spectrum out;
  Band band = Band::hull(state.h.band(), state.psi.band());
  if (band.empty()) return out;
  const auto& lat = state.lattice();
  const int m = lat.max_wavenumber();
  const int ym = lat.dim() == 1 ? 0 : m;
  for (int kx = std::max(band.axis[0].lo, -m); kx <= std::min(band.axis[0].hi, m); ++kx)
    for (int ky = std::max(band.axis[1].lo, -ym); ky <= std::min(band.axis[1].hi, ym); ++ky) {
      const Complex h = state.h.at(kx, ky), p = state.psi.at(kx, ky);
      if (h != Complex{} || p != Complex{}) out.push_back({Vec2(kx, ky), 1.0, h, p});
    }
  return out;
}

double spectrum_change(const std::vector<Spectrum>& coarse, const std::vector<Spectrum>& fine) {
  if (coarse.size() != fine.size()) throw InvalidArgument("spectra differ in time count");
  double worst = 0.0;
  for (std::size_t k = 0; k < fine.size(); ++k) {
    if (coarse[k].size() != fine[k].size()) throw InvalidArgument("spectra differ in node count");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < fine[k].size(); ++i) {
      const auto& a = coarse[k][i];
      const auto& b = fine[k][i];
      num += b.weight * (std::norm(b.h - a.h) + std::norm(b.psi - a.psi));
      den += b.weight * (std::norm(b.h) + std::norm(b.psi));
    }
    if (den > 0) worst = std::max(worst, std::sqrt(num / den));
  }
  return worst;
}

const std::vector<Spectrum>& IterateResult::piece(Piece p) const {
  switch (p) {
    case Piece::kWhole: return whole;
    case Piece::kMixed:
      if (order != 3) throw InvalidArgument("only the third iterate has a mixed piece");
      return mixed;
    case Piece::kPure:
      if (order != 3) throw InvalidArgument("only the third iterate has a pure piece");
      return pure;
  }
  return whole;
}

double IterateResult::norm_at(std::size_t time_index, Piece p, double s, Space space,
                              const std::optional<SectorRegion>& region, Component component) const {
  if (quadrature_region && region && !(*region == *quadrature_region))
    throw InvalidArgument("sector-backend samples only integrate over " + quadrature_region->describe());
  const bool filter = region && !quadrature_region;
  const double sh = space == Space::kX ? s + 0.5 : s - 0.5;
  double hh = 0.0, pp = 0.0;
  for (const auto& smp : piece(p).at(time_index)) {
    if (filter && !region->contains(smp.xi)) continue;
    const double br = 1.0 + smp.xi.norm_sq();
    hh += smp.weight * std::pow(br, sh) * std::norm(smp.h);
    pp += smp.weight * std::pow(br, s) * std::norm(smp.psi);
  }
  double out = 0.0;
  if (component != Component::kPotential) out += std::sqrt(hh);
  if (component != Component::kHeight) out += std::sqrt(pp);
  return out;
}

double IterateResult::sup_norm(Piece p, double s, Space space, const std::optional<SectorRegion>& region,
                               Component component) const {
  double best = 0.0;
  for (std::size_t k = 0; k < times.size(); ++k) best = std::max(best, norm_at(k, p, s, space, region, component));
  return best;
}

void IterateResult::scale(double factor) {
  for (auto* list : {&whole, &mixed, &pure})
    for (auto& spec : *list)
      for (auto& smp : spec) {
        smp.h *= factor;
        smp.psi *= factor;
      }
}

namespace {

const SurfaceState& grid_datum(const SectorDatum& datum) {
  if (!datum.grid) throw InvalidArgument("grid backend needs a datum with a lattice realization");
  return *datum.grid;
}

std::vector<Spectrum> second_iterate_grid_once(const DispersionLaw& law, const SurfaceState& psi0,
                                               const std::vector<double>& times, int nodes, PropagatorForm form) {
  const auto& lat = psi0.lattice();
  auto forcing = [&](double tp) {
    SurfaceState first = apply_propagator(law, psi0, tp, form);
    return quadratic_forcing(first.h, first.psi);
  };
  std::vector<Spectrum> out;
  for (double t : times) out.push_back(spectrum_of(duhamel(law, forcing, t, nodes, lat, form, false).value));
  return out;
}

struct GridThird {
  std::vector<Spectrum> whole, mixed, pure;
};

GridThird third_iterate_grid_once(const DispersionLaw& law, const SurfaceState& psi0, const std::vector<double>& times,
                                  int outer, int inner, PropagatorForm form) {
  const auto& lat = psi0.lattice();
  const double w = mixed_weight(lat.dim());
  auto quad_forcing = [&](double tpp) {
    SurfaceState first = apply_propagator(law, psi0, tpp, form);
    return quadratic_forcing(first.h, first.psi);
  };
  GridThird out;
  for (double t : times) {
    SurfaceState mixed(lat), pure(lat);
    auto rule = gauss_legendre(outer, 0.0, t);
    for (int j = 0; j < outer; ++j) {
      const double tp = rule.nodes[j];
      SurfaceState first = apply_propagator(law, psi0, tp, form);
      SurfaceState second = duhamel(law, quad_forcing, tp, inner, lat, form, false).value;
      SurfaceState q = cubic_mixed_forcing(first.h, first.psi, second.h, second.psi);
      SurfaceState c = cubic_pure_forcing(first.h, first.psi, law);
      mixed += (rule.weights[j] * w) * apply_propagator(law, q, t - tp, form);
      pure += rule.weights[j] * apply_propagator(law, c, t - tp, form);
    }
    out.whole.push_back(spectrum_of(mixed + pure));
    out.mixed.push_back(spectrum_of(mixed));
    out.pure.push_back(spectrum_of(pure));
  }
  return out;
}

// Aligns two lattice spectra on the union of their supports.
void align(std::vector<Spectrum>& a, std::vector<Spectrum>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    auto key = [](const SpectrumSample& s) { return std::make_pair(s.xi.x, s.xi.y); };
    std::vector<SpectrumSample> ua, ub;
    std::size_t i = 0, j = 0;
    auto& x = a[k];
    auto& y = b[k];
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && key(x[i]) < key(y[j]))) {
        ua.push_back(x[i]);
        ub.push_back({x[i].xi, 1.0, {}, {}});
        ++i;
      } else if (i == x.size() || key(y[j]) < key(x[i])) {
        ua.push_back({y[j].xi, 1.0, {}, {}});
        ub.push_back(y[j]);
        ++j;
      } else {
        ua.push_back(x[i++]);
        ub.push_back(y[j++]);
      }
    }
    x = std::move(ua);
    y = std::move(ub);
  }
}

}  // namespace

IterateResult second_iterate(const DispersionLaw& law, const SectorDatum& datum, const QuadratureSpec& quad,
                             const IterateOptions& options) {
  quad.validate();
  check_phase_cap(law, 4.0 * datum.n, quad.cap);
  if (options.backend == Backend::kSector) return detail::second_iterate_sector(law, datum, quad, options);
  const SurfaceState& psi0 = grid_datum(datum);
  IterateResult r;
  r.order = 2;
  r.dim = datum.dim;
  r.backend = Backend::kGrid;
  r.times = quad.times();
  r.whole = second_iterate_grid_once(law, psi0, r.times, quad.outer_nodes, options.form);
  if (quad.check_convergence) {
    auto fine = second_iterate_grid_once(law, psi0, r.times, 2 * quad.outer_nodes, options.form);
    align(r.whole, fine);
    r.doubling_change = spectrum_change(r.whole, fine);
    r.whole = std::move(fine);
    r.converged = r.doubling_change < quad.tolerance;
  }
  return r;
}

IterateResult third_iterate(const DispersionLaw& law, const SectorDatum& datum, const QuadratureSpec& quad,
                            const IterateOptions& options) {
  quad.validate();
  check_phase_cap(law, 6.0 * datum.n, quad.cap);
  if (options.backend == Backend::kSector) return detail::third_iterate_sector(law, datum, quad, options);
  const SurfaceState& psi0 = grid_datum(datum);
  IterateResult r;
  r.order = 3;
  r.dim = datum.dim;
  r.backend = Backend::kGrid;
  r.mixed_weight = mixed_weight(datum.dim);
  r.times = quad.times();
  auto coarse = third_iterate_grid_once(law, psi0, r.times, quad.outer_nodes, quad.inner_nodes, options.form);
  if (quad.check_convergence) {
    auto fine = third_iterate_grid_once(law, psi0, r.times, 2 * quad.outer_nodes, 2 * quad.inner_nodes, options.form);
    double change = 0.0;
    for (auto [c, f] : {std::pair{&coarse.whole, &fine.whole}, std::pair{&coarse.mixed, &fine.mixed},
                        std::pair{&coarse.pure, &fine.pure}}) {
      align(*c, *f);
      change = std::max(change, spectrum_change(*c, *f));
    }
    r.doubling_change = change;
    r.converged = change < quad.tolerance;
    coarse = std::move(fine);
  }
  r.whole = std::move(coarse.whole);
  r.mixed = std::move(coarse.mixed);
  r.pure = std::move(coarse.pure);
  return r;
}

}  // namespace wwlab
