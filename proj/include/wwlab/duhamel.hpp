#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wwlab/dispersion.hpp"
#include "wwlab/sector.hpp"
#include "wwlab/sector_quadrature.hpp"
#include "wwlab/spectral.hpp"

namespace wwlab {

/// Gauss-Legendre time quadrature under the cap T = N^{-a}/100.
struct QuadratureSpec {
  int outer_nodes = 4;
  int inner_nodes = 4;
  double cap_exponent = 1.5;
  double cap = 0.0;
  /// Output times T k / output_times, k = 1..output_times.
  int output_times = 8;
  /// Repeat with doubled node counts and report the relative change.
  bool check_convergence = true;
  double tolerance = 1e-8;

  static QuadratureSpec for_cap(int n, double a, int nodes = 4);
  std::vector<double> times() const;
  void validate() const;
};

enum class Backend { kGrid, kSector };

std::string to_string(Backend backend);

struct DuhamelResult {
  SurfaceState value;
  /// Relative l2 change between n and 2n nodes; zero when not checked.
  double doubling_change = 0.0;
};

/// Gauss-Legendre approximation of int_0^t e^{(t-t')L} F(t') dt'.
DuhamelResult duhamel(const DispersionLaw& law, const std::function<SurfaceState(double)>& forcing, double t,
                      int nodes, const FrequencyLattice& lattice, PropagatorForm form = PropagatorForm::kExact,
                      bool check_convergence = true);

struct SpectrumSample {
  Vec2 xi;
  double weight;
  Complex h;
  Complex psi;
};

using Spectrum = std::vector<SpectrumSample>;

/// Piece of an iterate: the whole, the weighted mixed piece (3 or 6 times Qt), or the pure piece Ct.
enum class Piece { kWhole, kMixed, kPure };

std::string to_string(Piece piece);

struct IterateOptions {
  Backend backend = Backend::kSector;
  PropagatorForm form = PropagatorForm::kExact;
  /// Sector backend measure; defaults to the continuum.
  std::shared_ptr<const SupportMeasure> measure;
  /// Sector backend: region carrying the output nodes; defaults to sector_E.
  std::optional<SectorRegion> output_region;
  PolarResolution output_resolution{16, 16};
  PolarResolution support_resolution{12, 8};
  PolarResolution pair_resolution{16, 16};
};

/// Iterate spectrum at each output time, with pieces for the third iterate.
class IterateResult {
 public:
  int order = 2;
  int dim = 2;
  Backend backend = Backend::kSector;
  int mixed_weight = 0;
  std::vector<double> times;
  std::vector<Spectrum> whole;
  std::vector<Spectrum> mixed;
  std::vector<Spectrum> pure;
  /// Sector backend: the samples integrate over this region only.
  std::optional<SectorRegion> quadrature_region;
  double doubling_change = 0.0;
  bool converged = true;

  const std::vector<Spectrum>& piece(Piece p) const;
  double norm_at(std::size_t time_index, Piece p, double s, Space space, const std::optional<SectorRegion>& region,
                 Component component = Component::kFull) const;
  /// Maximum of norm_at over the output times.
  double sup_norm(Piece p, double s, Space space, const std::optional<SectorRegion>& region,
                  Component component = Component::kFull) const;
  void scale(double factor);
};

/// Second iterate: int_0^t e^{(t-t')L} d^2N(t') dt' with the first iterate e^{t'L}(0, psi0).
IterateResult second_iterate(const DispersionLaw& law, const SectorDatum& datum, const QuadratureSpec& quad,
                             const IterateOptions& options = {});

/// Third iterate and its pieces; the mixed piece nests a Duhamel integral for the second iterate.
IterateResult third_iterate(const DispersionLaw& law, const SectorDatum& datum, const QuadratureSpec& quad,
                            const IterateOptions& options = {});

/// Spectrum of a lattice state: every populated lattice point with unit weight.
Spectrum spectrum_of(const SurfaceState& state);

/// Largest relative l2 difference between matching spectra.
double spectrum_change(const std::vector<Spectrum>& coarse, const std::vector<Spectrum>& fine);

/// Throws InvalidArgument unless cos(lambda(r_max) T) >= 1/2.
void check_phase_cap(const DispersionLaw& law, double r_max, double cap);

namespace detail {
IterateResult second_iterate_sector(const DispersionLaw& law, const SectorDatum& datum, const QuadratureSpec& quad,
                                    const IterateOptions& options);
IterateResult third_iterate_sector(const DispersionLaw& law, const SectorDatum& datum, const QuadratureSpec& quad,
                                   const IterateOptions& options);
}  // namespace detail

}  // namespace wwlab
