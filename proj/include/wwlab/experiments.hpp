#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wwlab/duhamel.hpp"
#include "wwlab/multipliers.hpp"
#include "wwlab/sector.hpp"

namespace wwlab {

struct SweepConfig {
  double g = 1.0;
  double tau = 1.0;
  int dim = 2;
  double s = 1.0;
  double epsilon = 0.05;
  /// Cap exponent; defaults to the law's minimal admissible value.
  std::optional<double> a;
  std::vector<int> n_list;
  Backend backend = Backend::kSector;
  int time_nodes = 4;
  IterateOptions iterate;
  /// Defaults: exact for quadratic order, transposed for cubic order.
  std::optional<PropagatorForm> form;
  /// Defaults: full state norm for quadratic order, potential component for cubic order.
  std::optional<Component> component;
  /// Defaults: X with surface tension, Y for pure gravity.
  std::optional<Space> space;
  bool check_convergence = true;
  /// When false, runtime_ms is written as 0 so that output is reproducible byte for byte.
  bool timing = true;
  std::uint64_t seed = 0;

  DispersionLaw law() const { return {g, tau}; }
  double cap_exponent() const;
  Space norm_space() const;
  PropagatorForm form_for(Order order) const;
  Component component_for(Order order) const;
  double delta_for(int n) const;
  void validate() const;
};

struct ScalingRecord {
  int n = 0;
  double delta = 0.0;
  double cap = 0.0;
  double data_norm = 0.0;
  double sup_norm = 0.0;
  /// Cubic order only; NaN otherwise.
  double qtilde_norm = 0.0;
  double ctilde_norm = 0.0;
  double ratio = 0.0;
  double runtime_ms = 0.0;
  double doubling_change = 0.0;
  /// Quadratic order: sup norm over the full product support instead of E.
  std::optional<double> support_sup_norm;
};

/// One record per N; the iterate is measured over sector_E.
std::vector<ScalingRecord> scaling_sweep(const SweepConfig& config, Order order);

/// Sweeps at several Sobolev indices.  Iterates are computed once per N at unit
/// amplitude and rescaled, since they are homogeneous of degree 2 or 3 in the datum.
std::vector<std::vector<ScalingRecord>> scaling_sweep_multi(const SweepConfig& config, Order order,
                                                            const std::vector<double>& s_list);

enum class RecordField { kSupNorm, kQtildeNorm, kCtildeNorm, kRatio, kDataNorm };

std::string to_string(RecordField field);

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
};

/// Least squares of log(value) against log(N).
ExponentFit fit_exponent(const std::vector<ScalingRecord>& records, RecordField field);

enum class Verdict { kGrows, kBounded, kMarginal };

std::string to_string(Verdict verdict);

inline constexpr double kVerdictMargin = 0.15;

Verdict verdict_for(double slope);

struct ThresholdRow {
  double s = 0.0;
  ExponentFit fit;
  Verdict verdict = Verdict::kMarginal;
  std::vector<ScalingRecord> records;
};

struct ThresholdReport {
  Order order = Order::kCubic;
  int dim = 2;
  WaveKind kind = WaveKind::kGravityCapillary;
  Space space = Space::kX;
  double theoretical_threshold = 0.0;
  bool formal = false;
  std::vector<ThresholdRow> rows;
  /// Largest s with GROWS and smallest s with BOUNDED.
  std::optional<double> last_grows;
  std::optional<double> first_bounded;
  /// Every GROWS row lies below every BOUNDED row and the threshold lies between them.
  bool brackets = false;
  std::string label;
};

/// Threshold s of the chain: 3 - a at quadratic order, 3 (2d) and 5/2 (1d) at cubic order.
double theoretical_threshold(const SweepConfig& config, Order order);

ThresholdReport threshold_report(const SweepConfig& config, Order order, const std::vector<double>& s_list);

using Rational = boost::rational<long long>;

/// Parses "p/q", an integer, or a finite decimal such as "0.5" exactly.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

enum class ModelSystem { kSurfaceTension, kGravity };

struct ScalingWeights {
  Rational b_x;
  Rational w_h;
  Rational w_psi;
};

struct TermDegree {
  std::string equation;
  std::string term;
  Rational degree;
};

struct ModelScalingReport {
  ModelSystem system = ModelSystem::kSurfaceTension;
  std::vector<TermDegree> terms;
  /// Every equation is homogeneous: all its terms share one degree.
  bool invariant = false;
  /// Homogeneous Sobolev index at which each component norm of the datum is invariant.
  Rational critical_from_h;
  Rational critical_from_psi;
  bool critical_consistent = false;
};

/// Degrees of every term under h -> lambda^{-w_h} h(lambda t, lambda^{b_x} x),
/// psi -> lambda^{-w_psi} psi(lambda t, lambda^{b_x} x).
ModelScalingReport model_scaling_degrees(const ScalingWeights& weights, ModelSystem system, int dim);

}  // namespace wwlab
