#include "wwlab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "wwlab/errors.hpp"

namespace wwlab {

double SweepConfig::cap_exponent() const { return a.value_or(minimal_cap_exponent(law())); }

Space SweepConfig::norm_space() const { return space.value_or(tau > 0.0 ? Space::kX : Space::kY); }

PropagatorForm SweepConfig::form_for(Order order) const {
  return form.value_or(order == Order::kQuadratic ? PropagatorForm::kExact : PropagatorForm::kTransposed);
}

Component SweepConfig::component_for(Order order) const {
  return component.value_or(order == Order::kQuadratic ? Component::kFull : Component::kPotential);
}

double SweepConfig::delta_for(int n) const { return dim == 2 ? std::pow(static_cast<double>(n), -2.0 * epsilon) : 0.0; }

void SweepConfig::validate() const {
  (void)law();
  if (dim != 1 && dim != 2) throw InvalidArgument("dimension must be 1 or 2");
  if (epsilon < 0.0) throw InvalidArgument("epsilon must be nonnegative");
  if (cap_exponent() < minimal_cap_exponent(law())) throw InvalidArgument("cap exponent below the law's admissible minimum");
  if (n_list.empty()) throw InvalidArgument("empty N list");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] <= 0) throw InvalidArgument("N values must be positive");
    if (i > 0 && n_list[i] <= n_list[i - 1]) throw InvalidArgument("N list must be strictly increasing");
  }
  if (time_nodes < 4) throw InvalidArgument("time quadrature needs at least 4 nodes");
}

namespace {

SectorDatum datum_for(const SweepConfig& c, int n, double s, Order order) {
  std::optional<GridRequest> grid;
  if (c.backend == Backend::kGrid) grid = GridRequest{lattice_for(c.dim, n, order), order};
  return make_sector_datum(c.dim, n, c.delta_for(n), s, grid);
}

IterateResult run_iterate(const SweepConfig& c, const SectorDatum& datum, Order order,
                          const std::optional<SectorRegion>& region) {
  const DispersionLaw law = c.law();
  QuadratureSpec quad = QuadratureSpec::for_cap(datum.n, c.cap_exponent(), c.time_nodes);
  quad.check_convergence = c.check_convergence;
  IterateOptions opt = c.iterate;
  opt.backend = c.backend;
  opt.form = c.form_for(order);
  if (region) opt.output_region = region;
  IterateResult r = order == Order::kQuadratic ? second_iterate(law, datum, quad, opt) : third_iterate(law, datum, quad, opt);
  if (!r.converged) {
    std::ostringstream msg;
    msg << "time quadrature did not converge at N = " << datum.n << ": node doubling changed the iterate by "
        << r.doubling_change << " (tolerance " << quad.tolerance << ")";
    throw NonConvergence(msg.str());
  }
  return r;
}

}  // namespace

std::vector<std::vector<ScalingRecord>> scaling_sweep_multi(const SweepConfig& config, Order order,
                                                            const std::vector<double>& s_list) {
  config.validate();
  if (s_list.empty()) throw InvalidArgument("empty s list");
  const int k = static_cast<int>(order);
  const Space space = config.norm_space();
  const Component comp = config.component_for(order);
  std::vector<std::vector<ScalingRecord>> out(s_list.size());
  for (int n : config.n_list) {
    const SectorDatum ref = datum_for(config, n, s_list.front(), order);
    const SectorRegion e = sector_E(config.dim, n, ref.delta, order);
    auto start = std::chrono::steady_clock::now();
    IterateResult r = run_iterate(config, ref, order, std::nullopt);
    std::optional<IterateResult> wide;
    if (order == Order::kQuadratic) wide = run_iterate(config, ref, order, quadratic_support(config.dim, n, ref.delta));
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    for (std::size_t i = 0; i < s_list.size(); ++i) {
      const double s = s_list[i];
      const SectorDatum d = datum_for(config, n, s, order);
      const double factor = std::pow(d.amplitude() / ref.amplitude(), k);
      ScalingRecord rec;
      rec.n = n;
      rec.delta = d.delta;
      rec.cap = std::pow(static_cast<double>(n), -config.cap_exponent()) / 100.0;
      rec.data_norm = datum_norm(d, space);
      rec.sup_norm = factor * r.sup_norm(Piece::kWhole, s, space, e, comp);
      if (order == Order::kCubic) {
        rec.qtilde_norm = factor * r.sup_norm(Piece::kMixed, s, space, e, comp);
        rec.ctilde_norm = factor * r.sup_norm(Piece::kPure, s, space, e, comp);
      } else {
        rec.qtilde_norm = std::numeric_limits<double>::quiet_NaN();
        rec.ctilde_norm = std::numeric_limits<double>::quiet_NaN();
        const std::optional<SectorRegion> sup_region =
            wide->quadrature_region ? std::nullopt : std::optional(quadratic_support(config.dim, n, d.delta));
        rec.support_sup_norm = factor * wide->sup_norm(Piece::kWhole, s, space, sup_region, comp);
      }
      rec.ratio = rec.sup_norm / std::pow(rec.data_norm, k);
      rec.runtime_ms = config.timing ? std::round(ms) : 0.0;
      rec.doubling_change = std::max(r.doubling_change, wide ? wide->doubling_change : 0.0);
      out[i].push_back(rec);
    }
  }
  return out;
}

std::vector<ScalingRecord> scaling_sweep(const SweepConfig& config, Order order) {
  return scaling_sweep_multi(config, order, {config.s}).front();
}

std::string to_string(RecordField field) {
  switch (field) {
    case RecordField::kSupNorm: return "sup_norm";
    case RecordField::kQtildeNorm: return "qtilde_norm";
    case RecordField::kCtildeNorm: return "ctilde_norm";
    case RecordField::kRatio: return "ratio";
    case RecordField::kDataNorm: return "data_norm";
  }
  return "unknown";
}

namespace {
double field_of(const ScalingRecord& r, RecordField f) {
  switch (f) {
    case RecordField::kSupNorm: return r.sup_norm;
    case RecordField::kQtildeNorm: return r.qtilde_norm;
    case RecordField::kCtildeNorm: return r.ctilde_norm;
    case RecordField::kRatio: return r.ratio;
    case RecordField::kDataNorm: return r.data_norm;
  }
  return 0.0;
}
}  // namespace

ExponentFit fit_exponent(const std::vector<ScalingRecord>& records, RecordField field) {
  if (records.size() < 4) throw InvalidArgument("exponent fit needs at least 4 records");
  std::vector<double> x, y;
  for (const auto& r : records) {
    const double v = field_of(r, field);
    if (!(v > 0.0) || !std::isfinite(v)) throw InvalidArgument("exponent fit needs positive finite values of " + to_string(field));
    x.push_back(std::log(static_cast<double>(r.n)));
    y.push_back(std::log(v));
  }
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw InvalidArgument("exponent fit needs distinct N values");
  ExponentFit fit;
  fit.points = x.size();
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (fit.intercept + fit.slope * x[i]);
    ssr += e * e;
  }
  fit.stderr_slope = std::sqrt(ssr / (n - 2.0) / sxx);
  fit.r_squared = syy > 0.0 ? 1.0 - ssr / syy : 1.0;
  return fit;
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kGrows: return "GROWS";
    case Verdict::kBounded: return "BOUNDED";
    case Verdict::kMarginal: return "MARGINAL";
  }
  return "unknown";
}

Verdict verdict_for(double slope) {
  if (slope > kVerdictMargin) return Verdict::kGrows;
  if (slope < -kVerdictMargin) return Verdict::kBounded;
  return Verdict::kMarginal;
}

double theoretical_threshold(const SweepConfig& config, Order order) {
  if (order == Order::kQuadratic) return 3.0 - config.cap_exponent();
  return config.dim == 2 ? 3.0 : 2.5;
}

ThresholdReport threshold_report(const SweepConfig& config, Order order, const std::vector<double>& s_list) {
  std::vector<double> sorted = s_list;
  std::sort(sorted.begin(), sorted.end());
  ThresholdReport rep;
  rep.order = order;
  rep.dim = config.dim;
  rep.kind = config.law().kind();
  rep.space = config.norm_space();
  rep.theoretical_threshold = theoretical_threshold(config, order);
  rep.formal = config.tau == 0.0;
  rep.label = "verdict from the sign of the fitted ratio slope (margin 0.15), in place of a violation "
              "constant";
  if (rep.formal) rep.label += "; FORMAL";
  auto sweeps = scaling_sweep_multi(config, order, sorted);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    ThresholdRow row;
    row.s = sorted[i];
    row.records = sweeps[i];
    row.fit = fit_exponent(row.records, RecordField::kRatio);
    row.verdict = verdict_for(row.fit.slope);
    if (row.verdict == Verdict::kGrows) rep.last_grows = std::max(rep.last_grows.value_or(row.s), row.s);
    if (row.verdict == Verdict::kBounded && !rep.first_bounded) rep.first_bounded = row.s;
    rep.rows.push_back(std::move(row));
  }
  if (rep.last_grows && rep.first_bounded) {
    rep.brackets = *rep.last_grows < *rep.first_bounded && *rep.last_grows < rep.theoretical_threshold &&
                   rep.theoretical_threshold < *rep.first_bounded;
    for (const auto& row : rep.rows)
      if ((row.verdict == Verdict::kGrows && row.s > *rep.first_bounded) ||
          (row.verdict == Verdict::kBounded && row.s < *rep.last_grows))
        rep.brackets = false;
  }
  return rep;
}

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational { throw InvalidArgument("not a rational number: '" + text + "'"); };
  if (text.empty()) return fail();
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      std::size_t p1 = 0, p2 = 0;
      const long long num = std::stoll(text.substr(0, slash), &p1);
      const long long den = std::stoll(text.substr(slash + 1), &p2);
      if (p1 != slash || p2 != text.size() - slash - 1 || den == 0) return fail();
      return Rational(num, den);
    }
    const auto dotp = text.find('.');
    if (dotp == std::string::npos) {
      std::size_t p = 0;
      const long long v = std::stoll(text, &p);
      if (p != text.size()) return fail();
      return Rational(v);
    }
    std::string digits = text.substr(0, dotp) + text.substr(dotp + 1);
    const std::size_t places = text.size() - dotp - 1;
    if (places > 15) return fail();
    std::size_t p = 0;
    const long long v = std::stoll(digits, &p);
    if (p != digits.size()) return fail();
    long long den = 1;
    for (std::size_t i = 0; i < places; ++i) den *= 10;
    return Rational(v, den);
  } catch (const std::logic_error&) {
    return fail();
  }
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

ModelScalingReport model_scaling_degrees(const ScalingWeights& w, ModelSystem system, int dim) {
  if (w.b_x <= 0 || w.w_h <= 0 || w.w_psi <= 0) throw InvalidArgument("scaling weights must be positive");
  if (dim < 1) throw InvalidArgument("dimension must be positive");
  struct Term {
    const char* equation;
    const char* name;
    int h_power, psi_power, t_order, x_order;
  };
  const bool st = system == ModelSystem::kSurfaceTension;
  const std::vector<Term> terms = {
      {"h", "h_t", 1, 0, 1, 0},
      {"h", "|D| psi", 0, 1, 0, 1},
      {"h", "div(h grad psi)", 1, 1, 0, 2},
      {"h", "|D|(h |D| psi)", 1, 1, 0, 2},
      {"psi", "psi_t", 0, 1, 1, 0},
      {"psi", st ? "Lap h" : "-h", 1, 0, 0, st ? 2 : 0},
      {"psi", "(|D| psi)^2 / 2", 0, 2, 0, 2},
      {"psi", "|grad psi|^2 / 2", 0, 2, 0, 2},
  };
  ModelScalingReport rep;
  rep.system = system;
  rep.invariant = true;
  for (const auto& t : terms) {
    Rational deg = -(w.w_h * t.h_power + w.w_psi * t.psi_power) + Rational(t.t_order) + w.b_x * t.x_order;
    rep.terms.push_back({t.equation, t.name, deg});
  }
  for (const auto& a : rep.terms)
    for (const auto& b : rep.terms)
      if (a.equation == b.equation && a.degree != b.degree) rep.invariant = false;
  // |f(lambda^b x)|_{dot H^sigma} scales like lambda^{b(sigma - d/2)}.
  const Rational half(1, 2);
  const Rational shift = st ? half : -half;
  const Rational d2(dim, 2);
  rep.critical_from_h = w.w_h / w.b_x - shift + d2;
  rep.critical_from_psi = w.w_psi / w.b_x + d2;
  rep.critical_consistent = rep.critical_from_h == rep.critical_from_psi;
  return rep;
}

}  // namespace wwlab
