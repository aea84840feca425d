#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wwlab/errors.hpp"
#include "wwlab/experiments.hpp"
#include "wwlab/report.hpp"
#include "wwlab/selftest.hpp"

using namespace wwlab;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kNonConvergence = 3 };

struct Options {
  double g = 1.0;
  double tau = 1.0;
  int dim = 2;
  double s = 1.0;
  double epsilon = 0.05;
  std::optional<double> a;
  std::vector<int> n_list;
  std::string backend = "sector";
  int time_nodes = 4;
  int radial_nodes = 0;
  int angular_nodes = 0;
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 0;
  std::string propagator;
  std::string component;
  std::string space;
  bool timing = true;
  bool no_convergence_check = false;
  // verify
  int audit_n = 256;
  double audit_delta = 0.05;
  std::size_t samples = 100000;
  // threshold / iterate
  std::string order = "cubic";
  std::vector<double> s_list;
  // model-scaling
  std::string system = "surface-tension";
  std::string weights;
};

std::ostream& sink(const Options& o, std::ofstream& file) {
  if (o.out.empty() || o.out == "-") return std::cout;
  file.open(o.out, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open output file " + o.out);
  return file;
}

std::vector<int> default_n_list(Order order, int dim) {
  if (order == Order::kQuadratic) return {256, 512, 1024, 2048, 4096, 8192};
  if (dim == 1) return {256, 512, 1024, 2048, 4096};
  return {256, 512, 1024, 2048};
}

SweepConfig sweep_config(const Options& o, Order order) {
  SweepConfig c;
  c.g = o.g;
  c.tau = o.tau;
  c.dim = o.dim;
  c.s = o.s;
  c.epsilon = o.epsilon;
  c.a = o.a;
  c.n_list = o.n_list.empty() ? default_n_list(order, o.dim) : o.n_list;
  c.backend = o.backend == "grid" ? Backend::kGrid : Backend::kSector;
  c.time_nodes = o.time_nodes;
  if (o.radial_nodes > 0) {
    c.iterate.output_resolution.radial = o.radial_nodes;
    c.iterate.pair_resolution.radial = o.radial_nodes;
    c.iterate.support_resolution.radial = o.radial_nodes;
  }
  if (o.angular_nodes > 0) {
    c.iterate.output_resolution.angular = o.angular_nodes;
    c.iterate.pair_resolution.angular = o.angular_nodes;
    c.iterate.support_resolution.angular = o.angular_nodes;
  }
  if (o.propagator == "exact") c.form = PropagatorForm::kExact;
  if (o.propagator == "transposed") c.form = PropagatorForm::kTransposed;
  if (o.component == "full") c.component = Component::kFull;
  if (o.component == "height") c.component = Component::kHeight;
  if (o.component == "potential") c.component = Component::kPotential;
  if (o.space == "X") c.space = Space::kX;
  if (o.space == "Y") c.space = Space::kY;
  c.check_convergence = !o.no_convergence_check;
  c.timing = o.timing;
  c.seed = o.seed;
  return c;
}

Order order_of(const std::string& s) { return s == "quadratic" ? Order::kQuadratic : Order::kCubic; }

int run_verify(const Options& o) {
  const auto reports = verify_suite(o.audit_n, o.audit_delta, o.samples, o.seed);
  std::ofstream file;
  std::ostream& os = sink(o, file);
  if (o.format == "json") {
    os << dump(to_json(reports));
  } else {
    os << "check,status,measured_min,measured_max,claimed_lo,claimed_hi\n";
    for (const auto& r : reports)
      os << '"' << r.check << "\"," << (r.informational ? "info" : r.pass ? "pass" : "fail") << ','
         << format_double(r.measured_min) << ',' << format_double(r.measured_max) << ','
         << format_double(r.claimed_lo) << ',' << format_double(r.claimed_hi) << '\n';
  }
  for (const auto& r : reports)
    if (!r.informational && !r.pass) return kCheckFailed;
  return kOk;
}

int run_scaling(const Options& o, Order order) {
  const auto records = scaling_sweep(sweep_config(o, order), order);
  std::ofstream file;
  std::ostream& os = sink(o, file);
  if (o.format == "json") {
    Json j;
    j["order"] = to_string(order);
    j["records"] = to_json(records);
    Json fits;
    const std::vector<RecordField> fields =
        order == Order::kCubic
            ? std::vector<RecordField>{RecordField::kSupNorm, RecordField::kQtildeNorm, RecordField::kCtildeNorm,
                                       RecordField::kRatio}
            : std::vector<RecordField>{RecordField::kSupNorm, RecordField::kRatio};
    if (records.size() >= 4)
      for (RecordField f : fields) fits[to_string(f)] = to_json(fit_exponent(records, f));
    j["fits"] = fits;
    os << dump(j);
  } else {
    write_csv(os, records);
  }
  return kOk;
}

int run_threshold(const Options& o) {
  const Order order = order_of(o.order);
  std::vector<double> s_list = o.s_list;
  if (s_list.empty()) throw InvalidArgument("threshold needs --s-list");
  const auto rep = threshold_report(sweep_config(o, order), order, s_list);
  std::ofstream file;
  std::ostream& os = sink(o, file);
  if (o.format == "json") {
    os << dump(to_json(rep));
  } else {
    os << "# " << rep.label << '\n';
    os << "s,slope,stderr,r_squared,verdict\n";
    for (const auto& row : rep.rows)
      os << format_double(row.s) << ',' << format_double(row.fit.slope) << ',' << format_double(row.fit.stderr_slope)
         << ',' << format_double(row.fit.r_squared) << ',' << to_string(row.verdict) << '\n';
    os << "# threshold " << format_double(rep.theoretical_threshold) << (rep.brackets ? " bracketed" : " not bracketed")
       << '\n';
  }
  return rep.brackets ? kOk : kCheckFailed;
}

int run_dno(const Options& o) {
  const auto reports = dno_selftest(100, o.seed);
  std::ofstream file;
  std::ostream& os = sink(o, file);
  os << dump(to_json(reports));
  for (const auto& r : reports)
    if (!r.pass) return kCheckFailed;
  return kOk;
}

int run_model(const Options& o) {
  ScalingWeights w;
  std::string spec = o.weights;
  if (spec.empty()) spec = o.system == "gravity" ? "2,2,3" : "2/3,2/3,1/3";
  std::vector<Rational> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_rational(item));
  if (parts.size() != 3) throw InvalidArgument("--weights takes b_x,w_h,w_psi");
  w.b_x = parts[0];
  w.w_h = parts[1];
  w.w_psi = parts[2];
  const auto rep =
      model_scaling_degrees(w, o.system == "gravity" ? ModelSystem::kGravity : ModelSystem::kSurfaceTension, o.dim);
  std::ofstream file;
  std::ostream& os = sink(o, file);
  os << dump(to_json(rep));
  return kOk;
}

int run_iterate(const Options& o) {
  const Order order = order_of(o.order);
  SweepConfig c = sweep_config(o, order);
  if (c.n_list.size() != 1 && !o.n_list.empty()) throw InvalidArgument("iterate takes a single --N");
  const int n = o.n_list.empty() ? 64 : o.n_list.front();
  std::optional<GridRequest> grid;
  if (c.backend == Backend::kGrid) grid = GridRequest{lattice_for(c.dim, n, order), order};
  const auto datum = make_sector_datum(c.dim, n, c.delta_for(n), c.s, grid);
  QuadratureSpec quad = QuadratureSpec::for_cap(n, c.cap_exponent(), c.time_nodes);
  quad.check_convergence = c.check_convergence;
  IterateOptions opt = c.iterate;
  opt.backend = c.backend;
  opt.form = c.form_for(order);
  const auto r = order == Order::kQuadratic ? second_iterate(c.law(), datum, quad, opt)
                                            : third_iterate(c.law(), datum, quad, opt);
  if (!r.converged) throw NonConvergence("time quadrature did not converge");
  std::ofstream file;
  std::ostream& os = sink(o, file);
  const auto& last = r.whole.back();
  if (o.format == "json") {
    Json j;
    j["order"] = to_string(order);
    j["N"] = n;
    j["T"] = r.times.back();
    j["doubling_change"] = r.doubling_change;
    Json samples = Json::array();
    for (const auto& p : last)
      samples.push_back(Json{{"xi", {p.xi.x, p.xi.y}},
                             {"weight", p.weight},
                             {"h", {p.h.real(), p.h.imag()}},
                             {"psi", {p.psi.real(), p.psi.imag()}}});
    j["spectrum"] = samples;
    os << dump(j);
  } else {
    os << "xi1,xi2,weight,h_re,h_im,psi_re,psi_im\n";
    for (const auto& p : last)
      os << format_double(p.xi.x) << ',' << format_double(p.xi.y) << ',' << format_double(p.weight) << ','
         << format_double(p.h.real()) << ',' << format_double(p.h.imag()) << ',' << format_double(p.psi.real()) << ','
         << format_double(p.psi.imag()) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Picard iterates and norm-inflation scaling for gravity-capillary water waves"};
  app.set_config("--config", "", "flat key=value file mirroring the flags");
  app.require_subcommand(1);
  Options o;
  app.add_option("--g", o.g, "gravity");
  app.add_option("--tau", o.tau, "surface tension");
  app.add_option("--dim", o.dim, "dimension")->check(CLI::IsMember({1, 2}));
  app.add_option("--s", o.s, "Sobolev index");
  app.add_option("--epsilon", o.epsilon, "delta = N^(-2 epsilon)")->check(CLI::NonNegativeNumber);
  app.add_option("--a", o.a, "time cap exponent");
  app.add_option("--N", o.n_list, "frequency scales")->delimiter(',');
  app.add_option("--backend", o.backend)->check(CLI::IsMember({"grid", "sector"}));
  app.add_option("--time-nodes", o.time_nodes)->check(CLI::Range(4, 1024));
  app.add_option("--radial-nodes", o.radial_nodes)->check(CLI::NonNegativeNumber);
  app.add_option("--angular-nodes", o.angular_nodes)->check(CLI::NonNegativeNumber);
  app.add_option("--out", o.out, "output path, stdout when absent");
  app.add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", o.seed);
  app.add_option("--propagator", o.propagator)->check(CLI::IsMember({"exact", "transposed"}));
  app.add_option("--component", o.component)->check(CLI::IsMember({"full", "height", "potential"}));
  app.add_option("--space", o.space)->check(CLI::IsMember({"X", "Y"}));
  app.add_option("--timing", o.timing, "record wall-clock times");
  app.add_flag("--no-convergence-check", o.no_convergence_check);
  app.add_option("--audit-N", o.audit_n)->check(CLI::PositiveNumber);
  app.add_option("--audit-delta", o.audit_delta)->check(CLI::PositiveNumber);
  app.add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  app.add_option("--order", o.order)->check(CLI::IsMember({"quadratic", "cubic"}));
  app.add_option("--s-list", o.s_list)->delimiter(',');
  app.add_option("--system", o.system)->check(CLI::IsMember({"surface-tension", "gravity"}));
  app.add_option("--weights", o.weights, "b_x,w_h,w_psi as rationals");

  auto* verify = app.add_subcommand("verify", "property and bound audits; exit 0 iff all pass");
  auto* quad = app.add_subcommand("quadratic-scaling", "second-iterate sweep over N");
  auto* cubic = app.add_subcommand("cubic-scaling", "third-iterate sweep over N");
  auto* thr = app.add_subcommand("threshold", "verdict table over --s-list");
  auto* dno = app.add_subcommand("dno-selftest", "DN expansion identities");
  auto* model = app.add_subcommand("model-scaling", "scaling degrees of the model systems");
  auto* iter = app.add_subcommand("iterate", "dump one iterate spectrum at the final time");
  for (auto* sub : {verify, quad, cubic, thr, dno, model, iter}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    if (*verify) return run_verify(o);
    if (*quad) return run_scaling(o, Order::kQuadratic);
    if (*cubic) return run_scaling(o, Order::kCubic);
    if (*thr) return run_threshold(o);
    if (*dno) return run_dno(o);
    if (*model) return run_model(o);
    if (*iter) return run_iterate(o);
  } catch (const NonConvergence& e) {
    std::cerr << "non-convergence: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}
