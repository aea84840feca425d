#include <cmath>
#include <sstream>

#include "doctest.h"
#include "test_util.hpp"
#include "wwlab/errors.hpp"
#include "wwlab/experiments.hpp"
#include "wwlab/report.hpp"

using namespace wwlab;

namespace {
std::vector<ScalingRecord> synthetic(const std::vector<double>& values) {
  std::vector<ScalingRecord> out;
  int n = 64;
  for (double v : values) {
    ScalingRecord r;
    r.n = n;
    r.ratio = v;
    r.sup_norm = v;
    out.push_back(r);
    n *= 2;
  }
  return out;
}
}  // namespace

TEST_CASE("exact power laws fit exactly") {
  std::vector<double> v;
  for (int i = 0; i < 6; ++i) v.push_back(3.0 * std::pow(64.0 * (1 << i), 1.37));
  auto fit = fit_exponent(synthetic(v), RecordField::kRatio);
  CHECK(fit.slope == doctest::Approx(1.37).epsilon(1e-12));
  CHECK(std::exp(fit.intercept) == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(fit.r_squared == doctest::Approx(1.0));
  CHECK(fit.points == 6);
  auto flat = fit_exponent(synthetic({2.0, 2.0, 2.0, 2.0}), RecordField::kSupNorm);
  CHECK(std::abs(flat.slope) < 1e-14);
}

TEST_CASE("noisy power laws fit within three standard errors") {
  std::mt19937_64 rng(51);
  int inside = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v;
    for (int i = 0; i < 6; ++i) v.push_back(0.7 * std::pow(64.0 * (1 << i), -0.8) * (1.0 + 0.01 * testutil::uniform(rng)));
    auto fit = fit_exponent(synthetic(v), RecordField::kRatio);
    inside += std::abs(fit.slope + 0.8) <= 3.0 * fit.stderr_slope;
    CHECK(fit.stderr_slope < 0.01);
  }
  // Four residual degrees of freedom: P(|t| <= 3) is about 0.96.
  CHECK(inside >= 45);
  std::vector<double> v;
  std::mt19937_64 fixture(7);
  for (int i = 0; i < 6; ++i) v.push_back(2.0 * std::pow(64.0 * (1 << i), 0.5) * (1.0 + 0.01 * testutil::uniform(fixture)));
  auto fit = fit_exponent(synthetic(v), RecordField::kRatio);
  CHECK(std::abs(fit.slope - 0.5) <= 3.0 * fit.stderr_slope);
}

TEST_CASE("fits reject short or nonpositive input") {
  CHECK_THROWS_AS(fit_exponent(synthetic({1, 2, 3}), RecordField::kRatio), InvalidArgument);
  CHECK_THROWS_AS(fit_exponent(synthetic({1, 2, 0, 4}), RecordField::kRatio), InvalidArgument);
  CHECK_THROWS_AS(fit_exponent(synthetic({1, 2, -1, 4}), RecordField::kRatio), InvalidArgument);
}

TEST_CASE("verdicts use the slope margin") {
  CHECK(verdict_for(0.16) == Verdict::kGrows);
  CHECK(verdict_for(-0.16) == Verdict::kBounded);
  CHECK(verdict_for(0.1) == Verdict::kMarginal);
  CHECK(to_string(Verdict::kGrows) == "GROWS");
}

TEST_CASE("sweep configuration defaults and validation") {
  SweepConfig c;
  c.n_list = {64, 128, 256, 512};
  CHECK(c.cap_exponent() == 1.5);
  CHECK(c.norm_space() == Space::kX);
  CHECK(c.delta_for(256) == doctest::Approx(std::pow(256.0, -0.1)));
  CHECK(c.form_for(Order::kQuadratic) == PropagatorForm::kExact);
  CHECK(c.form_for(Order::kCubic) == PropagatorForm::kTransposed);
  CHECK(c.component_for(Order::kCubic) == Component::kPotential);
  c.tau = 0.0;
  CHECK(c.cap_exponent() == 0.5);
  CHECK(c.norm_space() == Space::kY);
  c.tau = 1.0;
  c.a = 1.0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c.a.reset();
  c.n_list = {128, 64};
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c.n_list = {64, 128};
  c.epsilon = -1;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
}

TEST_CASE("quadratic sweep: reuse across s matches separate runs, output is reproducible") {
  SweepConfig c;
  c.n_list = {64, 128, 256, 512};
  c.timing = false;
  c.iterate.output_resolution = {8, 8};
  c.iterate.pair_resolution = {8, 8};
  c.s = 2.0;
  auto direct = scaling_sweep(c, Order::kQuadratic);
  auto multi = scaling_sweep_multi(c, Order::kQuadratic, {1.0, 2.0});
  REQUIRE(direct.size() == 4);
  for (std::size_t i = 0; i < direct.size(); ++i) {
    CHECK(multi[1][i].sup_norm == doctest::Approx(direct[i].sup_norm).epsilon(1e-12));
    CHECK(multi[1][i].data_norm == direct[i].data_norm);
    CHECK(std::isnan(direct[i].qtilde_norm));
    CHECK(direct[i].support_sup_norm.value() >= direct[i].sup_norm);
    CHECK(direct[i].runtime_ms == 0.0);
    CHECK(direct[i].ratio == doctest::Approx(direct[i].sup_norm / std::pow(direct[i].data_norm, 2)));
  }
  std::ostringstream a, b;
  write_csv(a, direct);
  write_csv(b, scaling_sweep(c, Order::kQuadratic));
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  CHECK(a.str().find("nan") != std::string::npos);
}

TEST_CASE("quadratic threshold brackets 3 - a") {
  SweepConfig c;
  c.n_list = {256, 512, 1024, 2048};
  c.iterate.output_resolution = {8, 8};
  c.iterate.pair_resolution = {8, 8};
  auto rep = threshold_report(c, Order::kQuadratic, {2.5, 0.5, 1.0, 2.0});
  CHECK(rep.theoretical_threshold == 1.5);
  CHECK_FALSE(rep.formal);
  REQUIRE(rep.rows.size() == 4);
  CHECK(rep.rows[0].s == 0.5);
  CHECK(rep.rows[0].verdict == Verdict::kGrows);
  CHECK(rep.rows[3].verdict == Verdict::kBounded);
  CHECK(rep.brackets);
  CHECK(rep.label.find("violation constant") != std::string::npos);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("2/3") == Rational(2, 3));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational("3") == Rational(3));
  CHECK(to_string(Rational(5, 2)) == "5/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), InvalidArgument);
}

TEST_CASE("model-system scaling degrees") {
  auto st = model_scaling_degrees({Rational(2, 3), Rational(2, 3), Rational(1, 3)}, ModelSystem::kSurfaceTension, 2);
  CHECK(st.invariant);
  CHECK(st.terms.size() == 8);
  CHECK(st.critical_from_h == Rational(3, 2));
  CHECK(st.critical_from_psi == Rational(3, 2));
  auto g = model_scaling_degrees({Rational(2), Rational(2), Rational(3)}, ModelSystem::kGravity, 2);
  CHECK(g.invariant);
  CHECK(g.critical_from_h == Rational(5, 2));
  CHECK(g.critical_from_psi == Rational(5, 2));
  auto off = model_scaling_degrees({Rational(2, 3), Rational(2, 3), Rational(1, 2)}, ModelSystem::kSurfaceTension, 2);
  CHECK_FALSE(off.invariant);
  CHECK_THROWS_AS(model_scaling_degrees({Rational(0), Rational(1), Rational(1)}, ModelSystem::kGravity, 2),
                  InvalidArgument);
}

TEST_CASE("report serialization") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(std::nan("")) == "nan");
  AuditReport r;
  r.check = "x";
  r.samples = 3;
  r.measured_min = 1;
  r.measured_max = 2;
  r.claimed_lo = 0;
  r.claimed_hi = 1;
  r.pass = false;
  r.worst_point = {1.5, 2.5};
  auto j = to_json(r);
  CHECK(j["status"] == "fail");
  CHECK(j["claimed_band"][1] == 1.0);
  CHECK(j["worst_point"].size() == 2);
  auto keys = std::vector<std::string>{};
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys[0] == "check");
  CHECK(keys[1] == "status");
}
