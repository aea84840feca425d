#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "wwlab/errors.hpp"
#include "wwlab/multipliers.hpp"

using namespace wwlab;

namespace {
const AuditReport& find(const std::vector<AuditReport>& v, const std::string& name) {
  for (const auto& r : v)
    if (r.check == name) return r;
  FAIL("missing audit " << name);
  return v.front();
}
}  // namespace

TEST_CASE("m symbols at known points") {
  auto m = m_symbols({3.0, 0.0}, {1.0, 0.0});
  CHECK(m.m1 == 0.0);
  CHECK(m.m2 == doctest::Approx(2.0));
  m = m_symbols({0.0, 2.0}, {1.0, 0.0});
  CHECK(m.m1 == doctest::Approx(-2.0));
  // xi - eta = (-1, 2): ((-1,2).(1,0) + sqrt5) / 2
  CHECK(m.m2 == doctest::Approx((-1.0 + std::sqrt(5.0)) / 2));
}

TEST_CASE("m1 is nonpositive and m2 nonnegative") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 10000; ++i) {
    const Vec2 xi{testutil::uniform(rng, -5, 5), testutil::uniform(rng, -5, 5)};
    const Vec2 eta{testutil::uniform(rng, -5, 5), testutil::uniform(rng, -5, 5)};
    auto m = m_symbols(xi, eta);
    CHECK(m.m1 <= 1e-12);
    CHECK(m.m2 >= -1e-12);
  }
}

TEST_CASE("1d p22 reduces to -9 tau zeta nu eta^2") {
  const Vec2 nu{2.0, 0.0}, eta{3.0, 0.0}, xi{10.0, 0.0};
  auto p = p_symbols(xi, nu, eta, 0.5, 1);
  CHECK(p.p22 == doctest::Approx(-9.0 * 0.5 * 5.0 * 2.0 * 9.0));
  auto p2 = p_symbols(xi, nu, eta, 0.5, 2);
  CHECK(p2.p22 == doctest::Approx(p.p22));
  CHECK(p_symbols(xi, nu, eta, 0.0, 2).p22 == 0.0);
}

TEST_CASE("calibrated p22 bands are ordered") {
  for (int d : {1, 2}) {
    auto b = calibrated_p22_band(d);
    CHECK(b.lo > 0.0);
    CHECK(b.lo < b.hi);
  }
}

TEST_CASE("support and bound audits pass at moderate scale and are deterministic") {
  for (int dim : {1, 2})
    for (Order order : {Order::kQuadratic, Order::kCubic}) {
      auto a = support_and_bound_audit(64, 0.05, dim, order, 20000, 3);
      auto b = support_and_bound_audit(64, 0.05, dim, order, 20000, 3);
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        INFO(a[i].check);
        CHECK(a[i].pass);
        CHECK(a[i].samples == 20000);
        CHECK(a[i].measured_max == b[i].measured_max);
        CHECK(a[i].worst_point == b[i].worst_point);
      }
    }
  auto q = support_and_bound_audit(64, 0.05, 2, Order::kQuadratic, 1000, 0);
  CHECK(find(q, "quadratic |xi|/N").measured_min >= std::sqrt(2.0));
  CHECK_THROWS_AS(support_and_bound_audit(64, 0.0, 2, Order::kQuadratic, 10, 0), InvalidArgument);
  CHECK_THROWS_AS(support_and_bound_audit(64, 0.05, 3, Order::kQuadratic, 10, 0), InvalidArgument);
}

TEST_CASE("propagator-combination audit: dominant term and gravity parasite") {
  DispersionLaw gravity(1.0, 0.0), gc(1.0, 1.0);
  auto g = propagator_combo_audit(gravity, 128, 0.05, 0.5, 20000, 1);
  CHECK(find(g, "D-term/(|xi-eta||eta|)").pass);
  CHECK(find(g, "|L3 m1 L2 L1|/(|xi-eta||eta|)").pass);
  auto c = propagator_combo_audit(gc, 128, 0.05, 1.5, 20000, 1);
  CHECK(find(c, "D-term/(|xi-eta||eta|)").measured_min >= 1.0 / 16);
  CHECK(find(c, "|L2 m2 L1 L1|/(|xi||xi-eta||eta|(t-t'))").pass);
  CHECK(find(c, "|combination|/N^2").informational);
  CHECK_THROWS_AS(propagator_combo_audit(gc, 128, 0.05, 1.0, 10, 1), InvalidArgument);
}

TEST_CASE("phase combinations stay below three times the top phase") {
  DispersionLaw gc(1.0, 1.0);
  auto r = phase_combination_audit(gc, 128, 0.05, 10000, 2);
  REQUIRE(r.size() == 4);
  for (const auto& a : r) CHECK(a.pass);
  CHECK(r[0].measured_min > 1.0);
  CHECK(minimal_cap_exponent(gc) == 1.5);
  CHECK(minimal_cap_exponent(DispersionLaw(1.0, 0.0)) == 0.5);
}
