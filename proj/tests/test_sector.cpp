#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "wwlab/errors.hpp"
#include "wwlab/sector.hpp"
#include "wwlab/sector_quadrature.hpp"

using namespace wwlab;

TEST_CASE("datum amplitudes and support") {
  auto d2 = make_sector_datum(2, 64, 0.1, 2.0, GridRequest{lattice_for(2, 64, Order::kQuadratic), Order::kQuadratic});
  REQUIRE(d2.grid);
  CHECK(d2.grid->h.max_abs() == 0.0);
  std::size_t count = 0;
  d2.grid->psi.for_each([&](int kx, int ky, Complex c) {
    if (c == Complex(0.0)) return;
    ++count;
    CHECK(c.real() == doctest::Approx(std::pow(64.0, -3.0)).epsilon(1e-15));
    CHECK(d2.support.contains({double(kx), double(ky)}));
  });
  CHECK(count > 0);

  auto d1 = make_sector_datum(1, 64, 0.0, 2.0, GridRequest{lattice_for(1, 64, Order::kCubic), Order::kCubic});
  for (int k = 60; k <= 132; ++k) {
    const Complex c = d1.grid->psi.at(k);
    if (k >= 64 && k <= 128)
      CHECK(c.real() == doctest::Approx(std::pow(64.0, -2.5)).epsilon(1e-15));
    else
      CHECK(c == Complex(0.0));
  }
}

TEST_CASE("lattice count of the sector tracks its area") {
  const int n = 64;
  for (double delta : {0.05, 0.1, 0.2}) {
    auto d = make_sector_datum(2, n, delta, 1.0, GridRequest{lattice_for(2, n, Order::kQuadratic), Order::kQuadratic});
    double count = 0;
    d.grid->psi.for_each([&](int, int, Complex c) { count += c != Complex(0.0); });
    CHECK(count / (3.0 * n * n * delta) == doctest::Approx(1.0).epsilon(0.05));
  }
}

TEST_CASE("output sectors have the stated parameters") {
  auto q = sector_E(2, 10, 0.2, Order::kQuadratic);
  CHECK(q.r_lo == 2.0);
  CHECK(q.r_hi == 4.0);
  CHECK(q.half_width == doctest::Approx(0.1));
  auto c = sector_E(2, 10, 0.2, Order::kCubic);
  CHECK(c.r_hi == 6.0);
  CHECK(c.half_width == doctest::Approx(0.2));
  auto c1 = sector_E(1, 10, 0.0, Order::kCubic);
  CHECK(c1.r_lo == 3.0);
  CHECK(c1.r_hi == 6.0);
  CHECK(sector_E(2, 10, 0.2, Order::kQuadratic, 0.2).half_width == doctest::Approx(0.2));
  CHECK(c.contains({20.0, 0.0}));
  CHECK(c.contains(polar(60.0, 0.2)));
  CHECK_FALSE(c.contains(polar(60.0, 0.2001)));
  CHECK_THROWS_AS(SectorRegion(2, 10, 3.0, 2.0, 0.1), InvalidArgument);
}

TEST_CASE("datum norms") {
  const double delta = 0.1;
  auto d = make_sector_datum(2, 64, delta, 1.0, GridRequest{lattice_for(2, 64, Order::kQuadratic), Order::kQuadratic});
  const double x = state_norm(*d.grid, 1.0, Space::kX);
  CHECK(x == doctest::Approx(sobolev_norm(d.grid->psi, 1.0)).epsilon(1e-15));
  CHECK(x / std::sqrt(delta) >= 1.0);
  CHECK(x / std::sqrt(delta) <= 3.0);
  double direct = 0;
  d.grid->psi.for_each([&](int kx, int ky, Complex c) { direct += std::norm(c) * std::pow(1.0 + kx * kx + ky * ky, 1.0); });
  CHECK(x == doctest::Approx(std::sqrt(direct)).epsilon(1e-14));
  CHECK(state_norm(2.0 * *d.grid, 1.0, Space::kX) == doctest::Approx(2.0 * x));
  auto cont = make_sector_datum(2, 64, delta, 1.0);
  CHECK(datum_norm(cont, Space::kX) == doctest::Approx(x).epsilon(0.05));
  auto c1 = make_sector_datum(1, 64, 0.0, 2.0);
  auto g1 = make_sector_datum(1, 64, 0.0, 2.0, GridRequest{lattice_for(1, 64, Order::kQuadratic), Order::kQuadratic});
  CHECK(datum_norm(c1, Space::kY) == doctest::Approx(datum_norm(g1, Space::kY)).epsilon(0.02));
}

TEST_CASE("grid realization needs room for the requested order") {
  CHECK_THROWS_AS(make_sector_datum(2, 64, 0.1, 1.0, GridRequest{FrequencyLattice(2, 256), Order::kCubic}), SupportOverflow);
  CHECK_THROWS_AS(make_sector_datum(2, 64, 0.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(make_sector_datum(2, 64, 2.0, 1.0), InvalidArgument);
}

TEST_CASE("continuum region nodes integrate the sector area") {
  ContinuumMeasure m;
  SectorRegion r(2, 10.0, 1.0, 2.0, 0.3);
  double area = 0;
  for (auto& node : m.region_nodes(r, {8, 8})) {
    CHECK(r.contains(node.at));
    area += node.weight;
  }
  CHECK(area == doctest::Approx(0.3 * (400.0 - 100.0)).epsilon(1e-12));
  SectorRegion line(1, 10.0, 1.0, 2.0, 0.0);
  double len = 0;
  for (auto& node : m.region_nodes(line, {8, 8})) len += node.weight;
  CHECK(len == doctest::Approx(10.0));
}

TEST_CASE("admissible radii match a brute-force scan") {
  std::mt19937_64 rng(41);
  SectorRegion r(2, 10.0, 1.0, 2.0, 0.25);
  for (int i = 0; i < 200; ++i) {
    const Vec2 c = polar(testutil::uniform(rng, 15, 38), testutil::uniform(rng, -0.3, 0.3));
    const double phi = testutil::uniform(rng, -0.25, 0.25);
    auto iv = admissible_radii(r, c, phi);
    for (int k = 0; k <= 400; ++k) {
      const double rho = 5.0 + 20.0 * k / 400.0;
      const Vec2 v = polar(rho, phi);
      const bool in = r.contains(v) && r.contains(c - v);
      bool covered = false;
      for (auto& [a, b] : iv) covered |= rho >= a - 1e-9 && rho <= b + 1e-9;
      if (in) CHECK(covered);
      bool strictly = false;
      for (auto& [a, b] : iv) strictly |= rho > a + 1e-6 && rho < b - 1e-6;
      if (strictly) CHECK(in);
    }
  }
}

TEST_CASE("continuum pair measure against a Monte Carlo area") {
  ContinuumMeasure m;
  SectorRegion r(2, 10.0, 1.0, 2.0, 0.25);
  const Vec2 c = polar(28.0, 0.05);
  double area = 0;
  for (auto& node : m.pair_nodes(r, c, {24, 24})) area += node.weight;
  std::mt19937_64 rng(42);
  const int samples = 400000;
  int hits = 0;
  for (int i = 0; i < samples; ++i) {
    const Vec2 v{testutil::uniform(rng, 0, 21), testutil::uniform(rng, -6, 6)};
    hits += r.contains(v) && r.contains(c - v);
  }
  const double mc = 21.0 * 12.0 * hits / samples;
  CHECK(area == doctest::Approx(mc).epsilon(0.01));
}

TEST_CASE("lattice measure counts integer points with unit weight") {
  LatticeMeasure m;
  SectorRegion r(2, 8.0, 1.0, 2.0, 0.3);
  std::size_t brute = 0;
  for (int x = -20; x <= 20; ++x)
    for (int y = -20; y <= 20; ++y) brute += r.contains({double(x), double(y)});
  auto nodes = m.region_nodes(r, {});
  CHECK(nodes.size() == brute);
  for (auto& n : nodes) CHECK(n.weight == 1.0);
  const Vec2 c{24.0, 1.0};
  std::size_t pairs = 0;
  for (int x = -20; x <= 20; ++x)
    for (int y = -20; y <= 20; ++y) pairs += r.contains({double(x), double(y)}) && r.contains(c - Vec2{double(x), double(y)});
  CHECK(m.pair_nodes(r, c, {}).size() == pairs);
}
