#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "wwlab/errors.hpp"
#include "wwlab/multipliers.hpp"
#include "wwlab/variations.hpp"

using namespace wwlab;
using testutil::Mode;
using testutil::modes;
using testutil::random_field;
using testutil::rel_error;

namespace {
Vec2 wave(const Mode& m) { return {double(m.kx), double(m.ky)}; }
}  // namespace

TEST_CASE("quadratic forcing equals the m-multiplier convolution") {
  std::mt19937_64 rng(21);
  for (int dim : {1, 2}) {
    FrequencyLattice lat(dim, 32);
    auto h = random_field(lat, rng, 4, 5), psi = random_field(lat, rng, 4, 5);
    SpectralField fh(lat), fp(lat);
    for (auto& a : modes(h))
      for (auto& b : modes(psi)) {
        const Vec2 xi = wave(a) + wave(b);
        fh.add(a.kx + b.kx, a.ky + b.ky, 2.0 * m_symbols(xi, wave(b)).m1 * a.c * b.c);
      }
    for (auto& a : modes(psi))
      for (auto& b : modes(psi)) {
        const Vec2 xi = wave(a) + wave(b);
        fp.add(a.kx + b.kx, a.ky + b.ky, 2.0 * m_symbols(xi, wave(b)).m2 * a.c * b.c);
      }
    auto f = quadratic_forcing(h, psi);
    CHECK(rel_error(f.h, fh) < 1e-12);
    CHECK(rel_error(f.psi, fp) < 1e-12);
  }
}

TEST_CASE("angle forms of m1 and m2 agree with the dot-product forms") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 xi{testutil::uniform(rng, -9, 9), testutil::uniform(rng, -9, 9)};
    const Vec2 eta{testutil::uniform(rng, -9, 9), testutil::uniform(rng, -9, 9)};
    auto a = m_symbols(xi, eta), b = m_symbols_angle_form(xi, eta);
    CHECK(a.m1 == doctest::Approx(b.m1).epsilon(1e-10).scale(xi.norm() * eta.norm()));
    CHECK(a.m2 == doctest::Approx(b.m2).epsilon(1e-10).scale(xi.norm() * eta.norm()));
  }
}

TEST_CASE("pure cubic forcing equals the p-multiplier convolution") {
  std::mt19937_64 rng(23);
  for (int dim : {1, 2})
    for (double tau : {0.0, 1.3}) {
      DispersionLaw law(1.0, tau);
      FrequencyLattice lat(dim, 32);
      auto h = random_field(lat, rng, 3, 3), psi = random_field(lat, rng, 3, 3);
      const auto mh = modes(h), mp = modes(psi);
      SpectralField c1(lat), c2(lat);
      for (auto& z : mh)
        for (auto& n : mh)
          for (auto& e : mp) {
            const Vec2 xi = wave(z) + wave(n) + wave(e);
            c1.add(int(xi.x), int(xi.y), p_symbols(xi, wave(n), wave(e), tau, dim).p1 * z.c * n.c * e.c);
          }
      for (auto& z : mh)
        for (auto& n : mp)
          for (auto& e : mp) {
            const Vec2 xi = wave(z) + wave(n) + wave(e);
            c2.add(int(xi.x), int(xi.y), p_symbols(xi, wave(n), wave(e), tau, dim).p21 * z.c * n.c * e.c);
          }
      for (auto& z : mh)
        for (auto& n : mh)
          for (auto& e : mh) {
            const Vec2 xi = wave(z) + wave(n) + wave(e);
            c2.add(int(xi.x), int(xi.y), p_symbols(xi, wave(n), wave(e), tau, dim).p22 * z.c * n.c * e.c);
          }
      auto c = cubic_pure_forcing(h, psi, law);
      CHECK(rel_error(c.h, c1) < 1e-12);
      CHECK(rel_error(c.psi, c2) < 1e-12);
    }
}

TEST_CASE("mixed cubic forcing equals the bilinear m-multiplier sum") {
  std::mt19937_64 rng(24);
  for (int dim : {1, 2}) {
    FrequencyLattice lat(dim, 32);
    auto h1 = random_field(lat, rng, 3, 4), p1 = random_field(lat, rng, 3, 4);
    auto h2 = random_field(lat, rng, 3, 4), p2 = random_field(lat, rng, 3, 4);
    SpectralField q1(lat), q2(lat);
    for (auto& u : modes(h1))
      for (auto& y : modes(p2)) {
        const Vec2 xi = wave(u) + wave(y);
        q1.add(int(xi.x), int(xi.y), m_symbols(xi, wave(y)).m1 * u.c * y.c);
      }
    for (auto& y : modes(h2))
      for (auto& u : modes(p1)) {
        const Vec2 xi = wave(u) + wave(y);
        q1.add(int(xi.x), int(xi.y), m_symbols(xi, wave(u)).m1 * y.c * u.c);
      }
    for (auto& u : modes(p1))
      for (auto& y : modes(p2)) {
        const Vec2 xi = wave(u) + wave(y);
        q2.add(int(xi.x), int(xi.y), 2.0 * m_symbols(xi, wave(y)).m2 * u.c * y.c);
      }
    auto q = cubic_mixed_forcing(h1, p1, h2, p2);
    CHECK(rel_error(q.h, q1) < 1e-12);
    CHECK(rel_error(q.psi, q2) < 1e-12);
    // With the second iterate equal to the first, Qt is the quadratic forcing.
    auto same = cubic_mixed_forcing(h1, p1, h1, p1);
    auto f = quadratic_forcing(h1, p1);
    CHECK(rel_error(same.h, f.h) < 1e-12);
    CHECK(rel_error(same.psi, f.psi) < 1e-12);
  }
}

TEST_CASE("divergence and expanded forms of the surface tension cubic term agree") {
  std::mt19937_64 rng(25);
  for (int dim : {1, 2}) {
    FrequencyLattice lat(dim, 32);
    for (int i = 0; i < 10; ++i) {
      auto h = random_field(lat, rng, 4, 3);
      CHECK(rel_error(surface_tension_cubic_divergence(h, 0.7), surface_tension_cubic_expanded(h, 0.7)) < 1e-11);
    }
  }
}

TEST_CASE("third variation combines the pieces with the dimension weight") {
  CHECK(mixed_weight(2) == 3);
  CHECK(mixed_weight(1) == 6);
  CHECK_THROWS_AS(mixed_weight(3), InvalidArgument);
  std::mt19937_64 rng(26);
  DispersionLaw law(1.0, 1.0);
  FrequencyLattice lat(2, 32);
  auto h1 = random_field(lat, rng, 2, 3), p1 = random_field(lat, rng, 2, 3);
  auto h2 = random_field(lat, rng, 2, 3), p2 = random_field(lat, rng, 2, 3);
  auto full = third_variation(h1, p1, h2, p2, law);
  auto q = cubic_mixed_forcing(h1, p1, h2, p2);
  auto c = cubic_pure_forcing(h1, p1, law);
  CHECK(rel_error(full.h, 3.0 * q.h + c.h) < 1e-14);
  CHECK(rel_error(full.psi, 3.0 * q.psi + c.psi) < 1e-14);
}
