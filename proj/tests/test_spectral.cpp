#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "wwlab/errors.hpp"
#include "wwlab/operators.hpp"

using namespace wwlab;
using testutil::modes;
using testutil::random_field;
using testutil::rel_error;

TEST_CASE("lattice indexing round trips and excludes the Nyquist row") {
  for (int dim : {1, 2}) {
    FrequencyLattice lat(dim, 16);
    CHECK(lat.max_wavenumber() == 7);
    CHECK_FALSE(lat.usable(8, 0));
    CHECK_FALSE(lat.usable(-8, 0));
    for (int kx = -7; kx <= 7; ++kx)
      for (int ky = (dim == 2 ? -7 : 0); ky <= (dim == 2 ? 7 : 0); ++ky) {
        const Vec2 w = lat.wave(lat.flat(kx, ky));
        CHECK(w.x == kx);
        CHECK(w.y == ky);
      }
  }
  CHECK(FrequencyLattice(2, 16, Padding::kThreeHalves).padded_modes() == 24);
  CHECK(FrequencyLattice(2, 16, Padding::kTwo).padded_modes() == 32);
}

TEST_CASE("setting outside the usable band raises SupportOverflow") {
  SpectralField f(FrequencyLattice(2, 16));
  CHECK_THROWS_AS(f.set(8, 0, 1.0), SupportOverflow);
  CHECK_NOTHROW(f.set(7, -7, 1.0));
  CHECK(f.at(7, -7) == Complex(1.0));
  CHECK(f.at(20, 0) == Complex(0.0));
}

TEST_CASE("padded products equal brute-force convolution") {
  std::mt19937_64 rng(11);
  for (int dim : {1, 2})
    for (Padding pad : {Padding::kThreeHalves, Padding::kTwo})
      for (int trial = 0; trial < 5; ++trial) {
        FrequencyLattice lat(dim, 32, pad);
        auto a = random_field(lat, rng, 6, 7, trial % 2 == 0);
        auto b = random_field(lat, rng, 6, 7, trial % 2 == 0);
        SpectralField oracle(lat);
        for (auto& x : modes(a))
          for (auto& y : modes(b)) oracle.add(x.kx + y.kx, x.ky + y.ky, x.c * y.c);
        CHECK(rel_error(pointwise_product(a, b), oracle) < 1e-13);
      }
}

TEST_CASE("a product whose band leaves the lattice is rejected") {
  FrequencyLattice lat(1, 16);
  SpectralField a(lat);
  a.set(5, 0, 1.0);
  a.set(-5, 0, 1.0);
  CHECK_THROWS_AS(pointwise_product(a, a), SupportOverflow);
}

TEST_CASE("multipliers act on single modes") {
  FrequencyLattice lat(2, 16);
  SpectralField f(lat);
  f.set(3, -2, Complex(0.5, 0.25));
  auto dx = apply_multiplier(f, symbols::partial(0));
  CHECK(std::abs(dx.at(3, -2) - Complex(0, 3) * Complex(0.5, 0.25)) < 1e-15);
  auto dd = apply_multiplier(f, symbols::abs_d());
  CHECK(std::abs(dd.at(3, -2) - std::sqrt(13.0) * Complex(0.5, 0.25)) < 1e-15);
  auto lap = ops::laplacian(f);
  CHECK(std::abs(lap.at(3, -2) + 13.0 * Complex(0.5, 0.25)) < 1e-15);

  SpectralField c(lat);
  c.set(0, 0, 2.0);
  CHECK(apply_multiplier(c, symbols::abs_d()).at(0, 0) == Complex(0.0));
  Symbol bad{[](const Vec2& xi) { return Complex(1.0 / xi.norm()); }, std::nullopt, true, "1/|xi|"};
  CHECK_THROWS_AS(apply_multiplier(c, bad), UndefinedSymbol);
}

TEST_CASE("derivative of cos x is -sin x in physical terms") {
  FrequencyLattice lat(1, 16);
  SpectralField f(lat);
  f.set(1, 0, 0.5);
  f.set(-1, 0, 0.5);
  auto d = ops::partial(f, 0);
  // -sin x = (i/2) e^{ix} - (i/2) e^{-ix}
  CHECK(std::abs(d.at(1) - Complex(0, 0.5)) < 1e-15);
  CHECK(std::abs(d.at(-1) - Complex(0, -0.5)) < 1e-15);
  CHECK(d.hermitian_defect() < 1e-15);
}

TEST_CASE("Sobolev norm is the weighted l2 sum") {
  FrequencyLattice lat(2, 16);
  SpectralField f(lat);
  f.set(1, 2, Complex(1.0, 1.0));
  f.set(-3, 0, 2.0);
  const double s = 1.5;
  const double expect = std::sqrt(std::pow(6.0, s) * 2.0 + std::pow(10.0, s) * 4.0);
  CHECK(sobolev_norm(f, s) == doctest::Approx(expect).epsilon(1e-14));
  auto only = [](const Vec2& xi) { return xi.x < 0; };
  CHECK(sobolev_norm(f, s, only) == doctest::Approx(2.0 * std::pow(10.0, s / 2)).epsilon(1e-14));
  CHECK(japanese_bracket({3.0, 4.0}) == doctest::Approx(std::sqrt(26.0)));
}

TEST_CASE("div(f grad g) and grad dot match hand expansions") {
  std::mt19937_64 rng(3);
  FrequencyLattice lat(2, 32);
  auto f = random_field(lat, rng, 4, 4), g = random_field(lat, rng, 4, 4);
  SpectralField oracle(lat), gd(lat);
  for (auto& x : modes(f))
    for (auto& y : modes(g)) {
      const Vec2 xi{double(x.kx + y.kx), double(x.ky + y.ky)}, eta{double(y.kx), double(y.ky)};
      oracle.add(x.kx + y.kx, x.ky + y.ky, -dot(xi, eta) * x.c * y.c);
    }
  CHECK(rel_error(ops::div_f_grad(f, g), oracle) < 1e-13);
  for (auto& x : modes(f))
    for (auto& y : modes(g))
      gd.add(x.kx + y.kx, x.ky + y.ky, -double(x.kx * y.kx + x.ky * y.ky) * x.c * y.c);
  CHECK(rel_error(ops::grad_dot(f, g), gd) < 1e-13);
}
