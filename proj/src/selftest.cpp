#include "wwlab/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "wwlab/dno.hpp"

namespace wwlab {
namespace {

double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

struct Bound {
  AuditReport rep;
  Bound(std::string check, double hi) {
    rep.check = std::move(check);
    rep.claimed_lo = 0.0;
    rep.claimed_hi = hi;
  }
  void add(double v, std::vector<double> where) {
    ++rep.samples;
    rep.measured_min = std::min(rep.measured_min, v);
    if (v > rep.measured_max || rep.worst_point.empty()) {
      rep.measured_max = std::max(rep.measured_max, v);
      rep.worst_point = std::move(where);
    }
  }
  AuditReport done() {
    rep.pass = rep.measured_max <= rep.claimed_hi;
    return rep;
  }
};

std::string tag(const DispersionLaw& law) { return to_string(law.kind()); }

}  // namespace

std::vector<AuditReport> propagator_identity_audit(const DispersionLaw& law, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Bound det("propagator determinant |L1^2 - L2 L3 - 1| (" + tag(law) + ")", 1e-12);
  Bound semi("propagator semigroup defect (" + tag(law) + ")", 1e-12);
  Bound energy("propagator energy drift (" + tag(law) + ")", 1e-10);
  for (std::size_t i = 0; i < samples; ++i) {
    // Phases up to four periods; beyond that the defect is the rounding of lambda t itself.
    const double r = std::pow(10.0, -2.0 + 7.0 * uniform(rng));
    const double period = 2.0 * M_PI / law.lambda(r);
    const double t1 = 2.0 * period * uniform(rng), t2 = 2.0 * period * uniform(rng);
    const auto p = propagator_symbols(law, r, t1);
    det.add(std::abs(p.l1 * p.l1 - p.l2 * p.l3 - 1.0), {r, t1});

    const auto a = propagator_matrix(law, r, t1), b = propagator_matrix(law, r, t2);
    const auto c = propagator_matrix(law, r, t1 + t2);
    // Balance the off-diagonal scales so the defect is relative.
    const double s = std::sqrt(law.lambda_sq_over_r(r) / r);
    const double e[4] = {a.hh * b.hh + a.hpsi * b.psih - c.hh, (a.hh * b.hpsi + a.hpsi * b.psipsi - c.hpsi) * s,
                         (a.psih * b.hh + a.psipsi * b.psih - c.psih) / s, a.psih * b.hpsi + a.psipsi * b.psipsi - c.psipsi};
    double worst = 0.0;
    for (double x : e) worst = std::max(worst, std::abs(x));
    semi.add(worst, {r, t1, t2});

    const double h0 = 2.0 * uniform(rng) - 1.0, p0 = 2.0 * uniform(rng) - 1.0;
    auto en = [&](double h, double q) { return law.lambda_sq_over_r(r) * h * h + r * q * q; };
    const double e0 = en(h0, p0);
    const double e1 = en(a.hh * h0 + a.hpsi * p0, a.psih * h0 + a.psipsi * p0);
    energy.add(std::abs(e1 - e0) / e0, {r, t1});
  }
  return {det.done(), semi.done(), energy.done()};
}

namespace {

SpectralField random_field(const FrequencyLattice& lat, std::mt19937_64& rng) {
  SpectralField f(lat);
  for (int i = 0; i < 4; ++i) {
    int kx = 0, ky = 0;
    while (kx == 0 && ky == 0) {
      kx = static_cast<int>(rng() % 7) - 3;
      ky = lat.dim() == 2 ? static_cast<int>(rng() % 7) - 3 : 0;
    }
    const Complex c(2.0 * uniform(rng) - 1.0, 2.0 * uniform(rng) - 1.0);
    f.set(kx, ky, c);
    f.set(-kx, -ky, std::conj(c));
  }
  return f;
}

// `ref` is the natural size of the term; in 1d several DN terms cancel to roundoff.
double rel_diff(const SpectralField& a, const SpectralField& b, double ref) {
  const double scale = std::max({a.max_abs(), b.max_abs(), ref});
  return (a - b).max_abs() / scale;
}

Complex inner(const SpectralField& a, const SpectralField& b) {
  Complex sum = 0.0;
  a.for_each([&](int kx, int ky, Complex v) { sum += std::conj(v) * b.at(kx, ky); });
  return sum;
}

double l2(const SpectralField& a) { return std::sqrt(std::abs(inner(a, a))); }

}  // namespace

std::vector<AuditReport> dno_selftest(std::size_t fields, std::uint64_t seed) {
  std::vector<AuditReport> out;
  for (int dim : {1, 2}) {
    const std::string d = std::to_string(dim) + "d";
    const FrequencyLattice lat(dim, 32);
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(dim));
    Bound g1("DN recursive vs closed G1 (" + d + ")", 1e-12);
    Bound g2("DN recursive vs closed G2 (" + d + ")", 1e-12);
    Bound hom("DN homogeneity G1..G3 (" + d + ")", 1e-12);
    Bound adj("DN G1 self-adjointness (" + d + ")", 1e-10);
    for (std::size_t i = 0; i < fields; ++i) {
      const auto h = random_field(lat, rng), psi = random_field(lat, rng), phi = random_field(lat, rng);
      const double idx = static_cast<double>(i);
      auto ref = [&](int n, double c) { return std::pow(c * h.max_abs(), n) * psi.max_abs(); };
      g1.add(rel_diff(dn_recursive(1, h, psi), dn_closed(1, h, psi), ref(1, 1.0)), {idx});
      g2.add(rel_diff(dn_recursive(2, h, psi), dn_closed(2, h, psi), ref(2, 1.0)), {idx});
      const double c = 0.5 + uniform(rng);
      double worst = 0.0;
      for (int n = 1; n <= 3; ++n)
        worst = std::max(worst, rel_diff(dn_recursive(n, c * h, psi), std::pow(c, n) * dn_recursive(n, h, psi), ref(n, c)));
      hom.add(worst, {idx, c});
      const double lhs_rhs = std::abs(inner(dn_closed(1, h, psi), phi) - inner(psi, dn_closed(1, h, phi)));
      // G1 can vanish identically in 1d; the floor keeps the ratio meaningful.
      const double scale = std::max(l2(dn_closed(1, h, psi)) * l2(phi) + l2(psi) * l2(dn_closed(1, h, phi)),
                                    h.max_abs() * l2(psi) * l2(phi));
      adj.add(lhs_rhs / scale, {idx});
    }
    out.push_back(g1.done());
    out.push_back(g2.done());
    out.push_back(hom.done());
    out.push_back(adj.done());
  }
  const FrequencyLattice lat(1, 32);
  auto cosine = [&](int k) {
    SpectralField f(lat);
    f.set(k, 0, 0.5);
    f.set(-k, 0, 0.5);
    return f;
  };
  Bound zero("G1(cos x) cos 2x = 0", 1e-10);
  zero.add(dn_closed(1, cosine(1), cosine(2)).max_abs(), {});
  out.push_back(zero.done());
  Bound minus("G1(cos 2x) cos x = -cos x", 1e-10);
  minus.add((dn_closed(1, cosine(2), cosine(1)) + cosine(1)).max_abs(), {});
  out.push_back(minus.done());
  return out;
}

std::vector<AuditReport> verify_suite(int n, double delta, std::size_t samples, std::uint64_t seed) {
  std::vector<AuditReport> out;
  auto append = [&](std::vector<AuditReport> part) { out.insert(out.end(), part.begin(), part.end()); };
  const DispersionLaw gc(1.0, 1.0), gravity(1.0, 0.0), capillary(0.0, 1.0);
  for (const auto& law : {gc, gravity, capillary}) append(propagator_identity_audit(law, samples, seed));
  append(dno_selftest(100, seed));
  for (int dim : {2, 1})
    for (Order order : {Order::kQuadratic, Order::kCubic})
      append(support_and_bound_audit(n, delta, dim, order, samples, seed));
  append(propagator_combo_audit(gc, n, delta, 1.5, samples, seed));
  append(propagator_combo_audit(gravity, n, delta, 0.5, samples, seed));
  append(phase_combination_audit(gc, n, delta, samples, seed));
  return out;
}

}  // namespace wwlab
