#include <algorithm>
#include <cmath>
#include <vector>

#include "wwlab/duhamel.hpp"
#include "wwlab/errors.hpp"
#include "wwlab/multipliers.hpp"
#include "wwlab/quadrature.hpp"
#include "wwlab/variations.hpp"

namespace wwlab::detail {
namespace {

// Propagator of one frequency with lambda cached.
class ModeClock {
 public:
  ModeClock(const DispersionLaw& law, double r, PropagatorForm form)
      : r_(r), lam_(law.lambda(r)), lsr_(law.lambda_sq_over_r(r)), exact_(form == PropagatorForm::kExact) {}

  PropagatorMatrix at(double t) const {
    const double l1 = std::cos(lam_ * t);
    const double sc = t * sinc(lam_ * t);
    const double l2 = r_ * sc, l3 = -lsr_ * sc;
    return exact_ ? PropagatorMatrix{l1, l2, l3, l1} : PropagatorMatrix{l1, l3, l2, l1};
  }

  /// First iterate from unit potential data: column (hpsi, psipsi).
  void first(double t, double& h, double& psi) const {
    auto p = at(t);
    h = p.hpsi;
    psi = p.psipsi;
  }

 private:
  double r_, lam_, lsr_;
  bool exact_;
};

struct TimeGrid {
  std::vector<double> out;      // t_k
  std::vector<double> outer;    // t'_{kj}, flattened k-major
  std::vector<double> outer_w;  // t_k w_j
  std::vector<double> inner;    // t''_{kjl}
  std::vector<double> inner_w;  // t'_{kj} w_l
  int k = 0, n = 0, m = 0;

  TimeGrid(const std::vector<double>& times, int outer_nodes, int inner_nodes) : out(times) {
    k = static_cast<int>(times.size());
    n = outer_nodes;
    m = inner_nodes;
    auto ro = gauss_legendre(n, 0.0, 1.0);
    auto ri = gauss_legendre(m, 0.0, 1.0);
    for (double t : times)
      for (int j = 0; j < n; ++j) {
        const double tp = t * ro.nodes[j];
        outer.push_back(tp);
        outer_w.push_back(t * ro.weights[j]);
        for (int l = 0; l < m; ++l) {
          inner.push_back(tp * ri.nodes[l]);
          inner_w.push_back(tp * ri.weights[l]);
        }
      }
  }
};

std::shared_ptr<const SupportMeasure> measure_of(const IterateOptions& options) {
  if (options.measure) return options.measure;
  return std::make_shared<ContinuumMeasure>();
}

// Propagates the forcing histories to each output time: sum_j w P(t_k - t'_{kj}) F_{kj}.
void propagate_out(const ModeClock& clock, const TimeGrid& tg, const std::vector<double>& fh,
                   const std::vector<double>& fp, double factor, std::vector<double>& h, std::vector<double>& p) {
  h.assign(tg.k, 0.0);
  p.assign(tg.k, 0.0);
  for (int k = 0; k < tg.k; ++k)
    for (int j = 0; j < tg.n; ++j) {
      const int kj = k * tg.n + j;
      auto pm = clock.at(tg.out[k] - tg.outer[kj]);
      const double w = tg.outer_w[kj] * factor;
      h[k] += w * (pm.hh * fh[kj] + pm.hpsi * fp[kj]);
      p[k] += w * (pm.psih * fh[kj] + pm.psipsi * fp[kj]);
    }
}

std::vector<Spectrum> second_once(const DispersionLaw& law, const SectorDatum& datum, const TimeGrid& tg,
                                  const IterateOptions& options, const SectorRegion& region) {
  auto measure = measure_of(options);
  const SectorRegion& support = datum.support;
  const double amp2 = datum.amplitude() * datum.amplitude();
  const int kn = tg.k * tg.n;
  std::vector<Spectrum> out(tg.k);
  std::vector<double> fh(kn), fp(kn), h, p;
  for (const auto& node : measure->region_nodes(region, options.output_resolution)) {
    const Vec2 xi = node.at;
    std::fill(fh.begin(), fh.end(), 0.0);
    std::fill(fp.begin(), fp.end(), 0.0);
    for (const auto& v : measure->pair_nodes(support, xi, options.pair_resolution)) {
      const Vec2 zeta = xi - v.at;
      const auto m = m_symbols(xi, v.at);
      ModeClock cz(law, zeta.norm(), options.form), cv(law, v.at.norm(), options.form);
      for (int kj = 0; kj < kn; ++kj) {
        double hz, pz, hv, pv;
        cz.first(tg.outer[kj], hz, pz);
        cv.first(tg.outer[kj], hv, pv);
        fh[kj] += v.weight * 2.0 * m.m1 * hz * pv;
        fp[kj] += v.weight * 2.0 * m.m2 * pz * pv;
      }
    }
    ModeClock cx(law, xi.norm(), options.form);
    propagate_out(cx, tg, fh, fp, amp2, h, p);
    for (int k = 0; k < tg.k; ++k) out[k].push_back({xi, node.weight, h[k], p[k]});
  }
  return out;
}

struct ThirdSpectra {
  std::vector<Spectrum> whole, mixed, pure;
};

ThirdSpectra third_once(const DispersionLaw& law, const SectorDatum& datum, const TimeGrid& tg,
                        const IterateOptions& options, const SectorRegion& region) {
  auto measure = measure_of(options);
  const SectorRegion& support = datum.support;
  const double amp3 = std::pow(datum.amplitude(), 3);
  const double weight = mixed_weight(datum.dim);
  const int kn = tg.k * tg.n;
  const int knm = kn * tg.m;
  const double tau = law.tau();

  const auto unodes = measure->region_nodes(support, options.support_resolution);
  std::vector<double> h1u(kn), p1u(kn);
  std::vector<double> qh(kn), qp(kn), ch(kn), cp(kn);
  std::vector<double> sch(kn), scp(kn), f2h(knm), f2p(knm), hz(knm), pz(knm), hv(knm), pv(knm);
  std::vector<double> h, p;

  ThirdSpectra out;
  out.whole.resize(tg.k);
  out.mixed.resize(tg.k);
  out.pure.resize(tg.k);

  for (const auto& node : measure->region_nodes(region, options.output_resolution)) {
    const Vec2 xi = node.at;
    std::fill(qh.begin(), qh.end(), 0.0);
    std::fill(qp.begin(), qp.end(), 0.0);
    std::fill(ch.begin(), ch.end(), 0.0);
    std::fill(cp.begin(), cp.end(), 0.0);
    for (const auto& u : unodes) {
      const Vec2 y = xi - u.at;
      const auto pairs = measure->pair_nodes(support, y, options.pair_resolution);
      if (pairs.empty()) continue;
      ModeClock cu(law, u.at.norm(), options.form), cy(law, y.norm(), options.form);
      for (int kj = 0; kj < kn; ++kj) cu.first(tg.outer[kj], h1u[kj], p1u[kj]);
      std::fill(sch.begin(), sch.end(), 0.0);
      std::fill(scp.begin(), scp.end(), 0.0);
      std::fill(f2h.begin(), f2h.end(), 0.0);
      std::fill(f2p.begin(), f2p.end(), 0.0);
      for (const auto& v : pairs) {
        const Vec2 zeta = y - v.at;
        const auto m = m_symbols(y, v.at);
        const auto ps = p_symbols(xi, v.at, u.at, tau, datum.dim);
        ModeClock cz(law, zeta.norm(), options.form), cv(law, v.at.norm(), options.form);
        const double w = v.weight;
        for (int kj = 0; kj < kn; ++kj) {
          double a, b, c, d;
          cz.first(tg.outer[kj], a, b);
          cv.first(tg.outer[kj], c, d);
          sch[kj] += w * ps.p1 * a * c * p1u[kj];
          scp[kj] += w * (ps.p21 * a * d * p1u[kj] + ps.p22 * a * c * h1u[kj]);
        }
        for (int q = 0; q < knm; ++q) {
          cz.first(tg.inner[q], hz[q], pz[q]);
          cv.first(tg.inner[q], hv[q], pv[q]);
        }
        const double a1 = 2.0 * m.m1 * w, a2 = 2.0 * m.m2 * w;
        for (int q = 0; q < knm; ++q) {
          f2h[q] += a1 * hz[q] * pv[q];
          f2p[q] += a2 * pz[q] * pv[q];
        }
      }
      const auto mxy = m_symbols(xi, y);
      const auto mxu = m_symbols(xi, u.at);
      for (int kj = 0; kj < kn; ++kj) {
        double h2 = 0.0, p2 = 0.0;
        for (int l = 0; l < tg.m; ++l) {
          const int q = kj * tg.m + l;
          auto pm = cy.at(tg.outer[kj] - tg.inner[q]);
          h2 += tg.inner_w[q] * (pm.hh * f2h[q] + pm.hpsi * f2p[q]);
          p2 += tg.inner_w[q] * (pm.psih * f2h[q] + pm.psipsi * f2p[q]);
        }
        qh[kj] += u.weight * (mxy.m1 * h1u[kj] * p2 + mxu.m1 * h2 * p1u[kj]);
        qp[kj] += u.weight * 2.0 * mxy.m2 * p1u[kj] * p2;
        ch[kj] += u.weight * sch[kj];
        cp[kj] += u.weight * scp[kj];
      }
    }
    ModeClock cx(law, xi.norm(), options.form);
    std::vector<double> mh, mp;
    propagate_out(cx, tg, qh, qp, amp3 * weight, mh, mp);
    propagate_out(cx, tg, ch, cp, amp3, h, p);
    for (int k = 0; k < tg.k; ++k) {
      out.mixed[k].push_back({xi, node.weight, mh[k], mp[k]});
      out.pure[k].push_back({xi, node.weight, h[k], p[k]});
      out.whole[k].push_back({xi, node.weight, mh[k] + h[k], mp[k] + p[k]});
    }
  }
  return out;
}

}  // namespace

IterateResult second_iterate_sector(const DispersionLaw& law, const SectorDatum& datum, const QuadratureSpec& quad,
                                    const IterateOptions& options) {
  const SectorRegion region = options.output_region.value_or(sector_E(datum.dim, datum.n, datum.delta, Order::kQuadratic));
  IterateResult r;
  r.order = 2;
  r.dim = datum.dim;
  r.backend = Backend::kSector;
  r.times = quad.times();
  r.quadrature_region = region;
  r.whole = second_once(law, datum, TimeGrid(r.times, quad.outer_nodes, quad.inner_nodes), options, region);
  if (quad.check_convergence) {
    auto fine = second_once(law, datum, TimeGrid(r.times, 2 * quad.outer_nodes, 2 * quad.inner_nodes), options, region);
    r.doubling_change = spectrum_change(r.whole, fine);
    r.converged = r.doubling_change < quad.tolerance;
    r.whole = std::move(fine);
  }
  return r;
}

IterateResult third_iterate_sector(const DispersionLaw& law, const SectorDatum& datum, const QuadratureSpec& quad,
                                   const IterateOptions& options) {
  const SectorRegion region = options.output_region.value_or(sector_E(datum.dim, datum.n, datum.delta, Order::kCubic));
  IterateResult r;
  r.order = 3;
  r.dim = datum.dim;
  r.backend = Backend::kSector;
  r.mixed_weight = mixed_weight(datum.dim);
  r.times = quad.times();
  r.quadrature_region = region;
  auto coarse = third_once(law, datum, TimeGrid(r.times, quad.outer_nodes, quad.inner_nodes), options, region);
  if (quad.check_convergence) {
    auto fine = third_once(law, datum, TimeGrid(r.times, 2 * quad.outer_nodes, 2 * quad.inner_nodes), options, region);
    r.doubling_change = std::max({spectrum_change(coarse.whole, fine.whole), spectrum_change(coarse.mixed, fine.mixed),
                                  spectrum_change(coarse.pure, fine.pure)});
    r.converged = r.doubling_change < quad.tolerance;
    coarse = std::move(fine);
  }
  r.whole = std::move(coarse.whole);
  r.mixed = std::move(coarse.mixed);
  r.pure = std::move(coarse.pure);
  return r;
}

}  // namespace wwlab::detail
