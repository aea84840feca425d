#include "wwlab/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <random>

#include "wwlab/errors.hpp"

namespace wwlab {

GaussRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw InvalidArgument("Gauss-Legendre rule needs at least one node");
  gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(n);
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) gsl_integration_glfixed_point(a, b, i, &rule.nodes[i], &rule.weights[i], table);
  gsl_integration_glfixed_table_free(table);
  return rule;
}

namespace {

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

double radical_inverse(std::uint64_t i, int base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

}  // namespace

HaltonSampler::HaltonSampler(int dims, std::uint64_t seed) {
  if (dims < 1 || dims > static_cast<int>(std::size(kPrimes))) throw InvalidArgument("unsupported sampler dimension");
  std::mt19937_64 rng(seed);
  shift_.resize(dims);
  point_.resize(dims);
  for (auto& s : shift_) s = static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

const std::vector<double>& HaltonSampler::next() {
  ++index_;
  for (std::size_t d = 0; d < shift_.size(); ++d) {
    double v = radical_inverse(index_, kPrimes[d]) + shift_[d];
    point_[d] = v >= 1.0 ? v - 1.0 : v;
  }
  return point_;
}

}  // namespace wwlab
