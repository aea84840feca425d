#pragma once

#include <cstdint>
#include <vector>

namespace wwlab {

/// Gauss-Legendre nodes and weights mapped to [a, b].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int n, double a, double b);

/// Halton sequence with a seeded Cranley-Patterson shift; deterministic per seed.
class HaltonSampler {
 public:
  HaltonSampler(int dims, std::uint64_t seed);
  /// Next point of [0,1)^dims.
  const std::vector<double>& next();
  int dims() const { return static_cast<int>(shift_.size()); }

 private:
  std::vector<double> shift_;
  std::vector<double> point_;
  std::uint64_t index_ = 0;
};

}  // namespace wwlab
