#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace wwlab::detail {
namespace {

// In-place plans keyed by (dim, size, sign).  Planning is not thread safe in
// FFTW, execution with the new-array interface is.
fftw_plan cached_plan(int dim, int size, int sign) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, fftw_plan> plans;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_tuple(dim, size, sign);
  auto it = plans.find(key);
  if (it != plans.end()) return it->second;
  std::size_t n = dim == 1 ? size : static_cast<std::size_t>(size) * size;
  fftw_complex* scratch = fftw_alloc_complex(n);
  fftw_plan plan = dim == 1 ? fftw_plan_dft_1d(size, scratch, scratch, sign, FFTW_ESTIMATE | FFTW_UNALIGNED)
                            : fftw_plan_dft_2d(size, size, scratch, scratch, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(scratch);
  plans.emplace(key, plan);
  return plan;
}

void execute(std::vector<Complex>& data, int dim, int size, int sign) {
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(cached_plan(dim, size, sign), p, p);
}

int wrap(int k, int p) { return k >= 0 ? k : k + p; }

}  // namespace

std::vector<Complex> to_physical(const SpectralField& field) {
  const auto& lat = field.lattice();
  const int p = lat.padded_modes();
  const int dim = lat.dim();
  std::vector<Complex> grid(dim == 1 ? p : static_cast<std::size_t>(p) * p);
  field.for_each([&](int kx, int ky, Complex v) {
    if (dim == 1)
      grid[wrap(kx, p)] = v;
    else
      grid[static_cast<std::size_t>(wrap(kx, p)) * p + wrap(ky, p)] = v;
  });
  execute(grid, dim, p, FFTW_BACKWARD);
  return grid;
}

SpectralField from_physical(std::vector<Complex>& samples, const FrequencyLattice& lattice, const Band& band,
                            bool real) {
  const int p = lattice.padded_modes();
  const int dim = lattice.dim();
  execute(samples, dim, p, FFTW_FORWARD);
  const double scale = dim == 1 ? 1.0 / p : 1.0 / (static_cast<double>(p) * p);
  SpectralField out(lattice);
  if (band.empty()) return out;
  for (int kx = band.axis[0].lo; kx <= band.axis[0].hi; ++kx) {
    for (int ky = band.axis[1].lo; ky <= band.axis[1].hi; ++ky) {
      std::size_t idx = dim == 1 ? wrap(kx, p) : static_cast<std::size_t>(wrap(kx, p)) * p + wrap(ky, p);
      out.set(kx, ky, samples[idx] * scale);
    }
  }
  out.restrict_to(band);
  out.mark_real(real);
  return out;
}

}  // namespace wwlab::detail
