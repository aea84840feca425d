#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wwlab/vec.hpp"

namespace wwlab {

using Complex = std::complex<double>;

/// Zero-padding factor of the transform grid used for products.
enum class Padding { kThreeHalves, kTwo };

/// Integer wave vectors {-M/2+1, ..., M/2}^d on the periodic box [0, 2pi)^d.
///
/// Coefficients are stored in transform order (k = 0 first, negative
/// wave numbers at the end), row-major in 2d.  The Nyquist row k = M/2 is
/// never populated, so the usable band is |k_i| <= M/2 - 1.
class FrequencyLattice {
 public:
  FrequencyLattice(int dim, int modes, Padding padding = Padding::kTwo);

  int dim() const { return dim_; }
  int modes() const { return modes_; }
  Padding padding() const { return padding_; }
  int max_wavenumber() const { return modes_ / 2 - 1; }
  /// Even size of the padded transform grid per axis.
  int padded_modes() const;
  std::size_t size() const;

  bool usable(int kx, int ky = 0) const;
  std::size_t flat(int kx, int ky = 0) const;
  int wavenumber(int index) const { return index <= modes_ / 2 ? index : index - modes_; }
  Vec2 wave(std::size_t flat_index) const;

  bool operator==(const FrequencyLattice& o) const {
    return dim_ == o.dim_ && modes_ == o.modes_ && padding_ == o.padding_;
  }

 private:
  int dim_;
  int modes_;
  Padding padding_;
};

/// Inclusive wave-number range along one axis; empty when lo > hi.
struct AxisRange {
  int lo = 1;
  int hi = 0;
  bool empty() const { return lo > hi; }
};

/// Bounding box of the possibly nonzero coefficients.
struct Band {
  AxisRange axis[2];

  bool empty() const { return axis[0].empty() || axis[1].empty(); }
  void include(int kx, int ky);
  static Band hull(const Band& a, const Band& b);
  /// Support bound of a product: ranges add axis by axis.
  static Band sum(const Band& a, const Band& b);
};

using FrequencyRegion = std::function<bool(const Vec2&)>;

/// Complex Fourier coefficients with a tracked support band and reality flag.
class SpectralField {
 public:
  explicit SpectralField(const FrequencyLattice& lattice);

  const FrequencyLattice& lattice() const { return lattice_; }
  const std::vector<Complex>& data() const { return coef_; }
  const Band& band() const { return band_; }
  bool is_real() const { return real_; }
  void mark_real(bool real) { real_ = real; }

  /// Coefficient at (kx, ky); zero outside the usable band.
  Complex at(int kx, int ky = 0) const;
  /// Throws SupportOverflow for wave numbers outside the usable band.
  void set(int kx, int ky, Complex value);
  void add(int kx, int ky, Complex value);

  /// Zeroes every coefficient outside `band` and adopts it.
  void restrict_to(const Band& band);
  /// Largest |u(k) - conj(u(-k))| relative to the largest coefficient.
  double hermitian_defect() const;
  double max_abs() const;

  /// Visits every usable lattice point inside the band.
  void for_each(const std::function<void(int, int, Complex)>& f) const;

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(double c);
  SpectralField& operator*=(Complex c);

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(double c, SpectralField a) { return a *= c; }
  friend SpectralField operator*(Complex c, SpectralField a) { return a *= c; }

 private:
  FrequencyLattice lattice_;
  std::vector<Complex> coef_;
  Band band_;
  bool real_ = true;
};

/// Fourier multiplier symbol, optionally with a declared value at xi = 0.
struct Symbol {
  std::function<Complex(const Vec2&)> value;
  std::optional<Complex> at_zero;
  /// s(-xi) = conj(s(xi)); such symbols map real fields to real fields.
  bool conjugate_even = true;
  std::string name;
};

namespace symbols {
/// |xi|^power, with value 0 at the origin for power > 0.
Symbol abs_d(double power = 1.0);
/// i xi_axis (the derivative along axis 0 or 1).
Symbol partial(int axis);
/// -|xi|^2.
Symbol laplacian();
}  // namespace symbols

SpectralField apply_multiplier(const SpectralField& field, const Symbol& symbol);

/// Exact truncated convolution computed on the padded transform grid.
SpectralField pointwise_product(const SpectralField& a, const SpectralField& b);

/// (sum over region of <xi>^{2s} |u(xi)|^2)^{1/2}, unit cell measure.
double sobolev_norm(const SpectralField& field, double s, const FrequencyRegion& region = {});

double japanese_bracket(const Vec2& xi);

/// Free-surface height h and potential trace psi on one lattice.
struct SurfaceState {
  SpectralField h;
  SpectralField psi;

  SurfaceState(SpectralField h_, SpectralField psi_);
  explicit SurfaceState(const FrequencyLattice& lattice) : SurfaceState(SpectralField(lattice), SpectralField(lattice)) {}

  const FrequencyLattice& lattice() const { return h.lattice(); }
  SurfaceState& operator+=(const SurfaceState& o);
  SurfaceState& operator*=(double c);
};

inline SurfaceState operator+(SurfaceState a, const SurfaceState& b) { return a += b; }
inline SurfaceState operator*(double c, SurfaceState a) { return a *= c; }

}  // namespace wwlab
