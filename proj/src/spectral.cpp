#include "wwlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fft.hpp"
#include "wwlab/errors.hpp"

namespace wwlab {

FrequencyLattice::FrequencyLattice(int dim, int modes, Padding padding) : dim_(dim), modes_(modes), padding_(padding) {
  if (dim != 1 && dim != 2) throw InvalidArgument("lattice dimension must be 1 or 2");
  if (modes < 4 || (modes & (modes - 1)) != 0) throw InvalidArgument("modes per axis must be a power of two >= 4");
}

int FrequencyLattice::padded_modes() const { return padding_ == Padding::kTwo ? 2 * modes_ : 3 * modes_ / 2; }

std::size_t FrequencyLattice::size() const {
  return dim_ == 1 ? static_cast<std::size_t>(modes_) : static_cast<std::size_t>(modes_) * modes_;
}

bool FrequencyLattice::usable(int kx, int ky) const {
  const int m = max_wavenumber();
  if (std::abs(kx) > m) return false;
  return dim_ == 1 ? ky == 0 : std::abs(ky) <= m;
}

std::size_t FrequencyLattice::flat(int kx, int ky) const {
  const std::size_t ix = kx >= 0 ? kx : kx + modes_;
  if (dim_ == 1) return ix;
  const std::size_t iy = ky >= 0 ? ky : ky + modes_;
  return ix * modes_ + iy;
}

Vec2 FrequencyLattice::wave(std::size_t flat_index) const {
  if (dim_ == 1) return {static_cast<double>(wavenumber(static_cast<int>(flat_index))), 0.0};
  const int ix = static_cast<int>(flat_index / modes_);
  const int iy = static_cast<int>(flat_index % modes_);
  return {static_cast<double>(wavenumber(ix)), static_cast<double>(wavenumber(iy))};
}

void Band::include(int kx, int ky) {
  const int k[2] = {kx, ky};
  for (int i = 0; i < 2; ++i) {
    if (axis[i].empty()) {
      axis[i] = {k[i], k[i]};
    } else {
      axis[i].lo = std::min(axis[i].lo, k[i]);
      axis[i].hi = std::max(axis[i].hi, k[i]);
    }
  }
}

Band Band::hull(const Band& a, const Band& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  Band out;
  for (int i = 0; i < 2; ++i)
    out.axis[i] = {std::min(a.axis[i].lo, b.axis[i].lo), std::max(a.axis[i].hi, b.axis[i].hi)};
  return out;
}

Band Band::sum(const Band& a, const Band& b) {
  if (a.empty() || b.empty()) return {};
  Band out;
  for (int i = 0; i < 2; ++i) out.axis[i] = {a.axis[i].lo + b.axis[i].lo, a.axis[i].hi + b.axis[i].hi};
  return out;
}

SpectralField::SpectralField(const FrequencyLattice& lattice) : lattice_(lattice), coef_(lattice.size()) {}

Complex SpectralField::at(int kx, int ky) const {
  if (!lattice_.usable(kx, ky)) return {};
  return coef_[lattice_.flat(kx, ky)];
}

void SpectralField::set(int kx, int ky, Complex value) {
  if (!lattice_.usable(kx, ky)) {
    std::ostringstream msg;
    msg << "frequency (" << kx << ", " << ky << ") lies outside the usable band |k| <= "
        << lattice_.max_wavenumber();
    throw SupportOverflow(msg.str());
  }
  coef_[lattice_.flat(kx, ky)] = value;
  if (value != Complex{}) band_.include(kx, ky);
}

void SpectralField::add(int kx, int ky, Complex value) { set(kx, ky, at(kx, ky) + value); }

void SpectralField::restrict_to(const Band& band) {
  const int m = lattice_.max_wavenumber();
  const int ylim = lattice_.dim() == 1 ? 0 : m;
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    Vec2 k = lattice_.wave(i);
    const int kx = static_cast<int>(k.x), ky = static_cast<int>(k.y);
    const bool inside = !band.empty() && kx >= band.axis[0].lo && kx <= band.axis[0].hi &&
                        ky >= band.axis[1].lo && ky <= band.axis[1].hi && std::abs(kx) <= m &&
                        std::abs(ky) <= ylim;
    if (!inside) coef_[i] = {};
  }
  band_ = band;
}

double SpectralField::max_abs() const {
  double m = 0.0;
  for (const auto& c : coef_) m = std::max(m, std::abs(c));
  return m;
}

double SpectralField::hermitian_defect() const {
  const double scale = max_abs();
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  const int m = lattice_.max_wavenumber();
  const int ym = lattice_.dim() == 1 ? 0 : m;
  for (int kx = -m; kx <= m; ++kx)
    for (int ky = -ym; ky <= ym; ++ky) worst = std::max(worst, std::abs(at(kx, ky) - std::conj(at(-kx, -ky))));
  return worst / scale;
}

void SpectralField::for_each(const std::function<void(int, int, Complex)>& f) const {
  if (band_.empty()) return;
  const int m = lattice_.max_wavenumber();
  const int ym = lattice_.dim() == 1 ? 0 : m;
  const int x0 = std::max(band_.axis[0].lo, -m), x1 = std::min(band_.axis[0].hi, m);
  const int y0 = std::max(band_.axis[1].lo, -ym), y1 = std::min(band_.axis[1].hi, ym);
  for (int kx = x0; kx <= x1; ++kx)
    for (int ky = y0; ky <= y1; ++ky) f(kx, ky, coef_[lattice_.flat(kx, ky)]);
}

namespace {
void require_same_lattice(const FrequencyLattice& a, const FrequencyLattice& b) {
  if (!(a == b)) throw InvalidArgument("operands live on different lattices");
}
}  // namespace

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  require_same_lattice(lattice_, o.lattice_);
  for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += o.coef_[i];
  band_ = Band::hull(band_, o.band_);
  real_ = real_ && o.real_;
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  require_same_lattice(lattice_, o.lattice_);
  for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] -= o.coef_[i];
  band_ = Band::hull(band_, o.band_);
  real_ = real_ && o.real_;
  return *this;
}

SpectralField& SpectralField::operator*=(double c) {
  for (auto& v : coef_) v *= c;
  return *this;
}

SpectralField& SpectralField::operator*=(Complex c) {
  for (auto& v : coef_) v *= c;
  if (c.imag() != 0.0) real_ = false;
  return *this;
}

namespace symbols {

Symbol abs_d(double power) {
  Symbol s;
  s.value = [power](const Vec2& xi) { return Complex(std::pow(xi.norm(), power)); };
  if (power > 0) s.at_zero = Complex{};
  s.name = "|D|^" + std::to_string(power);
  return s;
}

Symbol partial(int axis) {
  Symbol s;
  s.value = [axis](const Vec2& xi) { return Complex(0.0, axis == 0 ? xi.x : xi.y); };
  s.conjugate_even = true;
  s.name = axis == 0 ? "d/dx" : "d/dy";
  return s;
}

Symbol laplacian() {
  Symbol s;
  s.value = [](const Vec2& xi) { return Complex(-xi.norm_sq()); };
  s.name = "laplacian";
  return s;
}

}  // namespace symbols

SpectralField apply_multiplier(const SpectralField& field, const Symbol& symbol) {
  SpectralField out(field.lattice());
  field.for_each([&](int kx, int ky, Complex v) {
    if (v == Complex{}) return;
    Complex m;
    if (kx == 0 && ky == 0 && symbol.at_zero) {
      m = *symbol.at_zero;
    } else {
      m = symbol.value(Vec2(kx, ky));
      if (!std::isfinite(m.real()) || !std::isfinite(m.imag())) {
        std::ostringstream msg;
        msg << "symbol " << symbol.name << " is undefined at xi = (" << kx << ", " << ky << ")";
        throw UndefinedSymbol(msg.str());
      }
    }
    out.set(kx, ky, m * v);
  });
  out.restrict_to(field.band());
  out.mark_real(field.is_real() && symbol.conjugate_even);
  return out;
}

SpectralField pointwise_product(const SpectralField& a, const SpectralField& b) {
  require_same_lattice(a.lattice(), b.lattice());
  const auto& lat = a.lattice();
  Band band = Band::sum(a.band(), b.band());
  if (band.empty()) return SpectralField(lat);
  const int m = lat.max_wavenumber();
  for (int i = 0; i < lat.dim(); ++i) {
    const int worst = std::abs(band.axis[i].lo) > std::abs(band.axis[i].hi) ? band.axis[i].lo : band.axis[i].hi;
    if (std::abs(worst) > m) {
      std::ostringstream msg;
      msg << "product populates k_" << (i == 0 ? 'x' : 'y') << " = " << worst << " beyond the usable band |k| <= " << m;
      throw SupportOverflow(msg.str());
    }
  }
  auto pa = detail::to_physical(a);
  auto pb = detail::to_physical(b);
  for (std::size_t i = 0; i < pa.size(); ++i) pa[i] *= pb[i];
  return detail::from_physical(pa, lat, band, a.is_real() && b.is_real());
}

double japanese_bracket(const Vec2& xi) { return std::sqrt(1.0 + xi.norm_sq()); }

double sobolev_norm(const SpectralField& field, double s, const FrequencyRegion& region) {
  double acc = 0.0;
  field.for_each([&](int kx, int ky, Complex v) {
    if (v == Complex{}) return;
    Vec2 xi(kx, ky);
    if (region && !region(xi)) return;
    acc += std::pow(1.0 + xi.norm_sq(), s) * std::norm(v);
  });
  return std::sqrt(acc);
}

SurfaceState::SurfaceState(SpectralField h_, SpectralField psi_) : h(std::move(h_)), psi(std::move(psi_)) {
  require_same_lattice(h.lattice(), psi.lattice());
}

SurfaceState& SurfaceState::operator+=(const SurfaceState& o) {
  h += o.h;
  psi += o.psi;
  return *this;
}

SurfaceState& SurfaceState::operator*=(double c) {
  h *= c;
  psi *= c;
  return *this;
}

}  // namespace wwlab
