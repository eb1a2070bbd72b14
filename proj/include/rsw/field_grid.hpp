#ifndef RSW_FIELD_GRID_HPP
#define RSW_FIELD_GRID_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

// Uniform sampling grids on [-N*dx/2, N*dx/2)^d and their DFT spectra.
//
// Both spatial samples and frequency bins are stored in wrapped (DFT) layout:
// axis index i maps to the signed offset i for i < N/2 and i - N otherwise,
// so the origin sits at index 0 and the Nyquist offset -N/2 at index N/2.
// The Nyquist bin therefore carries the *negative* edge frequency -pi/dx.
// Storage is row-major (C order), axis 0 slowest.

namespace rsw {

using FreqVector = std::array<double, 3>;

class GridSpec {
public:
  GridSpec(int dim, int size, double spacing)
      : dim_(dim), size_(size), spacing_(spacing) {
    if (dim < 1 || dim > 3)
      throw std::invalid_argument("GridSpec: dim must be 1, 2 or 3");
    if (size < 16 || (size & (size - 1)) != 0)
      throw std::invalid_argument("GridSpec: N must be a power of two >= 16");
    if (!(spacing > 0.0) || !std::isfinite(spacing))
      throw std::invalid_argument("GridSpec: spacing must be positive");
  }

  int dim() const { return dim_; }
  int size() const { return size_; }
  double spacing() const { return spacing_; }

  std::size_t num_samples() const {
    std::size_t n = 1;
    for (int a = 0; a < dim_; ++a) n *= static_cast<std::size_t>(size_);
    return n;
  }

  double domain_half_width() const { return size_ * spacing_ / 2.0; }

  int signed_offset(int index) const {
    if (index < 0 || index >= size_)
      throw std::out_of_range("GridSpec: index out of range");
    return index < size_ / 2 ? index : index - size_;
  }

  // Signed angular frequency of one axis bin; the Nyquist bin maps to -pi/dx.
  double freq_axis(int index) const {
    const int k = signed_offset(index);
    return (2.0 * M_PI * static_cast<double>(k)) /
           (static_cast<double>(size_) * spacing_);
  }

  double space_axis(int index) const {
    return static_cast<double>(signed_offset(index)) * spacing_;
  }

  double nyquist() const { return -freq_axis(size_ / 2); }

  template <class Index>
  FreqVector freq_coord(const Index& idx) const {
    FreqVector w{0.0, 0.0, 0.0};
    for (int a = 0; a < dim_; ++a) w[a] = freq_axis(idx[a]);
    return w;
  }

  template <class Index>
  FreqVector space_coord(const Index& idx) const {
    FreqVector x{0.0, 0.0, 0.0};
    for (int a = 0; a < dim_; ++a) x[a] = space_axis(idx[a]);
    return x;
  }

  std::size_t to_flat(const std::array<int, 3>& idx) const {
    std::size_t flat = 0;
    for (int a = 0; a < dim_; ++a) {
      const int i = idx[a];
      if (i < 0 || i >= size_)
        throw std::out_of_range("GridSpec: index out of range");
      flat = flat * static_cast<std::size_t>(size_) + static_cast<std::size_t>(i);
    }
    return flat;
  }

  std::array<int, 3> from_flat(std::size_t flat) const {
    std::array<int, 3> idx{0, 0, 0};
    for (int a = dim_ - 1; a >= 0; --a) {
      idx[a] = static_cast<int>(flat % static_cast<std::size_t>(size_));
      flat /= static_cast<std::size_t>(size_);
    }
    return idx;
  }

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.dim_ == b.dim_ && a.size_ == b.size_ && a.spacing_ == b.spacing_;
  }
  friend bool operator!=(const GridSpec& a, const GridSpec& b) { return !(a == b); }

private:
  int dim_;
  int size_;
  double spacing_;
};

// Visits every bin in flat order, keeping the per-axis index in step.
template <class Fn>
void for_each_bin(const GridSpec& grid, Fn&& fn) {
  const int n = grid.size();
  const std::size_t total = grid.num_samples();
  std::array<int, 3> idx{0, 0, 0};
  const int d = grid.dim();
  for (std::size_t flat = 0; flat < total; ++flat) {
    fn(flat, idx);
    for (int a = d - 1; a >= 0; --a) {
      if (++idx[a] < n) break;
      idx[a] = 0;
    }
  }
}

namespace detail {
inline void check_finite(const std::vector<double>& v, const char* what) {
  for (double x : v)
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + ": non-finite value");
}
inline void check_finite(const std::vector<std::complex<double>>& v, const char* what) {
  for (const auto& x : v)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
      throw std::invalid_argument(std::string(what) + ": non-finite value");
}
}  // namespace detail

struct ScalarField {
  GridSpec grid;
  std::vector<double> values;

  ScalarField(const GridSpec& g, std::vector<double> v)
      : grid(g), values(std::move(v)) {
    if (values.size() != grid.num_samples())
      throw std::invalid_argument("ScalarField: value count does not match grid");
    detail::check_finite(values, "ScalarField");
  }

  static ScalarField zeros(const GridSpec& g) {
    return ScalarField(g, std::vector<double>(g.num_samples(), 0.0));
  }
};

struct SpectrumField {
  GridSpec grid;
  std::vector<std::complex<double>> values;

  SpectrumField(const GridSpec& g, std::vector<std::complex<double>> v)
      : grid(g), values(std::move(v)) {
    if (values.size() != grid.num_samples())
      throw std::invalid_argument("SpectrumField: value count does not match grid");
    detail::check_finite(values, "SpectrumField");
  }

  static SpectrumField zeros(const GridSpec& g) {
    return SpectrumField(g, std::vector<std::complex<double>>(g.num_samples(), 0.0));
  }
};

struct ShellRow {
  double r_center;
  double max_abs;
};

// Supremum of |f| per radial shell of the given width; shells partition
// [0, N*dx/2), samples at larger radii (corners in d >= 2) are not binned.
inline std::vector<ShellRow> shell_max(const ScalarField& field, double shell_width) {
  const GridSpec& g = field.grid;
  if (!(shell_width >= g.spacing()))
    throw std::invalid_argument("shell_max: shell_width must be >= grid spacing");
  const double r_edge = g.domain_half_width();
  const std::size_t n_shells = static_cast<std::size_t>(std::floor(r_edge / shell_width)) + 1;
  std::vector<double> best(n_shells, -1.0);

  std::vector<double> axis(g.size());
  for (int i = 0; i < g.size(); ++i) axis[i] = g.space_axis(i);

  for_each_bin(g, [&](std::size_t flat, const std::array<int, 3>& idx) {
    double r2 = 0.0;
    for (int a = 0; a < g.dim(); ++a) {
      const double c = axis[idx[a]];
      r2 += c * c;
    }
    const double r = std::sqrt(r2);
    if (r >= r_edge) return;
    const std::size_t shell = static_cast<std::size_t>(r / shell_width);
    if (shell >= n_shells) return;
    const double v = std::abs(field.values[flat]);
    if (v > best[shell]) best[shell] = v;
  });

  std::vector<ShellRow> rows;
  for (std::size_t s = 0; s < n_shells; ++s)
    if (best[s] >= 0.0) rows.push_back({(static_cast<double>(s) + 0.5) * shell_width, best[s]});
  return rows;
}

}  // namespace rsw

#endif  // RSW_FIELD_GRID_HPP
