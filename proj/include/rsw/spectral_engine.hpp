#ifndef RSW_SPECTRAL_ENGINE_HPP
#define RSW_SPECTRAL_ENGINE_HPP

#include <complex>
#include <mutex>
#include <sstream>
#include <vector>

#include <fftw3.h>

#include "rsw/field_grid.hpp"

// Unitary DFT (1/sqrt(N^d) both ways, forward kernel e^{-j w.x}) and pointwise
// multiplier application. FFTW planning is serialized behind a mutex; execution
// is reentrant.

namespace rsw {

namespace detail {

inline std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

inline void run_dft(const GridSpec& grid, std::vector<std::complex<double>>& buf,
                    int sign) {
  int dims[3] = {grid.size(), grid.size(), grid.size()};
  fftw_complex* data = reinterpret_cast<fftw_complex*>(buf.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    plan = fftw_plan_dft(grid.dim(), dims, data, data, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(grid.num_samples()));
  for (auto& z : buf) z *= scale;
}

}  // namespace detail

inline SpectrumField forward(const ScalarField& f) {
  std::vector<std::complex<double>> buf(f.values.begin(), f.values.end());
  detail::run_dft(f.grid, buf, FFTW_FORWARD);
  return SpectrumField(f.grid, std::move(buf));
}

// Full complex inverse; spatial samples land in wrapped layout.
inline SpectrumField inverse_complex(const SpectrumField& s) {
  std::vector<std::complex<double>> buf = s.values;
  detail::run_dft(s.grid, buf, FFTW_BACKWARD);
  return SpectrumField(s.grid, std::move(buf));
}

// Inverse for Hermitian spectra: returns the real part.
inline ScalarField inverse(const SpectrumField& s) {
  SpectrumField t = inverse_complex(s);
  std::vector<double> v(t.values.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = t.values[i].real();
  return ScalarField(s.grid, std::move(v));
}

// Largest |imag| of the complex inverse relative to its largest |value|;
// diagnostic for multipliers that are supposed to preserve realness.
inline double inverse_imag_residue(const SpectrumField& s) {
  SpectrumField t = inverse_complex(s);
  double max_im = 0.0, max_abs = 0.0;
  for (const auto& z : t.values) {
    max_im = std::max(max_im, std::abs(z.imag()));
    max_abs = std::max(max_abs, std::abs(z));
  }
  return max_abs > 0.0 ? max_im / max_abs : 0.0;
}

template <class Multiplier>
SpectrumField apply_multiplier(const SpectrumField& s, Multiplier&& m) {
  const GridSpec& g = s.grid;
  std::vector<double> axis(g.size());
  for (int i = 0; i < g.size(); ++i) axis[i] = g.freq_axis(i);

  std::vector<std::complex<double>> out(s.values.size());
  for_each_bin(g, [&](std::size_t flat, const std::array<int, 3>& idx) {
    FreqVector w{0.0, 0.0, 0.0};
    for (int a = 0; a < g.dim(); ++a) w[a] = axis[idx[a]];
    const std::complex<double> mv = m(w);
    if (!std::isfinite(mv.real()) || !std::isfinite(mv.imag())) {
      std::ostringstream msg;
      msg << "apply_multiplier: non-finite multiplier at bin (";
      for (int a = 0; a < g.dim(); ++a) msg << (a ? "," : "") << idx[a];
      msg << ")";
      throw std::domain_error(msg.str());
    }
    out[flat] = mv * s.values[flat];
  });
  return SpectrumField(g, std::move(out));
}

inline double energy(const ScalarField& f) {
  double e = 0.0;
  for (double v : f.values) e += v * v;
  return e;
}

inline double energy(const SpectrumField& f) {
  double e = 0.0;
  for (const auto& z : f.values) e += std::norm(z);
  return e;
}

}  // namespace rsw

#endif  // RSW_SPECTRAL_ENGINE_HPP
