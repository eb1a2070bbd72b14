#ifndef RSW_WAVELET_PROFILES_HPP
#define RSW_WAVELET_PROFILES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rsw/field_grid.hpp"
#include "rsw/meyer_window.hpp"

// Radial frequency profiles. The original Simoncelli wavelet is
//   psi(w) = cos((pi/2) log2(2 w / pi)) on (pi/4, pi], 0 otherwise.
// The modified wavelet replaces the implicit indicator window by a Meyer
// window theta_eps and rescales so the support stays within [-pi, pi]^d:
//   psi'(w) = theta_eps(z) cos((pi/2) z),  z = log2(2^{1+eps} w / pi),
// supported on (pi 2^{-2-2 eps}, pi].

namespace rsw {

enum class ProfileKind { SimoncelliOriginal, SimoncelliModified, Lowpass, Highpass };

inline double simoncelli_original(double w) {
  if (!(w >= 0.0)) throw std::invalid_argument("simoncelli_original: w must be >= 0");
  if (w <= M_PI / 4.0 || w > M_PI) return 0.0;
  return std::cos(M_PI / 2.0 * std::log2(2.0 * w / M_PI));
}

inline double simoncelli_modified(double w, const MeyerWindow& window) {
  if (!(w >= 0.0)) throw std::invalid_argument("simoncelli_modified: w must be >= 0");
  const double eps = window.spec().transition();
  const double r_lo = M_PI * std::exp2(-2.0 - 2.0 * eps);
  if (w <= r_lo || w > M_PI) return 0.0;
  const double z = std::log2(std::exp2(1.0 + eps) * w / M_PI);
  return window.theta(z) * std::cos(M_PI / 2.0 * z);
}

class RadialProfile {
public:
  RadialProfile(ProfileKind kind, std::optional<WindowSpec> window, double support_lo,
                double support_hi, std::function<double(double)> eval)
      : kind_(kind),
        window_(window),
        support_lo_(support_lo),
        support_hi_(support_hi),
        eval_(std::move(eval)) {}

  static RadialProfile original() {
    return RadialProfile(ProfileKind::SimoncelliOriginal, std::nullopt, M_PI / 4.0, M_PI,
                         [](double w) { return simoncelli_original(w); });
  }

  static RadialProfile modified(const WindowSpec& spec) {
    const double r_lo = M_PI * std::exp2(-2.0 - 2.0 * spec.transition());
    MeyerWindow window(spec);
    return RadialProfile(ProfileKind::SimoncelliModified, spec, r_lo, M_PI,
                         [window](double w) { return simoncelli_modified(w, window); });
  }

  double operator()(double w) const { return eval_(w); }

  ProfileKind kind() const { return kind_; }
  const std::optional<WindowSpec>& window() const { return window_; }
  double support_lo() const { return support_lo_; }
  double support_hi() const { return support_hi_; }

private:
  ProfileKind kind_;
  std::optional<WindowSpec> window_;
  double support_lo_;
  double support_hi_;
  std::function<double(double)> eval_;
};

// Sum_{k=k_lo..k_hi} profile(2^k w)^2; covers the Appendix-style dyadic
// partition when the range spans every scale whose band contains w.
inline double truncated_scale_sum(const RadialProfile& profile, double w, int k_lo,
                                  int k_hi) {
  if (k_lo > k_hi) throw std::invalid_argument("truncated_scale_sum: k_lo > k_hi");
  double s = 0.0;
  for (int k = k_lo; k <= k_hi; ++k) {
    const double v = profile(std::ldexp(w, k));
    s += v * v;
  }
  return s;
}

struct ChannelBank {
  RadialProfile lowpass;
  std::vector<RadialProfile> bands;  // bands[k](w) = profile(2^k w)
  RadialProfile highpass;

  std::size_t channel_count() const { return bands.size() + 2; }
};

// Completes the dyadic bands {profile(2^k .)} with clamp-complement lowpass
// and highpass profiles so that L^2 + sum psi_k^2 + H^2 = 1 at every w >= 0.
// The highpass switches on above 2*r_lo, the finest radius at which the
// k >= 0 scale sum is already complete; everything below that complement
// boundary that the J bands miss belongs to the lowpass. Grid energy beyond
// the radial support (|w| > pi corners in d >= 2) lands in the highpass.
inline ChannelBank build_channel_profiles(const RadialProfile& profile, int scales) {
  if (scales < 1) throw std::invalid_argument("build_channel_profiles: need J >= 1");
  auto shared = std::make_shared<RadialProfile>(profile);

  std::vector<RadialProfile> bands;
  bands.reserve(static_cast<std::size_t>(scales));
  for (int k = 0; k < scales; ++k) {
    bands.emplace_back(profile.kind(), profile.window(),
                       std::ldexp(profile.support_lo(), -k),
                       std::ldexp(profile.support_hi(), -k), [shared, k](double w) {
                         return (*shared)(std::ldexp(w, k));
                       });
  }

  auto band_sum_sq = [shared, scales](double w) {
    double s = 0.0;
    for (int k = 0; k < scales; ++k) {
      const double v = (*shared)(std::ldexp(w, k));
      s += v * v;
    }
    return s;
  };

  const double hp_cutoff = 2.0 * profile.support_lo();
  auto hp_eval = [band_sum_sq, hp_cutoff](double w) {
    if (!(w > hp_cutoff)) return 0.0;
    return std::sqrt(std::clamp(1.0 - band_sum_sq(w), 0.0, 1.0));
  };
  RadialProfile highpass(ProfileKind::Highpass, profile.window(), hp_cutoff,
                         std::numeric_limits<double>::infinity(), hp_eval);

  auto lp_eval = [band_sum_sq, hp_eval](double w) {
    const double h = hp_eval(w);
    return std::sqrt(std::clamp(1.0 - band_sum_sq(w) - h * h, 0.0, 1.0));
  };
  RadialProfile lowpass(ProfileKind::Lowpass, profile.window(), 0.0,
                        std::ldexp(profile.support_hi(), -(scales - 1)), lp_eval);

  return ChannelBank{std::move(lowpass), std::move(bands), std::move(highpass)};
}

// Isotropic lift onto a grid: bin value = evaluator(|freq_coord(bin)|).
template <class Evaluator>
SpectrumField sample_radial(const Evaluator& evaluator, const GridSpec& grid) {
  if (grid.spacing() > 1.0)
    throw std::invalid_argument("sample_radial: requires dx <= 1 so the band edge pi is resolved");
  std::vector<double> axis(grid.size());
  for (int i = 0; i < grid.size(); ++i) axis[i] = grid.freq_axis(i);

  std::vector<std::complex<double>> out(grid.num_samples());
  for_each_bin(grid, [&](std::size_t flat, const std::array<int, 3>& idx) {
    double r2 = 0.0;
    for (int a = 0; a < grid.dim(); ++a) {
      const double w = axis[idx[a]];
      r2 += w * w;
    }
    out[flat] = evaluator(std::sqrt(r2));
  });
  return SpectrumField(grid, std::move(out));
}

inline SpectrumField sample_radial(const RadialProfile& profile, const GridSpec& grid) {
  return sample_radial([&profile](double r) { return profile(r); }, grid);
}

}  // namespace rsw

#endif  // RSW_WAVELET_PROFILES_HPP
