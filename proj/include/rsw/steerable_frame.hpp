#ifndef RSW_STEERABLE_FRAME_HPP
#define RSW_STEERABLE_FRAME_HPP

#include <cmath>
#include <string>
#include <vector>

#include "rsw/field_grid.hpp"
#include "rsw/riesz.hpp"
#include "rsw/spectral_engine.hpp"
#include "rsw/wavelet_profiles.hpp"

// Undecimated steerable frame: channel filters are the radial band profiles
// psi_k(|w|) multiplied by the order-n Riesz symbols, plus the lowpass and
// highpass complements. Analysis filters the spectrum per channel; synthesis
// applies the conjugate filters and sums (adjoint), which inverts exactly
// because the squared channel filters sum to 1 at every bin.

namespace rsw {

struct FrameSpec {
  GridSpec grid;
  int scales;       // J >= 1
  int riesz_order;  // n >= 0
  RadialProfile profile;

  FrameSpec(const GridSpec& g, int J, int order, RadialProfile prof)
      : grid(g), scales(J), riesz_order(order), profile(std::move(prof)) {
    if (scales < 1) throw std::invalid_argument("FrameSpec: J must be >= 1");
    if (riesz_order < 0) throw std::invalid_argument("FrameSpec: riesz order must be >= 0");
    // Coarsest band must stay above the first nonzero frequency bin.
    const double coarsest_lo = std::ldexp(profile.support_lo(), -(scales - 1));
    const double bin_step = 2.0 * M_PI / (grid.size() * grid.spacing());
    if (coarsest_lo < bin_step)
      throw std::invalid_argument(
          "FrameSpec: too many scales for this grid; coarsest band falls below the first bin");
  }

  std::size_t orientations() const {
    return multi_indices_of_order(riesz_order, grid.dim()).size();
  }
  std::size_t channel_count() const {
    return 2 + static_cast<std::size_t>(scales) * orientations();
  }
};

struct FrameChannels {
  FrameSpec spec;
  ScalarField lowpass;
  ScalarField highpass;
  // Scale-major, multi-index colexicographic within each scale.
  std::vector<ScalarField> bands;

  const ScalarField& band(int scale, std::size_t orientation) const {
    return bands[static_cast<std::size_t>(scale) * spec.orientations() + orientation];
  }
};

namespace detail {

struct FramePlan {
  std::vector<SpectrumField> band_filters;  // scale-major complex filters
  SpectrumField lowpass_filter;
  SpectrumField highpass_filter;
};

inline FramePlan make_plan(const FrameSpec& spec) {
  ChannelBank bank = build_channel_profiles(spec.profile, spec.scales);
  const auto alphas = multi_indices_of_order(spec.riesz_order, spec.grid.dim());
  const double nyq = spec.grid.nyquist();

  FramePlan plan{{},
                 sample_radial(bank.lowpass, spec.grid),
                 sample_radial(bank.highpass, spec.grid)};
  plan.band_filters.reserve(static_cast<std::size_t>(spec.scales) * alphas.size());
  for (int k = 0; k < spec.scales; ++k) {
    SpectrumField radial = sample_radial(bank.bands[static_cast<std::size_t>(k)], spec.grid);
    for (const MultiIndex& alpha : alphas) {
      plan.band_filters.push_back(apply_multiplier(
          radial, [&alpha, nyq](const FreqVector& w) { return riesz_symbol(alpha, w, nyq); }));
    }
  }
  // highpass/lowpass were built from real radial evaluators already
  return plan;
}

inline SpectrumField filtered(const SpectrumField& spec, const SpectrumField& filter,
                              bool conjugate) {
  std::vector<std::complex<double>> v(spec.values.size());
  if (conjugate) {
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = std::conj(filter.values[i]) * spec.values[i];
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = filter.values[i] * spec.values[i];
  }
  return SpectrumField(spec.grid, std::move(v));
}

}  // namespace detail

inline FrameChannels analyze(const ScalarField& f, const FrameSpec& spec) {
  if (f.grid != spec.grid) throw std::invalid_argument("analyze: grid mismatch");
  detail::FramePlan plan = detail::make_plan(spec);
  SpectrumField fhat = forward(f);

  FrameChannels out{spec, inverse(detail::filtered(fhat, plan.lowpass_filter, false)),
                    inverse(detail::filtered(fhat, plan.highpass_filter, false)),
                    {}};
  out.bands.reserve(plan.band_filters.size());
  for (const SpectrumField& filter : plan.band_filters)
    out.bands.push_back(inverse(detail::filtered(fhat, filter, false)));
  return out;
}

inline ScalarField synthesize(const FrameChannels& ch) {
  const FrameSpec& spec = ch.spec;
  if (ch.bands.size() != spec.channel_count() - 2)
    throw std::invalid_argument("synthesize: channel count does not match spec");
  for (const auto& b : ch.bands)
    if (b.grid != spec.grid) throw std::invalid_argument("synthesize: grid mismatch");
  if (ch.lowpass.grid != spec.grid || ch.highpass.grid != spec.grid)
    throw std::invalid_argument("synthesize: grid mismatch");

  detail::FramePlan plan = detail::make_plan(spec);
  // Fixed accumulation order (lowpass, bands in storage order, highpass)
  // keeps synthesis bit-reproducible.
  SpectrumField acc = detail::filtered(forward(ch.lowpass), plan.lowpass_filter, true);
  for (std::size_t i = 0; i < ch.bands.size(); ++i) {
    SpectrumField term = detail::filtered(forward(ch.bands[i]), plan.band_filters[i], true);
    for (std::size_t j = 0; j < acc.values.size(); ++j) acc.values[j] += term.values[j];
  }
  SpectrumField hp = detail::filtered(forward(ch.highpass), plan.highpass_filter, true);
  for (std::size_t j = 0; j < acc.values.size(); ++j) acc.values[j] += hp.values[j];
  return inverse(acc);
}

// Deviation of L^2 + sum_k psi_k^2 + H^2 from 1 per frequency bin. The Riesz
// symbols contribute exactly 1 per (scale, bin) via the multinomial identity
// and are omitted.
inline ScalarField tightness_map(const FrameSpec& spec) {
  ChannelBank bank = build_channel_profiles(spec.profile, spec.scales);
  auto deviation = [&bank, &spec](double r) {
    const double lp = bank.lowpass(r);
    const double hp = bank.highpass(r);
    double s = lp * lp + hp * hp;
    for (int k = 0; k < spec.scales; ++k) {
      const double v = bank.bands[static_cast<std::size_t>(k)](r);
      s += v * v;
    }
    return s - 1.0;
  };
  SpectrumField dev = sample_radial(deviation, spec.grid);
  std::vector<double> v(dev.values.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = dev.values[i].real();
  return ScalarField(spec.grid, std::move(v));
}

// Channel file naming used when a frame is persisted:
// <tag>_scale<k>_alpha<a1-...-ad>, plus plain lowpass / highpass.
inline std::string channel_file_name(const std::string& tag, int scale,
                                     const MultiIndex& alpha) {
  return tag + "_scale" + std::to_string(scale) + "_alpha" + alpha.to_string();
}

}  // namespace rsw

#endif  // RSW_STEERABLE_FRAME_HPP
