#ifndef RSW_DIAGNOSTICS_HPP
#define RSW_DIAGNOSTICS_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "rsw/field_grid.hpp"
#include "rsw/riesz.hpp"

// Numerical decay and moment diagnostics. Decay exponents are measured as the
// least-squares slope of log shell-max against log radius; inverse-DFT fields
// are periodized, so exponents are only trustworthy inside the fit range
// (defaults keep it within [8 dx, N dx / 8]).

namespace rsw {

class InsufficientDataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct DecayFit {
  double exponent;      // slope of log max|f| vs log r
  double intercept;
  double exponent_se;   // OLS standard error of the slope
  double residual_rms;
  double fit_lo, fit_hi;
  int shells_used;
};

inline double default_fit_lo(const GridSpec& g) { return 8.0 * g.spacing(); }
inline double default_fit_hi(const GridSpec& g) { return g.size() * g.spacing() / 8.0; }

inline DecayFit decay_fit(const ScalarField& f, double shell_width, double fit_lo,
                          double fit_hi) {
  const GridSpec& g = f.grid;
  if (!(fit_lo > 0.0) || !(fit_hi > fit_lo))
    throw std::invalid_argument("decay_fit: need 0 < fit_lo < fit_hi");
  if (fit_hi > g.size() * g.spacing() / 4.0)
    throw std::invalid_argument("decay_fit: fit range exceeds N dx / 4 periodization guard");

  std::vector<double> xs, ys;
  for (const ShellRow& row : shell_max(f, shell_width)) {
    if (row.r_center < fit_lo || row.r_center > fit_hi) continue;
    if (row.max_abs < 1e-300) continue;
    xs.push_back(std::log(row.r_center));
    ys.push_back(std::log(row.max_abs));
  }
  const int n = static_cast<int>(xs.size());
  if (n < 4) throw InsufficientDataError("decay_fit: fewer than 4 usable shells");

  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss_res = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = ys[i] - (intercept + slope * xs[i]);
    ss_res += r * r;
  }
  const double rms = std::sqrt(ss_res / n);
  const double se = n > 2 ? std::sqrt(ss_res / (n - 2) / sxx) : 0.0;
  return DecayFit{slope, intercept, se, rms, fit_lo, fit_hi, n};
}

struct MomentTable {
  std::vector<std::pair<MultiIndex, double>> rows;
};

// Riemann sums  sum x^beta f(x) dx^d  for every |beta| <= beta_max.
inline MomentTable moments(const ScalarField& f, int beta_max) {
  if (beta_max < 0 || beta_max > 8)
    throw std::invalid_argument("moments: beta_max must be in [0, 8]");
  const GridSpec& g = f.grid;

  std::vector<double> axis(g.size());
  for (int i = 0; i < g.size(); ++i) axis[i] = g.space_axis(i);
  // axis coordinate powers up to beta_max, indexed [power][index]
  std::vector<std::vector<double>> powers(static_cast<std::size_t>(beta_max) + 1,
                                          std::vector<double>(axis.size(), 1.0));
  for (int p = 1; p <= beta_max; ++p)
    for (int i = 0; i < g.size(); ++i)
      powers[p][i] = powers[p - 1][i] * axis[i];

  double cell = 1.0;
  for (int a = 0; a < g.dim(); ++a) cell *= g.spacing();

  MomentTable table;
  for (int order = 0; order <= beta_max; ++order) {
    for (const MultiIndex& beta : multi_indices_of_order(order, g.dim())) {
      double sum = 0.0;
      for_each_bin(g, [&](std::size_t flat, const std::array<int, 3>& idx) {
        double mono = 1.0;
        for (int a = 0; a < g.dim(); ++a) mono *= powers[beta[a]][idx[a]];
        sum += mono * f.values[flat];
      });
      table.rows.emplace_back(beta, sum * cell);
    }
  }
  return table;
}

inline double spectrum_flatness_near_zero(const SpectrumField& spec, double radius) {
  if (!(radius >= 0.0) || radius >= M_PI / 4.0)
    throw std::invalid_argument("spectrum_flatness_near_zero: radius must be in [0, pi/4)");
  const GridSpec& g = spec.grid;
  std::vector<double> axis(g.size());
  for (int i = 0; i < g.size(); ++i) axis[i] = g.freq_axis(i);

  double max_abs = -1.0;
  for_each_bin(g, [&](std::size_t flat, const std::array<int, 3>& idx) {
    double r2 = 0.0;
    for (int a = 0; a < g.dim(); ++a) r2 += axis[idx[a]] * axis[idx[a]];
    if (r2 <= radius * radius) max_abs = std::max(max_abs, std::abs(spec.values[flat]));
  });
  if (max_abs < 0.0)
    throw std::invalid_argument("spectrum_flatness_near_zero: no bins within radius");
  return max_abs;
}

// 2-D Poisson kernel p(x;s) = s / (2 pi (s^2+|x|^2)^{3/2}) and the shapes
// x_i / (s^2+|x|^2)^{3/2} of its component Riesz transforms, which match the
// numerical transform up to one global constant (the test fixtures freeze the
// calibrated value).
struct PoissonOracle {
  ScalarField kernel;
  std::vector<ScalarField> riesz_shapes;  // one per axis, unit constant
};

inline PoissonOracle poisson_oracle(const GridSpec& grid, double s) {
  if (grid.dim() != 2) throw std::invalid_argument("poisson_oracle: requires d = 2");
  if (!(s >= 4.0 * grid.spacing()))
    throw std::invalid_argument("poisson_oracle: requires s >= 4 dx");

  std::vector<double> axis(grid.size());
  for (int i = 0; i < grid.size(); ++i) axis[i] = grid.space_axis(i);

  std::vector<double> p(grid.num_samples());
  std::vector<std::vector<double>> shapes(2, std::vector<double>(grid.num_samples()));
  for_each_bin(grid, [&](std::size_t flat, const std::array<int, 3>& idx) {
    const double x1 = axis[idx[0]], x2 = axis[idx[1]];
    const double q = s * s + x1 * x1 + x2 * x2;
    const double q32 = q * std::sqrt(q);
    p[flat] = s / (2.0 * M_PI * q32);
    shapes[0][flat] = x1 / q32;
    shapes[1][flat] = x2 / q32;
  });

  PoissonOracle out{ScalarField(grid, std::move(p)), {}};
  out.riesz_shapes.emplace_back(grid, std::move(shapes[0]));
  out.riesz_shapes.emplace_back(grid, std::move(shapes[1]));
  return out;
}

// ---- decay ordering verdicts ----

enum class OrderingKind { LessEqualWithOffset, AbsDiffWithin };
enum class OrderingStatus { Pass, Fail, Inconclusive };

struct NamedDecayFit {
  std::string name;
  DecayFit fit;
};

// LessEqualWithOffset: exponent(lhs) <= exponent(rhs) + bound.
// AbsDiffWithin:       |exponent(lhs) - exponent(rhs)| <= bound.
struct OrderingRequirement {
  std::size_t lhs;
  std::size_t rhs;
  OrderingKind kind;
  double bound;
};

struct OrderingResult {
  OrderingRequirement requirement;
  double gap;  // signed slack; positive means satisfied
  OrderingStatus status;
};

struct OrderingVerdict {
  std::vector<std::size_t> sorted_by_exponent;  // steepest (most negative) first
  std::vector<OrderingResult> results;
  OrderingStatus overall;
};

inline bool exponents_tied(const DecayFit& a, const DecayFit& b) {
  return std::abs(a.exponent - b.exponent) <= 2.0 * (a.exponent_se + b.exponent_se);
}

// Two-sigma slope intervals decide between pass, fail and inconclusive: a
// requirement whose margin is smaller than the combined interval cannot be
// called either way.
inline OrderingVerdict decay_comparison(const std::vector<NamedDecayFit>& fits,
                                        const std::vector<OrderingRequirement>& requirements) {
  for (const auto& f : fits)
    if (f.fit.fit_lo != fits.front().fit.fit_lo || f.fit.fit_hi != fits.front().fit.fit_hi)
      throw std::invalid_argument("decay_comparison: fits must share the fit range");

  OrderingVerdict verdict;
  verdict.sorted_by_exponent.resize(fits.size());
  for (std::size_t i = 0; i < fits.size(); ++i) verdict.sorted_by_exponent[i] = i;
  std::stable_sort(verdict.sorted_by_exponent.begin(), verdict.sorted_by_exponent.end(),
                   [&](std::size_t a, std::size_t b) {
                     return fits[a].fit.exponent < fits[b].fit.exponent;
                   });

  verdict.overall = OrderingStatus::Pass;
  for (const OrderingRequirement& req : requirements) {
    const DecayFit& a = fits.at(req.lhs).fit;
    const DecayFit& b = fits.at(req.rhs).fit;
    const double ci = 2.0 * (a.exponent_se + b.exponent_se);
    double gap;
    if (req.kind == OrderingKind::LessEqualWithOffset)
      gap = (b.exponent + req.bound) - a.exponent;
    else
      gap = req.bound - std::abs(a.exponent - b.exponent);
    OrderingStatus status;
    if (gap >= ci)
      status = OrderingStatus::Pass;
    else if (gap <= -ci)
      status = OrderingStatus::Fail;
    else
      status = OrderingStatus::Inconclusive;
    verdict.results.push_back({req, gap, status});
    if (status == OrderingStatus::Fail)
      verdict.overall = OrderingStatus::Fail;
    else if (status == OrderingStatus::Inconclusive && verdict.overall == OrderingStatus::Pass)
      verdict.overall = OrderingStatus::Inconclusive;
  }
  return verdict;
}

}  // namespace rsw

#endif  // RSW_DIAGNOSTICS_HPP
