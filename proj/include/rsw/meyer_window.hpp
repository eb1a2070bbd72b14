#ifndef RSW_MEYER_WINDOW_HPP
#define RSW_MEYER_WINDOW_HPP

#include <cmath>
#include <stdexcept>

// Meyer window family theta_eps: equal to 1 on [-1+eps, 1-eps], 0 outside
// [-1-eps, 1+eps], with theta^2(x) + theta^2(x-2) = 1 on [0, 2].
//
// Finite smoothness orders n in {3,4,5} use the closed-form ramps
//   G_3(x) = (35 pi/64) (-x^7/7 + 3 x^5/5 - x^3 + x + 16/35)
//   G_4(x) = (315 pi/512) (x^9/9 - 4 x^7/7 + 6 x^5/5 - 4 x^3/3 + x + 128/315)
//   G_5(x) = (693 pi/1024) (-x^11/11 + 5 x^9/9 - 10 x^7/7 + 2 x^5 - 5 x^3/3 + x + 256/693)
// (antiderivatives of C (1-x^2)^n bumps), clamped to 0 below x=-1 and to pi/2
// above x=1. The infinitely smooth ramp is
//   G(x) = (pi/2) lambda(x+1) / (lambda(x+1) + lambda(1-x)),
//   lambda(w) = exp(-1/w^2) for w > 0, else 0.

namespace rsw {

class WindowSpec {
public:
  static constexpr int kInfiniteSmoothness = -1;

  static WindowSpec finite(int n, double transition) {
    if (n != 3 && n != 4 && n != 5)
      throw std::invalid_argument("WindowSpec: finite smoothness must be 3, 4 or 5");
    return WindowSpec(n, transition);
  }

  static WindowSpec infinite(double transition) {
    return WindowSpec(kInfiniteSmoothness, transition);
  }

  bool is_infinite() const { return smoothness_ == kInfiniteSmoothness; }
  int smoothness() const { return smoothness_; }
  double transition() const { return transition_; }

private:
  WindowSpec(int n, double transition) : smoothness_(n), transition_(transition) {
    if (!(transition > 0.0) || !(transition < 1.0))
      throw std::invalid_argument("WindowSpec: transition must lie in (0,1)");
  }

  int smoothness_;
  double transition_;
};

namespace detail {

inline double ramp_poly(int n, double x) {
  const double x2 = x * x;
  switch (n) {
    case 3: {
      const double p = ((-x2 / 7.0 + 3.0 / 5.0) * x2 - 1.0) * x2 + 1.0;
      return (35.0 * M_PI / 64.0) * (p * x + 16.0 / 35.0);
    }
    case 4: {
      const double p = (((x2 / 9.0 - 4.0 / 7.0) * x2 + 6.0 / 5.0) * x2 - 4.0 / 3.0) * x2 + 1.0;
      return (315.0 * M_PI / 512.0) * (p * x + 128.0 / 315.0);
    }
    case 5: {
      const double p =
          ((((-x2 / 11.0 + 5.0 / 9.0) * x2 - 10.0 / 7.0) * x2 + 2.0) * x2 - 5.0 / 3.0) * x2 + 1.0;
      return (693.0 * M_PI / 1024.0) * (p * x + 256.0 / 693.0);
    }
    default:
      throw std::logic_error("ramp_poly: unsupported order");
  }
}

inline double bump_tail(double w) { return w > 0.0 ? std::exp(-1.0 / (w * w)) : 0.0; }

inline double ramp_infinite(double x) {
  const double a = bump_tail(x + 1.0);
  const double b = bump_tail(1.0 - x);
  return (M_PI / 2.0) * a / (a + b);
}

}  // namespace detail

class MeyerWindow {
public:
  explicit MeyerWindow(const WindowSpec& spec) : spec_(spec) {}

  const WindowSpec& spec() const { return spec_; }

  // Ramp from 0 at x<=-1 to pi/2 at x>=1.
  double G(double x) const {
    if (x <= -1.0) return 0.0;
    if (x >= 1.0) return M_PI / 2.0;
    return spec_.is_infinite() ? detail::ramp_infinite(x)
                               : detail::ramp_poly(spec_.smoothness(), x);
  }

  double H(double w) const {
    const double eps = spec_.transition();
    return G((w + 1.0) / eps) - M_PI / 2.0 + G((w - 1.0) / eps);
  }

  // cos(H(w)), clamped exactly to 1 inside the passband and 0 outside the
  // support so the set conditions hold without floating-point drift.
  double theta(double w) const {
    const double eps = spec_.transition();
    const double aw = std::abs(w);
    if (aw <= 1.0 - eps) return 1.0;
    if (aw >= 1.0 + eps) return 0.0;
    return std::cos(H(w));
  }

private:
  WindowSpec spec_;
};

inline double eval_G(const WindowSpec& spec, double x) { return MeyerWindow(spec).G(x); }
inline double eval_H(const WindowSpec& spec, double w) { return MeyerWindow(spec).H(w); }
inline double eval_theta(const WindowSpec& spec, double w) {
  return MeyerWindow(spec).theta(w);
}

}  // namespace rsw

#endif  // RSW_MEYER_WINDOW_HPP
