#ifndef RSW_RIESZ_HPP
#define RSW_RIESZ_HPP

#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "rsw/field_grid.hpp"
#include "rsw/spectral_engine.hpp"

// Riesz transforms as Fourier multipliers. Component i carries the symbol
// -j w_i / |w|; the order-n transform indexed by a multi-index alpha carries
//   m_alpha(w) = sqrt(|alpha|!/alpha!) (-j)^{|alpha|} w^alpha / |w|^{|alpha|}.
// The symbol is zeroed at DC and at every bin with a Nyquist component:
// w_i/|w| is undefined at 0 and cannot satisfy Hermitian-odd symmetry at the
// self-conjugate Nyquist bins. All frame wavelets vanish there anyway.

namespace rsw {

class MultiIndex {
public:
  MultiIndex(std::initializer_list<int> parts) : MultiIndex(std::vector<int>(parts)) {}

  explicit MultiIndex(const std::vector<int>& parts) : dim_(static_cast<int>(parts.size())) {
    if (dim_ < 1 || dim_ > 3)
      throw std::invalid_argument("MultiIndex: dimension must be 1, 2 or 3");
    components_.fill(0);
    for (int a = 0; a < dim_; ++a) {
      if (parts[static_cast<std::size_t>(a)] < 0)
        throw std::invalid_argument("MultiIndex: components must be non-negative");
      components_[a] = parts[static_cast<std::size_t>(a)];
    }
    if (order() > 20)
      throw std::invalid_argument("MultiIndex: order above 20 is not supported");
  }

  static MultiIndex unit(int axis, int dim) {
    std::vector<int> parts(static_cast<std::size_t>(dim), 0);
    if (axis < 1 || axis > dim) throw std::invalid_argument("MultiIndex: axis out of range");
    parts[static_cast<std::size_t>(axis - 1)] = 1;
    return MultiIndex(parts);
  }

  int dim() const { return dim_; }
  int operator[](int a) const { return components_[a]; }
  int order() const { return components_[0] + components_[1] + components_[2]; }

  // sqrt(|alpha|!/alpha!) via ln-factorials; exact enough through order 20.
  double normalization() const {
    const int n = order();
    double ln = std::lgamma(n + 1.0);
    for (int a = 0; a < dim_; ++a) ln -= std::lgamma(components_[a] + 1.0);
    return std::exp(0.5 * ln);
  }

  std::string to_string(char sep = '-') const {
    std::ostringstream os;
    for (int a = 0; a < dim_; ++a) {
      if (a) os << sep;
      os << components_[a];
    }
    return os.str();
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.dim_ == b.dim_ && a.components_ == b.components_;
  }

private:
  std::array<int, 3> components_;
  int dim_;
};

// All multi-indices of a given order in colexicographic order (last component
// varies slowest); fixes channel enumeration and file naming.
inline std::vector<MultiIndex> multi_indices_of_order(int order, int dim) {
  if (order < 0) throw std::invalid_argument("multi_indices_of_order: order must be >= 0");
  std::vector<MultiIndex> out;
  if (dim == 1) {
    out.push_back(MultiIndex({order}));
  } else if (dim == 2) {
    for (int a2 = 0; a2 <= order; ++a2) out.push_back(MultiIndex({order - a2, a2}));
  } else {
    for (int a3 = 0; a3 <= order; ++a3)
      for (int a2 = 0; a2 <= order - a3; ++a2)
        out.push_back(MultiIndex({order - a3 - a2, a2, a3}));
  }
  return out;
}

// Multiplier value of R^alpha at frequency w. `nyquist` is the grid's edge
// frequency magnitude pi/dx; bins touching it are zeroed.
inline std::complex<double> riesz_symbol(const MultiIndex& alpha, const FreqVector& w,
                                         double nyquist) {
  const int n = alpha.order();
  if (n == 0) return {1.0, 0.0};
  double norm2 = 0.0;
  for (int a = 0; a < alpha.dim(); ++a) {
    if (std::abs(w[a]) >= nyquist) return {0.0, 0.0};
    norm2 += w[a] * w[a];
  }
  if (norm2 == 0.0) return {0.0, 0.0};
  double num = 1.0;
  for (int a = 0; a < alpha.dim(); ++a)
    for (int p = 0; p < alpha[a]; ++p) num *= w[a];
  const double mag = alpha.normalization() * num / std::pow(std::sqrt(norm2), n);
  // (-j)^n cycles through 1, -j, -1, j.
  switch (n & 3) {
    case 0: return {mag, 0.0};
    case 1: return {0.0, -mag};
    case 2: return {-mag, 0.0};
    default: return {0.0, mag};
  }
}

inline std::complex<double> riesz_multiplier(int axis, const FreqVector& w, double nyquist,
                                             int dim) {
  return riesz_symbol(MultiIndex::unit(axis, dim), w, nyquist);
}

inline SpectrumField apply_riesz(const SpectrumField& spec, const MultiIndex& alpha) {
  const double nyq = spec.grid.nyquist();
  return apply_multiplier(spec, [&alpha, nyq](const FreqVector& w) {
    return riesz_symbol(alpha, w, nyq);
  });
}

inline ScalarField riesz_higher(const ScalarField& f, const MultiIndex& alpha) {
  if (alpha.dim() != f.grid.dim())
    throw std::invalid_argument("riesz_higher: multi-index dimension does not match grid");
  if (alpha.order() < 1)
    throw std::invalid_argument("riesz_higher: order must be >= 1");
  return inverse(apply_riesz(forward(f), alpha));
}

inline ScalarField riesz_component(const ScalarField& f, int axis) {
  return riesz_higher(f, MultiIndex::unit(axis, f.grid.dim()));
}

// f = -sum_i R_i[R_i f]: feed the d component transforms back through the
// operator and negate. Exact on every bin where the multiplier is defined.
inline ScalarField riesz_invert(const std::vector<ScalarField>& components) {
  if (components.empty()) throw std::invalid_argument("riesz_invert: no components");
  const GridSpec grid = components.front().grid;
  if (static_cast<int>(components.size()) != grid.dim())
    throw std::invalid_argument("riesz_invert: need one component per axis");
  for (const auto& c : components)
    if (c.grid != grid) throw std::invalid_argument("riesz_invert: grid mismatch");

  SpectrumField acc = SpectrumField::zeros(grid);
  for (int axis = 1; axis <= grid.dim(); ++axis) {
    SpectrumField term =
        apply_riesz(forward(components[static_cast<std::size_t>(axis - 1)]),
                    MultiIndex::unit(axis, grid.dim()));
    for (std::size_t i = 0; i < acc.values.size(); ++i) acc.values[i] += term.values[i];
  }
  for (auto& z : acc.values) z = -z;
  return inverse(acc);
}

}  // namespace rsw

#endif  // RSW_RIESZ_HPP
