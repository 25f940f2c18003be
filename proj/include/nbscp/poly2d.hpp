#pragma once

// Dense bivariate polynomials over (y, z): y tracks the number of flips,
// z the quantized flip-sum index. The generating function of a
// quantization scheme is the product over buckets i and members j of
// ((1 - eps_ij) + eps_ij * y * z^i); its (l, m) coefficient is the total
// probability of flipping exactly l features with quantized sum index m.
//
// Two interchangeable multiplication strategies are provided: plain array
// convolution and FFT-based convolution. Both reduce the per-bucket grids
// in the same fixed pairing order, so results do not depend on anything
// but the strategy's round-off.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "nbscp/errors.hpp"
#include "nbscp/quantization.hpp"

namespace nbscp {

enum class MultStrategy { direct, transform };

inline const char* to_string(MultStrategy s) {
  return s == MultStrategy::direct ? "direct" : "transform";
}

struct BivariatePolynomial {
  std::size_t y_size = 1;  // max y degree + 1
  std::size_t z_size = 1;  // max z degree + 1
  std::vector<double> c{1.0};  // row-major: c[l * z_size + m]

  double& at(std::size_t l, std::size_t m) { return c[l * z_size + m]; }
  double at(std::size_t l, std::size_t m) const { return c[l * z_size + m]; }

  double coefficient_sum() const {
    double s = 0.0;
    for (double v : c) s += v;
    return s;
  }

  // For a full expansion, row l sums to the probability of exactly l flips.
  std::vector<double> row_sums() const {
    std::vector<double> out(y_size, 0.0);
    for (std::size_t l = 0; l < y_size; ++l)
      for (std::size_t m = 0; m < z_size; ++m) out[l] += at(l, m);
    return out;
  }
};

namespace detail {

inline std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Iterative radix-2 transform, in place. Size must be a power of two.
inline void fft(std::vector<std::complex<double>>& a, bool invert) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (invert ? -2.0 : 2.0) * 3.141592653589793238462643383279502884 /
                       static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::complex<double> u = a[i + j];
        const std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (invert)
    for (auto& x : a) x /= static_cast<double>(n);
}

// 2-D transform: rows first, then columns.
inline void fft2(std::vector<std::complex<double>>& grid, std::size_t rows, std::size_t cols,
                 bool invert) {
  std::vector<std::complex<double>> buf;
  for (std::size_t r = 0; r < rows; ++r) {
    buf.assign(grid.begin() + static_cast<std::ptrdiff_t>(r * cols),
               grid.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols));
    fft(buf, invert);
    std::copy(buf.begin(), buf.end(), grid.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  buf.resize(rows);
  for (std::size_t cidx = 0; cidx < cols; ++cidx) {
    for (std::size_t r = 0; r < rows; ++r) buf[r] = grid[r * cols + cidx];
    fft(buf, invert);
    for (std::size_t r = 0; r < rows; ++r) grid[r * cols + cidx] = buf[r];
  }
}

constexpr double kNegativeRoundoffClamp = 1e-12;

}  // namespace detail

inline BivariatePolynomial multiply_direct(const BivariatePolynomial& a,
                                           const BivariatePolynomial& b) {
  BivariatePolynomial out;
  out.y_size = a.y_size + b.y_size - 1;
  out.z_size = a.z_size + b.z_size - 1;
  out.c.assign(out.y_size * out.z_size, 0.0);
  for (std::size_t la = 0; la < a.y_size; ++la)
    for (std::size_t ma = 0; ma < a.z_size; ++ma) {
      const double ca = a.at(la, ma);
      if (ca == 0.0) continue;
      for (std::size_t lb = 0; lb < b.y_size; ++lb) {
        const double* brow = &b.c[lb * b.z_size];
        double* orow = &out.c[(la + lb) * out.z_size + ma];
        for (std::size_t mb = 0; mb < b.z_size; ++mb) orow[mb] += ca * brow[mb];
      }
    }
  return out;
}

inline BivariatePolynomial multiply_transform(const BivariatePolynomial& a,
                                              const BivariatePolynomial& b) {
  BivariatePolynomial out;
  out.y_size = a.y_size + b.y_size - 1;
  out.z_size = a.z_size + b.z_size - 1;
  const std::size_t rows = detail::next_pow2(out.y_size);
  const std::size_t cols = detail::next_pow2(out.z_size);

  std::vector<std::complex<double>> fa(rows * cols), fb(rows * cols);
  for (std::size_t l = 0; l < a.y_size; ++l)
    for (std::size_t m = 0; m < a.z_size; ++m) fa[l * cols + m] = a.at(l, m);
  for (std::size_t l = 0; l < b.y_size; ++l)
    for (std::size_t m = 0; m < b.z_size; ++m) fb[l * cols + m] = b.at(l, m);

  detail::fft2(fa, rows, cols, false);
  detail::fft2(fb, rows, cols, false);
  for (std::size_t i = 0; i < fa.size(); ++i) fa[i] *= fb[i];
  detail::fft2(fa, rows, cols, true);

  out.c.assign(out.y_size * out.z_size, 0.0);
  for (std::size_t l = 0; l < out.y_size; ++l)
    for (std::size_t m = 0; m < out.z_size; ++m) {
      double v = fa[l * cols + m].real();
      if (v < 0.0 && v > -detail::kNegativeRoundoffClamp) v = 0.0;
      out.at(l, m) = v;
    }
  return out;
}

inline BivariatePolynomial multiply(const BivariatePolynomial& a, const BivariatePolynomial& b,
                                    MultStrategy strategy) {
  return strategy == MultStrategy::direct ? multiply_direct(a, b) : multiply_transform(a, b);
}

namespace detail {

// Coefficients of prod_j ((1 - eps_j) + eps_j v), by balanced pairwise
// multiplication of the linear factors.
inline std::vector<double> expand_linear_factors(const std::vector<double>& eps) {
  std::vector<std::vector<double>> level;
  level.reserve(eps.size());
  for (double e : eps) level.push_back({1.0 - e, e});
  if (level.empty()) return {1.0};
  while (level.size() > 1) {
    std::vector<std::vector<double>> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      const auto& p = level[i];
      const auto& q = level[i + 1];
      std::vector<double> r(p.size() + q.size() - 1, 0.0);
      for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < q.size(); ++y) r[x + y] += p[x] * q[y];
      next.push_back(std::move(r));
    }
    if (level.size() % 2) next.push_back(std::move(level.back()));
    level = std::move(next);
  }
  return level.front();
}

// ((1 - eps) + eps v)^s via the binomial theorem; O(s).
inline std::vector<double> expand_binomial(double eps, std::size_t s) {
  std::vector<double> out(s + 1, 0.0);
  double term = std::pow(1.0 - eps, static_cast<double>(s));
  const double ratio = eps / (1.0 - eps);
  for (std::size_t a = 0; a <= s; ++a) {
    out[a] = term;
    term *= ratio * static_cast<double>(s - a) / static_cast<double>(a + 1);
  }
  return out;
}

// A bucket's expansion as a grid: choosing a of its members contributes
// y^a z^(stride*a).
inline BivariatePolynomial bucket_grid(std::size_t stride, const std::vector<double>& uni) {
  BivariatePolynomial g;
  g.y_size = uni.size();
  g.z_size = stride * (uni.size() - 1) + 1;
  g.c.assign(g.y_size * g.z_size, 0.0);
  for (std::size_t a = 0; a < uni.size(); ++a) g.at(a, stride * a) = uni[a];
  return g;
}

}  // namespace detail

// Exact expansion of the scheme's generating function. Uniform-noise
// buckets take the O(S_i) binomial route; mixed buckets multiply their
// linear factors pairwise. The per-bucket grids are then reduced in a
// fixed pairing order with the chosen strategy.
inline BivariatePolynomial expand_generating_function(const QuantizationScheme& scheme,
                                                      MultStrategy strategy = MultStrategy::transform,
                                                      std::size_t cell_cap = std::size_t(1) << 26) {
  std::size_t n = 0, max_index = 0;
  for (std::size_t i = 0; i < scheme.k_eff; ++i) {
    n += scheme.counts[i];
    if (scheme.counts[i] > 0) max_index = i + 1;
  }
  const std::size_t cells = (n + 1) * (max_index * n + 1);
  if (cells > cell_cap)
    throw cap_exceeded("expand_generating_function: coefficient grid exceeds the memory cap");

  std::vector<BivariatePolynomial> grids;
  grids.reserve(scheme.k_eff);
  for (std::size_t i = 0; i < scheme.k_eff; ++i) {
    const auto& members = scheme.grouped_eps[i];
    if (members.empty()) continue;
    const bool uniform =
        std::all_of(members.begin(), members.end(), [&](double e) { return e == members.front(); });
    auto uni = uniform ? detail::expand_binomial(members.front(), members.size())
                       : detail::expand_linear_factors(members);
    grids.push_back(detail::bucket_grid(i + 1, uni));
  }
  if (grids.empty()) return BivariatePolynomial{};

  while (grids.size() > 1) {
    std::vector<BivariatePolynomial> next;
    next.reserve((grids.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < grids.size(); i += 2)
      next.push_back(multiply(grids[i], grids[i + 1], strategy));
    if (grids.size() % 2) next.push_back(std::move(grids.back()));
    grids = std::move(next);
  }
  return std::move(grids.front());
}

}  // namespace nbscp
