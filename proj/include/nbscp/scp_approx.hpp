#pragma once

// Quantized same-classification probability. Flip sums are approximated by
// bucket midpoints, which turns the preserved-pattern sum into coefficient
// tails of the bucket generating function: for l flips, the quantized flip
// sum is l*(base - w) + m*w where m is the z index, so a class-0 decision
// survives iff m >= T'(l) = (target - l*(base - w)) / w (class 1: strictly
// below). The hybrid variant swaps the low flip orders for exact
// enumeration over the true difference terms.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "nbscp/errors.hpp"
#include "nbscp/model.hpp"
#include "nbscp/noise.hpp"
#include "nbscp/poly2d.hpp"
#include "nbscp/quantization.hpp"
#include "nbscp/scp_exact.hpp"
#include "nbscp/scp_result.hpp"

namespace nbscp {

constexpr std::size_t kDefaultBuckets = 50;

namespace detail {

// Relative slack absorbing float noise in quantized threshold comparisons.
// An index within tolerance of the threshold counts as exactly on it, and
// the tie goes to class 0 either way.
inline double index_tolerance(double t_prime) {
  return 1e-9 * std::max(1.0, std::abs(t_prime));
}

inline bool quantized_index_preserved(double m, double t_prime, int base_class) {
  const double tol = index_tolerance(t_prime);
  return base_class == 0 ? m >= t_prime - tol : m < t_prime - tol;
}

// Tail of the expanded generating function for flip counts >= l_from.
inline double quantized_tail(const BivariatePolynomial& g, const QuantizationScheme& scheme,
                             double target, int base_class, std::size_t l_from) {
  KahanSum acc;
  const double base = scheme.base();
  const double w = scheme.width;
  for (std::size_t l = l_from; l < g.y_size; ++l) {
    const double t_prime = (target - static_cast<double>(l) * (base - w)) / w;
    for (std::size_t m = 0; m < g.z_size; ++m) {
      const double coeff = g.at(l, m);
      if (coeff == 0.0) continue;
      if (quantized_index_preserved(static_cast<double>(m), t_prime, base_class)) acc.add(coeff);
    }
  }
  return acc.value();
}

// All difference terms equal: the flip count alone decides, so the result
// is a Poisson-binomial tail with no quantization loss. Restricted to flip
// counts >= l_from for the hybrid split.
inline double equal_d_scp(const LogTerms& terms, const NoiseSpec& noise, std::size_t l_from) {
  const auto pmf = poisson_binomial_pmf(noise);
  const double d = terms.d.front();
  KahanSum acc;
  for (std::size_t l = l_from; l < pmf.size(); ++l)
    if (classification_preserved(static_cast<double>(l) * d, terms.target, terms.base_class))
      acc.add(pmf[l]);
  return acc.value();
}

// Exact contribution of every flip set of size <= max_size, using the true
// difference terms and channel probabilities.
inline double exact_low_order(const LogTerms& terms, const NoiseSpec& noise,
                              std::size_t max_size) {
  const std::size_t n = terms.size();
  double none_flipped = 1.0;
  for (double e : noise.eps) none_flipped *= 1.0 - e;
  KahanSum acc;
  auto visit = [&](double sum, double weight) {
    if (classification_preserved(sum, terms.target, terms.base_class)) acc.add(weight);
  };
  visit(0.0, none_flipped);
  auto extend = [&](auto&& self, std::size_t first, std::size_t depth, double sum,
                    double weight) -> void {
    if (depth == max_size) return;
    for (std::size_t j = first; j < n; ++j) {
      if (noise.eps[j] == 0.0) continue;
      const double w = weight * noise.eps[j] / (1.0 - noise.eps[j]);
      visit(sum + terms.d[j], w);
      self(self, j + 1, depth + 1, sum + terms.d[j], w);
    }
  };
  extend(extend, 0, 0, 0.0, none_flipped);
  return acc.value();
}

}  // namespace detail

// Quantize, expand, and sum the preserved coefficient tails.
inline ScpResult scp_approx(const LogTerms& terms, const NoiseSpec& noise,
                            std::size_t k = kDefaultBuckets, bool shift_enabled = true,
                            MultStrategy mult = MultStrategy::transform) {
  check_terms_noise(terms, noise);
  const auto scheme = build_quantization(terms.d, noise, k, terms.target, shift_enabled);
  double value;
  if (scheme.degenerate) {
    value = detail::equal_d_scp(terms, noise, 0);
  } else {
    const auto g = expand_generating_function(scheme, mult);
    value = detail::quantized_tail(g, scheme, terms.target, terms.base_class, 0);
  }
  ScpResult r;
  r.value = std::clamp(value, 0.0, 1.0);
  r.method = ScpMethod::approx;
  r.meta.k = k;
  r.meta.shift = shift_enabled;
  return r;
}

// Exact enumeration for flip sets of size <= order, quantized tail beyond.
// order = n reproduces the exact SCP; order = 0 reproduces scp_approx.
inline ScpResult scp_hybrid(const LogTerms& terms, const NoiseSpec& noise,
                            std::size_t k = kDefaultBuckets, bool shift_enabled = true,
                            std::size_t order = 2, MultStrategy mult = MultStrategy::transform) {
  check_terms_noise(terms, noise);
  const std::size_t n = terms.size();
  if (order > n) throw validation_error("scp_hybrid: order exceeds the feature count");

  double value = detail::exact_low_order(terms, noise, order);
  if (order < n) {
    const auto scheme = build_quantization(terms.d, noise, k, terms.target, shift_enabled);
    if (scheme.degenerate) {
      value += detail::equal_d_scp(terms, noise, order + 1);
    } else {
      const auto g = expand_generating_function(scheme, mult);
      value += detail::quantized_tail(g, scheme, terms.target, terms.base_class, order + 1);
    }
  }
  ScpResult r;
  r.value = std::clamp(value, 0.0, 1.0);
  r.method = ScpMethod::hybrid;
  r.meta.k = k;
  r.meta.shift = shift_enabled;
  r.meta.hybrid_order = order;
  return r;
}

}  // namespace nbscp
