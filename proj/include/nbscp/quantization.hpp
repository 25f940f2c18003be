#pragma once

// Equal-width bucket quantization of the per-feature difference terms.
// Bucket i (1-based) covers [base + (i - 3/2) w, base + (i - 1/2) w) with
// w = (d_max - d_min)/(k - 1) and base = d_min + shift, so its midpoint is
// base + (i - 1) w. The optional shift translates the grid by at most w/2
// so the decision target lands exactly on a bucket boundary, which makes
// every single-flip comparison of quantized and true values agree.

#include <cmath>
#include <cstdint>
#include <vector>

#include "nbscp/errors.hpp"
#include "nbscp/noise.hpp"

namespace nbscp {

struct QuantizationScheme {
  std::size_t k = 0;      // requested bucket count
  std::size_t k_eff = 0;  // k, or k+1 when the shift pushes d_max past the last edge
  double d_min = 0.0;
  double d_max = 0.0;
  double d_span = 0.0;
  double width = 0.0;  // 0 in the degenerate all-equal case
  double shift = 0.0;
  bool degenerate = false;  // all difference terms equal: one bucket, no loss
  std::vector<std::size_t> bucket_of;             // 1-based bucket index per feature
  std::vector<std::size_t> counts;                // size k_eff
  std::vector<std::vector<double>> grouped_eps;   // per bucket, in feature order

  double base() const { return d_min + shift; }
  double midpoint(std::size_t bucket) const {
    return base() + (static_cast<double>(bucket) - 1.0) * width;
  }
  double lower_edge(std::size_t bucket) const {
    return base() + (static_cast<double>(bucket) - 1.5) * width;
  }
  double upper_edge(std::size_t bucket) const {
    return base() + (static_cast<double>(bucket) - 0.5) * width;
  }
};

inline QuantizationScheme build_quantization(const std::vector<double>& d,
                                             const NoiseSpec& noise, std::size_t k,
                                             double target, bool shift_enabled) {
  if (d.empty()) throw validation_error("quantization: need at least one difference term");
  if (noise.size() != d.size())
    throw validation_error("quantization: noise length does not match difference terms");
  if (k < 2) throw validation_error("quantization: bucket count must be at least 2");
  validate_noise(noise);

  QuantizationScheme q;
  q.k = k;
  q.d_min = q.d_max = d.front();
  for (double v : d) {
    q.d_min = std::min(q.d_min, v);
    q.d_max = std::max(q.d_max, v);
  }
  q.d_span = q.d_max - q.d_min;

  if (q.d_span == 0.0) {
    q.degenerate = true;
    q.k_eff = 1;
    q.bucket_of.assign(d.size(), 1);
    q.counts = {d.size()};
    q.grouped_eps = {noise.eps};
    return q;
  }

  q.width = q.d_span / (static_cast<double>(k) - 1.0);
  if (shift_enabled && target >= q.d_min - 0.5 * q.width && target <= q.d_max + 0.5 * q.width) {
    // Nearest half-integer boundary (in bucket units) to the target.
    const double u = (target - q.d_min) / q.width;
    const double boundary = std::round(u - 0.5) + 0.5;
    q.shift = (u - boundary) * q.width;
  }

  q.k_eff = k;
  q.bucket_of.resize(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) {
    auto idx = static_cast<long long>(std::floor((d[j] - q.base()) / q.width + 1.5));
    if (idx < 1 || idx > static_cast<long long>(k) + 1)
      throw validation_error("quantization: bucket index out of range");
    q.bucket_of[j] = static_cast<std::size_t>(idx);
    if (q.bucket_of[j] > q.k_eff) q.k_eff = q.bucket_of[j];
  }

  q.counts.assign(q.k_eff, 0);
  q.grouped_eps.assign(q.k_eff, {});
  for (std::size_t j = 0; j < d.size(); ++j) {
    ++q.counts[q.bucket_of[j] - 1];
    q.grouped_eps[q.bucket_of[j] - 1].push_back(noise.eps[j]);
  }
  return q;
}

}  // namespace nbscp
