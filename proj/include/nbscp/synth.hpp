#pragma once

// Synthetic binary datasets with controlled feature informativeness. The
// `similar` profile draws every per-feature separation |theta0 - theta1|
// from one narrow band; `mixed` spreads the separations widely so some
// features carry much more information about the class than others.

#include <algorithm>
#include <cstdint>
#include <string>

#include "nbscp/errors.hpp"
#include "nbscp/model.hpp"
#include "nbscp/rng.hpp"

namespace nbscp {

enum class SynthProfile { similar, mixed };

inline const char* to_string(SynthProfile p) {
  return p == SynthProfile::similar ? "similar" : "mixed";
}

inline Dataset synth_dataset(std::size_t n, std::size_t t, SynthProfile profile,
                             std::uint64_t seed) {
  if (n < 1 || t < 1) throw validation_error("synth_dataset: n and t must be >= 1");
  Rng rng(seed);

  std::vector<double> theta0(n), theta1(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double sep = profile == SynthProfile::similar ? rng.uniform(0.28, 0.32)
                                                        : rng.uniform(0.05, 0.55);
    const double center = profile == SynthProfile::similar ? rng.uniform(0.45, 0.55)
                                                           : rng.uniform(0.35, 0.65);
    const double hi = std::clamp(center + sep / 2.0, 0.02, 0.98);
    const double lo = std::clamp(center - sep / 2.0, 0.02, 0.98);
    const bool flipped = rng.bernoulli(0.5);
    theta0[i] = flipped ? lo : hi;
    theta1[i] = flipped ? hi : lo;
  }

  Dataset data;
  data.feature_names.resize(n);
  for (std::size_t i = 0; i < n; ++i) data.feature_names[i] = "f" + std::to_string(i + 1);
  data.points.resize(t);
  data.labels.resize(t);
  for (std::size_t r = 0; r < t; ++r) {
    const bool is_class0 = rng.bernoulli(0.5);
    data.labels[r] = is_class0 ? 0 : 1;
    data.points[r].bits.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      data.points[r].bits[i] = rng.bernoulli(is_class0 ? theta0[i] : theta1[i]) ? 1 : 0;
  }
  return data;
}

}  // namespace nbscp
