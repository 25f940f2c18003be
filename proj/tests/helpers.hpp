#pragma once

// Shared fixtures: the two worked two-feature models, independent
// brute-force oracles, and random instance generators. The oracles stay
// deliberately naive (per-pattern O(n) products, plain loops) so they do
// not share code with the library paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "nbscp/model.hpp"
#include "nbscp/noise.hpp"
#include "nbscp/quantization.hpp"
#include "nbscp/rng.hpp"
#include "nbscp/scp_exact.hpp"

namespace testutil {

using namespace nbscp;

// Two features, the first far more informative of the class.
// Conditionals given as p(x_i = 0 | C): (0.9, 0.89) for class 0 and
// (0.1, 0.11) for class 1.
inline NaiveBayesModel informative_pair_model() {
  NaiveBayesModel m;
  m.n = 2;
  m.prior0 = 0.5;
  m.theta0 = {0.1, 0.11};
  m.theta1 = {0.9, 0.89};
  return m;
}

// Two features with nearly equal informativeness: p(x_i = 0 | C = 0) =
// (0.8, 0.81), p(x_i = 0 | C = 1) = (0.3, 0.3).
inline NaiveBayesModel balanced_pair_model() {
  NaiveBayesModel m;
  m.n = 2;
  m.prior0 = 0.5;
  m.theta0 = {0.2, 0.19};
  m.theta1 = {0.7, 0.7};
  return m;
}

inline std::vector<TestPoint> all_points(std::size_t n) {
  std::vector<TestPoint> pts;
  for (std::uint64_t code = 0; code < (std::uint64_t(1) << n); ++code) {
    TestPoint p;
    p.bits.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.bits[i] = (code >> i) & 1;
    pts.push_back(std::move(p));
  }
  return pts;
}

// Exhaustive SCP over all 2^n error patterns with per-pattern products.
inline double brute_force_scp(const LogTerms& terms, const NoiseSpec& noise) {
  const std::size_t n = terms.size();
  double total = 0.0;
  for (std::uint64_t code = 0; code < (std::uint64_t(1) << n); ++code) {
    double sum = 0.0, prob = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((code >> i) & 1) {
        sum += terms.d[i];
        prob *= noise.eps[i];
      } else {
        prob *= 1.0 - noise.eps[i];
      }
    }
    if (classification_preserved(sum, terms.target, terms.base_class)) total += prob;
  }
  return total;
}

// Exhaustive SCP over all 2^n patterns with every difference term replaced
// by its bucket midpoint. Sums within comparison tolerance of the target
// count as ties and resolve to class 0.
inline double brute_force_quantized_scp(const LogTerms& terms, const NoiseSpec& noise,
                                        const QuantizationScheme& scheme) {
  const std::size_t n = terms.size();
  const double tol = 1e-9 * std::max(1.0, std::abs(terms.target));
  double total = 0.0;
  for (std::uint64_t code = 0; code < (std::uint64_t(1) << n); ++code) {
    double sum = 0.0, prob = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((code >> i) & 1) {
        sum += scheme.midpoint(scheme.bucket_of[i]);
        prob *= noise.eps[i];
      } else {
        prob *= 1.0 - noise.eps[i];
      }
    }
    const bool kept = terms.base_class == 0 ? sum >= terms.target - tol
                                            : sum < terms.target - tol;
    if (kept) total += prob;
  }
  return total;
}

// Random single-point instance assembled directly from difference terms: a
// is zero, b equals d, and the target respects the base-class sign rule
// (class 0 iff target <= 0).
struct RandomInstance {
  LogTerms terms;
  NoiseSpec noise;
};

inline RandomInstance random_instance(Rng& rng, std::size_t n, double eps_lo, double eps_hi,
                                      bool uniform_eps, bool target_in_span = false) {
  RandomInstance inst;
  inst.terms.a.assign(n, 0.0);
  inst.terms.d.resize(n);
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    inst.terms.d[i] = rng.uniform(-3.0, 3.0);
    if (inst.terms.d[i] < 0)
      lo += inst.terms.d[i];
    else
      hi += inst.terms.d[i];
  }
  inst.terms.b = inst.terms.d;
  if (target_in_span) {
    double d_min = inst.terms.d[0], d_max = inst.terms.d[0];
    for (double v : inst.terms.d) {
      d_min = std::min(d_min, v);
      d_max = std::max(d_max, v);
    }
    inst.terms.target = rng.uniform(d_min, d_max);
  } else {
    inst.terms.target = rng.uniform(0.6 * lo, 0.6 * hi);
  }
  inst.terms.base_class = inst.terms.target <= 0.0 ? 0 : 1;
  const double shared = rng.uniform(eps_lo, eps_hi);
  inst.noise.eps.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    inst.noise.eps[i] = uniform_eps ? shared : rng.uniform(eps_lo, eps_hi);
  return inst;
}

// Random model/point pair for end-to-end checks.
struct ModelInstance {
  NaiveBayesModel model;
  TestPoint point;
};

inline ModelInstance random_model_instance(Rng& rng, std::size_t n) {
  ModelInstance inst;
  inst.model.n = n;
  inst.model.prior0 = rng.uniform(0.2, 0.8);
  inst.model.theta0.resize(n);
  inst.model.theta1.resize(n);
  inst.point.bits.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inst.model.theta0[i] = rng.uniform(0.05, 0.95);
    inst.model.theta1[i] = rng.uniform(0.05, 0.95);
    inst.point.bits[i] = rng.bernoulli(0.5) ? 1 : 0;
  }
  return inst;
}

}  // namespace testutil
