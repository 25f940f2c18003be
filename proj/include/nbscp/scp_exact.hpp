#pragma once

// Ground-truth same-classification probability by exhaustive enumeration of
// error patterns, plus model-averaged and Monte-Carlo variants.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "nbscp/errors.hpp"
#include "nbscp/model.hpp"
#include "nbscp/noise.hpp"
#include "nbscp/rng.hpp"
#include "nbscp/scp_result.hpp"

namespace nbscp {

// Tie rule: a decision value of exactly zero classifies to class 0, so a
// class-0 decision survives when the flip sum reaches the target and a
// class-1 decision survives only strictly below it.
inline bool classification_preserved(double flip_sum, double target, int base_class) {
  return base_class == 0 ? flip_sum >= target : flip_sum < target;
}

inline void check_terms_noise(const LogTerms& terms, const NoiseSpec& noise) {
  if (terms.size() != noise.size())
    throw validation_error("scp: noise length does not match feature count");
  validate_noise(noise);
}

constexpr std::size_t kDefaultExactCap = 25;

// Sums the probability of every error pattern that keeps the noiseless
// classification. 2^n enumeration; n is capped because of it.
inline ScpResult scp_exact(const LogTerms& terms, const NoiseSpec& noise,
                           std::size_t feature_cap = kDefaultExactCap) {
  check_terms_noise(terms, noise);
  const std::size_t n = terms.size();
  if (n > feature_cap)
    throw cap_exceeded("scp_exact: feature count exceeds the exact-enumeration cap");

  detail::KahanSum acc;
  // Depth-first walk over flip/no-flip choices; keeps the per-pattern
  // product incremental instead of O(n) per pattern.
  auto walk = [&](auto&& self, std::size_t i, double sum, double prob) -> void {
    if (i == n) {
      if (classification_preserved(sum, terms.target, terms.base_class)) acc.add(prob);
      return;
    }
    self(self, i + 1, sum, prob * (1.0 - noise.eps[i]));
    if (noise.eps[i] > 0.0) self(self, i + 1, sum + terms.d[i], prob * noise.eps[i]);
  };
  walk(walk, 0, 0.0, 1.0);

  ScpResult r;
  r.value = std::clamp(acc.value(), 0.0, 1.0);
  r.method = ScpMethod::exact;
  return r;
}

enum class PointWeighting { uniform_over_points, model_marginal, dataset };

inline const char* to_string(PointWeighting w) {
  switch (w) {
    case PointWeighting::uniform_over_points: return "uniform_over_points";
    case PointWeighting::model_marginal: return "model_marginal";
    case PointWeighting::dataset: return "dataset";
  }
  return "?";
}

// Average of the per-point SCP, weighted uniformly over all 2^n points,
// by the model's marginal p(x), or uniformly over a supplied test set.
inline ScpResult scp_averaged(const NaiveBayesModel& model, const NoiseSpec& noise,
                              PointWeighting weighting, const Dataset* data = nullptr,
                              std::size_t enum_cap = 20,
                              std::size_t exact_cap = kDefaultExactCap) {
  validate_model(model);
  if (noise.size() != model.n)
    throw validation_error("scp_averaged: noise length does not match model");

  detail::KahanSum acc;
  if (weighting == PointWeighting::dataset) {
    if (data == nullptr || data->points.empty())
      throw validation_error("scp_averaged: dataset weighting requires a non-empty dataset");
    for (const auto& x : data->points)
      acc.add(scp_exact(log_terms(model, x), noise, exact_cap).value);
    ScpResult r;
    r.value = std::clamp(acc.value() / static_cast<double>(data->points.size()), 0.0, 1.0);
    r.method = ScpMethod::exact;
    return r;
  }

  if (model.n > enum_cap)
    throw cap_exceeded("scp_averaged: feature count exceeds the point-enumeration cap");
  TestPoint x;
  x.bits.resize(model.n);
  const std::uint64_t total = std::uint64_t(1) << model.n;
  for (std::uint64_t code = 0; code < total; ++code) {
    double weight;
    if (weighting == PointWeighting::uniform_over_points) {
      for (std::size_t i = 0; i < model.n; ++i) x.bits[i] = (code >> i) & 1;
      weight = 1.0 / static_cast<double>(total);
    } else {
      double p0 = model.prior0, p1 = 1.0 - model.prior0;
      for (std::size_t i = 0; i < model.n; ++i) {
        x.bits[i] = (code >> i) & 1;
        p0 *= x.bits[i] ? model.theta0[i] : 1.0 - model.theta0[i];
        p1 *= x.bits[i] ? model.theta1[i] : 1.0 - model.theta1[i];
      }
      weight = p0 + p1;
    }
    acc.add(weight * scp_exact(log_terms(model, x), noise, exact_cap).value);
  }
  ScpResult r;
  r.value = std::clamp(acc.value(), 0.0, 1.0);
  r.method = ScpMethod::exact;
  return r;
}

// Sampling estimator of the per-point SCP; deterministic per seed.
inline ScpResult scp_monte_carlo(const NaiveBayesModel& model, const TestPoint& x,
                                 const NoiseSpec& noise, long long trials,
                                 std::uint64_t seed) {
  if (trials < 1) throw validation_error("scp_monte_carlo: trials must be >= 1");
  const LogTerms terms = log_terms(model, x);
  check_terms_noise(terms, noise);
  Rng rng(seed);
  long long kept = 0;
  for (long long t = 0; t < trials; ++t) {
    double sum = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i)
      if (rng.bernoulli(noise.eps[i])) sum += terms.d[i];
    if (classification_preserved(sum, terms.target, terms.base_class)) ++kept;
  }
  ScpResult r;
  r.value = static_cast<double>(kept) / static_cast<double>(trials);
  r.method = ScpMethod::monte_carlo;
  r.meta.trials = trials;
  return r;
}

}  // namespace nbscp
