#pragma once

// Per-feature binary symmetric channels, error-pattern probabilities, and
// the flip-probability reduction bought by majority-voted repetition.

#include <cmath>
#include <cstdint>
#include <vector>

#include "nbscp/errors.hpp"
#include "nbscp/rng.hpp"

namespace nbscp {

// Per-feature flip probabilities, each in [0, 1/2).
struct NoiseSpec {
  std::vector<double> eps;

  std::size_t size() const { return eps.size(); }
};

// e[i] = 1 means feature i was flipped.
struct ErrorPattern {
  std::vector<std::uint8_t> e;

  std::size_t size() const { return e.size(); }
};

// r[i] repetition pairs for feature i: the bit is stored as 1 + 2*r[i]
// copies and decoded by majority vote.
struct RedundancyAllocation {
  std::vector<int> r;

  std::size_t size() const { return r.size(); }
  int total() const {
    int t = 0;
    for (int v : r) t += v;
    return t;
  }
};

inline void validate_noise(const NoiseSpec& noise) {
  for (double e : noise.eps)
    if (!(e >= 0.0 && e < 0.5))
      throw validation_error("noise: flip probabilities must lie in [0, 1/2)");
}

inline NoiseSpec uniform_noise(std::size_t n, double eps) {
  NoiseSpec s{std::vector<double>(n, eps)};
  validate_noise(s);
  return s;
}

// Decoding failure probability of a bit stored as 2r+1 copies: the chance
// that a majority of the copies are flipped, i.e. the upper binomial tail
// P[Bin(2r+1, eps) >= r+1].
inline double repetition_error_prob(double eps, int pairs) {
  if (!(eps >= 0.0 && eps < 0.5))
    throw validation_error("repetition_error_prob: eps must lie in [0, 1/2)");
  if (pairs < 0) throw validation_error("repetition_error_prob: pair count must be >= 0");
  if (pairs == 0 || eps == 0.0) return eps;
  const int copies = 2 * pairs + 1;
  double binom = 1.0;  // C(copies, i), updated incrementally
  double tail = 0.0;
  for (int i = 1; i <= copies; ++i) {
    binom *= static_cast<double>(copies - i + 1) / static_cast<double>(i);
    if (i >= pairs + 1)
      tail += binom * std::pow(eps, i) * std::pow(1.0 - eps, copies - i);
  }
  return tail;
}

inline NoiseSpec apply_allocation(const NoiseSpec& base, const RedundancyAllocation& alloc) {
  validate_noise(base);
  if (alloc.size() != base.size())
    throw validation_error("apply_allocation: allocation length mismatch");
  NoiseSpec out;
  out.eps.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i)
    out.eps[i] = repetition_error_prob(base.eps[i], alloc.r[i]);
  return out;
}

inline double error_pattern_prob(const NoiseSpec& noise, const ErrorPattern& pattern) {
  validate_noise(noise);
  if (pattern.size() != noise.size())
    throw validation_error("error_pattern_prob: pattern length mismatch");
  double p = 1.0;
  for (std::size_t i = 0; i < noise.size(); ++i)
    p *= pattern.e[i] ? noise.eps[i] : 1.0 - noise.eps[i];
  return p;
}

inline std::vector<ErrorPattern> sample_errors(const NoiseSpec& noise, std::uint64_t seed, int count) {
  validate_noise(noise);
  if (count < 1) throw validation_error("sample_errors: count must be >= 1");
  Rng rng(seed);
  std::vector<ErrorPattern> out(static_cast<std::size_t>(count));
  for (auto& pat : out) {
    pat.e.resize(noise.size());
    for (std::size_t i = 0; i < noise.size(); ++i)
      pat.e[i] = rng.bernoulli(noise.eps[i]) ? 1 : 0;
  }
  return out;
}

// Distribution of the number of simultaneous flips across the independent
// channels; pmf[l] = P(exactly l flips).
inline std::vector<double> poisson_binomial_pmf(const NoiseSpec& noise) {
  validate_noise(noise);
  std::vector<double> pmf{1.0};
  pmf.reserve(noise.size() + 1);
  for (double e : noise.eps) {
    pmf.push_back(0.0);
    for (std::size_t j = pmf.size() - 1; j > 0; --j)
      pmf[j] = pmf[j] * (1.0 - e) + pmf[j - 1] * e;
    pmf[0] *= 1.0 - e;
  }
  return pmf;
}

}  // namespace nbscp
