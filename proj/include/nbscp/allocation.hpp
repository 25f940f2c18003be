#pragma once

// Redundancy-budget optimizers. A budget of r pairs is split across the
// features; each strategy is scored by the average SCP of a test set under
// the allocation-reduced noise.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "nbscp/errors.hpp"
#include "nbscp/model.hpp"
#include "nbscp/noise.hpp"
#include "nbscp/scp_approx.hpp"
#include "nbscp/scp_exact.hpp"

namespace nbscp {

// How the per-point SCP is evaluated during optimization.
struct EvalConfig {
  enum class Kind { exact, approx, hybrid };
  Kind kind = Kind::hybrid;
  std::size_t k = kDefaultBuckets;
  bool shift = true;
  std::size_t hybrid_order = 2;
  MultStrategy mult = MultStrategy::transform;
  std::size_t exact_cap = kDefaultExactCap;
};

inline ScpResult evaluate_scp(const LogTerms& terms, const NoiseSpec& noise,
                              const EvalConfig& cfg) {
  switch (cfg.kind) {
    case EvalConfig::Kind::exact:
      return scp_exact(terms, noise, cfg.exact_cap);
    case EvalConfig::Kind::approx:
      return scp_approx(terms, noise, cfg.k, cfg.shift, cfg.mult);
    case EvalConfig::Kind::hybrid:
    default:
      // The configured order is clamped so small problems work with the
      // default of 2.
      return scp_hybrid(terms, noise, cfg.k, cfg.shift,
                        std::min(cfg.hybrid_order, terms.size()), cfg.mult);
  }
}

struct AllocationProblem {
  NaiveBayesModel model;
  std::vector<TestPoint> test_points;
  double base_eps = 0.0;
  int budget = 0;  // total repetition pairs to place
  EvalConfig eval;
};

inline void validate_problem(const AllocationProblem& p) {
  validate_model(p.model);
  if (p.test_points.empty()) throw validation_error("allocation: need at least one test point");
  for (const auto& x : p.test_points) check_point(p.model, x);
  if (!(p.base_eps > 0.0 && p.base_eps < 0.5))
    throw validation_error("allocation: base noise must lie strictly inside (0, 1/2)");
  if (p.budget < 0) throw validation_error("allocation: budget must be non-negative");
}

struct TrajectoryStep {
  std::size_t feature = 0;
  double avg_scp = 0.0;
};

struct AllocationResult {
  RedundancyAllocation alloc;
  double avg_scp = 0.0;
  std::vector<TrajectoryStep> trajectory;  // greedy only
};

namespace detail {

struct ProblemContext {
  std::vector<LogTerms> terms;

  explicit ProblemContext(const AllocationProblem& p) {
    terms.reserve(p.test_points.size());
    for (const auto& x : p.test_points) terms.push_back(log_terms(p.model, x));
  }

  double average_scp(const AllocationProblem& p, const RedundancyAllocation& alloc) const {
    const auto noise = apply_allocation(uniform_noise(p.model.n, p.base_eps), alloc);
    KahanSum acc;
    for (const auto& t : terms) acc.add(evaluate_scp(t, noise, p.eval).value);
    return acc.value() / static_cast<double>(terms.size());
  }
};

}  // namespace detail

// Average SCP of the test set under an arbitrary allocation (its total may
// differ from the problem budget).
inline double evaluate_allocation(const AllocationProblem& problem,
                                  const RedundancyAllocation& alloc) {
  validate_problem(problem);
  if (alloc.size() != problem.model.n)
    throw validation_error("evaluate_allocation: allocation length mismatch");
  return detail::ProblemContext(problem).average_scp(problem, alloc);
}

// Spread the budget as evenly as possible; when it does not divide the
// feature count, the leftover pairs go to the lowest-indexed features.
inline RedundancyAllocation uniform_allocation(std::size_t n, int budget) {
  if (n == 0) throw validation_error("uniform_allocation: no features");
  if (budget < 0) throw validation_error("uniform_allocation: budget must be non-negative");
  RedundancyAllocation a{std::vector<int>(n, budget / static_cast<int>(n))};
  for (std::size_t i = 0; i < static_cast<std::size_t>(budget) % n; ++i) ++a.r[i];
  return a;
}

// One pair at a time, always to the feature whose increment maximizes the
// average SCP; ties break toward the lowest feature index. Costs
// budget * n SCP evaluations per test point.
inline AllocationResult greedy_allocate(const AllocationProblem& problem) {
  validate_problem(problem);
  const detail::ProblemContext ctx(problem);
  AllocationResult res;
  res.alloc.r.assign(problem.model.n, 0);
  for (int step = 0; step < problem.budget; ++step) {
    std::size_t best_feature = 0;
    double best_value = -1.0;
    for (std::size_t i = 0; i < problem.model.n; ++i) {
      RedundancyAllocation cand = res.alloc;
      ++cand.r[i];
      const double value = ctx.average_scp(problem, cand);
      if (value > best_value) {
        best_value = value;
        best_feature = i;
      }
    }
    ++res.alloc.r[best_feature];
    res.trajectory.push_back({best_feature, best_value});
  }
  res.avg_scp = problem.budget > 0 ? res.trajectory.back().avg_scp
                                   : ctx.average_scp(problem, res.alloc);
  return res;
}

namespace detail {

inline double composition_count(std::size_t n, int budget) {
  // C(n + budget - 1, budget), saturating in double.
  double c = 1.0;
  for (int i = 1; i <= budget; ++i)
    c *= static_cast<double>(n - 1 + static_cast<std::size_t>(i)) / static_cast<double>(i);
  return c;
}

}  // namespace detail

// Global maximizer over every way to split the budget; the oracle the
// greedy pass is compared against. Ties keep the lexicographically
// smallest allocation.
inline AllocationResult exhaustive_allocate(const AllocationProblem& problem,
                                            long long composition_cap = 1'000'000) {
  validate_problem(problem);
  if (detail::composition_count(problem.model.n, problem.budget) >
      static_cast<double>(composition_cap))
    throw cap_exceeded("exhaustive_allocate: composition count exceeds the cap");

  const detail::ProblemContext ctx(problem);
  AllocationResult best;
  best.avg_scp = -1.0;
  RedundancyAllocation cand{std::vector<int>(problem.model.n, 0)};
  // Lexicographically ascending enumeration of all compositions.
  auto place = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i + 1 == problem.model.n) {
      cand.r[i] = remaining;
      const double value = ctx.average_scp(problem, cand);
      if (value > best.avg_scp) {
        best.avg_scp = value;
        best.alloc = cand;
      }
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cand.r[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  place(place, 0, problem.budget);
  return best;
}

}  // namespace nbscp
