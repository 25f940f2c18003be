#pragma once

// Experiment harness: approximation-error sweeps against the exact SCP and
// allocation-strategy sweeps over a redundancy budget, both emitted as
// deterministic CSV tables.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nbscp/allocation.hpp"
#include "nbscp/errors.hpp"
#include "nbscp/format.hpp"
#include "nbscp/io.hpp"
#include "nbscp/model.hpp"
#include "nbscp/scp_approx.hpp"
#include "nbscp/scp_exact.hpp"

namespace nbscp {

struct ExperimentStats {
  long long scp_evaluations = 0;
};

// Mean and max absolute error of the plain quantized approximation and the
// hybrid variant against the exact SCP, per bucket count. One row per
// (k, method): k,method,mean_abs_err,max_abs_err.
inline CsvTable run_approx_error(const NaiveBayesModel& model,
                                 const std::vector<TestPoint>& points, double eps,
                                 const std::vector<std::size_t>& k_list, bool shift_enabled,
                                 std::size_t hybrid_order, MultStrategy mult,
                                 std::size_t exact_cap = kDefaultExactCap,
                                 ExperimentStats* stats = nullptr) {
  validate_model(model);
  if (points.empty()) throw validation_error("run_approx_error: need at least one point");
  if (k_list.empty()) throw validation_error("run_approx_error: need at least one bucket count");
  const auto noise = uniform_noise(model.n, eps);
  const std::size_t order = std::min(hybrid_order, model.n);

  std::vector<LogTerms> terms;
  std::vector<double> exact;
  terms.reserve(points.size());
  exact.reserve(points.size());
  for (const auto& x : points) {
    terms.push_back(log_terms(model, x));
    exact.push_back(scp_exact(terms.back(), noise, exact_cap).value);
  }

  CsvTable table;
  table.header = {"k", "method", "mean_abs_err", "max_abs_err"};
  long long evals = 0;
  for (std::size_t k : k_list) {
    double sum_plain = 0.0, max_plain = 0.0, sum_hybrid = 0.0, max_hybrid = 0.0;
    for (std::size_t p = 0; p < points.size(); ++p) {
      double plain, hybrid;
      const auto scheme = build_quantization(terms[p].d, noise, k, terms[p].target, shift_enabled);
      if (scheme.degenerate) {
        plain = detail::equal_d_scp(terms[p], noise, 0);
        hybrid = detail::exact_low_order(terms[p], noise, order) +
                 detail::equal_d_scp(terms[p], noise, order + 1);
      } else {
        // One expansion feeds both methods; they differ only in how the
        // low flip orders are summed.
        const auto g = expand_generating_function(scheme, mult);
        plain = detail::quantized_tail(g, scheme, terms[p].target, terms[p].base_class, 0);
        hybrid = detail::exact_low_order(terms[p], noise, order) +
                 detail::quantized_tail(g, scheme, terms[p].target, terms[p].base_class, order + 1);
      }
      evals += 2;
      const double err_plain = std::abs(plain - exact[p]);
      const double err_hybrid = std::abs(hybrid - exact[p]);
      sum_plain += err_plain;
      max_plain = std::max(max_plain, err_plain);
      sum_hybrid += err_hybrid;
      max_hybrid = std::max(max_hybrid, err_hybrid);
    }
    const auto count = static_cast<double>(points.size());
    table.rows.push_back({std::to_string(k), "plain", format_g12(sum_plain / count),
                          format_g12(max_plain)});
    table.rows.push_back({std::to_string(k), "hybrid", format_g12(sum_hybrid / count),
                          format_g12(max_hybrid)});
  }
  if (stats) stats->scp_evaluations += evals;
  return table;
}

enum class Strategy { none, uniform, greedy, exhaustive };

inline const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::none: return "none";
    case Strategy::uniform: return "uniform";
    case Strategy::greedy: return "greedy";
    case Strategy::exhaustive: return "exhaustive";
  }
  return "?";
}

// Classification-change probability (1 - SCP) per budget and strategy,
// with each strategy's improvement ratio against the uniform baseline.
// Rows: budget,strategy,change_prob,ratio_vs_uniform. The greedy pass runs
// once at the largest budget; its per-step trajectory supplies every
// smaller budget. Exhaustive search is skipped (with a notice) for budgets
// whose composition count exceeds the cap.
inline CsvTable run_allocation_sweep(const NaiveBayesModel& model,
                                     const std::vector<TestPoint>& points, double base_eps,
                                     const std::vector<int>& budgets,
                                     const std::vector<Strategy>& strategies,
                                     const EvalConfig& eval,
                                     long long exhaustive_cap = 1'000'000,
                                     std::vector<std::string>* notices = nullptr,
                                     ExperimentStats* stats = nullptr) {
  if (budgets.empty()) throw validation_error("run_allocation_sweep: need at least one budget");
  if (strategies.empty()) throw validation_error("run_allocation_sweep: need at least one strategy");
  for (int b : budgets)
    if (b < 0) throw validation_error("run_allocation_sweep: budgets must be non-negative");

  AllocationProblem problem;
  problem.model = model;
  problem.test_points = points;
  problem.base_eps = base_eps;
  problem.eval = eval;
  problem.budget = 0;
  validate_problem(problem);

  auto requested = [&](Strategy s) {
    return std::find(strategies.begin(), strategies.end(), s) != strategies.end();
  };

  const detail::ProblemContext ctx(problem);
  long long evals = 0;
  const int max_budget = *std::max_element(budgets.begin(), budgets.end());

  std::vector<TrajectoryStep> greedy_path;
  if (requested(Strategy::greedy) && max_budget > 0) {
    AllocationProblem gp = problem;
    gp.budget = max_budget;
    greedy_path = greedy_allocate(gp).trajectory;
    evals += static_cast<long long>(max_budget) * static_cast<long long>(model.n) *
             static_cast<long long>(points.size());
  }
  const double unprotected = ctx.average_scp(problem, uniform_allocation(model.n, 0));
  evals += static_cast<long long>(points.size());

  CsvTable table;
  table.header = {"budget", "strategy", "change_prob", "ratio_vs_uniform"};
  for (int budget : budgets) {
    std::map<Strategy, double> change;
    if (requested(Strategy::none)) change[Strategy::none] = 1.0 - unprotected;
    if (requested(Strategy::uniform)) {
      const double v = budget == 0 ? unprotected
                                   : ctx.average_scp(problem, uniform_allocation(model.n, budget));
      change[Strategy::uniform] = 1.0 - v;
      evals += static_cast<long long>(points.size());
    }
    if (requested(Strategy::greedy)) {
      const double v = budget == 0 ? unprotected
                                   : greedy_path[static_cast<std::size_t>(budget) - 1].avg_scp;
      change[Strategy::greedy] = 1.0 - v;
    }
    if (requested(Strategy::exhaustive)) {
      AllocationProblem ep = problem;
      ep.budget = budget;
      try {
        change[Strategy::exhaustive] = 1.0 - exhaustive_allocate(ep, exhaustive_cap).avg_scp;
        evals += static_cast<long long>(detail::composition_count(model.n, budget)) *
                 static_cast<long long>(points.size());
      } catch (const cap_exceeded&) {
        if (notices)
          notices->push_back("exhaustive search skipped for budget " + std::to_string(budget) +
                             ": composition count exceeds the cap");
      }
    }
    for (Strategy s : {Strategy::none, Strategy::uniform, Strategy::greedy, Strategy::exhaustive}) {
      auto it = change.find(s);
      if (it == change.end()) continue;
      std::string ratio;
      if (auto u = change.find(Strategy::uniform); u != change.end())
        ratio = format_g12(u->second / it->second);
      table.rows.push_back({std::to_string(budget), to_string(s), format_g12(it->second), ratio});
    }
  }
  if (stats) stats->scp_evaluations += evals;
  return table;
}

}  // namespace nbscp
