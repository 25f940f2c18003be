// Command-line harness: train/classify naive Bayes models, compute
// same-classification probabilities under bit-flip noise, sweep the
// approximation error against the exact value, and optimize repetition
// redundancy under a pair budget. All outputs are byte-deterministic for
// fixed inputs and seed; timing goes to stderr only.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nbscp/allocation.hpp"
#include "nbscp/experiments.hpp"
#include "nbscp/io.hpp"
#include "nbscp/model.hpp"
#include "nbscp/scp_approx.hpp"
#include "nbscp/scp_exact.hpp"
#include "nbscp/synth.hpp"

namespace {

using namespace nbscp;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

long long parse_integer(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw validation_error(what + ": '" + text + "' is not an integer");
  }
}

// Comma-separated integers, with inclusive a:b ranges: "2,5:8" -> 2,5,6,7,8.
std::vector<long long> parse_list(const std::string& spec, const std::string& what) {
  std::vector<long long> out;
  for (const auto& item : split(spec, ',')) {
    if (item.empty()) throw validation_error(what + ": empty list item");
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      out.push_back(parse_integer(item, what));
    } else {
      const long long lo = parse_integer(item.substr(0, colon), what);
      const long long hi = parse_integer(item.substr(colon + 1), what);
      if (hi < lo) throw validation_error(what + ": descending range " + item);
      for (long long v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  return out;
}

NaiveBayesModel read_model(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw validation_error(path + ": cannot open model file");
  return load_model(is);
}

MultStrategy parse_mult(const std::string& s) {
  return s == "direct" ? MultStrategy::direct : MultStrategy::transform;
}

void check_eps(double eps) {
  if (!(eps >= 0.0 && eps < 0.5))
    throw validation_error("--eps must lie in [0, 1/2)");
}

// Pair budgets from either unit; bit budgets must be even because
// repetition protection is only ever added two bits at a time.
std::vector<int> resolve_budgets(const std::string& pairs_spec, const std::string& bits_spec,
                                 bool required) {
  if (!pairs_spec.empty() && !bits_spec.empty())
    throw validation_error("give --budget-pairs or --budget-bits, not both");
  std::vector<int> budgets;
  if (!pairs_spec.empty()) {
    for (long long v : parse_list(pairs_spec, "--budget-pairs")) {
      if (v < 0) throw validation_error("--budget-pairs: budgets must be non-negative");
      budgets.push_back(static_cast<int>(v));
    }
  } else if (!bits_spec.empty()) {
    for (long long v : parse_list(bits_spec, "--budget-bits")) {
      if (v < 0) throw validation_error("--budget-bits: budgets must be non-negative");
      if (v % 2 != 0)
        throw validation_error("--budget-bits: " + std::to_string(v) +
                               " is odd; repetition redundancy is spent in pairs of bits");
      budgets.push_back(static_cast<int>(v / 2));
    }
  } else if (required) {
    throw validation_error("a budget is required (--budget-pairs or --budget-bits)");
  }
  return budgets;
}

std::vector<TestPoint> sample_points(const Dataset& data, std::size_t count,
                                     std::uint64_t seed) {
  std::vector<TestPoint> pts;
  if (count == 0 || count >= data.points.size()) {
    pts = data.points;
  } else {
    Rng rng(seed);
    for (auto idx : rng.sample_without_replacement(data.points.size(), count))
      pts.push_back(data.points[idx]);
  }
  return pts;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

void log_run(const std::string& command, const Timer& timer, long long evals) {
  std::cerr << "[nbscp] " << command << ": wall_ms=" << timer.ms();
  if (evals >= 0) std::cerr << " scp_evaluations=" << evals;
  std::cerr << "\n";
}

ScpResult run_scp_method(const std::string& method, const NaiveBayesModel& model,
                         const TestPoint& point, const LogTerms& terms, const NoiseSpec& noise,
                         std::size_t k, bool shift, std::size_t order, MultStrategy mult,
                         long long trials, std::uint64_t seed) {
  if (method == "exact") return scp_exact(terms, noise);
  if (method == "approx") return scp_approx(terms, noise, k, shift, mult);
  if (method == "hybrid")
    return scp_hybrid(terms, noise, k, shift, std::min(order, terms.size()), mult);
  return scp_monte_carlo(model, point, noise, trials, seed);
}

std::string scp_row_text(const std::string& point, const ScpResult& r) {
  std::ostringstream os;
  os << "point " << point << "\nmethod " << to_string(r.method);
  if (r.method == ScpMethod::approx || r.method == ScpMethod::hybrid) {
    os << "\nk " << r.meta.k << "\nshift " << (r.meta.shift ? 1 : 0);
    if (r.method == ScpMethod::hybrid) os << "\norder " << r.meta.hybrid_order;
  }
  if (r.method == ScpMethod::monte_carlo) os << "\ntrials " << r.meta.trials;
  os << "\nvalue " << format_g12(r.value) << "\n";
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"same-classification probability of binary naive Bayes under bit-flip noise"};
  app.require_subcommand(1);

  // ---- train ----------------------------------------------------------
  std::string train_data, train_out;
  double train_smoothing = 1.0;
  auto* train_cmd = app.add_subcommand("train", "fit a model from a CSV dataset");
  train_cmd->add_option("--data", train_data, "dataset CSV")->required();
  train_cmd->add_option("--out", train_out, "model document path")->required();
  train_cmd->add_option("--smoothing", train_smoothing, "additive smoothing (default 1.0)");
  train_cmd->callback([&] {
    Timer timer;
    const auto model = train(load_dataset(train_data), train_smoothing);
    std::ostringstream os;
    save_model(model, os);
    write_text_file(train_out, os.str());
    log_run("train", timer, -1);
  });

  // ---- classify -------------------------------------------------------
  std::string cls_model, cls_data, cls_out, cls_format = "csv";
  auto* cls_cmd = app.add_subcommand("classify", "label every row of a dataset");
  cls_cmd->add_option("--model", cls_model, "model document")->required();
  cls_cmd->add_option("--data", cls_data, "dataset CSV")->required();
  cls_cmd->add_option("--out", cls_out, "output path")->required();
  cls_cmd->add_option("--format", cls_format, "csv|text")->check(CLI::IsMember({"csv", "text"}));
  cls_cmd->callback([&] {
    Timer timer;
    const auto model = read_model(cls_model);
    const auto data = load_dataset(cls_data);
    CsvTable table;
    table.header = {"index", "label", "predicted", "log_odds"};
    for (std::size_t i = 0; i < data.points.size(); ++i) {
      const double odds = log_odds(model, data.points[i]);
      table.rows.push_back({std::to_string(i), std::to_string(int(data.labels[i])),
                            std::to_string(odds >= 0.0 ? 0 : 1), format_g12(odds)});
    }
    write_text_file(cls_out,
                    cls_format == "csv" ? table.to_string() : table.to_structured_text());
    log_run("classify", timer, -1);
  });

  // ---- scp ------------------------------------------------------------
  std::string scp_model, scp_data, scp_out, scp_method = "exact", scp_average, scp_alloc,
              scp_format = "csv", scp_mult = "transform";
  double scp_eps = 0.0;
  std::size_t scp_k = kDefaultBuckets, scp_order = 2;
  long long scp_point = -1, scp_trials = 100000;
  std::uint64_t scp_seed = 1;
  bool scp_shift = true;
  auto* scp_cmd = app.add_subcommand("scp", "same-classification probability");
  scp_cmd->add_option("--model", scp_model, "model document")->required();
  scp_cmd->add_option("--data", scp_data, "dataset CSV (point source)");
  scp_cmd->add_option("--eps", scp_eps, "uniform channel flip probability")->required();
  scp_cmd->add_option("--alloc", scp_alloc, "repetition pairs per feature, e.g. 2,0");
  scp_cmd->add_option("--method", scp_method, "exact|approx|hybrid|mc")
      ->check(CLI::IsMember({"exact", "approx", "hybrid", "mc"}));
  scp_cmd->add_option("--point", scp_point, "row index (default: every row)");
  scp_cmd->add_option("--average", scp_average, "uniform-points|model-marginal|dataset")
      ->check(CLI::IsMember({"uniform-points", "model-marginal", "dataset"}));
  scp_cmd->add_option("--k", scp_k, "bucket count (default 50)");
  scp_cmd->add_flag("--shift,!--no-shift", scp_shift, "align buckets with the target (default on)");
  scp_cmd->add_option("--hybrid-order", scp_order, "exact enumeration order (default 2)");
  scp_cmd->add_option("--mult", scp_mult, "direct|transform (default transform)")
      ->check(CLI::IsMember({"direct", "transform"}));
  scp_cmd->add_option("--trials", scp_trials, "Monte Carlo trials (default 100000)");
  scp_cmd->add_option("--seed", scp_seed, "Monte Carlo seed");
  scp_cmd->add_option("--out", scp_out, "output path")->required();
  scp_cmd->add_option("--format", scp_format, "csv|text")
      ->check(CLI::IsMember({"csv", "text"}));
  scp_cmd->callback([&] {
    Timer timer;
    const auto model = read_model(scp_model);
    check_eps(scp_eps);
    auto noise = uniform_noise(model.n, scp_eps);
    if (!scp_alloc.empty()) {
      RedundancyAllocation alloc;
      for (long long v : parse_list(scp_alloc, "--alloc")) {
        if (v < 0) throw validation_error("--alloc: pair counts must be non-negative");
        alloc.r.push_back(static_cast<int>(v));
      }
      noise = apply_allocation(noise, alloc);
    }
    long long evals = 0;
    CsvTable table;
    table.header = {"point", "method", "value"};
    std::ostringstream text;
    auto emit = [&](const std::string& label, const ScpResult& r) {
      table.rows.push_back({label, to_string(r.method), format_g12(r.value)});
      text << scp_row_text(label, r);
      ++evals;
    };
    if (!scp_average.empty()) {
      PointWeighting w = scp_average == "uniform-points" ? PointWeighting::uniform_over_points
                         : scp_average == "model-marginal" ? PointWeighting::model_marginal
                                                           : PointWeighting::dataset;
      Dataset data;
      if (w == PointWeighting::dataset) {
        if (scp_data.empty()) throw validation_error("--average dataset needs --data");
        data = load_dataset(scp_data);
      }
      const auto r = scp_averaged(model, noise, w, &data);
      emit(std::string("average:") + to_string(w), r);
    } else {
      if (scp_data.empty()) throw validation_error("scp needs --data (or --average)");
      const auto data = load_dataset(scp_data);
      std::size_t first = 0, last = data.points.size();
      if (scp_point >= 0) {
        if (static_cast<std::size_t>(scp_point) >= data.points.size())
          throw validation_error("--point: row index out of range");
        first = static_cast<std::size_t>(scp_point);
        last = first + 1;
      }
      for (std::size_t i = first; i < last; ++i) {
        const auto terms = log_terms(model, data.points[i]);
        emit(std::to_string(i),
             run_scp_method(scp_method, model, data.points[i], terms, noise, scp_k, scp_shift,
                            scp_order, parse_mult(scp_mult), scp_trials, scp_seed));
      }
    }
    write_text_file(scp_out, scp_format == "csv" ? table.to_string() : text.str());
    log_run("scp", timer, evals);
  });

  // ---- approx-error ---------------------------------------------------
  std::string ae_model, ae_data, ae_out, ae_k = "2:100", ae_mult = "transform",
              ae_format = "csv";
  double ae_eps = 0.01;
  std::size_t ae_points = 50, ae_order = 2;
  std::uint64_t ae_seed = 1;
  bool ae_shift = true;
  auto* ae_cmd = app.add_subcommand(
      "approx-error", "mean |approx - exact| per bucket count, for both schemes");
  ae_cmd->add_option("--model", ae_model, "model document")->required();
  ae_cmd->add_option("--data", ae_data, "dataset CSV (point source)")->required();
  ae_cmd->add_option("--eps", ae_eps, "uniform channel flip probability")->required();
  ae_cmd->add_option("--k-list", ae_k, "bucket counts, e.g. 2,5,10 or 2:100 (default 2:100)");
  ae_cmd->add_option("--points", ae_points, "sample size from the dataset (default 50)");
  ae_cmd->add_option("--seed", ae_seed, "sampling seed");
  ae_cmd->add_flag("--shift,!--no-shift", ae_shift, "align buckets with the target (default on)");
  ae_cmd->add_option("--hybrid-order", ae_order, "hybrid enumeration order (default 2)");
  ae_cmd->add_option("--mult", ae_mult, "direct|transform")
      ->check(CLI::IsMember({"direct", "transform"}));
  ae_cmd->add_option("--out", ae_out, "output path")->required();
  ae_cmd->add_option("--format", ae_format, "csv|text")->check(CLI::IsMember({"csv", "text"}));
  ae_cmd->callback([&] {
    Timer timer;
    const auto model = read_model(ae_model);
    check_eps(ae_eps);
    const auto data = load_dataset(ae_data);
    if (data.feature_count() != model.n)
      throw validation_error("approx-error: dataset and model disagree on feature count");
    std::vector<std::size_t> k_list;
    for (long long v : parse_list(ae_k, "--k-list")) {
      if (v < 2) throw validation_error("--k-list: bucket counts must be at least 2");
      k_list.push_back(static_cast<std::size_t>(v));
    }
    const auto pts = sample_points(data, ae_points, ae_seed);
    ExperimentStats stats;
    const auto table = run_approx_error(model, pts, ae_eps, k_list, ae_shift, ae_order,
                                        parse_mult(ae_mult), kDefaultExactCap, &stats);
    write_text_file(ae_out,
                    ae_format == "csv" ? table.to_string() : table.to_structured_text());
    log_run("approx-error", timer, stats.scp_evaluations);
  });

  // ---- allocate -------------------------------------------------------
  std::string al_model, al_data, al_out, al_strategy = "greedy", al_eval = "hybrid",
              al_format = "text", al_mult = "transform", al_pairs, al_bits;
  double al_eps = 0.2;
  std::size_t al_points = 0, al_k = kDefaultBuckets, al_order = 2;
  std::uint64_t al_seed = 1;
  long long al_cap = 1'000'000;
  bool al_shift = true;
  auto* al_cmd = app.add_subcommand("allocate", "optimize a repetition-pair budget");
  al_cmd->add_option("--model", al_model, "model document")->required();
  al_cmd->add_option("--data", al_data, "dataset CSV (test points)")->required();
  al_cmd->add_option("--eps", al_eps, "uniform base flip probability")->required();
  al_cmd->add_option("--budget-pairs", al_pairs, "repetition pairs to place");
  al_cmd->add_option("--budget-bits", al_bits, "redundant bits to place (must be even)");
  al_cmd->add_option("--strategy", al_strategy, "greedy|exhaustive|uniform (default greedy)")
      ->check(CLI::IsMember({"greedy", "exhaustive", "uniform"}));
  al_cmd->add_option("--eval", al_eval, "exact|approx|hybrid (default hybrid)")
      ->check(CLI::IsMember({"exact", "approx", "hybrid"}));
  al_cmd->add_option("--points", al_points, "test-point sample size (default: all rows)");
  al_cmd->add_option("--seed", al_seed, "sampling seed");
  al_cmd->add_option("--k", al_k, "bucket count for approx/hybrid eval");
  al_cmd->add_flag("--shift,!--no-shift", al_shift, "align buckets with the target (default on)");
  al_cmd->add_option("--hybrid-order", al_order, "hybrid enumeration order");
  al_cmd->add_option("--mult", al_mult, "direct|transform")
      ->check(CLI::IsMember({"direct", "transform"}));
  al_cmd->add_option("--exhaustive-cap", al_cap, "composition-count cap (default 1e6)");
  al_cmd->add_option("--out", al_out, "output path")->required();
  al_cmd->add_option("--format", al_format, "text|csv")->check(CLI::IsMember({"text", "csv"}));
  al_cmd->callback([&] {
    Timer timer;
    AllocationProblem problem;
    problem.model = read_model(al_model);
    check_eps(al_eps);
    if (al_eps == 0.0) throw validation_error("--eps must be positive for allocation");
    const auto data = load_dataset(al_data);
    if (data.feature_count() != problem.model.n)
      throw validation_error("allocate: dataset and model disagree on feature count");
    problem.test_points = sample_points(data, al_points, al_seed);
    problem.base_eps = al_eps;
    const auto budgets = resolve_budgets(al_pairs, al_bits, true);
    if (budgets.size() != 1)
      throw validation_error("allocate takes a single budget; use sweep for several");
    problem.budget = budgets.front();
    problem.eval.kind = al_eval == "exact"    ? EvalConfig::Kind::exact
                        : al_eval == "approx" ? EvalConfig::Kind::approx
                                              : EvalConfig::Kind::hybrid;
    problem.eval.k = al_k;
    problem.eval.shift = al_shift;
    problem.eval.hybrid_order = al_order;
    problem.eval.mult = parse_mult(al_mult);

    AllocationResult res;
    if (al_strategy == "greedy") {
      res = greedy_allocate(problem);
    } else if (al_strategy == "exhaustive") {
      res = exhaustive_allocate(problem, al_cap);
    } else {
      res.alloc = uniform_allocation(problem.model.n, problem.budget);
      res.avg_scp = evaluate_allocation(problem, res.alloc);
    }

    if (al_format == "csv") {
      CsvTable table;
      table.header = {"step", "feature", "avg_scp"};
      for (std::size_t s = 0; s < res.trajectory.size(); ++s)
        table.rows.push_back({std::to_string(s + 1),
                              std::to_string(res.trajectory[s].feature + 1),
                              format_g12(res.trajectory[s].avg_scp)});
      write_text_file(al_out, table.to_string());
    } else {
      std::ostringstream os;
      os << "command allocate\nstrategy " << al_strategy << "\nbudget_pairs "
         << problem.budget << "\neval " << al_eval << "\navg_scp " << format_g12(res.avg_scp)
         << "\nallocation";
      for (int v : res.alloc.r) os << " " << v;
      os << "\n";
      for (std::size_t s = 0; s < res.trajectory.size(); ++s)
        os << "step " << s + 1 << " feature " << res.trajectory[s].feature + 1 << " avg_scp "
           << format_g12(res.trajectory[s].avg_scp) << "\n";
      write_text_file(al_out, os.str());
    }
    const long long evals =
        static_cast<long long>(problem.test_points.size()) *
        (al_strategy == "greedy"
             ? static_cast<long long>(problem.budget) * static_cast<long long>(problem.model.n)
             : 1);
    log_run("allocate", timer, evals);
  });

  // ---- sweep ----------------------------------------------------------
  std::string sw_model, sw_data, sw_out, sw_strategies = "none,uniform,greedy",
              sw_eval = "hybrid", sw_mult = "transform", sw_pairs, sw_bits,
              sw_format = "csv";
  double sw_eps = 0.2;
  std::size_t sw_points = 0, sw_k = kDefaultBuckets, sw_order = 2;
  std::uint64_t sw_seed = 1;
  long long sw_cap = 1'000'000;
  bool sw_shift = true;
  auto* sw_cmd = app.add_subcommand("sweep", "change probability per budget and strategy");
  sw_cmd->add_option("--model", sw_model, "model document")->required();
  sw_cmd->add_option("--data", sw_data, "dataset CSV (test points)")->required();
  sw_cmd->add_option("--eps", sw_eps, "uniform base flip probability")->required();
  sw_cmd->add_option("--budget-pairs", sw_pairs, "budgets, e.g. 1,2,3 or 1:10");
  sw_cmd->add_option("--budget-bits", sw_bits, "bit budgets (each must be even)");
  sw_cmd->add_option("--strategies", sw_strategies,
                     "subset of none,uniform,greedy,exhaustive (default none,uniform,greedy)");
  sw_cmd->add_option("--eval", sw_eval, "exact|approx|hybrid (default hybrid)")
      ->check(CLI::IsMember({"exact", "approx", "hybrid"}));
  sw_cmd->add_option("--points", sw_points, "test-point sample size (default: all rows)");
  sw_cmd->add_option("--seed", sw_seed, "sampling seed");
  sw_cmd->add_option("--k", sw_k, "bucket count for approx/hybrid eval");
  sw_cmd->add_flag("--shift,!--no-shift", sw_shift, "align buckets with the target (default on)");
  sw_cmd->add_option("--hybrid-order", sw_order, "hybrid enumeration order");
  sw_cmd->add_option("--mult", sw_mult, "direct|transform")
      ->check(CLI::IsMember({"direct", "transform"}));
  sw_cmd->add_option("--exhaustive-cap", sw_cap, "composition-count cap (default 1e6)");
  sw_cmd->add_option("--out", sw_out, "output path")->required();
  sw_cmd->add_option("--format", sw_format, "csv|text")->check(CLI::IsMember({"csv", "text"}));
  sw_cmd->callback([&] {
    Timer timer;
    const auto model = read_model(sw_model);
    check_eps(sw_eps);
    if (sw_eps == 0.0) throw validation_error("--eps must be positive for allocation");
    const auto data = load_dataset(sw_data);
    if (data.feature_count() != model.n)
      throw validation_error("sweep: dataset and model disagree on feature count");
    const auto budgets = resolve_budgets(sw_pairs, sw_bits, true);
    std::vector<Strategy> strategies;
    for (const auto& name : split(sw_strategies, ',')) {
      if (name == "none") strategies.push_back(Strategy::none);
      else if (name == "uniform") strategies.push_back(Strategy::uniform);
      else if (name == "greedy") strategies.push_back(Strategy::greedy);
      else if (name == "exhaustive") strategies.push_back(Strategy::exhaustive);
      else throw validation_error("--strategies: unknown strategy '" + name + "'");
    }
    EvalConfig eval;
    eval.kind = sw_eval == "exact"    ? EvalConfig::Kind::exact
                : sw_eval == "approx" ? EvalConfig::Kind::approx
                                      : EvalConfig::Kind::hybrid;
    eval.k = sw_k;
    eval.shift = sw_shift;
    eval.hybrid_order = sw_order;
    eval.mult = parse_mult(sw_mult);
    const auto pts = sample_points(data, sw_points, sw_seed);
    std::vector<std::string> notices;
    ExperimentStats stats;
    const auto table = run_allocation_sweep(model, pts, sw_eps, budgets, strategies, eval,
                                            sw_cap, &notices, &stats);
    for (const auto& note : notices) std::cerr << "[nbscp] notice: " << note << "\n";
    write_text_file(sw_out,
                    sw_format == "csv" ? table.to_string() : table.to_structured_text());
    log_run("sweep", timer, stats.scp_evaluations);
  });

  // ---- synth ----------------------------------------------------------
  std::string sy_profile = "mixed", sy_out;
  std::size_t sy_n = 0, sy_t = 0;
  std::uint64_t sy_seed = 1;
  auto* sy_cmd = app.add_subcommand("synth", "generate a synthetic binary dataset");
  sy_cmd->add_option("--n", sy_n, "feature count")->required();
  sy_cmd->add_option("--t", sy_t, "row count")->required();
  sy_cmd->add_option("--profile", sy_profile, "similar|mixed (default mixed)")
      ->check(CLI::IsMember({"similar", "mixed"}));
  sy_cmd->add_option("--seed", sy_seed, "generator seed");
  sy_cmd->add_option("--out", sy_out, "output CSV")->required();
  sy_cmd->callback([&] {
    Timer timer;
    const auto profile =
        sy_profile == "similar" ? SynthProfile::similar : SynthProfile::mixed;
    write_text_file(sy_out, dataset_to_csv(synth_dataset(sy_n, sy_t, profile, sy_seed)));
    log_run("synth", timer, -1);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const nbscp::cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const nbscp::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
