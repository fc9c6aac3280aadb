#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prime/task.hpp"
#include "prime/trace.hpp"

namespace prime {

struct EmptyInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ZeroBaseline : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DegenerateVariance : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

double accuracy(const std::vector<bool>& correct);

// Fraction of reference checkpoint states matched by the candidate; a
// shorter candidate counts missing checkpoints as mismatches.
double partial_credit(const ExecutionTrace& candidate, const ExecutionTrace& reference);

// (acc_opt - acc_base) / acc_base * 100.
double relative_improvement(double acc_opt, double acc_base);

// Mean of per-episode (steps / reference steps).
double step_overhead(const std::vector<std::uint64_t>& episode_steps,
                     const std::vector<std::uint64_t>& reference_steps);

// 2.5 / 97.5 percentile of resampled means; deterministic given the seed.
std::pair<double, double> bootstrap_ci(const std::vector<double>& values,
                                       int iterations, std::uint64_t seed);

struct SignificanceResult {
  double t_statistic;
  double p_value;         // two-sided
  double cohens_d;
  double bonferroni_threshold;  // 0.05 / 86
};
SignificanceResult significance(const std::vector<std::pair<double, double>>& pairs);

inline constexpr int kBonferroniTasks = 86;

// One scored instance result, the unit the report aggregates over.
struct InstanceResult {
  std::string task;
  int category = 0;
  int difficulty = 0;
  bool correct = false;
  double partial = 0.0;
  std::string error_type;     // empty when correct
  std::string severity;       // empty when correct
  int retries = 0;
  int backtracks = 0;
  std::uint64_t steps = 0;
  std::uint64_t reference_steps = 0;
  double reward = 0.0;
};

struct EvalReport {
  struct TaskRow {
    std::string task;
    int category = 0;
    int total = 0;
    double accuracy = 0.0;
    double mean_partial = 0.0;
    double retry_rate = 0.0;
    double backtrack_rate = 0.0;
    double step_overhead = 0.0;
  };
  std::vector<TaskRow> per_task;
  std::map<int, TaskRow> per_category;  // task field holds the category name
  std::map<std::string, double> error_distribution;     // sums to 1 over errors
  std::map<std::string, double> severity_distribution;  // sums to 1 over errors
  int total = 0;
  int correct = 0;
  json metadata;

  std::string to_csv() const;
  std::string to_text() const;
};

EvalReport build_report(const std::vector<InstanceResult>& results, json metadata);

}  // namespace prime
