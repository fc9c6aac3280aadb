#include "prime/metrics.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "prime/rng.hpp"

namespace prime {

double accuracy(const std::vector<bool>& correct) {
  if (correct.empty()) throw EmptyInput("accuracy over empty result set");
  std::size_t hits = 0;
  for (bool c : correct) hits += c ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(correct.size());
}

double partial_credit(const ExecutionTrace& candidate,
                      const ExecutionTrace& reference) {
  const auto& ref = reference.events;
  if (ref.empty()) return candidate.final_state == reference.final_state ? 1.0 : 0.0;
  // Checkpoints: every event for short traces, the snapshot interval above.
  const std::uint64_t stride = ref.size() <= 4096 ? 1 : 1024;
  std::uint64_t checkpoints = 0, matched = 0;
  for (std::uint64_t t = 0; t < ref.size(); t += stride) {
    ++checkpoints;
    if (t >= candidate.events.size()) continue;  // missing: mismatch
    const TraceEvent& c = candidate.events[static_cast<std::size_t>(t)];
    const TraceEvent& r = ref[static_cast<std::size_t>(t)];
    // Prefer state snapshots when both sides carry them.
    const bool match = (!c.state.empty() && !r.state.empty())
                           ? c.state == r.state
                           : c.same_action(r);
    if (match) ++matched;
  }
  return static_cast<double>(matched) / static_cast<double>(checkpoints);
}

double relative_improvement(double acc_opt, double acc_base) {
  if (acc_base <= 0) throw ZeroBaseline("relative improvement needs acc_base > 0");
  return (acc_opt - acc_base) / acc_base * 100.0;
}

double step_overhead(const std::vector<std::uint64_t>& episode_steps,
                     const std::vector<std::uint64_t>& reference_steps) {
  if (episode_steps.size() != reference_steps.size() || episode_steps.empty()) {
    throw EmptyInput("step_overhead needs matched non-empty lists");
  }
  double total = 0;
  for (std::size_t i = 0; i < episode_steps.size(); ++i) {
    total += static_cast<double>(episode_steps[i]) /
             static_cast<double>(reference_steps[i]);
  }
  return total / static_cast<double>(episode_steps.size());
}

std::pair<double, double> bootstrap_ci(const std::vector<double>& values,
                                       int iterations, std::uint64_t seed) {
  if (values.size() < 2) throw EmptyInput("bootstrap needs >= 2 values");
  Rng rng(seed);
  std::vector<double> means;
  means.reserve(static_cast<std::size_t>(iterations));
  for (int it = 0; it < iterations; ++it) {
    double sum = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      sum += values[rng.next_below(values.size())];
    }
    means.push_back(sum / static_cast<double>(values.size()));
  }
  std::sort(means.begin(), means.end());
  const auto order_stat = [&](double q) {
    const auto idx = static_cast<std::size_t>(
        q * static_cast<double>(means.size() - 1) + 0.5);
    return means[std::min(idx, means.size() - 1)];
  };
  return {order_stat(0.025), order_stat(0.975)};
}

SignificanceResult significance(const std::vector<std::pair<double, double>>& pairs) {
  if (pairs.size() < 2) throw DegenerateVariance("paired test needs >= 2 pairs");
  const double n = static_cast<double>(pairs.size());
  double mean = 0;
  for (const auto& [a, b] : pairs) mean += a - b;
  mean /= n;
  double variance = 0;
  for (const auto& [a, b] : pairs) variance += ((a - b) - mean) * ((a - b) - mean);
  variance /= (n - 1);  // sample variance for the t statistic

  SignificanceResult result;
  result.bonferroni_threshold = 0.05 / kBonferroniTasks;
  const double sd = std::sqrt(variance);
  if (sd == 0) {
    // Zero variance: identical pairs give t=0/p=1; a constant nonzero
    // difference is perfect separation, reported as t=+/-inf, p=0.
    if (mean == 0) {
      result.t_statistic = 0;
      result.p_value = 1.0;
      result.cohens_d = 0;
    } else {
      result.t_statistic = mean > 0 ? std::numeric_limits<double>::infinity()
                                    : -std::numeric_limits<double>::infinity();
      result.p_value = 0.0;
      result.cohens_d = result.t_statistic;
    }
    return result;
  }
  result.t_statistic = mean / (sd / std::sqrt(n));
  result.cohens_d = mean / sd;
  const boost::math::students_t dist(n - 1);
  result.p_value = 2.0 * boost::math::cdf(boost::math::complement(
                             dist, std::abs(result.t_statistic)));
  return result;
}

EvalReport build_report(const std::vector<InstanceResult>& results, json metadata) {
  EvalReport report;
  report.metadata = std::move(metadata);
  report.total = static_cast<int>(results.size());

  struct Accum {
    int total = 0, correct = 0, retries = 0, backtracks = 0;
    double partial = 0, overhead = 0;
    int category = 0;
  };
  std::map<std::string, Accum> by_task;
  std::map<int, Accum> by_category;
  std::map<std::string, int> errors;
  std::map<std::string, int> severities;
  int error_total = 0;

  for (const auto& r : results) {
    for (Accum* acc : {&by_task[r.task], &by_category[r.category]}) {
      acc->total += 1;
      acc->correct += r.correct ? 1 : 0;
      acc->retries += r.retries;
      acc->backtracks += r.backtracks;
      acc->partial += r.partial;
      acc->overhead += r.reference_steps > 0
                           ? static_cast<double>(r.steps) /
                                 static_cast<double>(r.reference_steps)
                           : 1.0;
      acc->category = r.category;
    }
    report.correct += r.correct ? 1 : 0;
    if (!r.correct && !r.error_type.empty()) {
      errors[r.error_type] += 1;
      severities[r.severity] += 1;
      ++error_total;
    }
  }

  auto to_row = [](const std::string& name, const Accum& acc) {
    EvalReport::TaskRow row;
    row.task = name;
    row.category = acc.category;
    row.total = acc.total;
    const double n = static_cast<double>(acc.total);
    row.accuracy = acc.correct / n;
    row.mean_partial = acc.partial / n;
    row.retry_rate = acc.retries / n;
    row.backtrack_rate = acc.backtracks / n;
    row.step_overhead = acc.overhead / n;
    return row;
  };
  for (const auto& [task, acc] : by_task) report.per_task.push_back(to_row(task, acc));
  for (const auto& [cat, acc] : by_category) {
    report.per_category[cat] = to_row(TaskRegistry::category_name(cat), acc);
  }
  for (const auto& [type, count] : errors) {
    report.error_distribution[type] =
        static_cast<double>(count) / static_cast<double>(error_total);
  }
  for (const auto& [sev, count] : severities) {
    report.severity_distribution[sev] =
        static_cast<double>(count) / static_cast<double>(error_total);
  }
  return report;
}

std::string EvalReport::to_csv() const {
  std::ostringstream out;
  out << "task,category,total,accuracy,partial_credit,retry_rate,backtrack_rate,"
         "step_overhead\n";
  out.precision(6);
  out << std::fixed;
  for (const auto& row : per_task) {
    out << row.task << "," << row.category << "," << row.total << ","
        << row.accuracy << "," << row.mean_partial << "," << row.retry_rate << ","
        << row.backtrack_rate << "," << row.step_overhead << "\n";
  }
  return out.str();
}

std::string EvalReport::to_text() const {
  std::ostringstream out;
  out.precision(1);
  out << std::fixed;
  out << "Performance by task category\n";
  out << "----------------------------------------------------------------\n";
  out << "category                 instances   accuracy   partial  overhead\n";
  for (const auto& [cat, row] : per_category) {
    out << "  " << row.task;
    for (std::size_t pad = row.task.size(); pad < 23; ++pad) out << ' ';
    out << row.total;
    out << "   " << 100.0 * row.accuracy << "%";
    out << "   " << 100.0 * row.mean_partial << "%";
    out << "   " << row.step_overhead << "x\n";
  }
  out << "----------------------------------------------------------------\n";
  const double acc = total > 0 ? static_cast<double>(correct) / total : 0.0;
  out << "overall accuracy: " << 100.0 * acc << "% (" << correct << "/" << total
      << ")\n";
  if (!error_distribution.empty()) {
    out << "\nError taxonomy distribution\n";
    for (const auto& [type, fraction] : error_distribution) {
      out << "  " << type << ": " << 100.0 * fraction << "%\n";
    }
    out << "Severity distribution\n";
    for (const auto& [sev, fraction] : severity_distribution) {
      out << "  " << sev << ": " << 100.0 * fraction << "%\n";
    }
  }
  return out.str();
}

}  // namespace prime
