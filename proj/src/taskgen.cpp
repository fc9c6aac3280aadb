#include "prime/taskgen.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

namespace prime {

std::uint64_t derive_seed(int task_ordinal, int difficulty, int index,
                          std::uint64_t base_seed) {
  if (task_ordinal < 0 || task_ordinal > 85) throw OutOfRange("task ordinal");
  if (difficulty < 0 || difficulty > 2) throw OutOfRange("difficulty");
  if (index < 0 || index > 199) throw OutOfRange("index");
  return base_seed * 1000000ull + static_cast<std::uint64_t>(task_ordinal) * 10000ull +
         static_cast<std::uint64_t>(difficulty) * 1000ull +
         static_cast<std::uint64_t>(index);
}

json InstanceDescriptor::to_json() const {
  json record;
  record["task"] = task.canonical_name;
  record["category"] = task.category;
  record["difficulty"] = static_cast<int>(difficulty);
  record["index"] = index;
  record["seed"] = seed;
  record["input"] = input;
  record["answer"] = reference_answer;
  record["trace_digest"] = reference_trace_digest;
  record["steps"] = reference_steps;
  return record;
}

InstanceDescriptor InstanceDescriptor::from_json(const json& record) {
  InstanceDescriptor d;
  const TaskDriver& driver =
      TaskRegistry::instance().by_name(record.at("task").get<std::string>());
  d.task = driver.id;
  d.difficulty = difficulty_from_int(record.at("difficulty").get<int>());
  d.index = record.at("index").get<int>();
  d.seed = record.at("seed").get<std::uint64_t>();
  d.input = record.at("input");
  d.reference_answer = record.at("answer").get<std::string>();
  d.reference_trace_digest = record.at("trace_digest").get<std::string>();
  d.reference_steps = record.at("steps").get<std::uint64_t>();
  return d;
}

namespace {

// Step count for one payload without recording (hashing off).
std::uint64_t oracle_step_count(const TaskDriver& driver, const json& payload) {
  if (driver.exact_steps) return driver.exact_steps(payload);
  DigestSink sink(/*hashing=*/false);
  driver.run(payload, sink);
  return sink.count();
}

}  // namespace

Calibration Calibration::compute() {
  Calibration cal;
  const auto& registry = TaskRegistry::instance();
  cal.entries_.resize(registry.size());
  for (const auto& driver : registry.all()) {
    std::vector<std::uint64_t> counts;
    counts.reserve(kPilotSamples);
    for (int j = 0; j < kPilotSamples; ++j) {
      // Pilot seeds reuse the published formula with the reserved base
      // seed; the (d*1000 + i) slot carries the pilot sample index.
      const std::uint64_t seed = kPilotBaseSeed * 1000000ull +
                                 static_cast<std::uint64_t>(driver.id.ordinal) * 10000ull +
                                 static_cast<std::uint64_t>(j);
      Rng rng(seed);
      json payload = driver.generate(rng);
      int guard = 0;
      while (driver.trivial(payload) && guard++ < 100) payload = driver.generate(rng);
      counts.push_back(oracle_step_count(driver, payload));
    }
    std::sort(counts.begin(), counts.end());
    TaskCalibration entry;
    entry.lo = counts[counts.size() / 3];
    entry.hi = counts[(2 * counts.size()) / 3];
    cal.entries_[static_cast<std::size_t>(driver.id.ordinal)] = entry;
  }
  return cal;
}

const Calibration& Calibration::pilot() {
  static const Calibration cal = compute();
  return cal;
}

void Calibration::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("calibration: cannot write " + path);
  out << "# " << kVersionHeader << "\n";
  const auto& registry = TaskRegistry::instance();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out << registry.by_ordinal(static_cast<int>(i)).id.canonical_name << " "
        << entries_[i].lo << " " << entries_[i].hi << "\n";
  }
}

Calibration Calibration::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("calibration: cannot read " + path);
  std::string header;
  std::getline(in, header);
  if (header != std::string("# ") + kVersionHeader) {
    throw std::runtime_error("calibration: version header mismatch");
  }
  Calibration cal;
  cal.entries_.resize(TaskRegistry::instance().size());
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string name;
    TaskCalibration entry;
    ss >> name >> entry.lo >> entry.hi;
    const TaskDriver& driver = TaskRegistry::instance().by_name(name);
    cal.entries_[static_cast<std::size_t>(driver.id.ordinal)] = entry;
  }
  return cal;
}

Difficulty compute_difficulty(std::uint64_t step_count, const TaskId& task,
                              const Calibration& cal) {
  if (step_count < 1) throw OutOfRange("step_count must be >= 1");
  const TaskCalibration& entry = cal.for_task(task.ordinal);
  if (step_count <= entry.lo) return Difficulty::kEasy;
  if (step_count <= entry.hi) return Difficulty::kMedium;
  return Difficulty::kHard;
}

InstanceDescriptor generate_instance(const TaskId& task, Difficulty difficulty,
                                     int index, std::uint64_t base_seed,
                                     const Calibration& cal) {
  const TaskDriver& driver = TaskRegistry::instance().by_ordinal(task.ordinal);
  const std::uint64_t seed =
      derive_seed(task.ordinal, static_cast<int>(difficulty), index, base_seed);
  // One stream per instance; rejection resampling continues on the same
  // stream so acceptance is deterministic.
  Rng rng(seed);
  for (int rejections = 0; rejections < kMaxRejections; ++rejections) {
    json payload = driver.generate(rng);
    if (driver.trivial(payload)) continue;
    if (driver.exact_steps) {
      // Cheap pre-bin when the step count is a pure function of the payload.
      const std::uint64_t steps = driver.exact_steps(payload);
      if (steps < driver.min_steps(payload)) continue;
      if (compute_difficulty(steps, task, cal) != difficulty) continue;
    }
    DigestSink sink(/*hashing=*/true);
    const std::string answer = driver.run(payload, sink);
    const std::uint64_t steps = sink.count();
    if (steps < std::max<std::uint64_t>(1, driver.min_steps(payload))) continue;
    if (compute_difficulty(steps, task, cal) != difficulty) continue;

    InstanceDescriptor d;
    d.task = driver.id;
    d.difficulty = difficulty;
    d.index = index;
    d.seed = seed;
    d.input = std::move(payload);
    d.reference_answer = answer;
    d.reference_trace_digest = sink.finish(answer);
    d.reference_steps = steps;
    return d;
  }
  throw GenerationExhausted(task.canonical_name + "/" +
                            difficulty_name(difficulty) + "/" +
                            std::to_string(index));
}

std::vector<InstanceDescriptor> generate_suite(const TaskId& task,
                                               std::uint64_t base_seed,
                                               const Calibration& cal) {
  std::vector<InstanceDescriptor> suite;
  suite.reserve(3 * kInstancesPerLevel);
  for (int d = 0; d < 3; ++d) {
    for (int i = 0; i < kInstancesPerLevel; ++i) {
      suite.push_back(
          generate_instance(task, difficulty_from_int(d), i, base_seed, cal));
    }
  }
  return suite;
}

}  // namespace prime
