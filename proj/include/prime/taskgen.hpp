#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "prime/task.hpp"

namespace prime {

struct OutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct GenerationExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBaseSeed = 42;
inline constexpr int kInstancesPerLevel = 200;
inline constexpr int kPilotSamples = 1000;
// Reserved base seed for calibration pilots; never used for suites.
inline constexpr std::uint64_t kPilotBaseSeed = 9999;
inline constexpr int kMaxRejections = 10000;

// seed = base*1e6 + task*1e4 + difficulty*1e3 + index (all slots disjoint).
std::uint64_t derive_seed(int task_ordinal, int difficulty, int index,
                          std::uint64_t base_seed);

struct InstanceDescriptor {
  TaskId task;
  Difficulty difficulty = Difficulty::kEasy;
  int index = 0;
  std::uint64_t seed = 0;
  json input;
  std::string reference_answer;       // canonical serialization
  std::string reference_trace_digest; // 256-bit, lowercase hex
  std::uint64_t reference_steps = 0;

  json to_json() const;
  static InstanceDescriptor from_json(const json& record);
};

// Per-task tertile boundaries of pilot step counts. steps <= lo -> Easy,
// steps <= hi -> Medium, else Hard.
struct TaskCalibration {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

class Calibration {
 public:
  static constexpr const char* kVersionHeader = "prime-calibration v1";

  // Deterministically computed from the pilot streams; cached per process.
  static const Calibration& pilot();

  static Calibration compute();
  static Calibration load(const std::string& path);
  void save(const std::string& path) const;

  const TaskCalibration& for_task(int ordinal) const { return entries_.at(ordinal); }

 private:
  std::vector<TaskCalibration> entries_;
};

Difficulty compute_difficulty(std::uint64_t step_count, const TaskId& task,
                              const Calibration& cal = Calibration::pilot());

// One validated instance. Resamples from the seed stream until the draw is
// non-trivial, meets the step floor and lands in the requested difficulty
// bin; throws GenerationExhausted after kMaxRejections rejections.
InstanceDescriptor generate_instance(const TaskId& task, Difficulty difficulty,
                                     int index,
                                     std::uint64_t base_seed = kDefaultBaseSeed,
                                     const Calibration& cal = Calibration::pilot());

// 600 instances: 200 per difficulty level, indices 0..199.
std::vector<InstanceDescriptor> generate_suite(
    const TaskId& task, std::uint64_t base_seed = kDefaultBaseSeed,
    const Calibration& cal = Calibration::pilot());

}  // namespace prime
