#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "prime/rng.hpp"
#include "prime/trace.hpp"

namespace prime {

using json = nlohmann::ordered_json;

enum class Difficulty : int { kEasy = 0, kMedium = 1, kHard = 2 };

const char* difficulty_name(Difficulty d);
Difficulty difficulty_from_int(int d);

struct TaskId {
  int ordinal = -1;       // 0..85, stable enumeration order
  int category = 0;       // 1..12
  int task_index = 0;     // 1-based index within the category
  std::string canonical_name;
};

// Everything the engine knows how to do with one task: draw a payload from
// the declared input space, reject trivial draws, execute the reference
// algorithm, and expose vocabulary and size information for verification.
struct TaskDriver {
  TaskId id;
  std::set<std::string> vocab;

  // Draw one candidate payload from the full input space.
  std::function<json(Rng&)> generate;

  // Triviality predicate evaluated before the oracle run (cheap checks
  // only; the step-count rejection is applied by the generator).
  std::function<bool(const json&)> trivial;

  // Reference executor: emits events into the sink, returns the canonical
  // answer serialization.
  std::function<std::string(const json&, TraceSink&)> run;

  // Size parameter used by the snapshot policy and reports.
  std::function<std::int64_t(const json&)> size_param;

  // Snapshot threshold for "full state every event" (32 for array-like
  // tasks, 50 for graph-like ones).
  std::int64_t full_snapshot_limit = 32;

  // Minimum accepted oracle step count as a function of the payload;
  // sorting tasks use n^2/4, others use family-appropriate floors.
  std::function<std::uint64_t(const json&)> min_steps;

  // Exact step count when it is a pure function of the payload (hanoi,
  // automata over fixed-length inputs). Lets the generator bin difficulty
  // without running the oracle on draws it will reject.
  std::function<std::uint64_t(const json&)> exact_steps;  // may be null

  SnapshotPolicy policy_for(const json& payload) const {
    return SnapshotPolicy::for_size(size_param(payload), full_snapshot_limit);
  }
};

class TaskRegistry {
 public:
  static const TaskRegistry& instance();

  const TaskDriver& by_ordinal(int ordinal) const;
  const TaskDriver& by_name(const std::string& canonical_name) const;
  const TaskDriver* find(const std::string& canonical_name) const;
  const std::vector<TaskDriver>& all() const { return drivers_; }
  std::size_t size() const { return drivers_.size(); }

  // Tasks per category, in category order (1..12).
  static const std::vector<int>& category_counts();
  static const char* category_name(int category);

 private:
  TaskRegistry();
  std::vector<TaskDriver> drivers_;
};

struct UnsupportedTask : std::runtime_error {
  explicit UnsupportedTask(const std::string& name)
      : std::runtime_error("unsupported task: " + name) {}
};

}  // namespace prime
