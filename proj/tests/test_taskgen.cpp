#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <set>

#include "prime/oracles.hpp"
#include "prime/taskgen.hpp"

using namespace prime;

TEST_CASE("registry enumerates exactly 86 tasks with the category counts") {
  const auto& registry = TaskRegistry::instance();
  REQUIRE(registry.size() == 86);
  std::map<int, int> per_category;
  std::set<std::string> names;
  std::set<std::pair<int, int>> pairs;
  for (const auto& d : registry.all()) {
    per_category[d.id.category]++;
    CHECK(names.insert(d.id.canonical_name).second);
    CHECK(pairs.insert({d.id.category, d.id.task_index}).second);
  }
  const auto& counts = TaskRegistry::category_counts();
  for (int cat = 1; cat <= 12; ++cat) {
    CHECK(per_category[cat] == counts[static_cast<std::size_t>(cat - 1)]);
  }
}

TEST_CASE("calibration thresholds are ordered and persist through files") {
  const Calibration& cal = Calibration::pilot();
  for (const auto& d : TaskRegistry::instance().all()) {
    const auto& entry = cal.for_task(d.id.ordinal);
    CHECK(entry.lo >= 1);
    CHECK(entry.lo <= entry.hi);
  }
  const std::string path =
      (std::filesystem::temp_directory_path() / "prime_cal_test.txt").string();
  cal.save(path);
  const Calibration loaded = Calibration::load(path);
  for (const auto& d : TaskRegistry::instance().all()) {
    CHECK(loaded.for_task(d.id.ordinal).lo == cal.for_task(d.id.ordinal).lo);
    CHECK(loaded.for_task(d.id.ordinal).hi == cal.for_task(d.id.ordinal).hi);
  }
  std::filesystem::remove(path);
}

TEST_CASE("compute_difficulty bins by the pilot tertiles") {
  const auto& task = TaskRegistry::instance().by_name("bubble_sort").id;
  const auto& entry = Calibration::pilot().for_task(task.ordinal);
  CHECK(compute_difficulty(1, task) == Difficulty::kEasy);
  CHECK(compute_difficulty(entry.lo, task) == Difficulty::kEasy);
  CHECK(compute_difficulty(entry.lo + 1, task) == Difficulty::kMedium);
  CHECK(compute_difficulty(entry.hi + 1, task) == Difficulty::kHard);
  CHECK_THROWS_AS(compute_difficulty(0, task), OutOfRange);
}

TEST_CASE("bubble sort easy instances are small and non-trivial") {
  const auto& task = TaskRegistry::instance().by_name("bubble_sort").id;
  for (int index = 0; index < 10; ++index) {
    const auto inst = generate_instance(task, Difficulty::kEasy, index);
    const auto& arr = inst.input.at("array");
    const auto n = arr.size();
    CHECK(n <= 12);  // easy tertile lands on the small sizes
    // Not already sorted.
    bool sorted = true;
    for (std::size_t i = 1; i < arr.size(); ++i) {
      if (arr[i - 1].get<std::int64_t>() > arr[i].get<std::int64_t>()) sorted = false;
    }
    CHECK(!sorted);
    // Step floor n^2/4 honored.
    CHECK(inst.reference_steps >= n * n / 4);
    CHECK(inst.seed == derive_seed(task.ordinal, 0, index, 42));
  }
}

TEST_CASE("hanoi hard instances go deep and easy ones stay shallow") {
  const auto& task = TaskRegistry::instance().by_name("hanoi").id;
  const auto easy = generate_instance(task, Difficulty::kEasy, 0);
  const auto hard = generate_instance(task, Difficulty::kHard, 0);
  CHECK(easy.input.at("n").get<int>() < hard.input.at("n").get<int>());
  CHECK(hard.reference_steps ==
        (1ull << static_cast<unsigned>(hard.input.at("n").get<int>())) - 1);
}

TEST_CASE("same call twice produces byte-identical descriptors") {
  const auto& task = TaskRegistry::instance().by_name("quick_sort").id;
  const auto a = generate_instance(task, Difficulty::kMedium, 7);
  const auto b = generate_instance(task, Difficulty::kMedium, 7);
  CHECK(a.to_json().dump() == b.to_json().dump());
}

TEST_CASE("generated instances re-verify under the oracle") {
  // One instance per difficulty for a spread of tasks; the digest stored in
  // the descriptor must match a fresh recorded execution.
  for (const char* name : {"bubble_sort", "merge_sort", "dijkstra", "hanoi",
                           "dpll", "lru", "blockchain", "kmp"}) {
    const auto& task = TaskRegistry::instance().by_name(name).id;
    for (int d = 0; d < 3; ++d) {
      const auto inst = generate_instance(task, difficulty_from_int(d), 0);
      const ExecutionTrace trace = execute_reference(inst);
      REQUIRE(trace.final_state == inst.reference_answer);
      REQUIRE(trace.digest() == inst.reference_trace_digest);
      REQUIRE(trace.events.size() == inst.reference_steps);
    }
  }
}

TEST_CASE("suite generation: 200 instances per level, stable digests") {
  const auto& task = TaskRegistry::instance().by_name("gcd").id;
  const auto suite = generate_suite(task, 42);
  REQUIRE(suite.size() == 600);
  std::map<int, int> per_level;
  std::set<std::uint64_t> seeds;
  for (const auto& inst : suite) {
    per_level[static_cast<int>(inst.difficulty)]++;
    CHECK(seeds.insert(inst.seed).second);
  }
  CHECK(per_level[0] == 200);
  CHECK(per_level[1] == 200);
  CHECK(per_level[2] == 200);

  const auto again = generate_suite(task, 42);
  for (std::size_t i = 0; i < suite.size(); ++i) {
    REQUIRE(suite[i].to_json().dump() == again[i].to_json().dump());
  }
}

TEST_CASE("instance records round-trip through serialization") {
  const auto& task = TaskRegistry::instance().by_name("nqueens").id;
  const auto inst = generate_instance(task, Difficulty::kMedium, 3);
  const auto back = InstanceDescriptor::from_json(inst.to_json());
  CHECK(back.to_json().dump() == inst.to_json().dump());
  CHECK(back.task.ordinal == inst.task.ordinal);
}
