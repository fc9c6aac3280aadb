#include "prime/task.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

#include "oracles/common.hpp"

namespace prime {

const char* difficulty_name(Difficulty d) {
  switch (d) {
    case Difficulty::kEasy: return "easy";
    case Difficulty::kMedium: return "medium";
    case Difficulty::kHard: return "hard";
  }
  return "?";
}

Difficulty difficulty_from_int(int d) {
  if (d < 0 || d > 2) throw std::invalid_argument("difficulty out of range");
  return static_cast<Difficulty>(d);
}

const std::vector<int>& TaskRegistry::category_counts() {
  static const std::vector<int> counts = {15, 3, 10, 6, 5, 6, 8, 5, 8, 6, 6, 8};
  return counts;
}

const char* TaskRegistry::category_name(int category) {
  static const char* names[] = {
      "comparison_sorting", "noncomparison_sorting", "advanced_sorting",
      "graph_traversal",    "tree_structures",       "classic_puzzles",
      "automata",           "string_pattern",        "mathematical",
      "logic_theorem",      "data_structures",       "system_simulation"};
  if (category < 1 || category > 12) throw std::invalid_argument("bad category");
  return names[category - 1];
}

TaskRegistry::TaskRegistry() {
  using namespace oracles;
  drivers_.reserve(86);
  register_sorting(drivers_);       // categories 1-3 (28 tasks)
  register_graph(drivers_);         // category 4 (6)
  register_tree(drivers_);          // category 5 (5)
  register_puzzle(drivers_);        // category 6 (6)
  register_automaton(drivers_);     // category 7 (8)
  register_string(drivers_);        // category 8 (5)
  register_math(drivers_);          // category 9 (8)
  register_logic(drivers_);         // category 10 (6)
  register_datastructure(drivers_); // category 11 (6)
  register_simulation(drivers_);    // category 12 (8)
  assert(drivers_.size() == 86);
  for (std::size_t i = 0; i < drivers_.size(); ++i) {
    assert(drivers_[i].id.ordinal == static_cast<int>(i));
  }
}

const TaskRegistry& TaskRegistry::instance() {
  static TaskRegistry registry;
  return registry;
}

const TaskDriver& TaskRegistry::by_ordinal(int ordinal) const {
  if (ordinal < 0 || ordinal >= static_cast<int>(drivers_.size())) {
    throw UnsupportedTask("ordinal " + std::to_string(ordinal));
  }
  return drivers_[static_cast<std::size_t>(ordinal)];
}

const TaskDriver* TaskRegistry::find(const std::string& canonical_name) const {
  static const std::map<std::string, int>* index = [] {
    auto* m = new std::map<std::string, int>;
    for (const auto& d : instance().drivers_) {
      (*m)[d.id.canonical_name] = d.id.ordinal;
    }
    return m;
  }();
  const auto it = index->find(canonical_name);
  return it == index->end() ? nullptr : &drivers_[static_cast<std::size_t>(it->second)];
}

const TaskDriver& TaskRegistry::by_name(const std::string& canonical_name) const {
  const TaskDriver* d = find(canonical_name);
  if (d == nullptr) throw UnsupportedTask(canonical_name);
  return *d;
}

}  // namespace prime
