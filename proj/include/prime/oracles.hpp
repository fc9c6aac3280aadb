#pragma once

#include <string>

#include "prime/task.hpp"
#include "prime/trace.hpp"

namespace prime {

struct InstanceDescriptor;  // taskgen.hpp

// Runs the registered reference executor for the instance and records the
// full trace under the instance's snapshot policy.
ExecutionTrace execute_reference(const InstanceDescriptor& instance);

// Family entry points. Each takes the task's canonical name plus a payload
// in that family's schema and returns the recorded trace. They are thin
// wrappers over the registry used directly by tests and the library API.
ExecutionTrace sort_trace(const std::string& algorithm,
                          const std::vector<std::int64_t>& array);
ExecutionTrace graph_trace(const std::string& algorithm, const json& payload);
ExecutionTrace tree_trace(const std::string& task, const json& payload);
ExecutionTrace puzzle_trace(const std::string& task, const json& payload);
ExecutionTrace automaton_trace(const std::string& task, const json& payload);
ExecutionTrace string_trace(const std::string& task, const json& payload);
ExecutionTrace math_trace(const std::string& task, const json& payload);
ExecutionTrace logic_trace(const std::string& task, const json& payload);
ExecutionTrace datastructure_trace(const std::string& task, const json& payload);
ExecutionTrace simulation_trace(const std::string& task, const json& payload);

// Generic runner: dispatch by canonical name, record with the given policy.
ExecutionTrace run_task(const std::string& canonical_name, const json& payload);

// N-Queens next-step predicate: given columns of queens in rows 1..N-1,
// returns the unique valid column for row N.
struct NoValidColumn : std::runtime_error {
  NoValidColumn() : std::runtime_error("nqueens: no valid column") {}
};
struct MultipleValidColumns : std::runtime_error {
  MultipleValidColumns() : std::runtime_error("nqueens: multiple valid columns") {}
};
int nqueens_next_step(const std::vector<int>& queen_columns);

// Backtracking enumeration of all N-Queens solutions (test/QA helper).
std::vector<std::vector<int>> nqueens_enumerate(int n);

}  // namespace prime
