#include "prime/oracles.hpp"

#include "prime/taskgen.hpp"

namespace prime {

ExecutionTrace run_task(const std::string& canonical_name, const json& payload) {
  const TaskDriver& driver = TaskRegistry::instance().by_name(canonical_name);
  RecordingSink sink(driver.policy_for(payload));
  const std::string answer = driver.run(payload, sink);
  ExecutionTrace trace = sink.take(answer);
  trace.task_name = canonical_name;
  return trace;
}

ExecutionTrace execute_reference(const InstanceDescriptor& instance) {
  const TaskDriver& driver =
      TaskRegistry::instance().by_ordinal(instance.task.ordinal);
  RecordingSink sink(driver.policy_for(instance.input));
  const std::string answer = driver.run(instance.input, sink);
  ExecutionTrace trace = sink.take(answer);
  trace.task_name = instance.task.canonical_name;
  trace.seed = instance.seed;
  return trace;
}

ExecutionTrace sort_trace(const std::string& algorithm,
                          const std::vector<std::int64_t>& array) {
  json payload;
  json arr = json::array();
  for (auto v : array) arr.push_back(v);
  payload["array"] = arr;
  return run_task(algorithm, payload);
}

ExecutionTrace graph_trace(const std::string& algorithm, const json& payload) {
  return run_task(algorithm, payload);
}
ExecutionTrace tree_trace(const std::string& task, const json& payload) {
  return run_task(task, payload);
}
ExecutionTrace puzzle_trace(const std::string& task, const json& payload) {
  return run_task(task, payload);
}
ExecutionTrace automaton_trace(const std::string& task, const json& payload) {
  return run_task(task, payload);
}
ExecutionTrace string_trace(const std::string& task, const json& payload) {
  return run_task(task, payload);
}
ExecutionTrace math_trace(const std::string& task, const json& payload) {
  return run_task(task, payload);
}
ExecutionTrace logic_trace(const std::string& task, const json& payload) {
  return run_task(task, payload);
}
ExecutionTrace datastructure_trace(const std::string& task, const json& payload) {
  return run_task(task, payload);
}
ExecutionTrace simulation_trace(const std::string& task, const json& payload) {
  return run_task(task, payload);
}

}  // namespace prime
