#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "prime/task.hpp"
#include "prime/trace.hpp"

namespace prime::oracles {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Sinks that do not keep snapshots skip the string building entirely.
class Emitter {
 public:
  explicit Emitter(TraceSink& sink) : sink_(sink) {}

  void emit(const char* kind, std::initializer_list<i64> args = {},
            std::string note = {}) {
    ev_.kind = kind;
    ev_.args.assign(args.begin(), args.end());
    ev_.note = std::move(note);
    sink_.on_event(ev_);
  }

  void emit_vec(const char* kind, const std::vector<i64>& args,
                std::string note = {}) {
    ev_.kind = kind;
    ev_.args = args;
    ev_.note = std::move(note);
    sink_.on_event(ev_);
  }

  void snapshot(const std::string& state) { sink_.set_state(state); }

  template <typename F>
  void snapshot_with(F&& make_state) {
    if (sink_.wants_state()) sink_.set_state(make_state());
  }

  u64 count() const { return sink_.count(); }

 private:
  TraceSink& sink_;
  TraceEvent ev_;
};

inline std::vector<i64> to_vec(const json& arr) {
  std::vector<i64> v;
  v.reserve(arr.size());
  for (const auto& x : arr) v.push_back(x.get<i64>());
  return v;
}

inline json to_json_array(const std::vector<i64>& v) {
  json arr = json::array();
  for (i64 x : v) arr.push_back(x);
  return arr;
}

inline std::string vec_state(const std::vector<i64>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) s.push_back(',');
    s += std::to_string(v[i]);
  }
  s.push_back(']');
  return s;
}

inline std::string answer_array(const std::vector<i64>& v) {
  return to_json_array(v).dump();
}

// Registration hooks, one per category source file.
void register_sorting(std::vector<TaskDriver>& out);       // categories 1-3
void register_graph(std::vector<TaskDriver>& out);         // category 4
void register_tree(std::vector<TaskDriver>& out);          // category 5
void register_puzzle(std::vector<TaskDriver>& out);        // category 6
void register_automaton(std::vector<TaskDriver>& out);     // category 7
void register_string(std::vector<TaskDriver>& out);        // category 8
void register_math(std::vector<TaskDriver>& out);          // category 9
void register_logic(std::vector<TaskDriver>& out);         // category 10
void register_datastructure(std::vector<TaskDriver>& out); // category 11
void register_simulation(std::vector<TaskDriver>& out);    // category 12

}  // namespace prime::oracles
