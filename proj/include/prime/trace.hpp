#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "prime/digest.hpp"

namespace prime {

// One step of an execution trace. `kind` comes from the owning task
// family's vocabulary; `args` are integer operands (indices, values,
// vertex ids); symbolic operands ride in `note`.
struct TraceEvent {
  std::uint64_t step = 0;
  std::string kind;
  std::vector<std::int64_t> args;
  std::string note;   // optional short annotation, e.g. "tree_edge"
  std::string state;  // optional snapshot (full text), per policy

  bool same_action(const TraceEvent& o) const {
    return kind == o.kind && args == o.args && note == o.note;
  }

  // Canonical byte form used for digests and the wire protocol. Snapshots
  // are excluded so digests are independent of the snapshot policy.
  std::string canonical() const;
};

// Inverse of TraceEvent::canonical(). Throws std::invalid_argument.
TraceEvent parse_event_canonical(const std::string& line);

// How much state a trace carries per event.
struct SnapshotPolicy {
  bool full_every_event = true;
  std::uint64_t checkpoint_interval = 1024;  // when full_every_event is false

  static SnapshotPolicy for_size(std::int64_t size_param, std::int64_t full_limit) {
    SnapshotPolicy p;
    p.full_every_event = size_param <= full_limit;
    return p;
  }
  std::string name() const { return full_every_event ? "full" : "digest"; }
};

// Consumer of oracle events. Oracles never store events themselves; the
// sink decides between full recording and digest-only streaming.
class TraceSink {
 public:
  virtual ~TraceSink() = default;
  virtual void on_event(const TraceEvent& ev) = 0;
  virtual void set_state(const std::string& state_text) = 0;  // snapshot offer
  // True when the sink would keep a snapshot for the last event; lets
  // oracles skip building state strings nobody stores.
  virtual bool wants_state() const { return false; }
  std::uint64_t count() const { return count_; }

 protected:
  std::uint64_t count_ = 0;
};

// Counts events and hashes the canonical stream; no storage. Instance
// generation and QA run through this, so million-step references never
// have to be materialized.
class DigestSink : public TraceSink {
 public:
  explicit DigestSink(bool hashing = true) : hashing_(hashing) {}

  void on_event(const TraceEvent& ev) override {
    ++count_;
    if (hashing_) hash_.update(ev.canonical());
  }
  void set_state(const std::string&) override {}

  std::string finish(const std::string& final_state) {
    hash_.update("final:");
    hash_.update(final_state);
    return hash_.hex_digest();
  }

 private:
  bool hashing_;
  Sha256 hash_;
};

// Full in-memory trace.
struct ExecutionTrace {
  std::string task_name;
  std::uint64_t seed = 0;
  SnapshotPolicy policy;
  std::vector<TraceEvent> events;
  std::string final_state;
  std::map<std::string, std::uint64_t> counters;

  std::uint64_t length() const { return events.size(); }
  std::string digest() const;  // matches DigestSink::finish for the same stream
};

class RecordingSink : public TraceSink {
 public:
  explicit RecordingSink(SnapshotPolicy policy = {}) { trace_.policy = policy; }

  void on_event(const TraceEvent& ev) override {
    trace_.events.push_back(ev);
    trace_.events.back().step = count_;
    ++count_;
    trace_.counters[ev.kind]++;
    pending_snapshot_ = trace_.policy.full_every_event ||
                        (count_ % trace_.policy.checkpoint_interval == 0);
  }

  void set_state(const std::string& state_text) override {
    if (pending_snapshot_ && !trace_.events.empty()) {
      trace_.events.back().state = state_text;
      pending_snapshot_ = false;
    }
  }

  bool wants_state() const override { return pending_snapshot_; }

  ExecutionTrace take(const std::string& final_state) {
    trace_.final_state = final_state;
    return std::move(trace_);
  }

 private:
  ExecutionTrace trace_;
  bool pending_snapshot_ = false;
};

}  // namespace prime
