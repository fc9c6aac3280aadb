#include "prime/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "prime/io.hpp"
#include "prime/oracles.hpp"

namespace prime {

double ConstraintSet::total_weight() const {
  double total = 0;
  for (const auto& c : constraints) total += c.weight;
  return total;
}

double violation_score(const json& state, const ConstraintSet& constraints) {
  const double total = constraints.total_weight();
  if (total <= 0) throw UnknownConstraintKind("empty or zero-weight constraint set");
  double violated = 0;
  for (const auto& c : constraints.constraints) {
    if (!c.satisfied) throw UnknownConstraintKind("constraint without predicate: " + c.id);
    if (!c.satisfied(state)) violated += c.weight;
  }
  return violated / total;
}

double rule_verifier(const json& state, const ConstraintSet& constraints) {
  if (constraints.constraints.empty()) {
    throw UnknownConstraintKind("rule verifier: empty constraint set");
  }
  for (const auto& c : constraints.constraints) {
    if (c.kind != ConstraintKind::kRule) {
      throw UnknownConstraintKind("rule verifier cannot evaluate: " + c.id);
    }
  }
  return violation_score(state, constraints);
}

std::pair<double, bool> ensemble_verify(
    const json& state, const ConstraintSet& constraints,
    const std::vector<std::function<double(const json&, const ConstraintSet&)>>& verifiers,
    double delta) {
  if (verifiers.empty()) throw std::invalid_argument("ensemble: need >= 1 verifier");
  std::vector<double> scores;
  scores.reserve(verifiers.size());
  for (const auto& v : verifiers) scores.push_back(v(state, constraints));
  std::vector<double> sorted = scores;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  const double median =
      n % 2 == 1 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
  const bool review = sorted.back() - sorted.front() > delta;
  return {median, review};
}

Constraint sortedness_constraint() {
  Constraint c;
  c.id = "sorted";
  c.kind = ConstraintKind::kRule;
  c.satisfied = [](const json& state) {
    const auto& arr = state.at("array");
    for (std::size_t i = 1; i < arr.size(); ++i) {
      if (arr[i - 1].get<std::int64_t>() > arr[i].get<std::int64_t>()) return false;
    }
    return true;
  };
  return c;
}

Constraint permutation_constraint(std::vector<std::int64_t> reference_multiset) {
  std::sort(reference_multiset.begin(), reference_multiset.end());
  Constraint c;
  c.id = "permutation";
  c.kind = ConstraintKind::kRule;
  c.satisfied = [ref = std::move(reference_multiset)](const json& state) {
    std::vector<std::int64_t> vals;
    for (const auto& v : state.at("array")) vals.push_back(v.get<std::int64_t>());
    std::sort(vals.begin(), vals.end());
    return vals == ref;
  };
  return c;
}

ConstraintSet nqueens_constraints(int n) {
  // State: {"queens": [c_1, ..., c_k]} with 1-based columns, row i = index+1.
  ConstraintSet cs;
  Constraint rows;
  rows.id = "row_unique";
  rows.satisfied = [n](const json& state) {
    return static_cast<int>(state.at("queens").size()) <= n;  // one queen per row by encoding
  };
  Constraint cols;
  cols.id = "col_unique";
  cols.satisfied = [](const json& state) {
    std::set<int> seen;
    for (const auto& c : state.at("queens")) {
      if (!seen.insert(c.get<int>()).second) return false;
    }
    return true;
  };
  Constraint diag;
  diag.id = "diag_safe";
  diag.satisfied = [](const json& state) {
    std::vector<int> cols;
    for (const auto& c : state.at("queens")) cols.push_back(c.get<int>());
    for (std::size_t i = 0; i < cols.size(); ++i) {
      for (std::size_t j = i + 1; j < cols.size(); ++j) {
        if (std::abs(static_cast<int>(j - i)) == std::abs(cols[j] - cols[i])) return false;
      }
    }
    return true;
  };
  cs.constraints = {rows, cols, diag};
  return cs;
}

// --- verify_trace ---------------------------------------------------------------

const char* verify_stage_name(VerifyStage s) {
  switch (s) {
    case VerifyStage::kFormat: return "format";
    case VerifyStage::kSyntax: return "syntax";
    case VerifyStage::kSemantic: return "semantic";
    case VerifyStage::kResult: return "result";
  }
  return "?";
}

json ViolationReport::to_json() const {
  json r;
  r["stage"] = verify_stage_name(stage_reached);
  r["passed"] = passed;
  r["score"] = score;
  json cs = json::object();
  for (const auto& [id, ok] : constraint_results) cs[id] = ok;
  r["constraints"] = cs;
  if (first_divergence) r["first_divergence"] = *first_divergence;
  return r;
}

namespace {

// Streams reference events and compares them to the candidate's on the fly,
// so verification never materializes a second million-step trace.
class CompareSink : public TraceSink {
 public:
  explicit CompareSink(const std::vector<TraceEvent>& candidate)
      : candidate_(candidate) {}

  void on_event(const TraceEvent& ev) override {
    if (!first_mismatch_ && count_ < candidate_.size() &&
        !ev.same_action(candidate_[static_cast<std::size_t>(count_)])) {
      first_mismatch_ = count_;
    }
    ++count_;
  }
  void set_state(const std::string&) override {}

  std::optional<std::uint64_t> first_mismatch() const { return first_mismatch_; }

 private:
  const std::vector<TraceEvent>& candidate_;
  std::optional<std::uint64_t> first_mismatch_;
};

ViolationReport finish_report(std::vector<std::pair<std::string, bool>> results,
                              VerifyStage stage, bool passed,
                              std::optional<std::uint64_t> divergence) {
  ViolationReport report;
  report.stage_reached = stage;
  report.passed = passed;
  report.constraint_results = std::move(results);
  double violated = 0;
  for (const auto& [id, ok] : report.constraint_results) {
    if (!ok) violated += 1;
  }
  report.score = violated / static_cast<double>(report.constraint_results.size());
  report.first_divergence = divergence;
  return report;
}

}  // namespace

ViolationReport verify_trace(const ExecutionTrace& candidate,
                             const InstanceDescriptor& instance) {
  const TaskDriver& driver =
      TaskRegistry::instance().by_ordinal(instance.task.ordinal);
  // Unresolved later stages count as violated: processing stops at the
  // first failing stage.
  std::vector<std::pair<std::string, bool>> results = {
      {"format", true}, {"syntax", false}, {"semantic", false}, {"result", false}};

  // Syntax: vocabulary membership and consecutive step numbering.
  for (std::size_t i = 0; i < candidate.events.size(); ++i) {
    const TraceEvent& ev = candidate.events[i];
    if (driver.vocab.count(ev.kind) == 0 || ev.step != i) {
      return finish_report(std::move(results), VerifyStage::kSyntax, false, i);
    }
  }
  results[1].second = true;

  // Semantic: replay the reference and compare event streams.
  CompareSink compare(candidate.events);
  const std::string answer = driver.run(instance.input, compare);
  std::optional<std::uint64_t> divergence = compare.first_mismatch();
  if (!divergence && candidate.events.size() > compare.count()) {
    divergence = compare.count();  // candidate continues past termination
  }
  if (divergence) {
    return finish_report(std::move(results), VerifyStage::kSemantic, false, divergence);
  }
  results[2].second = true;

  // Result: canonical final state must match the reference answer.
  const bool result_ok = candidate.final_state == answer &&
                         candidate.events.size() == compare.count();
  results[3].second = result_ok;
  return finish_report(std::move(results), VerifyStage::kResult, result_ok,
                       result_ok ? std::nullopt
                                 : std::optional<std::uint64_t>(compare.count()));
}

ViolationReport verify_trace_text(const std::string& candidate_text,
                                  const InstanceDescriptor& instance) {
  ExecutionTrace candidate;
  try {
    candidate = read_trace_text(candidate_text);
  } catch (const std::exception&) {
    ViolationReport report;
    report.stage_reached = VerifyStage::kFormat;
    report.passed = false;
    report.constraint_results = {
        {"format", false}, {"syntax", false}, {"semantic", false}, {"result", false}};
    report.score = 1.0;
    return report;
  }
  return verify_trace(candidate, instance);
}

// --- classify_error -----------------------------------------------------------------

const char* error_type_name(ErrorType t) {
  switch (t) {
    case ErrorType::kCarryover: return "carryover";
    case ErrorType::kReset: return "reset";
    case ErrorType::kIndex: return "index";
    case ErrorType::kWrongOperation: return "wrong_operation";
    case ErrorType::kOrdering: return "ordering";
    case ErrorType::kTermination: return "termination";
    case ErrorType::kBoundary: return "boundary";
    case ErrorType::kInvariant: return "invariant";
    case ErrorType::kFormat: return "format";
    case ErrorType::kOther: return "other";
  }
  return "?";
}

const char* severity_name(Severity s) {
  switch (s) {
    case Severity::kCritical: return "critical";
    case Severity::kMajor: return "major";
    case Severity::kMinor: return "minor";
  }
  return "?";
}

double severity_weight(Severity s) {
  switch (s) {
    case Severity::kCritical: return 1.0;
    case Severity::kMajor: return 0.6;
    case Severity::kMinor: return 0.2;
  }
  return 0;
}

json ErrorClassification::to_json() const {
  json r;
  r["type"] = error_type_name(type);
  r["severity"] = severity_name(severity);
  r["first_error_position"] = first_error_position;
  return r;
}

ErrorClassification classify_error(const ExecutionTrace& candidate,
                                   const ExecutionTrace& reference) {
  const auto& cand = candidate.events;
  const auto& ref = reference.events;
  std::size_t lcp = 0;
  while (lcp < cand.size() && lcp < ref.size() &&
         cand[lcp].same_action(ref[lcp])) {
    ++lcp;
  }
  const bool same_final = candidate.final_state == reference.final_state;
  if (lcp == cand.size() && lcp == ref.size() && same_final) throw IdenticalTraces();

  ErrorClassification c;
  c.first_error_position =
      ref.empty() ? 0.0
                  : static_cast<double>(std::min(lcp, ref.size())) /
                        static_cast<double>(ref.size());

  // Severity: wrong final answer is critical; a correct answer through
  // structurally legal events is minor; structurally broken events in a
  // correct run are major.
  const TaskDriver* driver = TaskRegistry::instance().find(reference.task_name);
  auto well_formed = [&](const TraceEvent& ev) {
    return driver == nullptr || driver->vocab.count(ev.kind) > 0;
  };
  if (!same_final) {
    c.severity = Severity::kCritical;
  } else {
    bool all_legal = true;
    for (const auto& ev : cand) all_legal = all_legal && well_formed(ev);
    c.severity = all_legal ? Severity::kMinor : Severity::kMajor;
  }

  // Primary type from the first divergence, by fixed rule order.
  if (lcp == cand.size() || lcp == ref.size()) {
    c.type = ErrorType::kTermination;  // stopped early or continued past
    return c;
  }
  const TraceEvent& ce = cand[lcp];
  const TraceEvent& re = ref[lcp];
  constexpr std::size_t kWindow = 8;

  if (!well_formed(ce)) {
    c.type = ErrorType::kInvariant;
    return c;
  }
  // Matches a nearby later reference event: steps executed out of order.
  for (std::size_t j = lcp + 1; j < std::min(ref.size(), lcp + 1 + kWindow); ++j) {
    if (ce.same_action(ref[j])) {
      c.type = ErrorType::kOrdering;
      return c;
    }
  }
  // Matches a recent earlier reference event: state incorrectly reset.
  for (std::size_t j = lcp > kWindow ? lcp - kWindow : 0; j < lcp; ++j) {
    if (ce.same_action(ref[j])) {
      c.type = ErrorType::kReset;
      return c;
    }
  }
  if (ce.kind != re.kind) {
    c.type = ErrorType::kWrongOperation;
    return c;
  }
  if (ce.args.size() == re.args.size()) {
    int off_by_one = 0, diffs = 0;
    for (std::size_t i = 0; i < ce.args.size(); ++i) {
      if (ce.args[i] != re.args[i]) {
        ++diffs;
        if (std::llabs(ce.args[i] - re.args[i]) == 1) ++off_by_one;
      }
    }
    if (diffs > 0 && diffs == off_by_one) {
      c.type = ErrorType::kIndex;
      return c;
    }
    // Far outside the reference operand range: boundary violation.
    std::int64_t lo = INT64_MAX, hi = INT64_MIN;
    for (const auto& ev : ref) {
      for (auto a : ev.args) {
        lo = std::min(lo, a);
        hi = std::max(hi, a);
      }
    }
    for (auto a : ce.args) {
      if (a < lo || a > hi) {
        c.type = ErrorType::kBoundary;
        return c;
      }
    }
    c.type = ErrorType::kCarryover;
    return c;
  }
  c.type = ErrorType::kOther;
  return c;
}

}  // namespace prime
