#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "prime/task.hpp"
#include "prime/taskgen.hpp"
#include "prime/trace.hpp"

namespace prime {

struct UnknownConstraintKind : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct IdenticalTraces : std::invalid_argument {
  IdenticalTraces() : std::invalid_argument("traces are identical") {}
};

// kRule constraints are pre-registered machine-checkable predicates over a
// state; kReplay constraints need the reference trace (conformance).
enum class ConstraintKind { kRule, kReplay };

struct Constraint {
  std::string id;
  ConstraintKind kind = ConstraintKind::kRule;
  double weight = 1.0;
  std::function<bool(const json& state)> satisfied;
};

struct ConstraintSet {
  std::vector<Constraint> constraints;
  double total_weight() const;
};

// Normalized weighted violation score in [0, 1].
double violation_score(const json& state, const ConstraintSet& constraints);

// Same formula restricted to kRule constraints; throws UnknownConstraintKind
// when the set contains anything else, or when empty (guarding the division).
double rule_verifier(const json& state, const ConstraintSet& constraints);

// Median of member scores; review flag set iff max - min > delta.
std::pair<double, bool> ensemble_verify(
    const json& state, const ConstraintSet& constraints,
    const std::vector<std::function<double(const json&, const ConstraintSet&)>>& verifiers,
    double delta);

// Ready-made rule constraints for common task families.
Constraint sortedness_constraint();
Constraint permutation_constraint(std::vector<std::int64_t> reference_multiset);
ConstraintSet nqueens_constraints(int n);

// --- Four-stage trace verification -------------------------------------------

enum class VerifyStage { kFormat = 0, kSyntax = 1, kSemantic = 2, kResult = 3 };
const char* verify_stage_name(VerifyStage s);

struct ViolationReport {
  VerifyStage stage_reached = VerifyStage::kFormat;  // last stage processed
  bool passed = false;                               // all four stages green
  std::vector<std::pair<std::string, bool>> constraint_results;
  double score = 1.0;
  std::optional<std::uint64_t> first_divergence;

  json to_json() const;
};

ViolationReport verify_trace(const ExecutionTrace& candidate,
                             const InstanceDescriptor& instance);
// Raw-text form: candidate is a trace file body (JSONL).
ViolationReport verify_trace_text(const std::string& candidate_text,
                                  const InstanceDescriptor& instance);

// --- Error classification -------------------------------------------------------

enum class ErrorType {
  kCarryover,
  kReset,
  kIndex,
  kWrongOperation,
  kOrdering,
  kTermination,
  kBoundary,
  kInvariant,
  kFormat,
  kOther,
};
const char* error_type_name(ErrorType t);

enum class Severity { kCritical, kMajor, kMinor };
const char* severity_name(Severity s);
double severity_weight(Severity s);  // 1.0 / 0.6 / 0.2

struct ErrorClassification {
  ErrorType type = ErrorType::kOther;
  Severity severity = Severity::kCritical;
  double first_error_position = 0.0;  // fraction of reference length

  json to_json() const;
};

// Deterministic rule-based classification of the first divergence; throws
// IdenticalTraces when there is nothing to classify.
ErrorClassification classify_error(const ExecutionTrace& candidate,
                                   const ExecutionTrace& reference);

}  // namespace prime
