#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "prime/rng.hpp"
#include "prime/taskgen.hpp"
#include "prime/trace.hpp"
#include "prime/verify.hpp"

namespace prime {

struct ConfigGap : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CoordinatorConfig {
  double tau_soft = 0.3;
  double tau_hard = 0.3;
  int retry_budget = 3;            // action redraws per soft violation
  int max_iterations = 5;          // K
  int group_size = 8;              // G
  double epsilon_match = 1e-9;     // vote tolerance for numeric solutions
  double early_stop_confidence = 0.9;  // theta_c
  double ensemble_delta = 0.5;
  // Policy for the band tau_soft < v <= tau_hard when thresholds differ:
  // "retry", "backtrack", or "error" (raise ConfigGap).
  std::string band_policy = "retry";
  std::uint64_t step_budget_factor = 4;

  void validate() const;
};

enum class Decision { kProceed, kRetry, kBacktrack };
const char* decision_name(Decision d);

// Eq.-style decision policy over a violation score in [0, 1].
Decision coordinate(double violation, const CoordinatorConfig& config);

// --- Agents -------------------------------------------------------------------

// Everything an agent (and the verifier around it) needs for one instance.
struct EpisodeContext {
  const InstanceDescriptor* instance = nullptr;
  std::shared_ptr<const ExecutionTrace> canonical;
  CoordinatorConfig config;

  std::uint64_t length() const { return canonical->events.size(); }
};

EpisodeContext make_context(const InstanceDescriptor& instance,
                            CoordinatorConfig config = {});

struct ActionProposal {
  TraceEvent event;
  double log_score = 0.0;
};

// Agents emit proposed trace events. Bundled agents are deterministic
// given (instance seed, rollout index); `attempt` salts retry redraws.
class Agent {
 public:
  virtual ~Agent() = default;
  virtual std::string name() const = 0;

  // Sampled behavioral action (used by the episode loop and greedy mode).
  virtual ActionProposal act(const EpisodeContext& ctx, int rollout_index,
                             std::uint64_t step, std::uint64_t attempt) = 0;

  // Score-ordered candidates with the sampled action first (beam mode).
  virtual std::vector<ActionProposal> propose_topk(const EpisodeContext& ctx,
                                                   int rollout_index,
                                                   std::uint64_t step, int width);
};

// Replays the canonical trace: never violates.
std::unique_ptr<Agent> make_oracle_agent();

// With probability p per action draw, replaces the oracle action by a
// uniformly random legal corruption of it.
std::unique_ptr<Agent> make_noisy_agent(double p);

// HTTP client agent: POST {endpoint}/act, 120 s timeout. Responses are
// recorded verbatim for replay.
struct RemoteOptions {
  std::string endpoint;             // http://host:port
  int timeout_seconds = 120;
  std::size_t max_response_bytes = 16384;  // 4,096 tokens at 4 bytes/token
  std::string prompt_template;      // rendered into each request
};
std::unique_ptr<Agent> make_remote_agent(RemoteOptions options,
                                         std::vector<std::string>* response_log);
std::unique_ptr<Agent> make_replay_agent(std::vector<std::string> recorded_responses);

// --- Episodes ---------------------------------------------------------------------

struct EpisodeStep {
  std::uint64_t position;
  TraceEvent action;
  double violation;
  Decision decision;
};

struct Episode {
  std::vector<EpisodeStep> steps;  // every attempt, including rejected ones
  std::vector<TraceEvent> applied; // the accepted trajectory
  int retries = 0;
  int backtracks = 0;
  bool budget_exhausted = false;
  bool conformed = false;          // applied events equal the canonical trace
  std::string solution;
  double final_violation = 1.0;    // 0 iff solution matches the reference
  std::uint64_t trajectory_length = 0;
  bool format_ok = true;

  json to_json() const;
};

// Per-step verification: conformance replay plus cheap rule checks over the
// proposed event.
ConstraintSet step_constraints(const EpisodeContext& ctx, std::uint64_t step);
double step_violation(const EpisodeContext& ctx, std::uint64_t step,
                      const TraceEvent& proposed);

Episode run_episode(Agent& agent, const EpisodeContext& ctx, int rollout_index);

// Single pass, sampled action, no verification or recovery.
Episode greedy_execute(Agent& agent, const EpisodeContext& ctx, int rollout_index = 0);

// Beam search over agent proposals by cumulative log-score.
Episode beam_execute(Agent& agent, const EpisodeContext& ctx, int beam_width,
                     int branch_width);

// --- Voting and the full protocol -----------------------------------------------------

struct VoteEntry {
  std::string solution;
  double violation = 0.0;
  int rollout_index = 0;
};

// Most frequent solution; numeric solutions cluster within epsilon_match.
// Ties break toward lowest violation, then earliest rollout index.
std::string majority_vote(const std::vector<VoteEntry>& entries, double epsilon_match);

// Agreement score: max fraction of identical solutions.
double agreement(const std::vector<std::string>& solutions);

struct PrimeResult {
  std::string solution;
  bool success = false;        // solution verified to zero violation
  int iterations_used = 0;
  int episodes_run = 0;
  int total_retries = 0;
  int total_backtracks = 0;
  std::uint64_t total_steps = 0;
  double vote_agreement = 0.0;
  std::vector<Episode> episodes;
};

// Result-stage verifier hook; the deterministic default compares against
// the reference answer. Tests inject miss rates through this seam.
using ResultVerifier = std::function<double(const std::string& solution,
                                            const InstanceDescriptor& instance)>;
ResultVerifier exact_result_verifier();
ResultVerifier miss_rate_verifier(double beta, std::uint64_t seed);

PrimeResult run_prime(Agent& agent, const EpisodeContext& ctx,
                      const ResultVerifier& verifier = exact_result_verifier());

// Adaptive controls: G(d) = G_min + (G_max - G_min) * sigmoid(d - d0) and
// the early-stop predicate (agreement >= theta_c and verified).
struct AdaptiveControls {
  double group_size;
  std::function<bool(double agreement_score, bool verified)> early_stop;
};
AdaptiveControls adaptive_controls(double difficulty, double g_min, double g_max,
                                   double d0, double theta_c);

// Theorem-style false-accept harness: one wrong solution checked by K
// independent verification rounds with injected miss rate beta; returns the
// measured acceptance frequency over `episodes` runs.
double measure_false_accept(double beta, int k_rounds, int episodes,
                            std::uint64_t seed);

// Remote wire protocol rendering (exposed for the server side and tests).
json build_remote_request(const EpisodeContext& ctx, std::uint64_t step,
                          const std::string& prompt_template);

inline constexpr const char* kProtocolVersion = "1";
inline constexpr const char* kEndpointEnvVar = "PRIME_AGENT_ENDPOINT";

}  // namespace prime
