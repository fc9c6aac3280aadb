#include "prime/exec.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>

#include <httplib.h>

#include "prime/digest.hpp"
#include "prime/io.hpp"
#include "prime/oracles.hpp"

namespace prime {

void CoordinatorConfig::validate() const {
  if (!(0 <= tau_soft && tau_soft <= tau_hard && tau_hard <= 1)) {
    throw ConfigGap("require 0 <= tau_soft <= tau_hard <= 1");
  }
  if (max_iterations < 1) throw ConfigGap("K >= 1 required");
  if (group_size < 1) throw ConfigGap("G >= 1 required");
  if (band_policy != "retry" && band_policy != "backtrack" && band_policy != "error") {
    throw ConfigGap("band_policy must be retry|backtrack|error");
  }
}

const char* decision_name(Decision d) {
  switch (d) {
    case Decision::kProceed: return "proceed";
    case Decision::kRetry: return "retry";
    case Decision::kBacktrack: return "backtrack";
  }
  return "?";
}

Decision coordinate(double violation, const CoordinatorConfig& config) {
  if (violation < 0 || violation > 1) {
    throw std::invalid_argument("violation score outside [0,1]");
  }
  if (violation == 0) return Decision::kProceed;
  if (violation <= config.tau_soft) return Decision::kRetry;
  if (violation > config.tau_hard) return Decision::kBacktrack;
  // tau_soft < v <= tau_hard: only reachable with unequal thresholds.
  if (config.band_policy == "retry") return Decision::kRetry;
  if (config.band_policy == "backtrack") return Decision::kBacktrack;
  throw ConfigGap("violation in undefined band (tau_soft, tau_hard]");
}

EpisodeContext make_context(const InstanceDescriptor& instance,
                            CoordinatorConfig config) {
  config.validate();
  EpisodeContext ctx;
  ctx.instance = &instance;
  ctx.canonical = std::make_shared<ExecutionTrace>(execute_reference(instance));
  ctx.config = config;
  return ctx;
}

// --- Step constraints -----------------------------------------------------------

ConstraintSet step_constraints(const EpisodeContext& ctx, std::uint64_t step) {
  // State schema: {"event": canonical line, "step": k}.
  const TaskDriver& driver =
      TaskRegistry::instance().by_ordinal(ctx.instance->task.ordinal);
  ConstraintSet cs;

  Constraint vocab;
  vocab.id = "vocabulary";
  vocab.kind = ConstraintKind::kRule;
  vocab.satisfied = [&driver](const json& state) {
    try {
      const TraceEvent ev =
          parse_event_canonical(state.at("event").get<std::string>());
      return driver.vocab.count(ev.kind) > 0;
    } catch (const std::exception&) {
      return false;
    }
  };

  Constraint numbering;
  numbering.id = "step_numbering";
  numbering.kind = ConstraintKind::kRule;
  numbering.satisfied = [](const json& state) {
    try {
      const TraceEvent ev =
          parse_event_canonical(state.at("event").get<std::string>());
      return ev.step == state.at("step").get<std::uint64_t>();
    } catch (const std::exception&) {
      return false;
    }
  };

  Constraint conformance;
  conformance.id = "conformance";
  conformance.kind = ConstraintKind::kReplay;
  conformance.satisfied = [canonical = ctx.canonical, step](const json& state) {
    if (step >= canonical->events.size()) return false;
    try {
      const TraceEvent ev =
          parse_event_canonical(state.at("event").get<std::string>());
      return ev.same_action(canonical->events[static_cast<std::size_t>(step)]);
    } catch (const std::exception&) {
      return false;
    }
  };

  cs.constraints = {vocab, numbering, conformance};
  return cs;
}

double step_violation(const EpisodeContext& ctx, std::uint64_t step,
                      const TraceEvent& proposed) {
  // Fast path: a conforming event satisfies every constraint by
  // construction, which keeps million-step episodes cheap.
  if (step < ctx.canonical->events.size() &&
      proposed.same_action(ctx.canonical->events[static_cast<std::size_t>(step)]) &&
      proposed.step == step) {
    return 0.0;
  }
  json state;
  TraceEvent ev = proposed;
  state["event"] = ev.canonical();
  state["step"] = step;
  return violation_score(state, step_constraints(ctx, step));
}

// --- Agents -------------------------------------------------------------------------

std::vector<ActionProposal> Agent::propose_topk(const EpisodeContext& ctx,
                                                int rollout_index,
                                                std::uint64_t step, int width) {
  std::vector<ActionProposal> out;
  out.push_back(act(ctx, rollout_index, step, 0));
  (void)width;
  return out;
}

namespace {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                       std::uint64_t d) {
  Rng mixer(a ^ (b * 0x9e3779b97f4a7c15ull) ^ (c * 0xc2b2ae3d27d4eb4full) ^
            (d * 0x165667b19e3779f9ull));
  return mixer.next_u64();
}

class OracleAgent final : public Agent {
 public:
  std::string name() const override { return "oracle"; }

  ActionProposal act(const EpisodeContext& ctx, int, std::uint64_t step,
                     std::uint64_t) override {
    ActionProposal p;
    p.event = ctx.canonical->events.at(static_cast<std::size_t>(step));
    p.event.state.clear();
    p.log_score = 0.0;
    return p;
  }
};

// Uniformly random legal corruption: one operand replaced by a draw from
// the canonical operand domain (or perturbed when the domain is trivial).
TraceEvent corrupt_event(const TraceEvent& canonical_event, Rng& rng,
                         const ExecutionTrace& canonical) {
  TraceEvent ev = canonical_event;
  ev.state.clear();
  if (ev.args.empty()) {
    // No operands to perturb: substitute a different event kind drawn from
    // the trace itself when possible, else tag the note.
    for (int tries = 0; tries < 4; ++tries) {
      const auto& other =
          canonical.events[static_cast<std::size_t>(rng.next_below(
              canonical.events.size()))];
      if (!other.same_action(ev)) {
        ev.kind = other.kind;
        ev.args = other.args;
        ev.note = other.note;
        return ev;
      }
    }
    ev.note = ev.note + "#corrupt";
    return ev;
  }
  const std::size_t slot = static_cast<std::size_t>(rng.next_below(ev.args.size()));
  const std::int64_t old = ev.args[slot];
  std::int64_t replacement = old;
  for (int tries = 0; tries < 8 && replacement == old; ++tries) {
    switch (rng.next_below(3)) {
      case 0: replacement = old + 1; break;
      case 1: replacement = old - 1; break;
      default: {
        const auto& other =
            canonical.events[static_cast<std::size_t>(rng.next_below(
                canonical.events.size()))];
        if (!other.args.empty()) {
          replacement = other.args[static_cast<std::size_t>(rng.next_below(
              other.args.size()))];
        } else {
          replacement = old + 1;
        }
      }
    }
  }
  ev.args[slot] = replacement;
  return ev;
}

class NoisyAgent final : public Agent {
 public:
  explicit NoisyAgent(double p) : p_(p) {}
  std::string name() const override { return "noisy:" + std::to_string(p_); }

  ActionProposal act(const EpisodeContext& ctx, int rollout_index,
                     std::uint64_t step, std::uint64_t attempt) override {
    Rng rng(mix_seed(ctx.instance->seed, static_cast<std::uint64_t>(rollout_index),
                     step, attempt));
    ActionProposal p;
    const TraceEvent& canonical =
        ctx.canonical->events.at(static_cast<std::size_t>(step));
    if (rng.next_double() < p_) {
      p.event = corrupt_event(canonical, rng, *ctx.canonical);
      p.log_score = std::log(p_);
    } else {
      p.event = canonical;
      p.event.state.clear();
      p.log_score = std::log(1.0 - p_);
    }
    return p;
  }

  std::vector<ActionProposal> propose_topk(const EpisodeContext& ctx,
                                           int rollout_index, std::uint64_t step,
                                           int width) override {
    // Sampled action first, then the complementary candidate(s) by score.
    std::vector<ActionProposal> out;
    out.push_back(act(ctx, rollout_index, step, 0));
    if (width > 1) {
      const TraceEvent& canonical =
          ctx.canonical->events.at(static_cast<std::size_t>(step));
      if (out[0].event.same_action(canonical)) {
        Rng rng(mix_seed(ctx.instance->seed,
                         static_cast<std::uint64_t>(rollout_index), step, 1));
        ActionProposal alt;
        alt.event = corrupt_event(canonical, rng, *ctx.canonical);
        alt.log_score = std::log(p_);
        out.push_back(std::move(alt));
      } else {
        ActionProposal alt;
        alt.event = canonical;
        alt.event.state.clear();
        alt.log_score = std::log(1.0 - p_);
        out.push_back(std::move(alt));
      }
    }
    return out;
  }

 private:
  double p_;
};

}  // namespace

std::unique_ptr<Agent> make_oracle_agent() { return std::make_unique<OracleAgent>(); }
std::unique_ptr<Agent> make_noisy_agent(double p) {
  return std::make_unique<NoisyAgent>(p);
}

// --- Remote agent --------------------------------------------------------------------

json build_remote_request(const EpisodeContext& ctx, std::uint64_t step,
                          const std::string& prompt_template) {
  json req;
  req["protocol_version"] = kProtocolVersion;
  req["task"] = ctx.instance->task.canonical_name;
  req["instance_seed"] = ctx.instance->seed;
  json state;
  state["step"] = step;
  state["length"] = ctx.length();
  req["state"] = state;
  json tail = json::array();
  const std::uint64_t from = step > 4 ? step - 4 : 0;
  for (std::uint64_t i = from; i < step; ++i) {
    tail.push_back(ctx.canonical->events[static_cast<std::size_t>(i)].canonical());
  }
  req["history_tail"] = tail;
  json constraint_ids = json::array();
  for (const auto& c : step_constraints(ctx, step).constraints) {
    constraint_ids.push_back(c.id);
  }
  req["constraints"] = constraint_ids;
  req["rendered_prompt"] = render_template(
      prompt_template,
      {{"task_name", ctx.instance->task.canonical_name},
       {"formatted_input", ctx.instance->input.dump()},
       {"input_data", ctx.instance->input.dump()},
       {"step", std::to_string(step)}});
  return req;
}

namespace {

class RemoteAgent final : public Agent {
 public:
  RemoteAgent(RemoteOptions options, std::vector<std::string>* response_log)
      : options_(std::move(options)), response_log_(response_log) {
    // endpoint forms: http://host:port (path /act is fixed)
    std::string ep = options_.endpoint;
    const auto scheme = ep.find("://");
    if (scheme != std::string::npos) ep = ep.substr(scheme + 3);
    client_ = std::make_unique<httplib::Client>("http://" + ep);
    client_->set_read_timeout(options_.timeout_seconds, 0);
    client_->set_connection_timeout(options_.timeout_seconds, 0);
  }

  std::string name() const override { return "remote:" + options_.endpoint; }

  ActionProposal act(const EpisodeContext& ctx, int rollout_index,
                     std::uint64_t step, std::uint64_t attempt) override {
    json req = build_remote_request(ctx, step, options_.prompt_template);
    req["rollout_index"] = rollout_index;
    req["attempt"] = attempt;
    const auto res = client_->Post("/act", req.dump(), "application/json");
    if (!res || res->status != 200) {
      throw BudgetExhausted("remote agent transport failure at step " +
                            std::to_string(step));
    }
    std::string body = res->body;
    if (body.size() > options_.max_response_bytes) {
      body.resize(options_.max_response_bytes);
    }
    if (response_log_ != nullptr) response_log_->push_back(body);
    return parse_response(body);
  }

  static ActionProposal parse_response(const std::string& body) {
    const json res = json::parse(body);
    ActionProposal p;
    p.event = parse_event_canonical(res.at("action").get<std::string>());
    if (res.contains("log_score")) p.log_score = res.at("log_score").get<double>();
    return p;
  }

 private:
  RemoteOptions options_;
  std::vector<std::string>* response_log_;
  std::unique_ptr<httplib::Client> client_;
};

class ReplayAgent final : public Agent {
 public:
  explicit ReplayAgent(std::vector<std::string> responses)
      : responses_(std::move(responses)) {}
  std::string name() const override { return "replay"; }

  ActionProposal act(const EpisodeContext&, int, std::uint64_t, std::uint64_t) override {
    if (cursor_ >= responses_.size()) {
      throw BudgetExhausted("replay log exhausted");
    }
    return RemoteAgent::parse_response(responses_[cursor_++]);
  }

 private:
  std::vector<std::string> responses_;
  std::size_t cursor_ = 0;
};

}  // namespace

std::unique_ptr<Agent> make_remote_agent(RemoteOptions options,
                                         std::vector<std::string>* response_log) {
  return std::make_unique<RemoteAgent>(std::move(options), response_log);
}

std::unique_ptr<Agent> make_replay_agent(std::vector<std::string> recorded) {
  return std::make_unique<ReplayAgent>(std::move(recorded));
}

// --- Episode loop -----------------------------------------------------------------------

json Episode::to_json() const {
  json r;
  r["retries"] = retries;
  r["backtracks"] = backtracks;
  r["budget_exhausted"] = budget_exhausted;
  r["conformed"] = conformed;
  r["solution"] = solution;
  r["final_violation"] = final_violation;
  r["trajectory_length"] = trajectory_length;
  r["attempts"] = steps.size();
  return r;
}

namespace {

std::string wrong_solution_value(const EpisodeContext& ctx,
                                 const std::vector<TraceEvent>& applied) {
  // Sorting families replay swaps/writes literally so wrong answers are
  // real arrays; everywhere else the canonical serialization of the applied
  // stream identifies the (wrong) outcome.
  if (ctx.instance->task.category <= 3 && ctx.instance->input.contains("array")) {
    std::vector<std::int64_t> arr;
    for (const auto& v : ctx.instance->input.at("array")) {
      arr.push_back(v.get<std::int64_t>());
    }
    for (const auto& ev : applied) {
      if (ev.kind == "swap" && ev.args.size() == 2) {
        const auto i = static_cast<std::size_t>(ev.args[0]);
        const auto j = static_cast<std::size_t>(ev.args[1]);
        if (i < arr.size() && j < arr.size()) std::swap(arr[i], arr[j]);
      } else if (ev.kind == "write" && ev.args.size() == 2) {
        const auto i = static_cast<std::size_t>(ev.args[0]);
        if (i < arr.size()) arr[i] = ev.args[1];
      }
    }
    json out = json::array();
    for (auto v : arr) out.push_back(v);
    return out.dump();
  }
  Sha256 hash;
  for (const auto& ev : applied) hash.update(ev.canonical());
  return "{\"divergent\":\"" + hash.hex_digest().substr(0, 16) + "\"}";
}

void finalize_episode(Episode& episode, const EpisodeContext& ctx,
                      std::vector<TraceEvent> applied, bool complete) {
  episode.trajectory_length = applied.size();
  bool conformed = complete && applied.size() == ctx.canonical->events.size();
  if (conformed) {
    for (std::size_t i = 0; i < applied.size(); ++i) {
      if (!applied[i].same_action(ctx.canonical->events[i])) {
        conformed = false;
        break;
      }
    }
  }
  episode.conformed = conformed;
  episode.solution = conformed ? ctx.instance->reference_answer
                               : wrong_solution_value(ctx, applied);
  episode.final_violation =
      episode.solution == ctx.instance->reference_answer ? 0.0 : 1.0;
  episode.applied = std::move(applied);
}

}  // namespace

Episode run_episode(Agent& agent, const EpisodeContext& ctx, int rollout_index) {
  Episode episode;
  const std::uint64_t total = ctx.length();
  const std::uint64_t budget =
      std::max<std::uint64_t>(64, ctx.config.step_budget_factor * total);
  // Stack of verified positions; the top is the current state. Accepted
  // prefixes always equal the canonical prefix (conformance is verified),
  // so positions fully identify states.
  std::vector<std::uint64_t> stack = {0};
  std::vector<TraceEvent> applied;
  applied.reserve(static_cast<std::size_t>(total));
  std::uint64_t attempts = 0;
  std::uint64_t attempt_salt = 0;

  while (stack.back() < total) {
    const std::uint64_t k = stack.back();
    if (++attempts > budget) {
      episode.budget_exhausted = true;
      break;
    }
    ActionProposal proposal = agent.act(ctx, rollout_index, k, attempt_salt);
    double v = step_violation(ctx, k, proposal.event);
    Decision decision = coordinate(v, ctx.config);
    episode.steps.push_back({k, proposal.event, v, decision});

    if (decision == Decision::kRetry) {
      // Redraw up to retry_budget times; keep the best attempt.
      ActionProposal best = proposal;
      double best_v = v;
      for (int r = 0; r < ctx.config.retry_budget && best_v > 0; ++r) {
        ++attempt_salt;
        ++episode.retries;
        if (++attempts > budget) break;
        ActionProposal redraw = agent.act(ctx, rollout_index, k, attempt_salt);
        const double rv = step_violation(ctx, k, redraw.event);
        episode.steps.push_back({k, redraw.event, rv, coordinate(rv, ctx.config)});
        if (rv < best_v) {
          best_v = rv;
          best = std::move(redraw);
        }
      }
      if (best_v <= ctx.config.tau_soft) {
        proposal = std::move(best);
        v = best_v;
        decision = Decision::kProceed;  // accept: stacked states keep v <= tau_soft
      } else {
        decision = Decision::kBacktrack;
      }
    }

    if (decision == Decision::kProceed) {
      applied.resize(static_cast<std::size_t>(k));
      applied.push_back(proposal.event);
      applied.back().step = k;
      stack.push_back(k + 1);
      ++attempt_salt;
      continue;
    }
    // Backtrack: pop to the most recent valid state; an empty stack resets
    // to s0 and consumes a retry-equivalent.
    ++episode.backtracks;
    stack.pop_back();
    if (stack.empty()) {
      stack.push_back(0);
      ++episode.retries;
    }
    ++attempt_salt;
  }
  finalize_episode(episode, ctx, std::move(applied), stack.back() == total);
  return episode;
}

Episode greedy_execute(Agent& agent, const EpisodeContext& ctx, int rollout_index) {
  Episode episode;
  const std::uint64_t total = ctx.length();
  std::vector<TraceEvent> applied;
  applied.reserve(static_cast<std::size_t>(total));
  for (std::uint64_t k = 0; k < total; ++k) {
    ActionProposal p = agent.act(ctx, rollout_index, k, 0);
    episode.steps.push_back({k, p.event, 0.0, Decision::kProceed});
    applied.push_back(std::move(p.event));
    applied.back().step = k;
  }
  finalize_episode(episode, ctx, std::move(applied), true);
  return episode;
}

Episode beam_execute(Agent& agent, const EpisodeContext& ctx, int beam_width,
                     int branch_width) {
  if (beam_width < 1 || branch_width < 1) {
    throw std::invalid_argument("beam: widths must be >= 1");
  }
  struct Beam {
    double score = 0.0;
    std::vector<TraceEvent> applied;
  };
  const std::uint64_t total = ctx.length();
  std::vector<Beam> beams = {Beam{}};
  for (std::uint64_t k = 0; k < total; ++k) {
    std::vector<Beam> expanded;
    for (const auto& beam : beams) {
      const auto proposals =
          agent.propose_topk(ctx, /*rollout_index=*/0, k, branch_width);
      for (int c = 0; c < branch_width && c < static_cast<int>(proposals.size()); ++c) {
        Beam next = beam;
        next.score += proposals[static_cast<std::size_t>(c)].log_score;
        next.applied.push_back(proposals[static_cast<std::size_t>(c)].event);
        next.applied.back().step = k;
        expanded.push_back(std::move(next));
      }
    }
    std::stable_sort(expanded.begin(), expanded.end(),
                     [](const Beam& a, const Beam& b) { return a.score > b.score; });
    if (static_cast<int>(expanded.size()) > beam_width) {
      expanded.resize(static_cast<std::size_t>(beam_width));
    }
    beams = std::move(expanded);
  }
  Episode episode;
  finalize_episode(episode, ctx, std::move(beams.front().applied), true);
  for (std::uint64_t k = 0; k < total; ++k) {
    episode.steps.push_back(
        {k, episode.applied[static_cast<std::size_t>(k)], 0.0, Decision::kProceed});
  }
  return episode;
}

// --- Voting --------------------------------------------------------------------------------

namespace {

std::optional<double> parse_numeric(const std::string& s) {
  double value = 0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  const auto [p, ec] = std::from_chars(begin, end, value);
  if (ec == std::errc() && p == end) return value;
  return std::nullopt;
}

}  // namespace

std::string majority_vote(const std::vector<VoteEntry>& entries,
                          double epsilon_match) {
  if (entries.empty()) throw std::invalid_argument("vote: need >= 1 solution");
  // Numeric tolerance clustering only applies when every solution parses
  // as a number; discrete solutions use canonical string equality.
  std::vector<double> numeric;
  bool all_numeric = true;
  for (const auto& e : entries) {
    const auto v = parse_numeric(e.solution);
    if (!v) {
      all_numeric = false;
      break;
    }
    numeric.push_back(*v);
  }
  struct Group {
    int count = 0;
    double best_violation = 2.0;
    int earliest = INT32_MAX;
    std::size_t representative = 0;
  };
  std::vector<Group> groups;
  std::vector<int> group_of(entries.size(), -1);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    int g = -1;
    for (std::size_t j = 0; j < groups.size(); ++j) {
      const std::size_t rep = groups[j].representative;
      const bool same =
          all_numeric ? std::abs(numeric[i] - numeric[rep]) < epsilon_match
                      : entries[i].solution == entries[rep].solution;
      if (same) {
        g = static_cast<int>(j);
        break;
      }
    }
    if (g < 0) {
      groups.push_back({});
      g = static_cast<int>(groups.size()) - 1;
      groups[static_cast<std::size_t>(g)].representative = i;
    }
    auto& group = groups[static_cast<std::size_t>(g)];
    group.count += 1;
    group.best_violation = std::min(group.best_violation, entries[i].violation);
    group.earliest = std::min(group.earliest, entries[i].rollout_index);
    group_of[i] = g;
  }
  std::size_t best = 0;
  for (std::size_t j = 1; j < groups.size(); ++j) {
    const auto& a = groups[j];
    const auto& b = groups[best];
    if (a.count > b.count ||
        (a.count == b.count && (a.best_violation < b.best_violation ||
                                (a.best_violation == b.best_violation &&
                                 a.earliest < b.earliest)))) {
      best = j;
    }
  }
  return entries[groups[best].representative].solution;
}

double agreement(const std::vector<std::string>& solutions) {
  if (solutions.empty()) throw std::invalid_argument("agreement: need >= 1 solution");
  int best = 0;
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    int count = 0;
    for (const auto& s : solutions) {
      if (s == solutions[i]) ++count;
    }
    best = std::max(best, count);
  }
  return static_cast<double>(best) / static_cast<double>(solutions.size());
}

// --- Full protocol ----------------------------------------------------------------------------

ResultVerifier exact_result_verifier() {
  return [](const std::string& solution, const InstanceDescriptor& instance) {
    return solution == instance.reference_answer ? 0.0 : 1.0;
  };
}

ResultVerifier miss_rate_verifier(double beta, std::uint64_t seed) {
  auto rng = std::make_shared<Rng>(seed);
  return [beta, rng](const std::string& solution, const InstanceDescriptor& instance) {
    if (solution == instance.reference_answer) return 0.0;
    return rng->next_double() < beta ? 0.0 : 1.0;  // miss: wrong accepted
  };
}

PrimeResult run_prime(Agent& agent, const EpisodeContext& ctx,
                      const ResultVerifier& verifier) {
  PrimeResult result;
  double best_violation = 2.0;
  for (int k = 1; k <= ctx.config.max_iterations; ++k) {
    result.iterations_used = k;
    std::vector<VoteEntry> votes;
    std::vector<std::string> solutions;
    for (int g = 0; g < ctx.config.group_size; ++g) {
      const int rollout = (k - 1) * ctx.config.group_size + g;
      Episode ep = run_episode(agent, ctx, rollout);
      result.episodes_run += 1;
      result.total_retries += ep.retries;
      result.total_backtracks += ep.backtracks;
      result.total_steps += ep.trajectory_length;
      votes.push_back({ep.solution, ep.final_violation, rollout});
      solutions.push_back(ep.solution);
      if (ep.final_violation < best_violation) {
        best_violation = ep.final_violation;
        result.solution = ep.solution;
      }
      result.episodes.push_back(std::move(ep));
    }
    const std::string vote = majority_vote(votes, ctx.config.epsilon_match);
    result.vote_agreement = agreement(solutions);
    if (verifier(vote, *ctx.instance) == 0.0) {
      result.solution = vote;
      result.success = true;
      return result;
    }
  }
  // Fallback: minimum-violation candidate across all trajectories.
  result.success = verifier(result.solution, *ctx.instance) == 0.0 &&
                   result.solution == ctx.instance->reference_answer;
  return result;
}

AdaptiveControls adaptive_controls(double difficulty, double g_min, double g_max,
                                   double d0, double theta_c) {
  if (g_min > g_max) throw std::invalid_argument("adaptive: G_min > G_max");
  AdaptiveControls controls;
  const double sigmoid = 1.0 / (1.0 + std::exp(-(difficulty - d0)));
  controls.group_size = g_min + (g_max - g_min) * sigmoid;
  controls.early_stop = [theta_c](double agreement_score, bool verified) {
    return agreement_score >= theta_c && verified;
  };
  return controls;
}

double measure_false_accept(double beta, int k_rounds, int episodes,
                            std::uint64_t seed) {
  // Theorem harness: a wrong solution is accepted only when all K
  // independent verification rounds miss.
  Rng rng(seed);
  int accepted = 0;
  for (int e = 0; e < episodes; ++e) {
    bool all_missed = true;
    for (int k = 0; k < k_rounds; ++k) {
      if (rng.next_double() >= beta) {
        all_missed = false;
        // Remaining rounds still consume draws so the stream layout is
        // independent of outcomes.
      }
    }
    if (all_missed) ++accepted;
  }
  return static_cast<double>(accepted) / static_cast<double>(episodes);
}

}  // namespace prime
