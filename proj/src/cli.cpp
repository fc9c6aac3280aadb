#include "prime/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "prime/digest.hpp"
#include "prime/exec.hpp"
#include "prime/io.hpp"
#include "prime/metrics.hpp"
#include "prime/oracles.hpp"
#include "prime/rlmath.hpp"
#include "prime/taskgen.hpp"
#include "prime/verify.hpp"

namespace prime {
namespace {

namespace fs = std::filesystem;

struct CommonOptions {
  std::uint64_t base_seed = kDefaultBaseSeed;
  std::string out_dir = "out";
  std::vector<std::string> tasks;  // names, or "all"
  int difficulty = -1;             // -1: all levels
};

std::vector<const TaskDriver*> select_tasks(const std::vector<std::string>& names) {
  const auto& registry = TaskRegistry::instance();
  std::vector<const TaskDriver*> selected;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    for (const auto& d : registry.all()) selected.push_back(&d);
    return selected;
  }
  for (const auto& name : names) {
    selected.push_back(&registry.by_name(name));
  }
  return selected;
}

std::string config_digest(const json& config) { return sha256_hex(config.dump()); }

// --- gen -------------------------------------------------------------------------

int cmd_gen(const CommonOptions& common) {
  fs::create_directories(common.out_dir);
  const auto tasks = select_tasks(common.tasks);
  const Calibration& cal = Calibration::pilot();
  cal.save((fs::path(common.out_dir) / "calibration.txt").string());

  json manifest;
  manifest["base_seed"] = common.base_seed;
  json files = json::object();
  std::uint64_t total = 0;

  // Suites are independent; generate them across a small worker pool.
  std::vector<std::pair<std::string, std::string>> digests(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex err_mutex;
  std::string first_error;
  const unsigned workers =
      std::max(1u, std::min(std::thread::hardware_concurrency(),
                            static_cast<unsigned>(tasks.size())));
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size() || failed.load()) return;
      try {
        const auto suite = generate_suite(tasks[i]->id, common.base_seed, cal);
        const std::string file_name =
            "instances_" + tasks[i]->id.canonical_name + ".jsonl";
        const std::string path = (fs::path(common.out_dir) / file_name).string();
        write_instances(path, suite);
        digests[i] = {file_name, sha256_hex(read_text_file(path))};
      } catch (const std::exception& e) {
        failed.store(true);
        std::lock_guard<std::mutex> lock(err_mutex);
        if (first_error.empty()) first_error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failed.load()) {
    std::cerr << "gen failed: " << first_error << "\n";
    return 2;
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    files[digests[i].first] = digests[i].second;
    total += 600;
  }
  manifest["files"] = files;
  manifest["total_instances"] = total;
  manifest["tasks"] = tasks.size();
  const std::string manifest_text = manifest.dump(2) + "\n";
  write_text_file((fs::path(common.out_dir) / "manifest.json").string(), manifest_text);
  std::cout << "generated " << total << " instances across " << tasks.size()
            << " tasks\nmanifest digest: " << sha256_hex(manifest_text) << "\n";
  return 0;
}

// --- trace -----------------------------------------------------------------------

int cmd_trace(const std::string& instances_path, const std::string& out_dir,
              int limit) {
  fs::create_directories(out_dir);
  const auto instances = read_instances(instances_path);
  int written = 0;
  for (const auto& inst : instances) {
    if (limit >= 0 && written >= limit) break;
    ExecutionTrace trace = execute_reference(inst);
    if (trace.digest() != inst.reference_trace_digest) {
      std::cerr << "digest mismatch for " << inst.task.canonical_name << " seed "
                << inst.seed << "\n";
      return 2;
    }
    const ViolationReport report = verify_trace(trace, inst);
    if (!report.passed) {
      std::cerr << "self-verification failed for seed " << inst.seed << "\n";
      return 2;
    }
    const std::string name = "trace_" + inst.task.canonical_name + "_" +
                             difficulty_name(inst.difficulty) + "_" +
                             std::to_string(inst.index) + ".jsonl";
    write_trace((fs::path(out_dir) / name).string(), trace);
    ++written;
  }
  std::cout << "wrote " << written << " traces\n";
  return 0;
}

// --- verify ----------------------------------------------------------------------

int cmd_verify(const std::string& trace_path, const std::string& instances_path) {
  const auto instances = read_instances(instances_path);
  const std::string text = read_text_file(trace_path);
  ExecutionTrace candidate;
  try {
    candidate = read_trace_text(text);
  } catch (const std::exception& e) {
    json out;
    out["stage"] = "format";
    out["passed"] = false;
    out["error"] = e.what();
    std::cout << out.dump() << "\n";
    return 2;
  }
  for (const auto& inst : instances) {
    if (inst.seed == candidate.seed) {
      const ViolationReport report = verify_trace(candidate, inst);
      std::cout << report.to_json().dump() << "\n";
      return report.passed ? 0 : 2;
    }
  }
  std::cerr << "no instance with seed " << candidate.seed << " in "
            << instances_path << "\n";
  return 3;
}

// --- eval ------------------------------------------------------------------------

struct EvalOptions {
  CommonOptions common;
  std::vector<std::string> instance_files;
  std::string agent = "oracle";  // oracle | noisy:p | remote:url
  std::string mode = "prime";    // prime | greedy | beam:B
  CoordinatorConfig coordinator;
  int limit_per_file = -1;
  std::string endpoint;  // remote endpoint override
  int timeout_seconds = 120;
  int jobs = 0;
  std::string prompt_dir = "assets/prompts";
};

std::unique_ptr<Agent> build_agent(const EvalOptions& options,
                                   std::vector<std::string>* response_log) {
  const std::string& spec = options.agent;
  if (spec == "oracle") return make_oracle_agent();
  if (spec.rfind("noisy:", 0) == 0) {
    return make_noisy_agent(std::stod(spec.substr(6)));
  }
  if (spec.rfind("remote", 0) == 0) {
    RemoteOptions remote;
    remote.endpoint = options.endpoint;
    if (spec.rfind("remote:", 0) == 0) remote.endpoint = spec.substr(7);
    if (remote.endpoint.empty()) {
      if (const char* env = std::getenv(kEndpointEnvVar)) remote.endpoint = env;
    }
    if (remote.endpoint.empty()) {
      throw std::invalid_argument("remote agent needs --endpoint or $" +
                                  std::string(kEndpointEnvVar));
    }
    remote.timeout_seconds = options.timeout_seconds;
    const fs::path prompt_path = fs::path(options.prompt_dir) / "prime.txt";
    if (fs::exists(prompt_path)) {
      remote.prompt_template = read_text_file(prompt_path.string());
    }
    return make_remote_agent(remote, response_log);
  }
  throw std::invalid_argument("unknown agent spec: " + spec);
}

json eval_one(const InstanceDescriptor& inst, const EvalOptions& options,
              const std::string& digest, InstanceResult& metrics_row) {
  std::vector<std::string> response_log;
  auto agent = build_agent(options, &response_log);
  EpisodeContext ctx = make_context(inst, options.coordinator);

  Episode episode;
  PrimeResult prime;
  bool used_prime = false;
  if (options.mode == "prime") {
    prime = run_prime(*agent, ctx);
    used_prime = true;
    // Representative episode: the first one whose solution was returned.
    episode = prime.episodes.front();
    for (const auto& ep : prime.episodes) {
      if (ep.solution == prime.solution) {
        episode = ep;
        break;
      }
    }
  } else if (options.mode == "greedy") {
    episode = greedy_execute(*agent, ctx);
  } else if (options.mode.rfind("beam:", 0) == 0) {
    episode = beam_execute(*agent, ctx, std::stoi(options.mode.substr(5)), 2);
  } else {
    throw std::invalid_argument("unknown mode: " + options.mode);
  }

  const std::string solution = used_prime ? prime.solution : episode.solution;
  const bool correct = solution == inst.reference_answer;

  ExecutionTrace candidate;
  candidate.task_name = inst.task.canonical_name;
  candidate.seed = inst.seed;
  candidate.events = episode.applied;
  candidate.final_state = episode.solution;

  RewardWeights weights;
  weights.t_max = std::max<std::uint64_t>(1, 2 * ctx.length());
  const double reward =
      composite_reward(correct ? 1.0 : 0.0, episode.final_violation,
                       episode.trajectory_length, episode.format_ok, weights);

  metrics_row.task = inst.task.canonical_name;
  metrics_row.category = inst.task.category;
  metrics_row.difficulty = static_cast<int>(inst.difficulty);
  metrics_row.correct = correct;
  metrics_row.partial = partial_credit(candidate, *ctx.canonical);
  metrics_row.retries = used_prime ? prime.total_retries : episode.retries;
  metrics_row.backtracks = used_prime ? prime.total_backtracks : episode.backtracks;
  metrics_row.steps = episode.trajectory_length;
  metrics_row.reference_steps = ctx.length();
  metrics_row.reward = reward;

  json record;
  record["task"] = inst.task.canonical_name;
  record["category"] = inst.task.category;
  record["difficulty"] = static_cast<int>(inst.difficulty);
  record["index"] = inst.index;
  record["seed"] = inst.seed;
  record["config_digest"] = digest;
  record["agent"] = agent->name();
  record["mode"] = options.mode;
  record["correct"] = correct;
  record["solution"] = solution;
  record["retries"] = metrics_row.retries;
  record["backtracks"] = metrics_row.backtracks;
  record["steps"] = episode.trajectory_length;
  record["reference_steps"] = ctx.length();
  record["partial_credit"] = metrics_row.partial;
  record["reward"] = reward;
  if (used_prime) {
    record["iterations_used"] = prime.iterations_used;
    record["vote_agreement"] = prime.vote_agreement;
  }
  if (!correct && !episode.applied.empty()) {
    try {
      const ErrorClassification cls = classify_error(candidate, *ctx.canonical);
      record["classification"] = cls.to_json();
      metrics_row.error_type = error_type_name(cls.type);
      metrics_row.severity = severity_name(cls.severity);
    } catch (const IdenticalTraces&) {
    }
  } else if (!correct) {
    metrics_row.error_type = "termination";
    metrics_row.severity = "critical";
    record["classification"] =
        json{{"type", "termination"}, {"severity", "critical"}};
  }
  if (!response_log.empty()) record["responses"] = response_log;
  return record;
}

int cmd_eval(const EvalOptions& options) {
  fs::create_directories(options.common.out_dir);
  std::vector<InstanceDescriptor> instances;
  for (const auto& file : options.instance_files) {
    auto batch = read_instances(file);
    int taken = 0;
    for (auto& inst : batch) {
      if (options.common.difficulty >= 0 &&
          static_cast<int>(inst.difficulty) != options.common.difficulty) {
        continue;
      }
      if (options.limit_per_file >= 0 && taken >= options.limit_per_file) break;
      instances.push_back(std::move(inst));
      ++taken;
    }
  }
  if (instances.empty()) {
    std::cerr << "no instances selected\n";
    return 3;
  }
  json config;
  config["agent"] = options.agent;
  config["mode"] = options.mode;
  config["K"] = options.coordinator.max_iterations;
  config["G"] = options.coordinator.group_size;
  config["tau"] = options.coordinator.tau_soft;
  config["base_seed"] = options.common.base_seed;
  const std::string digest = config_digest(config);

  std::vector<json> records(instances.size());
  std::vector<InstanceResult> rows(instances.size());
  std::vector<char> ok(instances.size(), 1);
  std::atomic<std::size_t> cursor{0};
  const unsigned workers =
      options.jobs > 0
          ? static_cast<unsigned>(options.jobs)
          : std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  auto work = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= instances.size()) return;
      try {
        records[i] = eval_one(instances[i], options, digest, rows[i]);
      } catch (const std::exception& e) {
        ok[i] = 0;
        json record;
        record["task"] = instances[i].task.canonical_name;
        record["seed"] = instances[i].seed;
        record["error"] = e.what();
        record["correct"] = false;
        records[i] = record;
        rows[i].task = instances[i].task.canonical_name;
        rows[i].category = instances[i].task.category;
        rows[i].correct = false;
        rows[i].error_type = "format";
        rows[i].severity = "critical";
        rows[i].reference_steps = 1;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  // Result lines ordered by instance position regardless of completion order.
  std::ofstream out(fs::path(options.common.out_dir) / "results.jsonl",
                    std::ios::binary);
  for (const auto& record : records) out << record.dump() << "\n";
  out.close();

  json metadata;
  metadata["config_digest"] = digest;
  metadata["config"] = config;
  const EvalReport report = build_report(rows, metadata);
  write_text_file((fs::path(options.common.out_dir) / "report.csv").string(),
                  report.to_csv());
  write_text_file((fs::path(options.common.out_dir) / "report.txt").string(),
                  report.to_text());
  std::cout << report.to_text();

  const bool partial = std::count(ok.begin(), ok.end(), 0) > 0;
  return partial ? 2 : 0;
}

// --- report ----------------------------------------------------------------------

int cmd_report(const std::string& results_path, const std::string& out_dir) {
  fs::create_directories(out_dir);
  std::ifstream in(results_path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << results_path << "\n";
    return 3;
  }
  std::vector<InstanceResult> rows;
  std::string line;
  json metadata;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const std::exception& e) {
      std::cerr << "schema mismatch: " << e.what() << "\n";
      return 3;
    }
    InstanceResult row;
    row.task = record.value("task", "?");
    row.category = record.value("category", 0);
    row.difficulty = record.value("difficulty", 0);
    row.correct = record.value("correct", false);
    row.partial = record.value("partial_credit", 0.0);
    row.retries = record.value("retries", 0);
    row.backtracks = record.value("backtracks", 0);
    row.steps = record.value("steps", std::uint64_t{0});
    row.reference_steps = record.value("reference_steps", std::uint64_t{1});
    row.reward = record.value("reward", 0.0);
    if (record.contains("classification")) {
      row.error_type = record["classification"].value("type", "");
      row.severity = record["classification"].value("severity", "");
    }
    rows.push_back(std::move(row));
    if (metadata.empty() && record.contains("config_digest")) {
      metadata["config_digest"] = record["config_digest"];
    }
  }
  if (rows.empty()) {
    std::cout << "no results\n";
    return 2;
  }
  const EvalReport report = build_report(rows, metadata);
  write_text_file((fs::path(out_dir) / "report.csv").string(), report.to_csv());
  write_text_file((fs::path(out_dir) / "report.txt").string(), report.to_text());
  std::cout << report.to_text();
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("primebench");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"deterministic algorithmic benchmark engine and execution harness"};
  app.set_config("--config", "", "ini config file; flags override file values");

  CommonOptions common;
  EvalOptions eval;

  auto* gen = app.add_subcommand("gen", "generate seeded instance suites");
  gen->add_option("--task", common.tasks, "task names or 'all'");
  gen->add_flag_callback("--all", [&] { common.tasks = {"all"}; });
  gen->add_option("--base-seed", common.base_seed, "base seed (default 42)");
  gen->add_option("--out", common.out_dir, "output directory");

  std::string instances_path;
  std::string trace_out = "traces";
  int trace_limit = -1;
  auto* trace = app.add_subcommand("trace", "emit reference traces");
  trace->add_option("--instances", instances_path, "instance file")->required();
  trace->add_option("--out", trace_out, "output directory");
  trace->add_option("--limit", trace_limit, "max traces to write");

  std::string verify_trace_path, verify_instances_path;
  auto* verify = app.add_subcommand("verify", "verify a candidate trace");
  verify->add_option("--trace", verify_trace_path, "candidate trace file")->required();
  verify->add_option("--instances", verify_instances_path, "instance file")->required();

  auto* evalc = app.add_subcommand("eval", "run agents through the protocol");
  evalc->add_option("--instances", eval.instance_files, "instance files")->required();
  evalc->add_option("--agent", eval.agent, "oracle | noisy:p | remote[:url]");
  evalc->add_option("--mode", eval.mode, "prime | greedy | beam:B");
  evalc->add_option("--K", eval.coordinator.max_iterations, "max iterations");
  evalc->add_option("--G", eval.coordinator.group_size, "group size");
  double tau = 0.3;
  evalc->add_option("--tau", tau, "violation threshold");
  evalc->add_option("--difficulty", eval.common.difficulty, "0 easy, 1 medium, 2 hard");
  evalc->add_option("--limit", eval.limit_per_file, "instances per file");
  evalc->add_option("--out", eval.common.out_dir, "output directory");
  evalc->add_option("--endpoint", eval.endpoint, "remote agent endpoint");
  evalc->add_option("--timeout", eval.timeout_seconds, "remote timeout seconds");
  evalc->add_option("--jobs", eval.jobs, "worker threads");
  evalc->add_option("--prompts", eval.prompt_dir, "prompt template directory");

  std::string results_path, report_out = "report";
  auto* report = app.add_subcommand("report", "render reports from results");
  report->add_option("--results", results_path, "results.jsonl")->required();
  report->add_option("--out", report_out, "output directory");

  app.require_subcommand(1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (gen->parsed()) return cmd_gen(common);
    if (trace->parsed()) return cmd_trace(instances_path, trace_out, trace_limit);
    if (verify->parsed()) return cmd_verify(verify_trace_path, verify_instances_path);
    if (evalc->parsed()) {
      eval.coordinator.tau_soft = tau;
      eval.coordinator.tau_hard = tau;
      return cmd_eval(eval);
    }
    if (report->parsed()) return cmd_report(results_path, report_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 3;
}

}  // namespace prime
