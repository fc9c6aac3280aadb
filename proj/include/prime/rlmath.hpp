#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace prime {

struct GroupTooSmall : std::invalid_argument {
  GroupTooSmall() : std::invalid_argument("advantage group needs G >= 2") {}
};
struct NonPositiveRatio : std::invalid_argument {
  NonPositiveRatio() : std::invalid_argument("probability ratios must be > 0") {}
};

struct RewardWeights {
  double alpha = 10.0;   // task completion
  double beta = 1.0;     // verification penalty
  double gamma = 0.5;    // step efficiency
  double lambda = 0.1;   // format compliance
  std::uint64_t t_max = 1000;
};

// alpha*r_task + beta*(-V(s_T)) + gamma*max(0, 1 - |tau|/T_max) + lambda*r_format
double composite_reward(double r_task, double terminal_violation,
                        std::uint64_t trajectory_length, bool format_ok,
                        const RewardWeights& weights);

struct AdvantageGroup {
  std::vector<double> rewards;
  double mean = 0.0;
  double stddev = 0.0;  // population (divide-by-G)
  std::vector<double> advantages;
};

AdvantageGroup group_advantages(const std::vector<double>& rewards, double epsilon);

// Mean over tokens of min(rho*A, clip(rho, 1-eps, 1+eps)*A) - beta_kl*kl.
double grpo_surrogate(const std::vector<double>& ratios, double advantage,
                      double clip_epsilon, double kl_penalty, double kl_value);

struct Reliability {
  double exact;           // binomial tail, k >= ceil(G/2)
  double hoeffding_bound; // 1 - exp(-2G(p-0.5)^2) for p > 0.5, else 0
};
Reliability majority_reliability(double p, int group_size);

double false_accept_bound(double beta, int k_rounds);

std::uint64_t hanoi_optimal(int n);

// --- Toy bandit check for the advantage/surrogate math --------------------------

struct BanditSpec {
  int arms = 10;
  int best_arm = 0;
  double best_reward = 1.0;
  double other_reward = 0.0;
  int group_size = 8;
  double learning_rate = 0.1;
  double advantage_epsilon = 1e-8;
};

struct BanditResult {
  std::vector<double> final_policy;     // softmax probabilities
  double best_arm_probability = 0.0;
  std::vector<double> curve;            // best-arm probability every 100 updates
};

BanditResult toy_policy_check(const BanditSpec& spec, int updates, std::uint64_t seed);

// Surrogate objective over a tabular softmax policy for fixed sampled
// actions/advantages; exposed so tests can check the analytic gradient
// against finite differences.
double bandit_surrogate(const std::vector<double>& theta,
                        const std::vector<double>& theta_old,
                        const std::vector<int>& actions,
                        const std::vector<double>& advantages,
                        double clip_epsilon, double kl_penalty,
                        const std::vector<double>& theta_ref);

std::vector<double> bandit_surrogate_gradient(const std::vector<double>& theta,
                                              const std::vector<double>& theta_old,
                                              const std::vector<int>& actions,
                                              const std::vector<double>& advantages,
                                              double clip_epsilon, double kl_penalty,
                                              const std::vector<double>& theta_ref);

std::vector<double> softmax(const std::vector<double>& logits);

}  // namespace prime
