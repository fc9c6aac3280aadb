#include "prime/rlmath.hpp"

#include <algorithm>
#include <cmath>

#include "prime/rng.hpp"

namespace prime {

double composite_reward(double r_task, double terminal_violation,
                        std::uint64_t trajectory_length, bool format_ok,
                        const RewardWeights& weights) {
  const double efficiency =
      std::max(0.0, 1.0 - static_cast<double>(trajectory_length) /
                              static_cast<double>(weights.t_max));
  return weights.alpha * r_task + weights.beta * (-terminal_violation) +
         weights.gamma * efficiency + weights.lambda * (format_ok ? 1.0 : 0.0);
}

AdvantageGroup group_advantages(const std::vector<double>& rewards, double epsilon) {
  if (rewards.size() < 2) throw GroupTooSmall();
  AdvantageGroup group;
  group.rewards = rewards;
  const double n = static_cast<double>(rewards.size());
  for (double r : rewards) group.mean += r;
  group.mean /= n;
  double variance = 0;
  for (double r : rewards) variance += (r - group.mean) * (r - group.mean);
  variance /= n;  // population std: sum A_g^2 = G identity depends on it
  group.stddev = std::sqrt(variance);
  group.advantages.reserve(rewards.size());
  for (double r : rewards) {
    group.advantages.push_back((r - group.mean) / (group.stddev + epsilon));
  }
  return group;
}

double grpo_surrogate(const std::vector<double>& ratios, double advantage,
                      double clip_epsilon, double kl_penalty, double kl_value) {
  if (ratios.empty()) throw std::invalid_argument("surrogate: need >= 1 ratio");
  double sum = 0;
  for (double rho : ratios) {
    if (rho <= 0) throw NonPositiveRatio();
    const double clipped =
        std::clamp(rho, 1.0 - clip_epsilon, 1.0 + clip_epsilon);
    sum += std::min(rho * advantage, clipped * advantage);
  }
  return sum / static_cast<double>(ratios.size()) - kl_penalty * kl_value;
}

Reliability majority_reliability(double p, int group_size) {
  if (p < 0 || p > 1 || group_size < 1) {
    throw std::invalid_argument("majority_reliability: bad arguments");
  }
  const int threshold = (group_size + 1) / 2;  // ceil(G/2)
  double exact = 0;
  for (int k = threshold; k <= group_size; ++k) {
    if (p == 0.0) continue;
    if (p == 1.0) {
      exact += k == group_size ? 1.0 : 0.0;
      continue;
    }
    const double log_term = std::lgamma(group_size + 1) - std::lgamma(k + 1) -
                            std::lgamma(group_size - k + 1) +
                            k * std::log(p) + (group_size - k) * std::log1p(-p);
    exact += std::exp(log_term);
  }
  if (p == 1.0) exact = 1.0;
  exact = std::min(exact, 1.0);
  Reliability rel;
  rel.exact = exact;
  rel.hoeffding_bound =
      p > 0.5 ? 1.0 - std::exp(-2.0 * group_size * (p - 0.5) * (p - 0.5)) : 0.0;
  return rel;
}

double false_accept_bound(double beta, int k_rounds) {
  if (beta < 0 || beta > 1 || k_rounds < 1) {
    throw std::invalid_argument("false_accept_bound: bad arguments");
  }
  return std::pow(beta, k_rounds);
}

std::uint64_t hanoi_optimal(int n) {
  if (n < 1 || n > 63) throw std::invalid_argument("hanoi_optimal: n in [1, 63]");
  return (1ull << static_cast<unsigned>(n)) - 1;
}

std::vector<double> softmax(const std::vector<double>& logits) {
  const double peak = *std::max_element(logits.begin(), logits.end());
  std::vector<double> out(logits.size());
  double total = 0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - peak);
    total += out[i];
  }
  for (auto& v : out) v /= total;
  return out;
}

double bandit_surrogate(const std::vector<double>& theta,
                        const std::vector<double>& theta_old,
                        const std::vector<int>& actions,
                        const std::vector<double>& advantages,
                        double clip_epsilon, double kl_penalty,
                        const std::vector<double>& theta_ref) {
  const auto pi = softmax(theta);
  const auto pi_old = softmax(theta_old);
  const auto pi_ref = softmax(theta_ref);
  double sum = 0;
  for (std::size_t g = 0; g < actions.size(); ++g) {
    const auto a = static_cast<std::size_t>(actions[g]);
    const double rho = pi[a] / pi_old[a];
    const double clipped = std::clamp(rho, 1.0 - clip_epsilon, 1.0 + clip_epsilon);
    sum += std::min(rho * advantages[g], clipped * advantages[g]);
  }
  sum /= static_cast<double>(actions.size());
  double kl = 0;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    kl += pi[i] * (std::log(pi[i]) - std::log(pi_ref[i]));
  }
  return sum - kl_penalty * kl;
}

std::vector<double> bandit_surrogate_gradient(const std::vector<double>& theta,
                                              const std::vector<double>& theta_old,
                                              const std::vector<int>& actions,
                                              const std::vector<double>& advantages,
                                              double clip_epsilon, double kl_penalty,
                                              const std::vector<double>& theta_ref) {
  const auto pi = softmax(theta);
  const auto pi_old = softmax(theta_old);
  const auto pi_ref = softmax(theta_ref);
  std::vector<double> grad(theta.size(), 0.0);
  const double inv_g = 1.0 / static_cast<double>(actions.size());
  for (std::size_t g = 0; g < actions.size(); ++g) {
    const auto a = static_cast<std::size_t>(actions[g]);
    const double rho = pi[a] / pi_old[a];
    const double adv = advantages[g];
    // d/d rho of min(rho*A, clip(rho)*A): the unclipped branch is active
    // when rho <= 1+eps for positive A and rho >= 1-eps for negative A.
    double dmin_drho = 0;
    if (adv > 0 && rho <= 1.0 + clip_epsilon) dmin_drho = adv;
    if (adv < 0 && rho >= 1.0 - clip_epsilon) dmin_drho = adv;
    if (dmin_drho == 0) continue;
    // d rho / d theta_j = rho * (delta_{aj} - pi_j)
    for (std::size_t j = 0; j < theta.size(); ++j) {
      const double dlogpi = (j == a ? 1.0 : 0.0) - pi[j];
      grad[j] += inv_g * dmin_drho * rho * dlogpi;
    }
  }
  // d KL / d theta_j = pi_j * ((log pi_j - log ref_j) - KL)
  double kl = 0;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    kl += pi[i] * (std::log(pi[i]) - std::log(pi_ref[i]));
  }
  for (std::size_t j = 0; j < theta.size(); ++j) {
    const double term = std::log(pi[j]) - std::log(pi_ref[j]);
    grad[j] -= kl_penalty * pi[j] * (term - kl);
  }
  return grad;
}

BanditResult toy_policy_check(const BanditSpec& spec, int updates,
                              std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> theta(static_cast<std::size_t>(spec.arms), 0.0);
  BanditResult result;
  for (int step = 0; step < updates; ++step) {
    const auto pi = softmax(theta);
    std::vector<int> actions;
    std::vector<double> rewards;
    for (int g = 0; g < spec.group_size; ++g) {
      const double u = rng.next_double();
      double acc = 0;
      int arm = spec.arms - 1;
      for (int i = 0; i < spec.arms; ++i) {
        acc += pi[static_cast<std::size_t>(i)];
        if (u < acc) {
          arm = i;
          break;
        }
      }
      actions.push_back(arm);
      rewards.push_back(arm == spec.best_arm ? spec.best_reward : spec.other_reward);
    }
    const auto group = group_advantages(rewards, spec.advantage_epsilon);
    // One policy-gradient step of the surrogate at theta_old = theta
    // (all ratios 1, clip inactive).
    for (int g = 0; g < spec.group_size; ++g) {
      const auto a = static_cast<std::size_t>(actions[static_cast<std::size_t>(g)]);
      const double adv = group.advantages[static_cast<std::size_t>(g)];
      for (std::size_t j = 0; j < theta.size(); ++j) {
        const double dlogpi = (j == a ? 1.0 : 0.0) - pi[j];
        theta[j] += spec.learning_rate * adv * dlogpi /
                    static_cast<double>(spec.group_size);
      }
    }
    if (step % 100 == 0) {
      result.curve.push_back(softmax(theta)[static_cast<std::size_t>(spec.best_arm)]);
    }
  }
  result.final_policy = softmax(theta);
  result.best_arm_probability =
      result.final_policy[static_cast<std::size_t>(spec.best_arm)];
  return result;
}

}  // namespace prime
