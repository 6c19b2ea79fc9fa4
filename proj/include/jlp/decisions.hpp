#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace jlp::decisions {

// Two-sided z rule |z| > c with its error rates. alpha is the Type I
// rate 2(1 - Phi(c)); beta the Type II rate averaged over the H1 prior
// delta ~ N(0, g). lambda is NaN until a weighted objective applies.
struct ErrorTradeoff {
  double critical_value = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double lambda = 0.0;
  bool lambda_set = false;

  double weighted_objective() const { return lambda * alpha + beta; }
};

ErrorTradeoff error_rates(double c, long n, double g);

// c* minimising lambda * alpha(c) + beta(c): coarse grid scan over
// (0, 10] followed by golden-section refinement to 1e-6 in c.
ErrorTradeoff minimize_weighted_errors(double lambda, long n, double g);

enum class H1PriorKind { Normal, UniformRange };

struct TrialConfig {
  long n = 1;
  double prior_variance_g = 1.0;
  double prior_prob_h0 = 0.5;
  long trials = 1;
  std::uint64_t seed = 0;
  H1PriorKind h1_prior = H1PriorKind::Normal;
  double uniform_half_range = 1.0;  // delta ~ U(-range, range) when UniformRange

  void validate() const;
};

struct DecisionRule {
  enum class Kind { FixedAlpha, BfThreshold, Weighted } kind = Kind::FixedAlpha;
  double alpha = 0.05;     // FixedAlpha
  double k_crit = 1.0;     // BfThreshold: retain H0 iff BF01 >= k_crit
  double g_model = 1.0;    // BfThreshold: analyst's prior variance
  double lambda = 1.0;     // Weighted

  static DecisionRule fixed_alpha(double a);
  static DecisionRule bf_threshold(double k_crit, double g_model);
  static DecisionRule weighted(double lambda);
};

struct MistakeTally {
  long type1 = 0;  // rejected H0 while H0 was true
  long type2 = 0;  // retained H0 while H1 was true
  long total = 0;
  long h0_true_trials = 0;
  long trials = 0;
};

// Seeded Monte Carlo: per trial draw the hypothesis, draw delta, draw
// z ~ N(delta sqrt(n), 1), apply the rule, tally mistakes. Each trial's
// randomness is a SplitMix64 substream keyed by (seed, trial index), so
// the tally is independent of any execution partitioning.
MistakeTally run_mistake_count(const TrialConfig& config, const DecisionRule& rule);

// alpha* = 2(1 - Phi(c*)) at the lambda = 1 optimum, per n.
std::vector<std::pair<long, double>> pearson_alpha_schedule(
    const std::vector<long>& n_grid, double g);

}  // namespace jlp::decisions
