#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "jlp/decisions.hpp"
#include "jlp/numcore.hpp"

using namespace jlp;
using namespace jlp::decisions;

namespace {

// closed form of the prior-averaged Type II rate: marginally
// Z ~ N(0, 1 + n g), so beta = Phi(c/s) - Phi(-c/s)
double beta_closed_form(double c, long n, double g) {
  const double s = std::sqrt(1.0 + n * g);
  return normal_cdf(c / s) - normal_cdf(-c / s);
}

// z with point-null-vs-N(0,g) Bayes factor equal to 1
double k1_root(long n, double g) {
  const double ng = static_cast<double>(n) * g;
  return std::sqrt((1.0 + ng) * std::log1p(ng) / ng);
}

}  // namespace

TEST_CASE("error rates") {
  const ErrorTradeoff at_195996 = error_rates(normal_quantile(0.975), 100, 1.0);
  CHECK(at_195996.alpha == doctest::Approx(0.05).epsilon(1e-10));

  // quadrature against the closed form
  for (double c : {0.5, 1.96, 3.0})
    for (long n : {10L, 100L, 1000L})
      CHECK(error_rates(c, n, 1.0).beta ==
            doctest::Approx(beta_closed_form(c, n, 1.0)).epsilon(1e-8));
  CHECK(error_rates(1.96, 100, 1.0).beta ==
        doctest::Approx(0.1546284159560623).epsilon(1e-8));

  // extreme c: alpha to 0, beta to 1
  const ErrorTradeoff wide = error_rates(8.0, 1, 1e-4);
  CHECK(wide.alpha < 1e-14);
  CHECK(wide.beta > 0.9999);

  // Monte Carlo oracle, 1e6 draws with its own generator
  {
    const double c = 1.96;
    const long n = 100;
    std::mt19937_64 rng(123456);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const long draws = 1000000;
    long retained = 0;
    for (long i = 0; i < draws; ++i) {
      const double delta = gauss(rng);
      const double z = delta * std::sqrt(static_cast<double>(n)) + gauss(rng);
      if (std::fabs(z) < c) ++retained;
    }
    const double beta_hat = static_cast<double>(retained) / draws;
    const double se = std::sqrt(beta_hat * (1.0 - beta_hat) / draws);
    CHECK(std::fabs(error_rates(c, n, 1.0).beta - beta_hat) <= 3.0 * se);
  }

  CHECK_THROWS_AS(error_rates(0.0, 10, 1.0), std::domain_error);
  CHECK_THROWS_AS(error_rates(1.0, 10, -1.0), std::domain_error);
}

TEST_CASE("weighted-error minimisation") {
  for (long n : {100L, 1000L, 10000L}) {
    const ErrorTradeoff best = minimize_weighted_errors(1.0, n, 1.0);
    CHECK(std::fabs(best.critical_value - k1_root(n, 1.0)) <= 0.1);
    CHECK(std::fabs(best.critical_value - k1_root(n, 1.0)) <= 1e-3);
    CHECK(best.lambda_set);

    // grid scan confirms the reported optimum before trusting it
    double grid_best = 1e9, grid_c = 0.0;
    for (double c = 0.05; c <= 10.0; c += 0.05) {
      const ErrorTradeoff e = error_rates(c, n, 1.0);
      if (e.alpha + e.beta < grid_best) {
        grid_best = e.alpha + e.beta;
        grid_c = c;
      }
    }
    CHECK(std::fabs(best.critical_value - grid_c) <= 0.06);
    CHECK(best.weighted_objective() <= grid_best + 1e-9);
  }

  // alpha(c) decreasing, beta(c) increasing
  double prev_alpha = 1.0, prev_beta = 0.0;
  for (double c = 0.5; c <= 5.0; c += 0.5) {
    const ErrorTradeoff e = error_rates(c, 100, 1.0);
    CHECK(e.alpha < prev_alpha);
    CHECK(e.beta > prev_beta);
    prev_alpha = e.alpha;
    prev_beta = e.beta;
  }

  CHECK(minimize_weighted_errors(1e-6, 100, 1.0).critical_value < 0.06);
  CHECK(minimize_weighted_errors(1e6, 100, 1.0).critical_value > 5.0);
  CHECK_THROWS_AS(minimize_weighted_errors(0.0, 100, 1.0), std::domain_error);
}

TEST_CASE("mistake counting is seeded and partition-independent") {
  TrialConfig config;
  config.n = 100;
  config.prior_variance_g = 1.0;
  config.prior_prob_h0 = 0.5;
  config.trials = 50000;
  config.seed = 42;

  const MistakeTally a = run_mistake_count(config, DecisionRule::fixed_alpha(0.05));
  const MistakeTally b = run_mistake_count(config, DecisionRule::fixed_alpha(0.05));
  CHECK(a.type1 == b.type1);
  CHECK(a.type2 == b.type2);
  CHECK(a.total == a.type1 + a.type2);
  CHECK(a.h0_true_trials == b.h0_true_trials);

  // empirical alpha near .05 within 3 binomial standard errors
  const double alpha_hat = static_cast<double>(a.type1) / a.h0_true_trials;
  const double se = std::sqrt(0.05 * 0.95 / a.h0_true_trials);
  CHECK(std::fabs(alpha_hat - 0.05) <= 3.0 * se);

  // empirical beta matches error_rates within 3 standard errors
  const long h1_trials = config.trials - a.h0_true_trials;
  const double beta_hat = static_cast<double>(a.type2) / h1_trials;
  const double beta_true = error_rates(normal_quantile(0.975), config.n, 1.0).beta;
  const double se_beta = std::sqrt(beta_true * (1.0 - beta_true) / h1_trials);
  CHECK(std::fabs(beta_hat - beta_true) <= 3.0 * se_beta);

  TrialConfig bad = config;
  bad.trials = 0;
  CHECK_THROWS_AS(run_mistake_count(bad, DecisionRule::fixed_alpha(0.05)), std::domain_error);
}

TEST_CASE("calibrated Bayes rule beats the fixed-alpha rule on total mistakes") {
  TrialConfig config;
  config.n = 1000;
  config.prior_variance_g = 1.0;
  config.prior_prob_h0 = 0.5;
  config.trials = 200000;
  config.seed = 7;

  const MistakeTally bf = run_mistake_count(config, DecisionRule::bf_threshold(1.0, 1.0));
  const MistakeTally fixed = run_mistake_count(config, DecisionRule::fixed_alpha(0.05));
  const double se = std::sqrt(static_cast<double>(fixed.total));
  CHECK(bf.total + 3.0 * se < fixed.total);

  // weighted rule with lambda = 1 lands on the same critical value family
  const MistakeTally weighted = run_mistake_count(config, DecisionRule::weighted(1.0));
  CHECK(std::fabs(static_cast<double>(weighted.total) - bf.total) <=
        3.0 * std::sqrt(static_cast<double>(bf.total)));
}

TEST_CASE("uniform-range H1 prior variant") {
  TrialConfig config;
  config.n = 100;
  config.prior_variance_g = 1.0;
  config.prior_prob_h0 = 0.5;
  config.trials = 20000;
  config.seed = 11;
  config.h1_prior = H1PriorKind::UniformRange;
  config.uniform_half_range = 2.0;
  const MistakeTally tally = run_mistake_count(config, DecisionRule::fixed_alpha(0.05));
  const double alpha_hat = static_cast<double>(tally.type1) / tally.h0_true_trials;
  CHECK(std::fabs(alpha_hat - 0.05) <= 3.0 * std::sqrt(0.05 * 0.95 / tally.h0_true_trials));
  CHECK(tally.total == tally.type1 + tally.type2);
}

TEST_CASE("alpha schedule decreases with n") {
  const auto schedule = pearson_alpha_schedule({10, 100, 1000, 10000}, 1.0);
  for (size_t i = 1; i < schedule.size(); ++i)
    CHECK(schedule[i].second <= schedule[i - 1].second);
  CHECK(schedule.front().second > schedule.back().second);

  // shared n values agree pointwise across calls
  const auto again = pearson_alpha_schedule({100, 1000}, 1.0);
  CHECK(again[0].second == schedule[1].second);
  CHECK(again[1].second == schedule[2].second);

  CHECK_THROWS_AS(pearson_alpha_schedule({}, 1.0), std::domain_error);
}
