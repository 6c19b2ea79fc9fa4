#include "jlp/decisions.hpp"

#include <cmath>
#include <stdexcept>

#include "jlp/gaussian.hpp"
#include "jlp/numcore.hpp"

namespace jlp::decisions {

namespace {

double type2_rate(double c, long n, double g) {
  // P(|Z| < c) with Z ~ N(delta sqrt(n), 1), delta ~ N(0, g); the
  // integrand is even in delta.
  const double root_n = std::sqrt(static_cast<double>(n));
  const double inv_root_g = 1.0 / std::sqrt(g);
  auto f = [&](double delta) {
    const double shift = delta * root_n;
    const double retain = normal_cdf(c - shift) - normal_cdf(-c - shift);
    return retain * normal_pdf(delta * inv_root_g) * inv_root_g;
  };
  QuadratureOptions opts;
  opts.abs_tol = 1e-12;
  opts.rel_tol = 1e-10;
  return 2.0 * integrate(f, Interval::from(0.0), opts).value;
}

}  // namespace

ErrorTradeoff error_rates(double c, long n, double g) {
  if (!(c > 0.0)) throw std::domain_error("error_rates: requires c > 0");
  if (n < 1) throw std::domain_error("error_rates: needs n >= 1");
  if (!(g > 0.0)) throw std::domain_error("error_rates: requires g > 0");
  ErrorTradeoff tradeoff;
  tradeoff.critical_value = c;
  tradeoff.alpha = 2.0 * (1.0 - normal_cdf(c));
  tradeoff.beta = type2_rate(c, n, g);
  return tradeoff;
}

ErrorTradeoff minimize_weighted_errors(double lambda, long n, double g) {
  if (!(lambda > 0.0))
    throw std::domain_error("minimize_weighted_errors: requires lambda > 0");
  auto objective = [&](double c) {
    return lambda * 2.0 * (1.0 - normal_cdf(c)) + type2_rate(c, n, g);
  };
  // coarse scan over (0, 10], then golden-section on the winning cell
  constexpr int kGrid = 400;
  double best_c = 10.0 / kGrid;
  double best_v = objective(best_c);
  for (int i = 2; i <= kGrid; ++i) {
    const double c = 10.0 * i / kGrid;
    const double v = objective(c);
    if (v < best_v) {
      best_v = v;
      best_c = c;
    }
  }
  const double step = 10.0 / kGrid;
  double a = std::max(1e-9, best_c - step);
  double b = best_c + step;
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (b - a > 1e-6) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = objective(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = objective(x2);
    }
  }
  ErrorTradeoff tradeoff = error_rates(0.5 * (a + b), n, g);
  tradeoff.lambda = lambda;
  tradeoff.lambda_set = true;
  return tradeoff;
}

void TrialConfig::validate() const {
  if (n < 1) throw std::domain_error("TrialConfig: needs n >= 1");
  if (!(prior_variance_g > 0.0))
    throw std::domain_error("TrialConfig: prior variance must be positive");
  if (!(prior_prob_h0 > 0.0 && prior_prob_h0 < 1.0))
    throw std::domain_error("TrialConfig: prior probability must lie in (0,1)");
  if (trials < 1) throw std::domain_error("TrialConfig: needs trials >= 1");
  if (h1_prior == H1PriorKind::UniformRange && !(uniform_half_range > 0.0))
    throw std::domain_error("TrialConfig: uniform half-range must be positive");
}

DecisionRule DecisionRule::fixed_alpha(double a) {
  if (!(a > 0.0 && a < 1.0))
    throw std::domain_error("DecisionRule: alpha must lie in (0,1)");
  DecisionRule rule;
  rule.kind = Kind::FixedAlpha;
  rule.alpha = a;
  return rule;
}

DecisionRule DecisionRule::bf_threshold(double k_crit, double g_model) {
  if (!(k_crit > 0.0)) throw std::domain_error("DecisionRule: K threshold must be positive");
  if (!(g_model > 0.0)) throw std::domain_error("DecisionRule: model variance must be positive");
  DecisionRule rule;
  rule.kind = Kind::BfThreshold;
  rule.k_crit = k_crit;
  rule.g_model = g_model;
  return rule;
}

DecisionRule DecisionRule::weighted(double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("DecisionRule: lambda must be positive");
  DecisionRule rule;
  rule.kind = Kind::Weighted;
  rule.lambda = lambda;
  return rule;
}

namespace {

// SplitMix64; the per-trial stream key is seed + (index+1) * golden gamma,
// which is exactly the generator's own stream increment.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t s) : state(s) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in the open interval (0, 1)
  double next_open01() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }
};

}  // namespace

MistakeTally run_mistake_count(const TrialConfig& config, const DecisionRule& rule) {
  config.validate();
  const double root_n = std::sqrt(static_cast<double>(config.n));
  const double root_g = std::sqrt(config.prior_variance_g);

  double z_crit = 0.0;
  switch (rule.kind) {
    case DecisionRule::Kind::FixedAlpha:
      z_crit = normal_quantile(1.0 - 0.5 * rule.alpha);
      break;
    case DecisionRule::Kind::BfThreshold:
      break;  // evaluated per draw
    case DecisionRule::Kind::Weighted:
      z_crit = minimize_weighted_errors(rule.lambda, config.n, config.prior_variance_g)
                   .critical_value;
      break;
  }

  MistakeTally tally;
  tally.trials = config.trials;
  const double log_k_crit = std::log(rule.k_crit);
  for (long i = 0; i < config.trials; ++i) {
    SplitMix64 rng(config.seed + static_cast<std::uint64_t>(i + 1) * 0x9E3779B97F4A7C15ULL);
    const bool h0_true = rng.next_open01() < config.prior_prob_h0;
    double delta = 0.0;
    if (!h0_true) {
      const double u = rng.next_open01();
      delta = config.h1_prior == H1PriorKind::Normal
                  ? root_g * normal_quantile(u)
                  : config.uniform_half_range * (2.0 * u - 1.0);
    }
    const double z = delta * root_n + normal_quantile(rng.next_open01());

    bool reject;
    if (rule.kind == DecisionRule::Kind::BfThreshold) {
      const double log_bf01 = gaussian::perinull_log_bf(
          z, static_cast<double>(config.n), 0.0, rule.g_model);
      reject = log_bf01 < log_k_crit;
    } else {
      reject = std::fabs(z) > z_crit;
    }

    if (h0_true) {
      ++tally.h0_true_trials;
      if (reject) ++tally.type1;
    } else if (!reject) {
      ++tally.type2;
    }
  }
  tally.total = tally.type1 + tally.type2;
  return tally;
}

std::vector<std::pair<long, double>> pearson_alpha_schedule(
    const std::vector<long>& n_grid, double g) {
  if (n_grid.empty())
    throw std::domain_error("pearson_alpha_schedule: grid must be nonempty");
  std::vector<std::pair<long, double>> schedule;
  schedule.reserve(n_grid.size());
  for (long n : n_grid)
    schedule.emplace_back(n, minimize_weighted_errors(1.0, n, g).alpha);
  return schedule;
}

}  // namespace jlp::decisions
