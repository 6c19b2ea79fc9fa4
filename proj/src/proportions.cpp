#include "jlp/proportions.hpp"

#include <cmath>

#include "jlp/numcore.hpp"

namespace jlp::proportions {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double log_factorial(double v) { return log_gamma(v + 1.0); }

// log of the exact odds with the counts relaxed to reals, so the
// critical-difference root can be solved on a continuum.
double exact_log_odds(double x, double y, double x2, double y2) {
  LogValue numerator = LogValue::from_log(log_factorial(x + x2)) *
                       LogValue::from_log(log_factorial(y + y2)) *
                       LogValue::from_log(log_factorial(x + y + 1.0)) *
                       LogValue::from_log(log_factorial(x2 + y2 + 1.0));
  LogValue denominator = LogValue::from_log(log_factorial(x)) *
                         LogValue::from_log(log_factorial(y)) *
                         LogValue::from_log(log_factorial(x2)) *
                         LogValue::from_log(log_factorial(y2)) *
                         LogValue::from_log(log_factorial(x + x2 + y + y2 + 1.0));
  return (numerator / denominator).log_magnitude;
}

double approx_log_odds(double x, double y, double x2, double y2) {
  const double total = x + y + x2 + y2;
  const double outside = 0.5 * std::log(total * (x + y) * (x2 + y2) /
                                        (2.0 * kPi * (x + x2) * (y + y2)));
  const double cross = x * y2 - x2 * y;
  const double exponent = -0.5 * total * cross * cross /
                          ((x + x2) * (y + y2) * (x + y) * (x2 + y2));
  return outside + exponent;
}

double binomial_log_pmf(long n, long s, double theta) {
  return log_factorial(static_cast<double>(n)) -
         log_factorial(static_cast<double>(s)) -
         log_factorial(static_cast<double>(n - s)) + s * std::log(theta) +
         (n - s) * std::log1p(-theta);
}

}  // namespace

void TwoProportionCounts::validate() const {
  if (x < 0 || y < 0 || x2 < 0 || y2 < 0)
    throw std::domain_error("TwoProportionCounts: counts must be nonnegative");
  if (x + y < 1 || x2 + y2 < 1)
    throw std::domain_error("TwoProportionCounts: each sample needs at least one observation");
}

void BinomialOutcome::validate() const {
  if (n < 1) throw std::domain_error("BinomialOutcome: needs n >= 1");
  if (s < 0 || s > n) throw std::domain_error("BinomialOutcome: needs 0 <= s <= n");
  if (!(theta0 > 0.0 && theta0 < 1.0))
    throw std::domain_error("BinomialOutcome: needs 0 < theta0 < 1");
}

EvidenceRatio exact_two_proportion_odds(const TwoProportionCounts& c) {
  c.validate();
  const double lv = exact_log_odds(static_cast<double>(c.x), static_cast<double>(c.y),
                                   static_cast<double>(c.x2), static_cast<double>(c.y2));
  return EvidenceRatio::from_log(lv, Orientation::NullOverAlt);
}

EvidenceRatio approx_two_proportion_odds(const TwoProportionCounts& c) {
  c.validate();
  std::string warning;
  if (c.x + c.y < 20 || c.x2 + c.y2 < 20)
    warning = "large-sample approximation used below its validity guard (each sample >= 20)";
  const double lv = approx_log_odds(static_cast<double>(c.x), static_cast<double>(c.y),
                                    static_cast<double>(c.x2), static_cast<double>(c.y2));
  return EvidenceRatio::from_log(lv, Orientation::NullOverAlt, std::move(warning));
}

std::vector<TableRow1935> jeffreys1935_table(const std::vector<long>& sizes) {
  std::vector<TableRow1935> rows;
  rows.reserve(sizes.size());
  for (long size : sizes) {
    if (size < 2 || size % 2 != 0)
      throw std::domain_error("jeffreys1935_table: sizes must be even and >= 2 so x = y is achievable");
    const double half = 0.5 * size;
    TableRow1935 row;
    row.size = size;
    const double log_max = approx_log_odds(half, half, half, half);
    row.max_odds = std::exp(log_max);
    row.max_odds_exact = std::exp(exact_log_odds(half, half, half, half));
    // The critical difference solves max_odds * exp(-d^2 / (4 size)) = 1:
    // the large-sample form with the quadratic coefficient held at the
    // null configuration, which is how the source's further column
    // (d / sqrt(x+y)) stays a function of the outside factor alone.
    row.critical_difference =
        find_root([&](double d) { return log_max - d * d / (4.0 * size); }, 0.0,
                  2.0 * size, 1e-10);
    row.critical_ratio = row.critical_difference / std::sqrt(static_cast<double>(size));
    rows.push_back(row);
  }
  return rows;
}

double binomial_two_sided_p(const BinomialOutcome& outcome) {
  outcome.validate();
  const long n = outcome.n;
  const long s = outcome.s;
  const double theta = outcome.theta0;
  // P(S <= s) and P(S >= s) through the beta integral; doubling convention
  const double lower = s >= n ? 1.0
                              : regularized_incomplete_beta(1.0 - theta, static_cast<double>(n - s),
                                                            static_cast<double>(s + 1));
  const double upper = s <= 0 ? 1.0
                              : regularized_incomplete_beta(theta, static_cast<double>(s),
                                                            static_cast<double>(n - s + 1));
  return std::min(1.0, 2.0 * std::min(lower, upper));
}

SimplissimusResult simplissimus_construct(double epsilon, double target_p,
                                          long n_budget) {
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw std::domain_error("simplissimus_construct: requires 0 < epsilon < 0.5");
  if (!(target_p > 0.0 && target_p < 1.0))
    throw std::domain_error("simplissimus_construct: requires 0 < target_p < 1");
  if (n_budget <= 0) n_budget = eval_budget();
  const double proportion = 0.5 + epsilon / 7.0;
  for (long n = 2; n <= n_budget; ++n) {
    const long s = std::lround(n * proportion);
    if (s > n) continue;
    BinomialOutcome outcome{n, s, 0.5};
    const double p = binomial_two_sided_p(outcome);
    if (p <= target_p) {
      SimplissimusResult result;
      result.n = n;
      result.s = s;
      result.p = p;
      result.log_likelihood_ratio =
          binomial_log_pmf(n, s, 0.5) - binomial_log_pmf(n, s, 0.5 + epsilon);
      return result;
    }
  }
  throw SearchBudgetError("simplissimus_construct: no n within the search budget reaches the target tail probability");
}

std::vector<double> bag_likelihood_comparison(
    const BinomialOutcome& outcome, const std::vector<double>& candidate_thetas) {
  outcome.validate();
  std::vector<double> diffs;
  diffs.reserve(candidate_thetas.size());
  const double log_null = binomial_log_pmf(outcome.n, outcome.s, outcome.theta0);
  for (double theta : candidate_thetas) {
    if (!(theta > 0.0 && theta < 1.0))
      throw std::domain_error("bag_likelihood_comparison: candidates must lie in (0,1)");
    diffs.push_back(log_null - binomial_log_pmf(outcome.n, outcome.s, theta));
  }
  return diffs;
}

}  // namespace jlp::proportions
