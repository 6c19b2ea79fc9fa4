#pragma once

#include <vector>

#include "jlp/evidence.hpp"

namespace jlp::proportions {

// Sampling counts of the two-sample comparison: x/y with and without the
// property in sample 1, x2/y2 in sample 2.
struct TwoProportionCounts {
  long x = 0;
  long y = 0;
  long x2 = 0;
  long y2 = 0;

  void validate() const;
};

struct BinomialOutcome {
  long n = 1;       // trials
  long s = 0;       // successes
  double theta0 = 0.5;

  void validate() const;
};

// Exact posterior odds for "same ratio" over "different ratios":
// (x+x2)! (y+y2)! (x+y+1)! (x2+y2+1)! / [x! y! x2! y2! (x+x2+y+y2+1)!],
// computed in the log domain.
EvidenceRatio exact_two_proportion_odds(const TwoProportionCounts& counts);

// Large-sample approximation of the same odds. Samples smaller than 20
// are outside the documented validity range and tag the result with a
// warning instead of failing.
EvidenceRatio approx_two_proportion_odds(const TwoProportionCounts& counts);

struct TableRow1935 {
  long size = 0;                  // x + y, with x = y and x2 + y2 = x + y
  double max_odds = 0.0;          // large-sample odds at x2 = y2
  double max_odds_exact = 0.0;    // exact-formula odds at the same point
  double critical_difference = 0.0;  // x2 - y2 making the odds 1
  double critical_ratio = 0.0;       // critical_difference / sqrt(size)
};

std::vector<TableRow1935> jeffreys1935_table(const std::vector<long>& sizes);

// Two-sided tail probability with the doubling convention
// min(1, 2 min(lower tail, upper tail)).
double binomial_two_sided_p(const BinomialOutcome& outcome);

struct SimplissimusResult {
  long n = 0;
  long s = 0;
  double p = 1.0;
  // log L(0.5) - log L(0.5 + epsilon) at (n, s); positive favors the null
  double log_likelihood_ratio = 0.0;
};

// Smallest n whose sample proportion 0.5 + epsilon/7 yields a two-sided
// tail probability at or below target_p, scanning n upward.
SimplissimusResult simplissimus_construct(double epsilon, double target_p,
                                          long n_budget = 0);

// log L(theta0) - log L(theta_c) for each candidate; positive means the
// null value theta0 is better supported.
std::vector<double> bag_likelihood_comparison(
    const BinomialOutcome& outcome, const std::vector<double>& candidate_thetas);

}  // namespace jlp::proportions
