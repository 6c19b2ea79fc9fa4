#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace jlp {

// A signed value stored as log|v| plus sign, for arithmetic whose
// intermediate magnitudes exceed double range (e.g. products of large
// factorials). sign == 0 means exactly zero and log_magnitude is ignored.
struct LogValue {
  double log_magnitude = 0.0;
  int sign = 0;

  static LogValue from_value(double v);
  static LogValue from_log(double log_magnitude, int sign = +1);
  double value() const;

  LogValue operator*(const LogValue& rhs) const;
  LogValue operator/(const LogValue& rhs) const;
};

// Posterior odds decomposition of Eq. prior x BF.
struct ModelOdds {
  double prior_odds = 1.0;
  double bayes_factor_10 = 1.0;
  double posterior_odds = 1.0;
};

ModelOdds posterior_model_odds(double prior_odds, double bf10);

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

// Thrown when the adaptive engine runs out of its evaluation budget;
// carries the best estimate reached.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(std::string msg, QuadratureResult best)
      : std::runtime_error(std::move(msg)), best_estimate(best) {}
  QuadratureResult best_estimate;
};

class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SearchBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ln Gamma(x), x > 0
double log_gamma(double x);

// Regularized incomplete beta I_x(a,b)
double regularized_incomplete_beta(double x, double a, double b);

double normal_pdf(double z);
double normal_cdf(double z);
double normal_quantile(double p);

double student_t_pdf(double t, double df);
double student_t_cdf(double t, double df);
double student_t_quantile(double p, double df);

// Integration domain: finite interval, half line, or the whole line.
// Infinite directions are mapped to [0,1) with u = x/(1+|x|).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_infinite = false;
  bool hi_infinite = false;

  static Interval finite(double a, double b) { return {a, b, false, false}; }
  static Interval from(double a) { return {a, 0.0, false, true}; }
  static Interval upto(double b) { return {0.0, b, true, false}; }
  static Interval real_line() { return {0.0, 0.0, true, true}; }
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  long max_evaluations = 0;  // 0 = library default / JLP_EVAL_BUDGET
};

QuadratureResult integrate(const std::function<double(double)>& f,
                           Interval domain, QuadratureOptions opts = {});

// Bracketed root finding: bisection safeguarded by inverse quadratic
// interpolation (Brent). Requires g(lo) * g(hi) <= 0.
double find_root(const std::function<double(double)>& g, double lo, double hi,
                 double x_tol = 1e-10, int max_iterations = 200);

// Default evaluation budget; JLP_EVAL_BUDGET overrides when set.
long eval_budget();

}  // namespace jlp
