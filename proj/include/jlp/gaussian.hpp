#pragma once

#include <utility>
#include <vector>

#include "jlp/evidence.hpp"

namespace jlp::gaussian {

// Point-null test inputs: estimate a with standard error s from n
// observations, uniform prior of range m under the alternative.
struct GaussianTestSpec {
  double estimate = 0.0;        // a
  double standard_error = 1.0;  // s
  long n = 1;
  double prior_range = 1.0;     // m

  void validate() const;
};

// K = m / (sqrt(2 pi) s) * exp(-a^2 / (2 s^2))
EvidenceRatio point_null_gaussian_bf(const GaussianTestSpec& spec);

// sqrt(ln(2n/pi)): the b/sigma_b at which the least-squares support
// criterion b^2/sigma_b^2 > ln(2n/pi) turns indifferent.
double least_squares_critical_ratio(long n);

// K = sqrt(A n) * exp(-a^2 / (2 s_a^2)), the generic large-sample form.
EvidenceRatio generic_sqrt_n_bf(double a, double s_a, long n, double A = 1.0);

// Uniformity test: K = sqrt(n / 2 pi) c exp(-n a0^2 / 2); the standard
// error of a0 is n^(-1/2) by construction, so the exponent is -chi^2/2.
struct UniformitySpec {
  long n = 1;
  double amplitude = 0.0;  // a0, the maximum likelihood amplitude
  double prior_constant = 1.0;  // c

  void validate() const;
};

struct UniformityResult {
  EvidenceRatio bf;
  double chi_square = 0.0;  // n * a0^2
};

UniformityResult uniformity_bf(const UniformitySpec& spec);

// Prior-range constants inferred from the a0 = 0 column of the 1938
// uniformity table (c = K / sqrt(n / 2 pi), consistent with 2/sqrt(3)
// and sqrt(3)); the source does not state them.
inline constexpr double kUniformityNarrowC = 1.1547005383792517;
inline constexpr double kUniformityWideC = 1.7320508075688772;

// Peri-null z-test: normal priors delta ~ N(0, g0) under the skeptic and
// N(0, g1) under the proponent, g0 < g1.
struct PeriNullSpec {
  double z = 0.0;
  long n = 1;
  double g0 = 0.0;
  double g1 = 1.0;

  void validate() const;
};

// BF = sqrt((1+n g1)/(1+n g0)) * exp((g0-g1) n z^2 / (2 (1+n g0)(1+n g1))),
// peri-null over alternative. Defined for any g0, g1 >= 0; the paradox
// condition g0 < g1 is enforced by PeriNullSpec, not here.
double perinull_log_bf(double z, double n, double g0, double g1);
EvidenceRatio perinull_bf(const PeriNullSpec& spec);

enum class Sidedness { One, Two };

// Evaluates the peri-null BF along n_grid with z pinned to the alpha
// boundary: z = Phi^-1(1-alpha), or Phi^-1(1-alpha/2) under Two.
std::vector<std::pair<long, double>> perinull_curve(
    double g0, double g1, double alpha, const std::vector<long>& n_grid,
    Sidedness sidedness = Sidedness::One);

// Peri-null BF with the alternative prior spread shrinking as 1/n:
// g1(n) = c_over_n / n. Requires g1(n) > g0 at the evaluated n.
EvidenceRatio bartlett_scaled_bf(double z, long n, double g0, double c_over_n);

struct LindleyConstruction {
  long n = 0;
  double continuous_n = 0.0;  // pre-ceiling solution of the break-even
  double k_at_n = 0.0;
  double posterior_h0 = 0.0;
};

// Smallest n such that an estimate placed exactly at the two-sided alpha
// boundary gives posterior P(H0) >= target, with
// K = I sqrt(n) / (sigma sqrt(2 pi)) * exp(-z^2/2).
LindleyConstruction lindley_construct(double alpha, double target_posterior_h0,
                                      double prior_interval, double sigma,
                                      double prior_mass_h0);

}  // namespace jlp::gaussian
