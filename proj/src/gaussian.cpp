#include "jlp/gaussian.hpp"

#include <cmath>

#include "jlp/numcore.hpp"

namespace jlp::gaussian {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

void GaussianTestSpec::validate() const {
  if (!(standard_error > 0.0))
    throw std::domain_error("GaussianTestSpec: standard error must be positive");
  if (n < 1) throw std::domain_error("GaussianTestSpec: needs n >= 1");
  if (!(prior_range > 0.0))
    throw std::domain_error("GaussianTestSpec: prior range must be positive");
}

EvidenceRatio point_null_gaussian_bf(const GaussianTestSpec& spec) {
  spec.validate();
  std::string warning;
  if (spec.standard_error > spec.prior_range / 10.0)
    warning = "s exceeds m/10; the s << m approximation is strained";
  const double a = spec.estimate;
  const double s = spec.standard_error;
  const double log_k = std::log(spec.prior_range / (std::sqrt(2.0 * kPi) * s)) -
                       0.5 * a * a / (s * s);
  return EvidenceRatio::from_log(log_k, Orientation::NullOverAlt, std::move(warning));
}

double least_squares_critical_ratio(long n) {
  if (n < 2 || !(2.0 * n / kPi > 1.0))
    throw std::domain_error("least_squares_critical_ratio: requires 2n/pi > 1");
  return std::sqrt(std::log(2.0 * n / kPi));
}

EvidenceRatio generic_sqrt_n_bf(double a, double s_a, long n, double A) {
  if (!(A > 0.0)) throw std::domain_error("generic_sqrt_n_bf: A must be positive");
  if (!(s_a > 0.0)) throw std::domain_error("generic_sqrt_n_bf: s_a must be positive");
  if (n < 1) throw std::domain_error("generic_sqrt_n_bf: needs n >= 1");
  const double log_k = 0.5 * std::log(A * n) - 0.5 * a * a / (s_a * s_a);
  return EvidenceRatio::from_log(log_k, Orientation::NullOverAlt);
}

void UniformitySpec::validate() const {
  if (n < 1) throw std::domain_error("UniformitySpec: needs n >= 1");
  if (!(prior_constant > 0.0))
    throw std::domain_error("UniformitySpec: prior constant must be positive");
}

UniformityResult uniformity_bf(const UniformitySpec& spec) {
  spec.validate();
  const double chi_square = spec.n * spec.amplitude * spec.amplitude;
  const double log_k = 0.5 * std::log(spec.n / (2.0 * kPi)) +
                       std::log(spec.prior_constant) - 0.5 * chi_square;
  return {EvidenceRatio::from_log(log_k, Orientation::NullOverAlt), chi_square};
}

void PeriNullSpec::validate() const {
  if (n < 1) throw std::domain_error("PeriNullSpec: needs n >= 1");
  if (!(g0 >= 0.0)) throw std::domain_error("PeriNullSpec: needs g0 >= 0");
  if (!(g1 > g0)) throw std::domain_error("PeriNullSpec: needs g0 < g1");
}

double perinull_log_bf(double z, double n, double g0, double g1) {
  if (!(g0 >= 0.0) || !(g1 >= 0.0))
    throw std::domain_error("perinull_log_bf: prior variances must be nonnegative");
  const double a0 = 1.0 + n * g0;
  const double a1 = 1.0 + n * g1;
  return 0.5 * std::log(a1 / a0) + (g0 - g1) * n * z * z / (2.0 * a0 * a1);
}

EvidenceRatio perinull_bf(const PeriNullSpec& spec) {
  spec.validate();
  return EvidenceRatio::from_log(
      perinull_log_bf(spec.z, static_cast<double>(spec.n), spec.g0, spec.g1),
      Orientation::NullOverAlt);
}

std::vector<std::pair<long, double>> perinull_curve(
    double g0, double g1, double alpha, const std::vector<long>& n_grid,
    Sidedness sidedness) {
  if (!(g0 >= 0.0) || !(g1 > g0))
    throw std::domain_error("perinull_curve: requires 0 <= g0 < g1");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("perinull_curve: requires 0 < alpha < 1");
  const double z = sidedness == Sidedness::One ? normal_quantile(1.0 - alpha)
                                               : normal_quantile(1.0 - 0.5 * alpha);
  std::vector<std::pair<long, double>> curve;
  curve.reserve(n_grid.size());
  for (long n : n_grid) {
    if (n < 1) throw std::domain_error("perinull_curve: grid entries must be >= 1");
    curve.emplace_back(n, std::exp(perinull_log_bf(z, static_cast<double>(n), g0, g1)));
  }
  return curve;
}

EvidenceRatio bartlett_scaled_bf(double z, long n, double g0, double c_over_n) {
  if (n < 1) throw std::domain_error("bartlett_scaled_bf: needs n >= 1");
  if (!(c_over_n > 0.0))
    throw std::domain_error("bartlett_scaled_bf: scale constant must be positive");
  const double g1 = c_over_n / static_cast<double>(n);
  if (!(g1 >= g0))
    throw std::domain_error("bartlett_scaled_bf: shrunk prior variance fell below g0 at this n");
  return EvidenceRatio::from_log(
      perinull_log_bf(z, static_cast<double>(n), g0, g1), Orientation::NullOverAlt);
}

LindleyConstruction lindley_construct(double alpha, double target_posterior_h0,
                                      double prior_interval, double sigma,
                                      double prior_mass_h0) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("lindley_construct: requires 0 < alpha < 1");
  if (!(target_posterior_h0 > 0.0 && target_posterior_h0 < 1.0))
    throw std::domain_error("lindley_construct: requires 0 < target < 1");
  if (!(prior_interval > 0.0))
    throw std::domain_error("lindley_construct: prior interval must be positive");
  if (!(sigma > 0.0)) throw std::domain_error("lindley_construct: sigma must be positive");
  if (!(prior_mass_h0 > 0.0 && prior_mass_h0 < 1.0))
    throw std::domain_error("lindley_construct: requires 0 < prior mass < 1");

  const double z = normal_quantile(1.0 - 0.5 * alpha);
  const double rho = prior_mass_h0 / (1.0 - prior_mass_h0);
  // posterior >= target  <=>  K >= target_odds / rho
  const double required_k = target_posterior_h0 / (1.0 - target_posterior_h0) / rho;
  auto k_at = [&](double n) {
    return prior_interval * std::sqrt(n) / (sigma * std::sqrt(2.0 * kPi)) *
           std::exp(-0.5 * z * z);
  };
  const double sqrt_n = required_k * sigma * std::sqrt(2.0 * kPi) *
                        std::exp(0.5 * z * z) / prior_interval;
  const double continuous_n = sqrt_n * sqrt_n;
  if (!std::isfinite(continuous_n) || continuous_n > 9e18)
    throw SearchBudgetError("lindley_construct: required n exceeds the search range");
  long n = static_cast<long>(std::ceil(continuous_n));
  if (n < 1) n = 1;
  // guard against ceiling landing one off under rounding
  while (n > 1 && k_at(static_cast<double>(n - 1)) * rho /
                          (k_at(static_cast<double>(n - 1)) * rho + 1.0) >=
                      target_posterior_h0)
    --n;
  while (k_at(static_cast<double>(n)) * rho / (k_at(static_cast<double>(n)) * rho + 1.0) <
         target_posterior_h0)
    ++n;

  LindleyConstruction result;
  result.n = n;
  result.continuous_n = continuous_n;
  result.k_at_n = k_at(static_cast<double>(n));
  result.posterior_h0 = result.k_at_n * rho / (result.k_at_n * rho + 1.0);
  return result;
}

}  // namespace jlp::gaussian
