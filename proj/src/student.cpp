#include "jlp/student.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jlp/numcore.hpp"

namespace jlp::student {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLogUnderflow = -740.0;  // below exp() range

double jeffreys_log_k(double t, double n) {
  return 0.5 * std::log(2.0 * n / kPi) -
         0.5 * (n - 3.0) * std::log1p(t * t / (n - 1.0));
}

// Scale-mixture representation of the noncentral-t density:
//   f(t; df, ncp) = int_0^inf u phi(t u - ncp) g(u) du,
// g the density of sqrt(chi^2_df / df). The log-integrand is concave in
// u with a closed-form peak, so the quadrature runs on exp(l(u) - l0)
// over a bracket around the peak and the result is rescaled by exp(l0).
struct MixtureIntegrand {
  double t, df, ncp;
  double log_const;

  explicit MixtureIntegrand(double t_, double df_, double ncp_)
      : t(t_), df(df_), ncp(ncp_) {
    log_const = std::log(2.0) + 0.5 * df * std::log(0.5 * df) - log_gamma(0.5 * df) -
                0.5 * std::log(2.0 * kPi);
  }

  double log_at(double u) const {
    const double w = t * u - ncp;
    return log_const + df * std::log(u) - 0.5 * df * u * u - 0.5 * w * w;
  }

  // positive root of (df + t^2) u^2 - t ncp u - df = 0
  double peak() const {
    const double a = df + t * t;
    const double b = t * ncp;
    return (b + std::sqrt(b * b + 4.0 * df * a)) / (2.0 * a);
  }
};

double noncentral_t_pdf_impl(double t, double df, double ncp) {
  const MixtureIntegrand mi(t, df, ncp);
  const double u0 = mi.peak();
  const double l0 = mi.log_at(u0);
  if (l0 < kLogUnderflow) return 0.0;
  const double curvature = df / (u0 * u0) + df + t * t;
  const double width = 40.0 / std::sqrt(curvature);
  const double lo = std::max(0.0, u0 - width);
  const double hi = u0 + width;
  auto f = [&](double u) {
    const double lu = mi.log_at(u) - l0;
    return lu < kLogUnderflow ? 0.0 : std::exp(lu);
  };
  QuadratureOptions opts;
  opts.abs_tol = 1e-13;
  opts.rel_tol = 1e-11;
  const QuadratureResult left = integrate(f, Interval::finite(lo, u0), opts);
  const QuadratureResult right = integrate(f, Interval::finite(u0, hi), opts);
  return std::exp(l0) * (left.value + right.value);
}

}  // namespace

void TTestSpec::validate() const {
  if (n < 2) throw std::domain_error("TTestSpec: needs n >= 2");
}

void CauchyPrior::validate() const {
  if (!(scale > 0.0)) throw std::domain_error("CauchyPrior: scale must be positive");
}

double CauchyPrior::density_at_zero() const { return 1.0 / (kPi * scale); }

EvidenceRatio jeffreys1938_t_bf(const TTestSpec& spec) {
  spec.validate();
  std::string warning;
  if (spec.n < 4)
    warning = "n below 4: the (n-3)/2 exponent no longer penalises large t";
  return EvidenceRatio::from_log(jeffreys_log_k(spec.t, static_cast<double>(spec.n)),
                                 Orientation::NullOverAlt, std::move(warning));
}

CriticalT critical_t_for_unit_bf(long n) {
  if (n < 4 || !(2.0 * n / kPi > 1.0))
    throw std::domain_error("critical_t_for_unit_bf: needs n >= 4 with 2n/pi > 1");
  const double dn = static_cast<double>(n);
  CriticalT result;
  result.asymptotic = std::sqrt(std::log(2.0 * dn / kPi));
  double hi = result.asymptotic + 1.0;
  while (jeffreys_log_k(hi, dn) > 0.0) hi *= 2.0;
  result.exact_root =
      find_root([dn](double t) { return jeffreys_log_k(t, dn); }, 0.0, hi, 1e-10);
  return result;
}

double noncentral_t_pdf(double t, double df, double ncp) {
  if (!(df > 0.0)) throw std::domain_error("noncentral_t_pdf: requires df > 0");
  return noncentral_t_pdf_impl(t, df, ncp);
}

namespace {

// Marginal likelihood under H1 between delta limits, integrated on the
// prior-quantile axis: delta = r tan(theta) turns the Cauchy weight into
// 1/pi on (-pi/2, pi/2).
double marginal_piece_angular(const TTestSpec& spec, const CauchyPrior& prior,
                              double delta_lo, double delta_hi) {
  const double df = static_cast<double>(spec.n - 1);
  const double root_n = std::sqrt(static_cast<double>(spec.n));
  const double r = prior.scale;
  auto f = [&](double theta) {
    const double delta = r * std::tan(theta);
    return noncentral_t_pdf_impl(spec.t, df, delta * root_n) / kPi;
  };
  const double lo = std::atan(delta_lo / r);
  const double hi = std::atan(delta_hi / r);
  QuadratureOptions opts;
  opts.abs_tol = 1e-12;
  opts.rel_tol = 1e-9;
  return integrate(f, Interval::finite(lo, hi), opts).value;
}

double marginal_likelihood_angular(const TTestSpec& spec, const CauchyPrior& prior) {
  const double mle = spec.t / std::sqrt(static_cast<double>(spec.n));
  const double inf = std::numeric_limits<double>::infinity();
  if (mle > 0.0)
    return marginal_piece_angular(spec, prior, -inf, 0.0) +
           marginal_piece_angular(spec, prior, 0.0, mle) +
           marginal_piece_angular(spec, prior, mle, inf);
  if (mle < 0.0)
    return marginal_piece_angular(spec, prior, -inf, mle) +
           marginal_piece_angular(spec, prior, mle, 0.0) +
           marginal_piece_angular(spec, prior, 0.0, inf);
  return marginal_piece_angular(spec, prior, -inf, 0.0) +
         marginal_piece_angular(spec, prior, 0.0, inf);
}

// Same integrals on the delta axis (rational tail transform), feeding
// the posterior-side computations.
struct PosteriorPieces {
  double below_zero = 0.0;
  double above_zero = 0.0;
  double normalisation() const { return below_zero + above_zero; }
};

PosteriorPieces posterior_pieces_axis(const TTestSpec& spec, const CauchyPrior& prior) {
  const double df = static_cast<double>(spec.n - 1);
  const double root_n = std::sqrt(static_cast<double>(spec.n));
  const double r = prior.scale;
  auto f = [&](double delta) {
    const double prior_density = r / (kPi * (r * r + delta * delta));
    return noncentral_t_pdf_impl(spec.t, df, delta * root_n) * prior_density;
  };
  QuadratureOptions opts;
  opts.abs_tol = 1e-13;
  opts.rel_tol = 1e-9;
  const double mle = spec.t / root_n;
  PosteriorPieces pieces;
  if (mle > 0.0) {
    pieces.below_zero = integrate(f, Interval::upto(0.0), opts).value;
    pieces.above_zero = integrate(f, Interval::finite(0.0, mle), opts).value +
                        integrate(f, Interval::from(mle), opts).value;
  } else if (mle < 0.0) {
    pieces.below_zero = integrate(f, Interval::upto(mle), opts).value +
                        integrate(f, Interval::finite(mle, 0.0), opts).value;
    pieces.above_zero = integrate(f, Interval::from(0.0), opts).value;
  } else {
    pieces.below_zero = integrate(f, Interval::upto(0.0), opts).value;
    pieces.above_zero = integrate(f, Interval::from(0.0), opts).value;
  }
  return pieces;
}

}  // namespace

EvidenceRatio cauchy_t_bf10(const TTestSpec& spec, const CauchyPrior& prior) {
  spec.validate();
  prior.validate();
  const double marginal = marginal_likelihood_angular(spec, prior);
  const double null_density = student_t_pdf(spec.t, static_cast<double>(spec.n - 1));
  return EvidenceRatio::from_log(std::log(marginal) - std::log(null_density),
                                 Orientation::AltOverNull);
}

DirectionalEvidence posterior_direction_masses(const TTestSpec& spec,
                                               const CauchyPrior& prior) {
  spec.validate();
  prior.validate();
  const PosteriorPieces pieces = posterior_pieces_axis(spec, prior);
  DirectionalEvidence evidence;
  evidence.mass_negative = pieces.below_zero / pieces.normalisation();
  evidence.bf_plus_minus = pieces.above_zero / pieces.below_zero;
  return evidence;
}

EvidenceRatio savage_dickey_bf10(const TTestSpec& spec, const CauchyPrior& prior) {
  spec.validate();
  prior.validate();
  const double normalisation = posterior_pieces_axis(spec, prior).normalisation();
  const double prior_ordinate = prior.density_at_zero();
  const double likelihood_at_zero =
      noncentral_t_pdf_impl(spec.t, static_cast<double>(spec.n - 1), 0.0);
  const double posterior_ordinate = likelihood_at_zero * prior_ordinate / normalisation;
  return EvidenceRatio::from_log(
      std::log(prior_ordinate) - std::log(posterior_ordinate),
      Orientation::AltOverNull);
}

double one_sided_p_odds(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("one_sided_p_odds: requires 0 < p < 1");
  return (1.0 - p) / p;
}

namespace {

double solve_t_for_mass(long n, double target_mass, const CauchyPrior& prior) {
  // mass_negative is 0.5 at t = 0 and decreases in t
  double hi = 2.0;
  while (posterior_direction_masses({hi, n}, prior).mass_negative > target_mass) {
    hi *= 2.0;
    if (hi > 1e6)
      throw SearchBudgetError("paradox_triple_construct: no t reaches the target mass");
  }
  return find_root(
      [&](double t) {
        return posterior_direction_masses({t, n}, prior).mass_negative - target_mass;
      },
      0.0, hi, 1e-9);
}

}  // namespace

ParadoxTriple paradox_triple_construct(double target_mass_negative,
                                       double target_bf10,
                                       const CauchyPrior& prior) {
  if (!(target_mass_negative > 0.0 && target_mass_negative < 0.5))
    throw std::domain_error("paradox_triple_construct: target mass must be in (0, 0.5)");
  if (!(target_bf10 > 0.0))
    throw std::domain_error("paradox_triple_construct: target BF10 must be positive");
  prior.validate();
  constexpr long kMaxN = 100000;  // search is non-exhaustive beyond this

  auto bf_at = [&](long n) {
    const double t = solve_t_for_mass(n, target_mass_negative, prior);
    return std::pair<double, double>(t, cauchy_t_bf10({t, n}, prior).value());
  };

  // BF10 at fixed direction mass decreases in n; bisect for the crossing
  long lo = 2, hi = kMaxN;
  auto [t_lo, bf_lo] = bf_at(lo);
  if (bf_lo <= target_bf10) {
    ParadoxTriple triple{t_lo, lo, bf_lo, target_mass_negative};
    if (std::fabs(bf_lo - target_bf10) / target_bf10 > 0.5)
      throw SearchBudgetError("paradox_triple_construct: target BF10 above the n = 2 ceiling");
    return triple;
  }
  auto [t_hi, bf_hi] = bf_at(hi);
  if (bf_hi > target_bf10)
    throw SearchBudgetError("paradox_triple_construct: target BF10 not reached by n = 100000 (search non-exhaustive beyond)");
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    auto [t_mid, bf_mid] = bf_at(mid);
    if (bf_mid > target_bf10) {
      lo = mid; t_lo = t_mid; bf_lo = bf_mid;
    } else {
      hi = mid; t_hi = t_mid; bf_hi = bf_mid;
    }
  }
  ParadoxTriple triple;
  if (std::fabs(bf_lo - target_bf10) <= std::fabs(bf_hi - target_bf10)) {
    triple.t = t_lo; triple.n = lo; triple.achieved_bf10 = bf_lo;
  } else {
    triple.t = t_hi; triple.n = hi; triple.achieved_bf10 = bf_hi;
  }
  triple.achieved_mass_negative =
      posterior_direction_masses({triple.t, triple.n}, prior).mass_negative;
  return triple;
}

}  // namespace jlp::student
