#pragma once

#include "jlp/evidence.hpp"

namespace jlp::student {

struct TTestSpec {
  double t = 0.0;
  long n = 2;  // sample size; degrees of freedom are n - 1

  void validate() const;
};

// Zero-centered Cauchy prior on effect size delta = mu/sigma.
struct CauchyPrior {
  double scale = 0.7071067811865476;  // 1/sqrt(2)

  void validate() const;
  double density_at_zero() const;  // 1 / (pi * scale)
};

struct DirectionalEvidence {
  double mass_negative = 0.5;   // P(delta < 0 | y, H1)
  double bf_plus_minus = 1.0;   // (1 - mass_negative) / mass_negative
};

// K = sqrt(2n/pi) (1 + t^2/(n-1))^(-(n-3)/2). Tagged with a warning for
// n < 4, where the exponent stops penalising large t.
EvidenceRatio jeffreys1938_t_bf(const TTestSpec& spec);

struct CriticalT {
  double exact_root = 0.0;   // t with K(t, n) = 1
  double asymptotic = 0.0;   // sqrt(ln(2n/pi))
};

CriticalT critical_t_for_unit_bf(long n);

// Noncentral-t density computed from its scale-mixture integral
// representation (no series truncation); exposed for tests.
double noncentral_t_pdf(double t, double df, double ncp);

// BF10 of the Cauchy-prior one-sample t-test: marginal likelihood under
// H1 (noncentral-t kernel integrated against the Cauchy prior) over the
// central-t density under H0.
EvidenceRatio cauchy_t_bf10(const TTestSpec& spec, const CauchyPrior& prior = {});

DirectionalEvidence posterior_direction_masses(const TTestSpec& spec,
                                               const CauchyPrior& prior = {});

// BF10 as prior-over-posterior ordinate of delta at 0. Numerically a
// second route to cauchy_t_bf10: the posterior normalisation runs over
// the delta axis (rational tail transform, split at 0 and at the
// maximum-likelihood point) instead of the prior-quantile axis.
EvidenceRatio savage_dickey_bf10(const TTestSpec& spec,
                                 const CauchyPrior& prior = {});

// (1-p)/p, the directional-odds reading of a one-sided p-value.
double one_sided_p_odds(double p);

struct ParadoxTriple {
  double t = 0.0;
  long n = 0;
  double achieved_bf10 = 0.0;
  double achieved_mass_negative = 0.0;
};

// Finds (t, n) with posterior_direction_masses == target_mass_negative
// and cauchy_t_bf10 closest to target_bf10. n is searched over
// [2, 100000]; the search is reported as non-exhaustive beyond that.
ParadoxTriple paradox_triple_construct(double target_mass_negative,
                                       double target_bf10,
                                       const CauchyPrior& prior = {});

}  // namespace jlp::student
