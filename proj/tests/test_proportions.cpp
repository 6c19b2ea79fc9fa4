#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "jlp/numcore.hpp"
#include "jlp/proportions.hpp"

using namespace jlp;
using namespace jlp::proportions;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("exact two-proportion odds") {
  // (1,0,0,1): direct factorial arithmetic gives (1! 1! 2! 2!)/(3!) = 4/6
  const double direct = (1.0 * 1.0 * 2.0 * 2.0) / 6.0;
  CHECK(exact_two_proportion_odds({1, 0, 0, 1}).value() ==
        doctest::Approx(direct).epsilon(1e-12));

  // balanced 80-observation case sits within 5% of the approximation's 3.57
  const double exact4040 = exact_two_proportion_odds({20, 20, 20, 20}).value();
  CHECK(exact4040 == doctest::Approx(3.668062923846659).epsilon(1e-10));
  CHECK(std::fabs(exact4040 - 3.57) / 3.57 <= 0.05);

  // symmetric under swapping the samples
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> count(0, 60);
  for (int i = 0; i < 200; ++i) {
    TwoProportionCounts c{count(rng), count(rng), count(rng), count(rng)};
    if (c.x + c.y < 1 || c.x2 + c.y2 < 1) continue;
    const double a = exact_two_proportion_odds(c).log_value();
    const double b = exact_two_proportion_odds({c.x2, c.y2, c.x, c.y}).log_value();
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
  }

  // log-domain safety at millions of counts
  const EvidenceRatio huge = exact_two_proportion_odds({1000000, 1000000, 1000000, 1000000});
  CHECK(std::isfinite(huge.log_value()));
  CHECK(huge.log_value() > 0.0);

  // identical samples support the null once each sample has a few observations
  for (long n : {4L, 5L, 6L, 10L, 40L, 1000L}) {
    const long s = n / 2;
    CHECK(exact_two_proportion_odds({s, n - s, s, n - s}).value() > 1.0);
  }
  CHECK_THROWS_AS(exact_two_proportion_odds({0, 0, 1, 1}), std::domain_error);
  CHECK_THROWS_AS(exact_two_proportion_odds({-1, 2, 1, 1}), std::domain_error);
}

TEST_CASE("approximate two-proportion odds") {
  const EvidenceRatio balanced = approx_two_proportion_odds({20, 20, 20, 20});
  CHECK(balanced.value() == doctest::Approx(std::sqrt(80.0 / (2.0 * kPi))).epsilon(1e-12));
  CHECK(std::fabs(balanced.value() - 3.57) / 3.57 <= 0.01);
  CHECK_FALSE(balanced.has_warning());

  const double thousand = approx_two_proportion_odds({500, 500, 500, 500}).value();
  CHECK(std::fabs(thousand - 17.8) / 17.8 <= 0.01);

  // equal sample ratios zero the exponent: odds = outside factor alone
  const TwoProportionCounts proportional{30, 20, 60, 40};
  const double outside = 0.5 * std::log(150.0 * 50.0 * 100.0 / (2.0 * kPi * 90.0 * 60.0));
  CHECK(approx_two_proportion_odds(proportional).log_value() ==
        doctest::Approx(outside).epsilon(1e-12));

  CHECK(approx_two_proportion_odds({10, 5, 10, 5}).has_warning());
}

TEST_CASE("1935 table rows") {
  const auto rows = jeffreys1935_table({40, 100000});
  CHECK(rows[0].max_odds == doctest::Approx(3.57).epsilon(0.01));
  CHECK(std::fabs(rows[0].critical_difference - 14.3) <= 0.15);
  CHECK(std::fabs(rows[0].critical_ratio - 2.26) <= 0.02);
  CHECK(rows[0].max_odds_exact == doctest::Approx(3.668062923846659).epsilon(1e-9));

  CHECK(rows[1].max_odds == doctest::Approx(178.0).epsilon(0.01));
  CHECK(std::fabs(rows[1].critical_difference - 1440.0) <= 0.15);
  CHECK(std::fabs(rows[1].critical_ratio - 4.57) <= 0.02);

  // closed-form cross-check at x + y = 40: d^2 = 160 ln(sqrt(80/2pi))
  const double closed = std::sqrt(160.0 * std::log(std::sqrt(80.0 / (2.0 * kPi))));
  CHECK(rows[0].critical_difference == doctest::Approx(closed).epsilon(1e-9));

  // monotone in x + y: max odds and the critical ratio both increase
  const auto all = jeffreys1935_table({40, 100, 200, 400, 1000, 10000, 100000});
  for (size_t i = 1; i < all.size(); ++i) {
    CHECK(all[i].max_odds > all[i - 1].max_odds);
    CHECK(all[i].critical_ratio > all[i - 1].critical_ratio);
  }

  CHECK_THROWS_AS(jeffreys1935_table({41}), std::domain_error);
}

TEST_CASE("binomial two-sided tail probability") {
  const double simplissimus_p = binomial_two_sided_p({16700, 8517, 0.5});
  CHECK(simplissimus_p == doctest::Approx(0.009968966297582989).epsilon(1e-10));
  CHECK(simplissimus_p < 0.01);
  CHECK(simplissimus_p > 0.009);

  const double ten_ball = binomial_two_sided_p({200, 120, 0.5});
  CHECK(ten_ball == doctest::Approx(0.005685155996750306).epsilon(1e-10));
  CHECK(ten_ball > 0.004);
  CHECK(ten_ball < 0.008);

  CHECK(binomial_two_sided_p({10, 5, 0.5}) == 1.0);

  // p decreases as |s - n theta0| grows
  double prev = 1.1;
  for (long s = 50; s <= 75; s += 5) {
    const double p = binomial_two_sided_p({100, s, 0.5});
    CHECK(p < prev);
    prev = p;
  }
  CHECK_THROWS_AS(binomial_two_sided_p({10, 11, 0.5}), std::domain_error);
  CHECK_THROWS_AS(binomial_two_sided_p({10, 5, 1.0}), std::domain_error);
}

TEST_CASE("simplissimus construction") {
  const SimplissimusResult result = simplissimus_construct(0.07, 0.01);
  CHECK(result.n >= 16600);
  CHECK(result.n <= 16800);
  CHECK(result.s == std::lround(result.n * 0.51));
  CHECK(static_cast<double>(result.s) / result.n == doctest::Approx(0.51).epsilon(0.001));
  CHECK(result.p <= 0.01);
  // the constructed sample supports theta = 0.5 over theta = 0.57
  CHECK(result.log_likelihood_ratio > 0.0);

  // a large epsilon needs only a small n, and the scan returns the first hit
  const SimplissimusResult easy = simplissimus_construct(0.49, 0.01);
  CHECK(easy.n < 500);
  for (long n = 2; n < easy.n; ++n) {
    const long s = std::lround(n * (0.5 + 0.49 / 7.0));
    CHECK(binomial_two_sided_p({n, s, 0.5}) > 0.01);
  }

  CHECK_THROWS_AS(simplissimus_construct(0.0001, 1e-12, 1000), SearchBudgetError);
  CHECK_THROWS_AS(simplissimus_construct(0.6, 0.01), std::domain_error);
}

TEST_CASE("bag likelihood comparisons") {
  const auto big = bag_likelihood_comparison({19000, 9690, 0.5}, {0.6});
  CHECK(big[0] == doctest::Approx(310.7705774018723).epsilon(1e-9));
  CHECK(big[0] > 0.0);  // theta = .5 favored despite p ~ .006

  const auto small = bag_likelihood_comparison({200, 120, 0.5}, {0.6});
  CHECK(small[0] == doctest::Approx(-4.027102710137775).epsilon(1e-9));
  CHECK(small[0] < 0.0);

  const auto self = bag_likelihood_comparison({50, 30, 0.5}, {0.5});
  CHECK(self[0] == 0.0);
  CHECK_THROWS_AS(bag_likelihood_comparison({50, 30, 0.5}, {1.0}), std::domain_error);
}

TEST_CASE("exact and approximate odds agree for large balanced designs") {
  for (long n : {200L, 400L, 1000L, 5000L}) {
    const long half = n / 2;
    for (double frac : {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
      const long d = std::lround(frac * std::sqrt(static_cast<double>(n)) / 2.0) * 2;
      const TwoProportionCounts c{half, half, half + d / 2, half - d / 2};
      const double gap = std::fabs(exact_two_proportion_odds(c).log_value() -
                                   approx_two_proportion_odds(c).log_value());
      CHECK(gap <= 0.05);
    }
  }
}
