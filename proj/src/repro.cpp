#include "jlp/repro.hpp"

#include <cmath>
#include <map>

#include "jlp/gaussian.hpp"
#include "jlp/numcore.hpp"
#include "jlp/proportions.hpp"
#include "jlp/student.hpp"

namespace jlp::repro {

namespace {

std::string key(long n) { return std::to_string(n); }

// Regenerates every fixture quantity and returns them keyed as
// "<table_id>/<row_key>".
std::map<std::string, double> compute_all(const Hooks& hooks) {
  std::map<std::string, double> values;

  const std::vector<long> sizes = {40, 100, 200, 400, 1000, 10000, 100000};
  for (const auto& row : proportions::jeffreys1935_table(sizes)) {
    values["table1/max_odds." + key(row.size)] = row.max_odds;
    values["table1/critical_d." + key(row.size)] = row.critical_difference;
    values["table1/ratio." + key(row.size)] = row.critical_ratio;
  }

  for (long n : {5L, 10L, 20L, 50L, 100L, 200L, 500L, 1000L, 2000L, 5000L,
                 10000L, 20000L, 50000L, 100000L})
    values["table2/ratio." + key(n)] = gaussian::least_squares_critical_ratio(n);

  auto t_bf = hooks.t_test_bf
                  ? hooks.t_test_bf
                  : [](double t, long n) {
                      return student::jeffreys1938_t_bf({t, n}).value();
                    };
  for (long n : {5L, 6L, 7L, 8L, 9L, 10L, 20L, 30L}) {
    const double t = student_t_quantile(0.975, static_cast<double>(n - 1));
    values["table3/K." + key(n)] = t_bf(t, n);
  }

  for (long n : {5L, 10L, 20L, 50L, 100L, 200L, 500L, 1000L, 2000L, 5000L, 10000L}) {
    const double constants[2] = {gaussian::kUniformityNarrowC,
                                 gaussian::kUniformityWideC};
    for (int ci = 0; ci < 2; ++ci) {
      const auto at_zero = gaussian::uniformity_bf({n, 0.0, constants[ci]});
      const double k0 = at_zero.bf.value();
      const double chi2 = 2.0 * std::log(k0);  // K = K0 exp(-chi^2/2) = 1
      const std::string col = ci == 0 ? "1" : "2";
      values["table4/K" + col + "." + key(n)] = k0;
      values["table4/a" + col + "." + key(n)] = std::sqrt(chi2);
      values["table4/chi2_" + col + "." + key(n)] = chi2;
    }
  }

  {
    const student::CauchyPrior prior;
    const struct { const char* tag; double t; long n; } panels[] = {
        {"t2.321.n20", 2.321, 20}, {"t2.113.n82", 2.113, 82}, {"t2.062.n332", 2.062, 332}};
    for (const auto& p : panels) {
      const student::TTestSpec spec{p.t, p.n};
      values[std::string("figure1/bf10.") + p.tag] =
          student::cauchy_t_bf10(spec, prior).value();
      const auto direction = student::posterior_direction_masses(spec, prior);
      values[std::string("figure1/mass_neg.") + p.tag] = direction.mass_negative;
      values[std::string("figure1/bf_pm.") + p.tag] = direction.bf_plus_minus;
    }
  }

  for (double g0 : {0.1, 0.05}) {
    for (double alpha : {0.05, 0.01}) {
      const auto curve = gaussian::perinull_curve(g0, 1.0, alpha, {100000000L});
      std::string tag = g0 == 0.1 ? "g0_0.1" : "g0_0.05";
      tag += alpha == 0.05 ? ".alpha_0.05" : ".alpha_0.01";
      values["figure2/limit." + tag] = curve.front().second;
    }
  }

  {
    const auto simpl = proportions::simplissimus_construct(0.07, 0.01);
    values["good/simplissimus.n"] = static_cast<double>(simpl.n);
    values["good/simplissimus.s"] = static_cast<double>(simpl.s);
    values["good/simplissimus.proportion"] =
        static_cast<double>(simpl.s) / static_cast<double>(simpl.n);
    values["good/bag_p.120_200"] =
        proportions::binomial_two_sided_p({200, 120, 0.5});
    values["good/bag_p.429_780"] =
        proportions::binomial_two_sided_p({780, 429, 0.5});
    values["good/bag_p.9690_19000"] =
        proportions::binomial_two_sided_p({19000, 9690, 0.5});
  }

  return values;
}

}  // namespace

Report run(const Hooks& hooks) {
  const auto values = compute_all(hooks);
  Report report;
  report.rows.reserve(fixtures().size());
  for (const Fixture& fixture : fixtures()) {
    ReproRow row;
    row.table_id = fixture.table_id;
    row.row_key = fixture.row_key;
    row.paper_value = fixture.paper_value;
    row.tolerance = fixture.tolerance;
    row.mode = fixture.mode;
    row.note = fixture.note;
    row.computed_value = values.at(row.table_id + "/" + row.row_key);
    const double delta = std::fabs(row.computed_value - row.paper_value);
    const double bound = fixture.mode == Mode::Rel
                             ? fixture.tolerance * std::fabs(fixture.paper_value)
                             : fixture.tolerance;
    if (fixture.flagged) {
      row.status = Status::Flagged;
      ++report.flagged;
    } else if (delta <= bound) {
      row.status = Status::Pass;
      ++report.passed;
    } else {
      row.status = Status::Fail;
      ++report.failed;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace jlp::repro
