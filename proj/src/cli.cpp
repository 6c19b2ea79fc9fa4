#include "jlp/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jlp/decisions.hpp"
#include "jlp/evidence.hpp"
#include "jlp/gaussian.hpp"
#include "jlp/numcore.hpp"
#include "jlp/proportions.hpp"
#include "jlp/repro.hpp"
#include "jlp/student.hpp"

namespace jlp::cli {

namespace {

using json = nlohmann::ordered_json;

// JSON numbers carry 12 significant digits
double sig12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

int write_output(const std::string& text, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
  if (out_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(out_path);
  if (!file) {
    err << "cannot open output file: " << out_path << "\n";
    return kExitIo;
  }
  file << text;
  if (!file.good()) {
    err << "write failed: " << out_path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

// ---- table rendering -------------------------------------------------------

struct Column {
  std::string header;
  std::vector<std::string> cells;
};

std::string render_md(const std::vector<Column>& cols) {
  std::ostringstream os;
  os << "|";
  for (const auto& c : cols) os << " " << c.header << " |";
  os << "\n|";
  for (const auto& c : cols) os << std::string(c.header.size() + 2, '-') << "|";
  os << "\n";
  const size_t rows = cols.empty() ? 0 : cols.front().cells.size();
  for (size_t i = 0; i < rows; ++i) {
    os << "|";
    for (const auto& c : cols) os << " " << c.cells[i] << " |";
    os << "\n";
  }
  return os.str();
}

std::string render_csv(const std::vector<Column>& cols,
                       const std::vector<std::string>& csv_headers) {
  std::ostringstream os;
  for (size_t j = 0; j < csv_headers.size(); ++j)
    os << (j ? "," : "") << csv_headers[j];
  os << "\n";
  const size_t rows = cols.empty() ? 0 : cols.front().cells.size();
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols.size(); ++j) os << (j ? "," : "") << cols[j].cells[i];
    os << "\n";
  }
  return os.str();
}

json table_json(const std::string& name, const std::vector<std::string>& fields,
                const std::vector<std::vector<double>>& rows) {
  json result;
  result["command"] = "table";
  result["inputs"] = json{{"name", name}};
  json out_rows = json::array();
  for (const auto& row : rows) {
    json jrow;
    for (size_t j = 0; j < fields.size(); ++j) jrow[fields[j]] = sig12(row[j]);
    out_rows.push_back(jrow);
  }
  result["results"] = json{{"rows", out_rows}};
  return result;
}

int emit_table(const std::string& name, const std::string& format,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
  std::vector<Column> cols;
  std::vector<std::string> csv_headers;
  std::vector<std::string> fields;
  std::vector<std::vector<double>> raw;
  std::string md_footer;

  if (name == "jeffreys1935") {
    const std::vector<long> sizes = {40, 100, 200, 400, 1000, 10000, 100000};
    const auto rows = proportions::jeffreys1935_table(sizes);
    cols = {{"x+y", {}}, {"P(q)/P(~q)", {}}, {"x'-y'", {}},
            {"(x'-y')/(x+y)^(1/2)", {}}, {"exact P(q)/P(~q)", {}}};
    csv_headers = {"x_plus_y", "max_odds", "critical_difference", "critical_ratio",
                   "exact_max_odds"};
    fields = csv_headers;
    for (const auto& r : rows) {
      cols[0].cells.push_back(std::to_string(r.size));
      cols[1].cells.push_back(sig(r.max_odds, 3));
      cols[2].cells.push_back(fixed(r.critical_difference, 1));
      cols[3].cells.push_back(fixed(r.critical_ratio, 2));
      cols[4].cells.push_back(sig(r.max_odds_exact, 4));
      raw.push_back({static_cast<double>(r.size), r.max_odds, r.critical_difference,
                     r.critical_ratio, r.max_odds_exact});
    }
  } else if (name == "jeffreys1936") {
    cols = {{"n", {}}, {"b/sigma_b", {}}};
    csv_headers = {"n", "critical_ratio"};
    fields = csv_headers;
    for (long n : {5L, 10L, 20L, 50L, 100L, 200L, 500L, 1000L, 2000L, 5000L,
                   10000L, 20000L, 50000L, 100000L}) {
      const double v = gaussian::least_squares_critical_ratio(n);
      cols[0].cells.push_back(std::to_string(n));
      cols[1].cells.push_back(fixed(v, 2));
      raw.push_back({static_cast<double>(n), v});
    }
  } else if (name == "jeffreys1938t") {
    cols = {{"n", {}}, {"K", {}}};
    csv_headers = {"n", "K"};
    fields = csv_headers;
    for (long n : {5L, 6L, 7L, 8L, 9L, 10L, 20L, 30L}) {
      const double t = student_t_quantile(0.975, static_cast<double>(n - 1));
      const double k = student::jeffreys1938_t_bf({t, n}).value();
      cols[0].cells.push_back(std::to_string(n));
      cols[1].cells.push_back(fixed(k, 3));
      raw.push_back({static_cast<double>(n), k});
    }
    md_footer =
        "\nK is evaluated at the two-sided 5% point of t with n-1 degrees of "
        "freedom.\n";
  } else if (name == "jeffreys1938chi2") {
    cols = {{"n", {}}, {"K (c=1.155)", {}}, {"K (c=1.732)", {}},
            {"a0 n^(1/2) (c=1.155)", {}}, {"a0 n^(1/2) (c=1.732)", {}},
            {"chi^2 (c=1.155)", {}}, {"chi^2 (c=1.732)", {}}};
    csv_headers = {"n", "K_narrow", "K_wide", "a0_root_n_narrow", "a0_root_n_wide",
                   "chi2_narrow", "chi2_wide"};
    fields = csv_headers;
    for (long n : {5L, 10L, 20L, 50L, 100L, 200L, 500L, 1000L, 2000L, 5000L, 10000L}) {
      std::vector<double> row = {static_cast<double>(n)};
      std::vector<double> k0s, roots, chis;
      for (double c : {gaussian::kUniformityNarrowC, gaussian::kUniformityWideC}) {
        const double k0 = gaussian::uniformity_bf({n, 0.0, c}).bf.value();
        const double chi2 = 2.0 * std::log(k0);
        k0s.push_back(k0);
        roots.push_back(std::sqrt(chi2));
        chis.push_back(chi2);
      }
      cols[0].cells.push_back(std::to_string(n));
      cols[1].cells.push_back(fixed(k0s[0], 2));
      cols[2].cells.push_back(fixed(k0s[1], 2));
      cols[3].cells.push_back(fixed(roots[0], 2));
      cols[4].cells.push_back(fixed(roots[1], 2));
      cols[5].cells.push_back(fixed(chis[0], 2));
      cols[6].cells.push_back(fixed(chis[1], 2));
      row.insert(row.end(), {k0s[0], k0s[1], roots[0], roots[1], chis[0], chis[1]});
      raw.push_back(row);
    }
    md_footer =
        "\nThe prior constants are inferred from the source's K column at a0 = 0; "
        "the source's a0 n^(1/2) cell at n = 5000 (first column) and its "
        "(a0 n^(1/2), chi^2) cells at n = 10000 (second column) disagree with its "
        "own K column and are reported here as computed.\n";
  } else {
    err << "unknown table name: " << name
        << " (expected jeffreys1935 | jeffreys1936 | jeffreys1938t | jeffreys1938chi2)\n";
    return kExitUsage;
  }

  std::string text;
  if (format == "md")
    text = render_md(cols) + md_footer;
  else if (format == "csv")
    text = render_csv(cols, csv_headers);
  else if (format == "json")
    text = table_json(name, fields, raw).dump(2) + "\n";
  else {
    err << "unknown format: " << format << " (expected csv | json | md)\n";
    return kExitUsage;
  }
  return write_output(text, out_path, out, err);
}

// ---- bf --------------------------------------------------------------------

json bf_json(const std::string& subject, json inputs, const EvidenceRatio& ratio) {
  json result;
  result["command"] = "bf " + subject;
  result["inputs"] = std::move(inputs);
  json res;
  res["bf"] = sig12(ratio.value());
  res["orientation"] = to_string(ratio.orientation());
  if (ratio.has_warning()) res["warning"] = ratio.warning();
  result["results"] = std::move(res);
  result["log_bf"] = sig12(ratio.log_value());
  return result;
}

// ---- shared flag holders ---------------------------------------------------

struct TableArgs {
  std::string name;
  std::string format = "md";
  std::string out_path;
};

struct TwoPropArgs {
  long x = 0, y = 0, x2 = 0, y2 = 0;
  bool approx = false;
};

struct ZArgs {
  double a = 0.0, s = 1.0, m = 1.0;
  long n = 1;
};

struct TJefArgs {
  double t = 0.0;
  long n = 2;
};

struct TCauchyArgs {
  double t = 0.0;
  long n = 2;
  double scale = 0.7071067811865476;
};

struct PeriArgs {
  double z = 0.0, g0 = 0.0, g1 = 1.0;
  long n = 1;
  std::vector<long> curve;
  double alpha = 0.05;
  bool two_sided = false;
};

struct UniArgs {
  long n = 1;
  double a0 = 0.0;
  double c = gaussian::kUniformityNarrowC;
};

struct Figure1Args {
  double mass_neg = 0.0, bf10 = 1.0, scale = 0.7071067811865476;
};

struct LindleyArgs {
  double alpha = 0.05, posterior = 0.95, interval = 1.0, sigma = 1.0, prior_h0 = 0.5;
};

struct SimplArgs {
  double epsilon = 0.07, p = 0.01;
};

struct SweepArgs {
  double lambda = 1.0, g = 1.0;
  std::vector<long> n_grid;
};

struct McArgs {
  long n = 1, trials = 1;
  double g = 1.0, prior_h0 = 0.5;
  std::uint64_t seed = 0;
  std::string rule = "alpha:0.05";
  std::string h1_prior = "normal";
  double uniform_range = 1.0;
};

decisions::DecisionRule parse_rule(const std::string& text, double g_default) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "alpha") return decisions::DecisionRule::fixed_alpha(std::stod(arg));
  if (kind == "bf") return decisions::DecisionRule::bf_threshold(std::stod(arg), g_default);
  if (kind == "weighted") return decisions::DecisionRule::weighted(std::stod(arg));
  throw std::domain_error("unknown rule '" + text + "' (expected alpha:A | bf:K | weighted:L)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bayes factors, calibration tables, and decision rules of the "
               "sample-size/evidence conflict"};
  app.name("jlp");
  app.require_subcommand(1);

  TableArgs table_args;
  auto* table_cmd = app.add_subcommand("table", "regenerate a calibration table");
  table_cmd->add_option("name", table_args.name, "table to regenerate")->required();
  table_cmd->add_option("--format", table_args.format, "csv | json | md");
  table_cmd->add_option("--out", table_args.out_path, "write to file instead of stdout");

  auto* bf_cmd = app.add_subcommand("bf", "evaluate a single Bayes factor");
  bf_cmd->require_subcommand(1);

  TwoPropArgs two_prop;
  auto* two_prop_cmd = bf_cmd->add_subcommand("two-prop", "two-proportion odds");
  two_prop_cmd->add_option("--x", two_prop.x)->required();
  two_prop_cmd->add_option("--y", two_prop.y)->required();
  two_prop_cmd->add_option("--x2", two_prop.x2)->required();
  two_prop_cmd->add_option("--y2", two_prop.y2)->required();
  two_prop_cmd->add_flag("--approx", two_prop.approx, "use the large-sample form");

  ZArgs z_args;
  auto* z_cmd = bf_cmd->add_subcommand("z", "point-null Gaussian K");
  z_cmd->add_option("--a", z_args.a, "estimate")->required();
  z_cmd->add_option("--s", z_args.s, "standard error")->required();
  z_cmd->add_option("--m", z_args.m, "prior range")->required();
  z_cmd->add_option("--n", z_args.n, "number of observations");

  TJefArgs t_jef;
  auto* t_jef_cmd = bf_cmd->add_subcommand("t-jeffreys", "1938 t-test K");
  t_jef_cmd->add_option("--t", t_jef.t)->required();
  t_jef_cmd->add_option("--n", t_jef.n)->required();

  TCauchyArgs t_cauchy;
  auto* t_cauchy_cmd = bf_cmd->add_subcommand("t-cauchy", "Cauchy-prior t-test BF10");
  t_cauchy_cmd->add_option("--t", t_cauchy.t)->required();
  t_cauchy_cmd->add_option("--n", t_cauchy.n)->required();
  t_cauchy_cmd->add_option("--scale", t_cauchy.scale, "Cauchy prior scale");

  PeriArgs peri;
  auto* peri_cmd = bf_cmd->add_subcommand("perinull", "peri-null over alternative");
  peri_cmd->add_option("--z", peri.z);
  peri_cmd->add_option("--n", peri.n);
  peri_cmd->add_option("--g0", peri.g0)->required();
  peri_cmd->add_option("--g1", peri.g1)->required();
  peri_cmd->add_option("--curve", peri.curve,
                       "emit the (n, BF) series over this n grid instead")
      ->delimiter(',');
  peri_cmd->add_option("--alpha", peri.alpha, "alpha pinning z for --curve");
  peri_cmd->add_flag("--two-sided", peri.two_sided, "z = Phi^-1(1-alpha/2) for --curve");

  UniArgs uni;
  auto* uni_cmd = bf_cmd->add_subcommand("uniformity", "uniformity test K");
  uni_cmd->add_option("--n", uni.n)->required();
  uni_cmd->add_option("--a0", uni.a0)->required();
  uni_cmd->add_option("--c", uni.c, "prior-range constant");

  auto* construct_cmd = app.add_subcommand("construct", "solve a published construction");
  construct_cmd->require_subcommand(1);

  Figure1Args fig1;
  auto* fig1_cmd = construct_cmd->add_subcommand(
      "figure1", "(t, n) with fixed direction mass and target BF10");
  fig1_cmd->add_option("--mass-neg", fig1.mass_neg)->required();
  fig1_cmd->add_option("--bf10", fig1.bf10)->required();
  fig1_cmd->add_option("--scale", fig1.scale);

  LindleyArgs lindley;
  auto* lindley_cmd = construct_cmd->add_subcommand(
      "lindley", "smallest n with significant p yet high posterior P(H0)");
  lindley_cmd->add_option("--alpha", lindley.alpha);
  lindley_cmd->add_option("--posterior", lindley.posterior);
  lindley_cmd->add_option("--I", lindley.interval);
  lindley_cmd->add_option("--sigma", lindley.sigma);
  lindley_cmd->add_option("--prior-h0", lindley.prior_h0);

  SimplArgs simpl;
  auto* simpl_cmd = construct_cmd->add_subcommand(
      "simplissimus", "smallest n making a near-null proportion significant");
  simpl_cmd->add_option("--epsilon", simpl.epsilon)->required();
  simpl_cmd->add_option("--p", simpl.p)->required();

  auto* decision_cmd = app.add_subcommand("decision", "frequentist error analysis");
  decision_cmd->require_subcommand(1);

  SweepArgs sweep;
  auto* sweep_cmd = decision_cmd->add_subcommand("sweep", "lambda-optimal c*, alpha*, beta* per n");
  sweep_cmd->add_option("--lambda", sweep.lambda);
  sweep_cmd->add_option("--g", sweep.g);
  sweep_cmd->add_option("--n", sweep.n_grid, "comma-separated n grid")
      ->required()
      ->delimiter(',');

  McArgs mc;
  auto* mc_cmd = decision_cmd->add_subcommand("mc", "seeded mistake-counting run");
  mc_cmd->add_option("--n", mc.n)->required();
  mc_cmd->add_option("--g", mc.g);
  mc_cmd->add_option("--prior-h0", mc.prior_h0);
  mc_cmd->add_option("--trials", mc.trials)->required();
  mc_cmd->add_option("--seed", mc.seed);
  mc_cmd->add_option("--rule", mc.rule, "alpha:A | bf:K | weighted:L");
  mc_cmd->add_option("--h1-prior", mc.h1_prior, "normal | uniform");
  mc_cmd->add_option("--uniform-range", mc.uniform_range,
                     "half-range of the uniform H1 prior");

  auto* report_cmd = app.add_subcommand("report", "reproduction report");
  std::string report_action;
  std::string report_format = "text";
  report_cmd->add_option("action", report_action, "reproduce")->required();
  report_cmd->add_option("--format", report_format, "text | json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (table_cmd->parsed())
      return emit_table(table_args.name, table_args.format, table_args.out_path, out, err);

    if (two_prop_cmd->parsed()) {
      const proportions::TwoProportionCounts counts{two_prop.x, two_prop.y,
                                                    two_prop.x2, two_prop.y2};
      const EvidenceRatio ratio = two_prop.approx
                                      ? proportions::approx_two_proportion_odds(counts)
                                      : proportions::exact_two_proportion_odds(counts);
      json inputs{{"x", two_prop.x}, {"y", two_prop.y}, {"x2", two_prop.x2},
                  {"y2", two_prop.y2}, {"approx", two_prop.approx}};
      out << bf_json("two-prop", inputs, ratio).dump(2) << "\n";
      return kExitOk;
    }
    if (z_cmd->parsed()) {
      const EvidenceRatio ratio =
          gaussian::point_null_gaussian_bf({z_args.a, z_args.s, z_args.n, z_args.m});
      json inputs{{"a", z_args.a}, {"s", z_args.s}, {"n", z_args.n}, {"m", z_args.m}};
      out << bf_json("z", inputs, ratio).dump(2) << "\n";
      return kExitOk;
    }
    if (t_jef_cmd->parsed()) {
      const EvidenceRatio ratio = student::jeffreys1938_t_bf({t_jef.t, t_jef.n});
      json inputs{{"t", t_jef.t}, {"n", t_jef.n}};
      out << bf_json("t-jeffreys", inputs, ratio).dump(2) << "\n";
      return kExitOk;
    }
    if (t_cauchy_cmd->parsed()) {
      const EvidenceRatio ratio =
          student::cauchy_t_bf10({t_cauchy.t, t_cauchy.n}, {t_cauchy.scale});
      json inputs{{"t", t_cauchy.t}, {"n", t_cauchy.n}, {"scale", t_cauchy.scale}};
      out << bf_json("t-cauchy", inputs, ratio).dump(2) << "\n";
      return kExitOk;
    }
    if (peri_cmd->parsed()) {
      if (!peri.curve.empty()) {
        const auto curve = gaussian::perinull_curve(
            peri.g0, peri.g1, peri.alpha, peri.curve,
            peri.two_sided ? gaussian::Sidedness::Two : gaussian::Sidedness::One);
        json result;
        result["command"] = "bf perinull";
        result["inputs"] = json{{"g0", peri.g0}, {"g1", peri.g1},
                                {"alpha", peri.alpha},
                                {"sidedness", peri.two_sided ? "two" : "one"}};
        json series = json::array();
        for (const auto& [n, bf] : curve) series.push_back(json::array({n, sig12(bf)}));
        result["results"] = json{{"curve", series},
                                 {"bound", sig12(std::sqrt(peri.g1 / peri.g0))}};
        out << result.dump(2) << "\n";
        return kExitOk;
      }
      const EvidenceRatio ratio = gaussian::perinull_bf({peri.z, peri.n, peri.g0, peri.g1});
      json inputs{{"z", peri.z}, {"n", peri.n}, {"g0", peri.g0}, {"g1", peri.g1}};
      out << bf_json("perinull", inputs, ratio).dump(2) << "\n";
      return kExitOk;
    }
    if (uni_cmd->parsed()) {
      const auto result = gaussian::uniformity_bf({uni.n, uni.a0, uni.c});
      json inputs{{"n", uni.n}, {"a0", uni.a0}, {"c", uni.c}};
      json payload = bf_json("uniformity", inputs, result.bf);
      payload["results"]["chi_square"] = sig12(result.chi_square);
      out << payload.dump(2) << "\n";
      return kExitOk;
    }

    if (fig1_cmd->parsed()) {
      const auto triple =
          student::paradox_triple_construct(fig1.mass_neg, fig1.bf10, {fig1.scale});
      json result;
      result["command"] = "construct figure1";
      result["inputs"] = json{{"mass_neg", fig1.mass_neg}, {"bf10", fig1.bf10},
                              {"scale", fig1.scale}};
      result["results"] = json{
          {"t", sig12(triple.t)},
          {"n", triple.n},
          {"achieved_bf10", sig12(triple.achieved_bf10)},
          {"achieved_mass_negative", sig12(triple.achieved_mass_negative)},
          {"bf10_relative_gap",
           sig12(std::fabs(triple.achieved_bf10 - fig1.bf10) / fig1.bf10)}};
      out << result.dump(2) << "\n";
      return kExitOk;
    }
    if (lindley_cmd->parsed()) {
      const auto constructed = gaussian::lindley_construct(
          lindley.alpha, lindley.posterior, lindley.interval, lindley.sigma,
          lindley.prior_h0);
      json result;
      result["command"] = "construct lindley";
      result["inputs"] = json{{"alpha", lindley.alpha}, {"posterior", lindley.posterior},
                              {"I", lindley.interval}, {"sigma", lindley.sigma},
                              {"prior_h0", lindley.prior_h0}};
      result["results"] = json{{"n", constructed.n},
                               {"continuous_n", sig12(constructed.continuous_n)},
                               {"K_at_n", sig12(constructed.k_at_n)},
                               {"posterior_h0", sig12(constructed.posterior_h0)}};
      out << result.dump(2) << "\n";
      return kExitOk;
    }
    if (simpl_cmd->parsed()) {
      const auto constructed = proportions::simplissimus_construct(simpl.epsilon, simpl.p);
      json result;
      result["command"] = "construct simplissimus";
      result["inputs"] = json{{"epsilon", simpl.epsilon}, {"p", simpl.p}};
      result["results"] =
          json{{"n", constructed.n},
               {"s", constructed.s},
               {"p", sig12(constructed.p)},
               {"sample_proportion",
                sig12(static_cast<double>(constructed.s) / constructed.n)},
               {"log_likelihood_ratio_null_over_alt",
                sig12(constructed.log_likelihood_ratio)}};
      out << result.dump(2) << "\n";
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      json series = json::array();
      for (long n : sweep.n_grid) {
        const auto optimum = decisions::minimize_weighted_errors(sweep.lambda, n, sweep.g);
        series.push_back(json{{"n", n},
                              {"c_star", sig12(optimum.critical_value)},
                              {"alpha_star", sig12(optimum.alpha)},
                              {"beta_star", sig12(optimum.beta)}});
      }
      json result;
      result["command"] = "decision sweep";
      result["inputs"] = json{{"lambda", sweep.lambda}, {"g", sweep.g}};
      result["results"] = json{{"series", series}};
      out << result.dump(2) << "\n";
      return kExitOk;
    }
    if (mc_cmd->parsed()) {
      decisions::TrialConfig config;
      config.n = mc.n;
      config.prior_variance_g = mc.g;
      config.prior_prob_h0 = mc.prior_h0;
      config.trials = mc.trials;
      config.seed = mc.seed;
      if (mc.h1_prior == "uniform") {
        config.h1_prior = decisions::H1PriorKind::UniformRange;
        config.uniform_half_range = mc.uniform_range;
      } else if (mc.h1_prior != "normal") {
        err << "unknown --h1-prior: " << mc.h1_prior << "\n";
        return kExitUsage;
      }
      const auto rule = parse_rule(mc.rule, mc.g);
      const auto tally = decisions::run_mistake_count(config, rule);
      json result;
      result["command"] = "decision mc";
      result["inputs"] = json{{"n", mc.n}, {"g", mc.g}, {"prior_h0", mc.prior_h0},
                              {"trials", mc.trials}, {"rule", mc.rule},
                              {"h1_prior", mc.h1_prior}};
      result["results"] = json{{"type1", tally.type1},
                               {"type2", tally.type2},
                               {"total", tally.total},
                               {"h0_true_trials", tally.h0_true_trials},
                               {"trials", tally.trials}};
      result["seed"] = mc.seed;
      out << result.dump(2) << "\n";
      return kExitOk;
    }

    if (report_cmd->parsed()) {
      if (report_action != "reproduce") {
        err << "unknown report action: " << report_action << "\n";
        return kExitUsage;
      }
      const auto report = repro::run();
      if (report_format == "json") {
        json rows = json::array();
        for (const auto& row : report.rows) {
          json jrow{{"table", row.table_id},
                    {"row", row.row_key},
                    {"paper", sig12(row.paper_value)},
                    {"computed", sig12(row.computed_value)},
                    {"tolerance", sig12(row.tolerance)},
                    {"mode", row.mode == repro::Mode::Rel ? "rel" : "abs"},
                    {"status", row.status == repro::Status::Pass   ? "pass"
                               : row.status == repro::Status::Fail ? "fail"
                                                                   : "flagged"}};
          if (!row.note.empty()) jrow["note"] = row.note;
          rows.push_back(jrow);
        }
        json result;
        result["command"] = "report reproduce";
        result["inputs"] = json::object();
        result["results"] = json{{"rows", rows},
                                 {"passed", report.passed},
                                 {"failed", report.failed},
                                 {"flagged", report.flagged}};
        out << result.dump(2) << "\n";
      } else {
        for (const auto& row : report.rows) {
          if (row.status == repro::Status::Pass) continue;
          const char* label = row.status == repro::Status::Fail ? "FAIL" : "flagged";
          out << label << "  " << row.table_id << "/" << row.row_key << "  paper="
              << sig(row.paper_value, 8) << "  computed=" << sig(row.computed_value, 8)
              << "  delta=" << sig(std::fabs(row.computed_value - row.paper_value), 3)
              << (row.mode == repro::Mode::Rel ? " (rel tol " : " (abs tol ")
              << sig(row.tolerance, 3) << ")";
          if (!row.note.empty()) out << "  -- " << row.note;
          out << "\n";
        }
        out << report.passed << " passed, " << report.failed << " failed, "
            << report.flagged << " flagged (documented source discrepancies)\n";
      }
      return report.ok() ? kExitOk : kExitReproFailure;
    }

    err << "no command executed\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "invalid arguments: " << e.what() << "\n";
    return kExitUsage;
  } catch (const QuadratureError& e) {
    err << "numeric failure: " << e.what()
        << " (best estimate " << e.best_estimate.value << " +/- "
        << e.best_estimate.abs_error_estimate << ")\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
}

}  // namespace jlp::cli
