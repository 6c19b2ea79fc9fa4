#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "jlp/cli.hpp"
#include "jlp/repro.hpp"

using jlp::cli::run;
using nlohmann::json;

namespace {

struct Invocation {
  int exit_code;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit code contract") {
  CHECK(invoke({"table", "jeffreys1936"}).exit_code == 0);
  CHECK(invoke({"table", "nonsense"}).exit_code == 2);
  CHECK(invoke({"table", "jeffreys1936", "--format", "yaml"}).exit_code == 2);
  CHECK(invoke({"table", "jeffreys1936", "--out", "/nonexistent-dir/x.csv"}).exit_code == 3);
  CHECK(invoke({"bf", "t-cauchy", "--n", "20"}).exit_code == 2);          // missing --t
  CHECK(invoke({"bf", "perinull", "--z", "1", "--n", "10", "--g0", "1", "--g1", "0.1"})
            .exit_code == 2);                                             // g0 >= g1
  CHECK(invoke({"construct", "figure1", "--mass-neg", "0.02", "--bf10", "1000"})
            .exit_code == 4);                                             // unattainable
  CHECK(invoke({"--help"}).exit_code == 0);
}

TEST_CASE("outputs are byte-identical across invocations") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"table", "jeffreys1935", "--format", "csv"},
        std::vector<std::string>{"bf", "t-jeffreys", "--t", "2.1", "--n", "25"},
        std::vector<std::string>{"decision", "mc", "--n", "100", "--trials", "5000",
                                 "--seed", "42", "--rule", "bf:1"}}) {
    const Invocation first = invoke(args);
    const Invocation second = invoke(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("table rendering") {
  const Invocation md = invoke({"table", "jeffreys1936"});
  CHECK(md.out.find("| n | b/sigma_b |") != std::string::npos);
  CHECK(md.out.find("| 100000 | 3.33 |") != std::string::npos);

  const Invocation csv = invoke({"table", "jeffreys1938t", "--format", "csv"});
  CHECK(csv.out.find("10,0.522") != std::string::npos);
  CHECK(csv.out.find("n,K") != std::string::npos);

  const Invocation js = invoke({"table", "jeffreys1938chi2", "--format", "json"});
  const json parsed = json::parse(js.out);
  CHECK(parsed["command"] == "table");
  CHECK(parsed["results"]["rows"].size() == 11);
  CHECK(parsed["results"]["rows"][0].contains("K_narrow"));

  // decimal separator is '.' regardless of environment
  CHECK(csv.out.find(',') != std::string::npos);
  CHECK(csv.out.find("0.522") != std::string::npos);
}

TEST_CASE("bf commands emit the documented JSON schema") {
  const Invocation cauchy =
      invoke({"bf", "t-cauchy", "--t", "2.321", "--n", "20", "--scale", "0.70710678"});
  CHECK(cauchy.exit_code == 0);
  const json parsed = json::parse(cauchy.out);
  CHECK(parsed["command"] == "bf t-cauchy");
  CHECK(parsed["inputs"]["n"] == 20);
  const double bf = parsed["results"]["bf"].get<double>();
  CHECK(std::fabs(bf - 2.0) / 2.0 <= 0.02);
  CHECK(parsed.contains("log_bf"));
  CHECK(parsed["results"]["orientation"] == "BF10");

  const Invocation peri = invoke({"bf", "perinull", "--z", "1.6449", "--n", "100000000",
                                  "--g0", "0.1", "--g1", "1"});
  const json peri_json = json::parse(peri.out);
  CHECK(std::fabs(peri_json["results"]["bf"].get<double>() - 3.1623) <= 1e-3);

  const Invocation tp = invoke({"bf", "two-prop", "--x", "20", "--y", "20", "--x2", "20",
                                "--y2", "20", "--approx"});
  const json tp_json = json::parse(tp.out);
  CHECK(std::fabs(tp_json["results"]["bf"].get<double>() - 3.57) / 3.57 <= 0.01);
  CHECK(tp_json["results"]["orientation"] == "BF01");

  const Invocation curve = invoke({"bf", "perinull", "--g0", "0.1", "--g1", "1",
                                   "--alpha", "0.05", "--curve", "1,10,100000000"});
  const json curve_json = json::parse(curve.out);
  CHECK(curve_json["results"]["curve"].size() == 3);
  CHECK(std::fabs(curve_json["results"]["bound"].get<double>() - std::sqrt(10.0)) <= 1e-8);

  const Invocation z = invoke({"bf", "z", "--a", "0", "--s", "0.5", "--m", "1"});
  const json z_json = json::parse(z.out);
  CHECK(z_json["results"]["orientation"] == "BF01");
  CHECK(z_json["results"].contains("warning"));  // s > m/10 validity guard

  const Invocation uni = invoke({"bf", "uniformity", "--n", "100", "--a0", "0",
                                 "--c", "1.156"});
  const json uni_json = json::parse(uni.out);
  CHECK(std::fabs(uni_json["results"]["bf"].get<double>() - 4.61) <= 0.005);
  CHECK(uni_json["results"]["chi_square"].get<double>() == 0.0);
}

TEST_CASE("construct commands") {
  const Invocation fig1 = invoke({"construct", "figure1", "--mass-neg", "0.02041783",
                                  "--bf10", "1"});
  CHECK(fig1.exit_code == 0);
  const json fig1_json = json::parse(fig1.out);
  CHECK(fig1_json["results"]["n"] == 82);
  CHECK(std::fabs(fig1_json["results"]["t"].get<double>() - 2.113) <= 0.001);

  const Invocation simpl =
      invoke({"construct", "simplissimus", "--epsilon", "0.07", "--p", "0.01"});
  const json simpl_json = json::parse(simpl.out);
  const long n = simpl_json["results"]["n"].get<long>();
  CHECK(n >= 16600);
  CHECK(n <= 16800);
  CHECK(std::fabs(simpl_json["results"]["sample_proportion"].get<double>() - 0.51) <= 0.005);
  CHECK(simpl_json["results"]["log_likelihood_ratio_null_over_alt"].get<double>() > 0.0);

  const Invocation lindley =
      invoke({"construct", "lindley", "--alpha", "0.05", "--posterior", "0.95", "--I", "1",
              "--sigma", "1", "--prior-h0", "0.5"});
  const json lindley_json = json::parse(lindley.out);
  CHECK(lindley_json["results"]["n"] == 105685);
  CHECK(lindley_json["results"]["posterior_h0"].get<double>() >= 0.95);
}

TEST_CASE("decision commands") {
  const Invocation sweep =
      invoke({"decision", "sweep", "--lambda", "1", "--g", "1", "--n", "10,100,1000"});
  CHECK(sweep.exit_code == 0);
  const json sweep_json = json::parse(sweep.out);
  const auto& series = sweep_json["results"]["series"];
  CHECK(series.size() == 3);
  CHECK(series[0]["alpha_star"].get<double>() >= series[1]["alpha_star"].get<double>());
  CHECK(series[1]["alpha_star"].get<double>() >= series[2]["alpha_star"].get<double>());

  const std::vector<std::string> mc_args = {"decision", "mc", "--n", "1000", "--g", "1",
                                            "--prior-h0", "0.5", "--trials", "20000",
                                            "--seed", "42", "--rule", "bf:1"};
  const Invocation mc = invoke(mc_args);
  const json mc_json = json::parse(mc.out);
  CHECK(mc_json["seed"] == 42);
  CHECK(mc_json["results"]["total"] ==
        mc_json["results"]["type1"].get<long>() + mc_json["results"]["type2"].get<long>());

  std::vector<std::string> alpha_args = mc_args;
  alpha_args.back() = "alpha:0.05";
  const json alpha_json = json::parse(invoke(alpha_args).out);
  CHECK(mc_json["results"]["total"].get<long>() < alpha_json["results"]["total"].get<long>());

  CHECK(invoke({"decision", "mc", "--n", "10", "--trials", "10", "--rule", "bogus:1"})
            .exit_code == 2);
}

TEST_CASE("report reproduce") {
  const Invocation text = invoke({"report", "reproduce"});
  const auto report = jlp::repro::run();
  CHECK(text.exit_code == (report.ok() ? 0 : 1));
  CHECK(text.out.find("passed") != std::string::npos);

  const Invocation js = invoke({"report", "reproduce", "--format", "json"});
  const json parsed = json::parse(js.out);
  CHECK(parsed["command"] == "report reproduce");
  CHECK(parsed.contains("inputs"));
  CHECK(parsed["results"]["passed"].get<int>() >= 40);
  int flagged_with_note = 0;
  for (const auto& row : parsed["results"]["rows"]) {
    const std::vector<std::string> keys = {"table", "row", "paper", "computed",
                                           "tolerance", "mode", "status"};
    for (const auto& key : keys) CHECK(row.contains(key));
    if (row["status"] == "flagged") {
      CHECK(row.contains("note"));
      ++flagged_with_note;
    }
  }
  CHECK(flagged_with_note == json::parse(js.out)["results"]["flagged"].get<int>());
}
