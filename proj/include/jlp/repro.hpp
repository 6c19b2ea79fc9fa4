#pragma once

#include <functional>
#include <string>
#include <vector>

namespace jlp::repro {

enum class Mode { Abs, Rel };
enum class Status { Pass, Fail, Flagged };

// One source-value reproduction check. Flagged rows are documented
// discrepancies in the source tables themselves; they report the
// computed value but do not gate the overall result.
struct ReproRow {
  std::string table_id;
  std::string row_key;
  double paper_value = 0.0;
  double computed_value = 0.0;
  double tolerance = 0.0;
  Mode mode = Mode::Abs;
  Status status = Status::Pass;
  std::string note;  // set on flagged rows: why the source cell is off
};

// Fixture side of a row: everything except the computed value.
struct Fixture {
  const char* table_id;
  const char* row_key;
  double paper_value;
  double tolerance;
  Mode mode;
  bool flagged;
  const char* note;
};

const std::vector<Fixture>& fixtures();

// Injection point for the mutation check: when set, replaces the t-test
// Bayes factor used for the Table 3 rows.
struct Hooks {
  std::function<double(double t, long n)> t_test_bf;  // K(t, n)
};

struct Report {
  std::vector<ReproRow> rows;
  int passed = 0;
  int failed = 0;
  int flagged = 0;

  bool ok() const { return failed == 0; }
};

Report run(const Hooks& hooks = {});

}  // namespace jlp::repro
