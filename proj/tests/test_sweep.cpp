#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "flagorbit/sweep.hpp"

using namespace flagorbit;

TEST_CASE("pairs are all dense") {
  SweepOptions opts;
  opts.min_n = 2;
  opts.max_n = 4;
  opts.max_m = 2;
  const SweepResult r = run_sweep(opts);
  CHECK(!r.rows.empty());
  CHECK(r.unknown == 0);
  CHECK(r.disagreements == 0);
  for (const SweepRow& row : r.rows) {
    CAPTURE(row.spec);
    CHECK(row.m == 2);
    CHECK(row.verdict == Verdict::Dense);
  }
}

TEST_CASE("rows are unique, sorted, and within bounds") {
  SweepOptions opts;
  opts.min_n = 3;
  opts.max_n = 5;
  opts.max_m = 3;
  const SweepResult r = run_sweep(opts);
  std::set<std::string> seen;
  for (const SweepRow& row : r.rows) {
    CHECK(seen.insert(row.spec).second);
    CHECK(row.n >= 3);
    CHECK(row.n <= 5);
    CHECK(row.m >= 2);
    CHECK(row.m <= 3);
    // Either the budget permits density or the row is a self-power kept to
    // document the dimension bound.
    if (row.expected_stab < 0) CHECK(row.verdict == Verdict::Sparse);
  }
  for (std::size_t i = 0; i + 1 < r.rows.size(); ++i)
    CHECK(r.rows[i].spec < r.rows[i + 1].spec);
  // The sweep contains the spec it promises: every self power up to max_m.
  CHECK(seen.count("F(1,2;4)^3") == 1);
  CHECK(seen.count("F(1;3)^3") == 1);
  // And mixed products within budget.
  CHECK(seen.count("F(1;4) x F(2;4)") == 1);
}

TEST_CASE("self-only restricts the enumeration") {
  SweepOptions opts;
  opts.min_n = 4;
  opts.max_n = 4;
  opts.max_m = 3;
  opts.self_only = true;
  const SweepResult r = run_sweep(opts);
  for (const SweepRow& row : r.rows) {
    CAPTURE(row.spec);
    // A self power's canonical text never contains the separator.
    CHECK(row.spec.find(" x ") == std::string::npos);
  }
  CHECK(!r.rows.empty());
}

TEST_CASE("classifier and oracle concur on a small sweep") {
  SweepOptions opts;
  opts.min_n = 2;
  opts.max_n = 5;
  opts.max_m = 4;
  opts.self_only = true;
  opts.run_oracle = true;
  opts.oracle.trials = 2;
  const SweepResult r = run_sweep(opts);
  CHECK(r.disagreements == 0);
  for (const SweepRow& row : r.rows) {
    CAPTURE(row.spec);
    if (row.verdict == Verdict::Unknown) continue;
    REQUIRE(row.oracle.has_value());
    if (!row.agree.has_value()) continue;
    CHECK(*row.agree);
  }
}

TEST_CASE("agreement column semantics") {
  SweepOptions opts;
  opts.min_n = 4;
  opts.max_n = 4;
  opts.max_m = 4;
  opts.self_only = true;
  opts.run_oracle = true;
  opts.oracle.trials = 2;
  const SweepResult r = run_sweep(opts);
  bool saw_inconclusive = false;
  for (const SweepRow& row : r.rows) {
    if (!row.oracle) continue;
    const OracleStatus s = row.oracle->status;
    if (s == OracleStatus::Inconclusive) {
      saw_inconclusive = true;
      // Sampling cannot contradict a sparse verdict it cannot test.
      if (row.verdict == Verdict::Sparse) CHECK(row.agree.value_or(false));
    }
    if (row.verdict == Verdict::Unknown) CHECK(!row.agree.has_value());
  }
  CHECK(saw_inconclusive);  // Gr(2,4)^4 lives in this range
}

TEST_CASE("csv shape") {
  SweepOptions opts;
  opts.min_n = 3;
  opts.max_n = 3;
  opts.max_m = 3;
  const SweepResult r = run_sweep(opts);
  const std::string csv = sweep_csv(r);
  std::istringstream in(csv);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line ==
        "spec,n,m,dim_product,expected_stab,classifier_verdict,rule_fired,"
        "oracle_min_nullity,oracle_verdict,agree");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CAPTURE(line);
    CHECK(line.front() == '"');
    // spec,5 numeric/word fields, then two empty oracle columns and empty
    // agree when the oracle is off: trailing commas survive.
    const std::string tail = line.substr(line.rfind('"'));
    CHECK(std::count(tail.begin(), tail.end(), ',') == 9);
    CHECK(line.substr(line.size() - 3) == ",,,");
  }
  CHECK(rows == r.rows.size());
}

TEST_CASE("thread count changes nothing") {
  SweepOptions a;
  a.min_n = 2;
  a.max_n = 5;
  a.max_m = 3;
  a.run_oracle = true;
  a.oracle.trials = 1;
  a.threads = 1;
  SweepOptions b = a;
  b.threads = 7;
  const std::string csv_a = sweep_csv(run_sweep(a));
  const std::string csv_b = sweep_csv(run_sweep(b));
  CHECK(csv_a == csv_b);
}
