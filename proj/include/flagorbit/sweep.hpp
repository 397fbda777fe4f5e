#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagorbit/classify.hpp"
#include "flagorbit/oracle.hpp"
#include "flagorbit/shapes.hpp"

namespace flagorbit {

struct SweepOptions {
  Int min_n = 2;
  Int max_n = 6;
  Int max_m = 4;           // factors per product, from 2 up
  bool self_only = false;  // restrict to powers of a single shape
  bool run_oracle = false;
  OracleOptions oracle;
  Int threads = 0;  // 0: one per hardware thread
};

struct SweepRow {
  std::string spec;  // canonical rendering; unique key, rows sort by it
  Int n = 0;
  Int m = 0;
  Int dim_product = 0;
  Int expected_stab = 0;
  Verdict verdict = Verdict::Unknown;
  std::string rule;
  std::optional<OracleReport> oracle;
  /// Concordance between classifier and oracle: nullopt when there is no
  /// oracle signal to compare (oracle off, degenerate sample, or verdict
  /// Unknown); false exactly on a hard conflict.
  std::optional<bool> agree;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // sorted by spec text
  Int disagreements = 0;
  Int unknown = 0;
};

/// Enumerates products over ambient dimensions [min_n, max_n]: all multisets
/// of at most max_m nonempty shapes whose dimension budget allows a dense
/// orbit, plus every self-power even when the budget already rules density
/// out (those document the dimension-bound rule).  Classification always
/// runs; the oracle runs per row when enabled, distributed over a worker
/// pool.  Output is deterministic for fixed options regardless of thread
/// count.
[[nodiscard]] SweepResult run_sweep(const SweepOptions& opts);

/// CSV with the frozen column set
///   spec,n,m,dim_product,expected_stab,classifier_verdict,rule_fired,
///   oracle_min_nullity,oracle_verdict,agree
/// The spec field is quoted; oracle columns are empty when the oracle did
/// not run; agree is yes/no or empty when there is nothing to compare.
[[nodiscard]] std::string sweep_csv(const SweepResult& result);

}  // namespace flagorbit
