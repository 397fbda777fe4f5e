#pragma once

#include <json.hpp>

#include "flagorbit/classify.hpp"
#include "flagorbit/oracle.hpp"
#include "flagorbit/shapes.hpp"

namespace flagorbit {

inline nlohmann::json oracle_json(const OracleReport& rep) {
  return nlohmann::json{
      {"status", oracle_status_name(rep.status)},
      {"expected_nullity", rep.expected_nullity},
      {"min_nullity", rep.min_nullity},
      {"nullities", rep.nullities},
      {"prime", rep.prime},
      {"seed", rep.seed},
      {"detail", rep.detail},
  };
}

/// Stable classify payload:
///   {input, normalized, verdict, rule, citation, trace[], dims{...}, oracle?}
/// `dims` describes the product as given; the oracle section appears only
/// when a report is supplied.
inline nlohmann::json report_json(const Classification& c,
                                  const OracleReport* oracle = nullptr) {
  nlohmann::json trace = nlohmann::json::array();
  for (const ChainStep& step : c.chain)
    trace.push_back({{"rule", rewrite_rule_name(step.rule)},
                     {"before", format_product(step.before)},
                     {"after", format_product(step.after)}});
  const DimensionBudget dims = dimension_budget(c.input);
  nlohmann::json out{
      {"input", format_product(c.input)},
      {"normalized", format_product(c.normalized)},
      {"verdict", verdict_name(c.verdict)},
      {"rule", c.rule},
      {"citation", c.citation},
      {"trace", std::move(trace)},
      {"dims",
       {{"n", dims.n},
        {"m", c.input.arity()},
        {"dim_product", dims.dim_product},
        {"expected_stab", dims.expected_stab}}},
  };
  if (oracle != nullptr) out["oracle"] = oracle_json(*oracle);
  return out;
}

}  // namespace flagorbit
