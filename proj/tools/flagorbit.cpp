#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "flagorbit/classify.hpp"
#include "flagorbit/modm.hpp"
#include "flagorbit/oracle.hpp"
#include "flagorbit/parse.hpp"
#include "flagorbit/report.hpp"
#include "flagorbit/sweep.hpp"

namespace {

using namespace flagorbit;

// Exit codes, kept stable for scripting:
//   0 success / decisive,  2 bad input or parameters,  3 verdict Unknown,
//   4 SparseEvidence,      5 Inconclusive,             6 DegenerateSample,
//   7 sweep found a classifier/oracle disagreement.
constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitSparseEvidence = 4;
constexpr int kExitInconclusive = 5;
constexpr int kExitDegenerate = 6;
constexpr int kExitDisagreement = 7;

int fail_input(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return kExitBadInput;
}

std::optional<ProductSpec> parse_or_report(const std::string& text) {
  try {
    return parse_product(text);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    std::cerr << "  " << text << '\n';
    std::cerr << "  " << std::string(e.position(), ' ') << "^\n";
    return std::nullopt;
  }
}

/// --seed beats FLAG_ORBIT_SEED beats the built-in default.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed) {
  if (flag_seed) return *flag_seed;
  if (const char* env = std::getenv("FLAG_ORBIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::cerr << "warning: ignoring non-numeric FLAG_ORBIT_SEED\n";
    }
  }
  return kDefaultSeed;
}

bool check_prime(std::int64_t p) {
  if (p >= kMinOraclePrime && p < (std::int64_t{1} << 31) && is_prime(p)) return true;
  std::cerr << "error: --prime must be a prime in [2^20, 2^31)\n";
  return false;
}

int oracle_exit(OracleStatus status) {
  switch (status) {
    case OracleStatus::DenseCertified: return kExitOk;
    case OracleStatus::SparseEvidence: return kExitSparseEvidence;
    case OracleStatus::Inconclusive: return kExitInconclusive;
    case OracleStatus::DegenerateSample: return kExitDegenerate;
  }
  return kExitBadInput;
}

const char* shout(Verdict v) {
  switch (v) {
    case Verdict::Dense: return "DENSE";
    case Verdict::Sparse: return "SPARSE";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

void print_human(const Classification& c, const OracleReport* rep) {
  std::cout << shout(c.verdict) << " via " << c.rule << " (" << c.citation << ")\n";
  const DimensionBudget dims = dimension_budget(c.input);
  std::cout << "  n=" << dims.n << " m=" << c.input.arity() << " dim=" << dims.dim_product
            << " expected_stab=" << dims.expected_stab << '\n';
  for (const ChainStep& step : c.chain)
    std::cout << "  " << format_product(step.before) << " => " << format_product(step.after)
              << "  [" << rewrite_rule_name(step.rule) << "]\n";
  if (!c.chain.empty()) std::cout << "  normalized: " << format_product(c.normalized) << '\n';
  if (rep != nullptr)
    std::cout << "  oracle: " << oracle_status_name(rep->status) << ", min nullity "
              << rep->min_nullity << " vs expected " << rep->expected_nullity << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Decides whether the diagonal PGL(n) action on a product of partial flag "
      "varieties has a dense orbit"};
  app.require_subcommand(1);

  std::string spec_text;
  std::int64_t prime = kDefaultPrime;
  Int trials = kDefaultTrials;
  std::optional<std::uint64_t> seed_flag;

  auto add_oracle_opts = [&](CLI::App* cmd) {
    cmd->add_option("--prime", prime, "field size for sampling (prime in [2^20, 2^31))");
    cmd->add_option("--trials", trials, "independent samples per product")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed_flag, "sampling seed (also: FLAG_ORBIT_SEED)");
  };

  CLI::App* cmd_classify = app.add_subcommand("classify", "classify one product");
  cmd_classify->add_option("spec", spec_text, "e.g. \"F(1,2;4)^3\" or \"Gr(2,4) x F(1,3;4)\"")
      ->required();
  bool with_oracle = false;
  bool as_json = false;
  cmd_classify->add_flag("--oracle", with_oracle, "also run the sampling oracle");
  cmd_classify->add_flag("--json", as_json, "machine-readable report instead of text");
  add_oracle_opts(cmd_classify);

  CLI::App* cmd_oracle = app.add_subcommand("oracle", "sampling oracle for one product");
  cmd_oracle->add_option("spec", spec_text, "product to sample")->required();
  add_oracle_opts(cmd_oracle);

  CLI::App* cmd_sweep = app.add_subcommand("sweep", "classify every product in a range");
  SweepOptions sweep_opts;
  std::string out_path;
  bool sweep_oracle = false;
  cmd_sweep->add_option("--min-n", sweep_opts.min_n, "smallest ambient dimension");
  cmd_sweep->add_option("--max-n", sweep_opts.max_n, "largest ambient dimension");
  cmd_sweep->add_option("--max-m", sweep_opts.max_m, "largest factor count");
  cmd_sweep->add_flag("--self-only", sweep_opts.self_only, "only powers of one shape");
  cmd_sweep->add_flag("--oracle", sweep_oracle, "run the oracle on every row");
  cmd_sweep->add_option("--threads", sweep_opts.threads, "worker threads (0 = auto)");
  cmd_sweep->add_option("-o,--out,--output", out_path, "write CSV here instead of stdout");
  add_oracle_opts(cmd_sweep);

  CLI::App* cmd_witness = app.add_subcommand(
      "witness", "explicit configuration analysis on F(t,n-1;n)^(t+1)");
  Int wt = 3;
  Int wn = 12;
  cmd_witness->add_option("--t,-t,--steps", wt, "t >= 3")->required();
  cmd_witness->add_option("--n,-n,--ambient", wn, "n >= 2t+1")->required();
  add_oracle_opts(cmd_witness);

  CLI11_PARSE(app, argc, argv);
  const std::uint64_t seed = resolve_seed(seed_flag);
  if (!check_prime(prime)) return kExitBadInput;
  const OracleOptions oracle_opts{prime, trials, seed};

  if (*cmd_classify) {
    const auto spec = parse_or_report(spec_text);
    if (!spec) return kExitBadInput;
    const Classification c = classify(*spec);
    std::optional<OracleReport> rep;
    if (with_oracle) rep = oracle_density(*spec, oracle_opts);
    const OracleReport* rep_ptr = rep ? &*rep : nullptr;
    if (as_json)
      std::cout << report_json(c, rep_ptr).dump(2) << '\n';
    else
      print_human(c, rep_ptr);
    return c.verdict == Verdict::Unknown ? kExitUnknown : kExitOk;
  }

  if (*cmd_oracle) {
    const auto spec = parse_or_report(spec_text);
    if (!spec) return kExitBadInput;
    const OracleReport rep = oracle_density(*spec, oracle_opts);
    nlohmann::json out = oracle_json(rep);
    out["input"] = format_product(*spec);
    std::cout << out.dump(2) << '\n';
    return oracle_exit(rep.status);
  }

  if (*cmd_sweep) {
    sweep_opts.run_oracle = sweep_oracle;
    sweep_opts.oracle = oracle_opts;
    SweepResult result;
    try {
      result = run_sweep(sweep_opts);
    } catch (const std::invalid_argument& e) {
      return fail_input(e.what());
    }
    const std::string csv = sweep_csv(result);
    if (out_path.empty()) {
      std::cout << csv;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) return fail_input("cannot open " + out_path);
      out << csv;
    }
    std::cerr << result.rows.size() << " products, " << result.unknown << " unknown, "
              << result.disagreements << " disagreements\n";
    return result.disagreements > 0 ? kExitDisagreement : kExitOk;
  }

  if (*cmd_witness) {
    if (wt < 3 || wn < 2 * wt + 1)
      return fail_input("witness needs t >= 3 and n >= 2t+1");
    const ProductSpec spec =
        self_product(FlagShape(wn, {wt, wn - 1}), wt + 1);
    if (wn < wt * (wt + 1)) {
      // Below the threshold n = t(t+1) this family has no dense orbit; no
      // explicit configuration exists, so sampling supplies the evidence.
      const OracleReport rep = oracle_density(spec, oracle_opts);
      nlohmann::json out = oracle_json(rep);
      out["spec"] = format_product(spec);
      out["t"] = wt;
      out["n"] = wn;
      out["dense_from"] = wt * (wt + 1);
      out["claim"] = "sparse below the threshold n = t(t+1)";
      std::cout << out.dump(2) << '\n';
      return oracle_exit(rep.status);
    }
    const FlagConfig cfg = witness_config(wt, wn, prime);
    const Int nullity = stabilizer_nullity(spec, cfg, prime);
    const Int formula = witness_nullity_formula(wt, wn);
    const nlohmann::json out{
        {"spec", format_product(spec)},
        {"t", wt},
        {"n", wn},
        {"prime", prime},
        {"nullity", nullity},
        {"formula", formula},
        {"matches", nullity == formula},
        {"expected_nullity", wn * wn - dim_product(spec)},
    };
    std::cout << out.dump(2) << '\n';
    return nullity == formula ? kExitOk : 1;
  }

  return kExitBadInput;
}
