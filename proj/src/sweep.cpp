#include "flagorbit/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

namespace flagorbit {

namespace {

/// All nonempty step vectors inside ambient n, by subset bitmask of 1..n-1.
std::vector<std::vector<Int>> shapes_for(Int n) {
  std::vector<std::vector<Int>> out;
  const Int limit = Int{1} << (n - 1);
  for (Int mask = 1; mask < limit; ++mask) {
    std::vector<Int> ks;
    for (Int k = 1; k < n; ++k)
      if (mask & (Int{1} << (k - 1))) ks.push_back(k);
    out.push_back(std::move(ks));
  }
  return out;
}

void collect_multisets(const std::vector<std::vector<Int>>& shapes,
                       const std::vector<Int>& dims, Int n, Int max_m,
                       std::size_t from, Int dim_so_far, std::vector<std::size_t>& picked,
                       std::vector<std::vector<std::size_t>>& out) {
  if (picked.size() >= 2) out.push_back(picked);
  if (static_cast<Int>(picked.size()) == max_m) return;
  const Int budget = n * n - 1;
  for (std::size_t i = from; i < shapes.size(); ++i) {
    const Int next = dim_so_far + dims[i];
    if (next > budget) continue;  // only density-eligible products
    picked.push_back(i);
    collect_multisets(shapes, dims, n, max_m, i, next, picked, out);
    picked.pop_back();
  }
}

}  // namespace

SweepResult run_sweep(const SweepOptions& opts) {
  if (opts.min_n < 2 || opts.max_n < opts.min_n || opts.max_m < 2)
    throw std::invalid_argument("sweep: need 2 <= min_n <= max_n and max_m >= 2");

  std::vector<ProductSpec> specs;
  for (Int n = opts.min_n; n <= opts.max_n; ++n) {
    const auto shapes = shapes_for(n);
    std::vector<Int> dims;
    std::vector<FlagShape> flags;
    dims.reserve(shapes.size());
    for (const auto& ks : shapes) {
      flags.emplace_back(n, ks);
      dims.push_back(dim_flag(flags.back()));
    }
    std::set<std::vector<std::size_t>> seen;
    if (!opts.self_only) {
      std::vector<std::vector<std::size_t>> picks;
      std::vector<std::size_t> buf;
      collect_multisets(shapes, dims, n, opts.max_m, 0, 0, buf, picks);
      for (auto& pick : picks) seen.insert(pick);
    }
    // Self powers enter unconditionally: the over-budget ones exercise the
    // dimension-bound rule and the oracle's refusal to certify them.
    for (std::size_t i = 0; i < shapes.size(); ++i)
      for (Int m = 2; m <= opts.max_m; ++m)
        seen.insert(std::vector<std::size_t>(static_cast<std::size_t>(m), i));
    for (const auto& pick : seen) {
      std::vector<FlagShape> fs;
      fs.reserve(pick.size());
      for (std::size_t i : pick) fs.push_back(flags[i]);
      specs.emplace_back(std::move(fs));
    }
  }

  SweepResult result;
  result.rows.resize(specs.size(), SweepRow{});
  std::atomic<std::size_t> cursor{0};
  const auto worker = [&] {
    while (true) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= specs.size()) return;
      const ProductSpec& spec = specs[i];
      SweepRow& row = result.rows[i];
      const Classification c = classify(spec);
      const DimensionBudget dims = dimension_budget(spec);
      row.spec = format_product(spec);
      row.n = dims.n;
      row.m = spec.arity();
      row.dim_product = dims.dim_product;
      row.expected_stab = dims.expected_stab;
      row.verdict = c.verdict;
      row.rule = c.rule;
      if (opts.run_oracle) {
        row.oracle = oracle_density(spec, opts.oracle);
        if (c.verdict != Verdict::Unknown) {
          switch (row.oracle->status) {
            case OracleStatus::DenseCertified:
              row.agree = c.verdict == Verdict::Dense;
              break;
            case OracleStatus::SparseEvidence:
              row.agree = c.verdict == Verdict::Sparse;
              break;
            case OracleStatus::Inconclusive:
              // Only dimension-forbidden products land here; a Dense verdict
              // would be a real contradiction.
              row.agree = c.verdict == Verdict::Sparse;
              break;
            case OracleStatus::DegenerateSample:
              row.agree = std::nullopt;
              break;
          }
        }
      }
    }
  };

  Int threads = opts.threads;
  if (threads <= 0) threads = static_cast<Int>(std::thread::hardware_concurrency());
  threads = std::max<Int>(1, std::min<Int>(threads, static_cast<Int>(specs.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (Int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::sort(result.rows.begin(), result.rows.end(),
            [](const SweepRow& a, const SweepRow& b) { return a.spec < b.spec; });
  for (const SweepRow& row : result.rows) {
    if (row.verdict == Verdict::Unknown) ++result.unknown;
    if (row.agree && !*row.agree) ++result.disagreements;
  }
  return result;
}

std::string sweep_csv(const SweepResult& result) {
  std::string out =
      "spec,n,m,dim_product,expected_stab,classifier_verdict,rule_fired,"
      "oracle_min_nullity,oracle_verdict,agree\n";
  for (const SweepRow& row : result.rows) {
    out += '"';
    out += row.spec;
    out += "\",";
    out += std::to_string(row.n);
    out += ',';
    out += std::to_string(row.m);
    out += ',';
    out += std::to_string(row.dim_product);
    out += ',';
    out += std::to_string(row.expected_stab);
    out += ',';
    out += verdict_name(row.verdict);
    out += ',';
    out += row.rule;
    out += ',';
    if (row.oracle) {
      out += std::to_string(row.oracle->min_nullity);
      out += ',';
      out += oracle_status_name(row.oracle->status);
    } else {
      out += ',';
    }
    out += ',';
    if (row.agree) out += *row.agree ? "yes" : "no";
    out += '\n';
  }
  return out;
}

}  // namespace flagorbit
