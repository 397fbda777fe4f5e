#include "flagorbit/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "flagorbit/modm.hpp"

namespace flagorbit {

std::string_view oracle_status_name(OracleStatus s) noexcept {
  switch (s) {
    case OracleStatus::DenseCertified: return "DenseCertified";
    case OracleStatus::SparseEvidence: return "SparseEvidence";
    case OracleStatus::Inconclusive: return "Inconclusive";
    case OracleStatus::DegenerateSample: return "DegenerateSample";
  }
  return "Inconclusive";
}

namespace {

void require_prime(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
    throw std::invalid_argument("oracle: modulus must be a prime below 2^31");
}

}  // namespace

std::optional<FlagConfig> random_flag_config(const ProductSpec& spec, std::int64_t p,
                                             std::uint64_t seed) {
  require_prime(p);
  const Int n = spec.n();
  FlagConfig cfg;
  cfg.basis.reserve(static_cast<std::size_t>(spec.arity()));
  for (Int fi = 0; fi < spec.arity(); ++fi) {
    const FlagShape& f = spec.factors()[static_cast<std::size_t>(fi)];
    const Int top = f.top();
    MatZ b(n, top);
    bool ok = top == 0;
    for (int attempt = 0; attempt < kMaxResamples && !ok; ++attempt) {
      SplitMix64 g(fork_seed(fork_seed(seed, static_cast<std::uint64_t>(fi)),
                             static_cast<std::uint64_t>(attempt)));
      for (Eigen::Index c = 0; c < b.cols(); ++c)
        for (Eigen::Index r = 0; r < b.rows(); ++r) b(r, c) = g.below(p);
      ok = rank_mod(b, p) == top;
    }
    if (!ok) return std::nullopt;
    cfg.basis.push_back(std::move(b));
  }
  return cfg;
}

MatZ stabilizer_constraints(const ProductSpec& spec, const FlagConfig& cfg,
                            std::int64_t p) {
  const Int n = spec.n();
  Int rows = 0;
  for (const auto& f : spec.factors())
    for (Int k : f.ks()) rows += (n - k) * k;
  MatZ c = MatZ::Zero(rows, n * n);

  Int row0 = 0;
  for (std::size_t fi = 0; fi < cfg.basis.size(); ++fi) {
    const FlagShape& f = spec.factors()[fi];
    const MatZ& b = cfg.basis[fi];
    for (Int k : f.ks()) {
      const MatZ bk = b.leftCols(k);
      const MatZ a = left_annihilator_mod(bk, p);  // (n-k) x n
      // Row (alpha, beta): sum_{u,v} a(alpha,u) b(v,beta) X[u,v] = 0.
      for (Eigen::Index alpha = 0; alpha < a.rows(); ++alpha)
        for (Eigen::Index beta = 0; beta < bk.cols(); ++beta) {
          const Int row = row0 + alpha * k + beta;
          for (Eigen::Index u = 0; u < n; ++u) {
            if (a(alpha, u) == 0) continue;
            for (Eigen::Index v = 0; v < n; ++v)
              c(row, u * n + v) = a(alpha, u) * bk(v, beta) % p;
          }
        }
      row0 += (n - k) * k;
    }
  }
  return c;
}

Int stabilizer_nullity(const ProductSpec& spec, const FlagConfig& cfg, std::int64_t p) {
  const Int n = spec.n();
  const MatZ c = stabilizer_constraints(spec, cfg, p);
  return n * n - rank_mod(c, p);
}

FlagConfig dual_config(const ProductSpec& spec, const FlagConfig& cfg, std::int64_t p) {
  const Int n = spec.n();
  std::vector<std::pair<std::vector<Int>, MatZ>> duals;
  duals.reserve(cfg.basis.size());
  for (std::size_t fi = 0; fi < cfg.basis.size(); ++fi) {
    const FlagShape& f = spec.factors()[fi];
    const FlagShape d = dual_shape(f);
    if (f.is_point()) {
      duals.emplace_back(d.ks(), MatZ(n, 0));
      continue;
    }
    // Stack annihilator bases from the smallest dual step outward; the
    // left-to-right pivot columns then realize every prefix rank, giving a
    // nested basis for the dual flag.
    const auto& ks = f.ks();
    MatZ stacked(n, 0);
    for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
      const MatZ ann = left_annihilator_mod(cfg.basis[fi].leftCols(*it), p).transpose();
      if (stacked.cols() == 0) {
        stacked = ann;
        continue;
      }
      MatZ wider(n, stacked.cols() + ann.cols());
      wider.leftCols(stacked.cols()) = stacked;
      wider.rightCols(ann.cols()) = ann;
      stacked = std::move(wider);
    }
    const Echelon e = row_reduce_mod(stacked, p);
    MatZ basis(n, d.top());
    for (Eigen::Index i = 0; i < basis.cols(); ++i)
      basis.col(i) = stacked.col(e.pivot_cols[static_cast<std::size_t>(i)]);
    duals.emplace_back(d.ks(), std::move(basis));
  }
  std::sort(duals.begin(), duals.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  FlagConfig out;
  out.basis.reserve(duals.size());
  for (auto& [ks, basis] : duals) out.basis.push_back(std::move(basis));
  return out;
}

OracleReport oracle_density(const ProductSpec& spec, const OracleOptions& opts) {
  require_prime(opts.prime);
  if (opts.trials < 1) throw std::invalid_argument("oracle: need at least one trial");
  const Int n = spec.n();
  OracleReport rep;
  rep.prime = opts.prime;
  rep.seed = opts.seed;
  rep.expected_nullity = n * n - dim_product(spec);

  if (rep.expected_nullity < 1) {
    rep.status = OracleStatus::Inconclusive;
    rep.detail =
        "dimension count already forbids a dense orbit; sampling cannot add anything";
    return rep;
  }

  for (Int trial = 0; trial < opts.trials; ++trial) {
    const auto cfg =
        random_flag_config(spec, opts.prime, fork_seed(opts.seed, static_cast<std::uint64_t>(trial)));
    if (!cfg) {
      rep.status = OracleStatus::DegenerateSample;
      rep.detail = "a factor stayed rank-deficient after repeated draws; use a larger prime";
      rep.min_nullity = rep.nullities.empty()
                            ? 0
                            : *std::min_element(rep.nullities.begin(), rep.nullities.end());
      return rep;
    }
    const Int nullity = stabilizer_nullity(spec, *cfg, opts.prime);
    if (nullity < rep.expected_nullity)
      throw std::logic_error("oracle: sampled nullity below the expected minimum");
    rep.nullities.push_back(nullity);
  }
  rep.min_nullity = *std::min_element(rep.nullities.begin(), rep.nullities.end());
  if (rep.min_nullity == rep.expected_nullity) {
    rep.status = OracleStatus::DenseCertified;
    rep.detail =
        "a sampled stabilizer hit the expected dimension: a rank certificate, valid in "
        "characteristic zero, that the generic orbit is dense";
  } else {
    rep.status = OracleStatus::SparseEvidence;
    rep.detail = "every sampled stabilizer exceeded the expected dimension by " +
                 std::to_string(rep.min_nullity - rep.expected_nullity) +
                 "; consistent with a sparse action (heuristic, not a proof)";
  }
  return rep;
}

FlagConfig witness_config(Int t, Int n, std::int64_t p) {
  require_prime(p);
  if (t < 1 || n < t * (t + 1))
    throw std::invalid_argument("witness_config: need t >= 1 and n >= t(t+1)");
  FlagConfig cfg;
  for (Int i = 1; i <= t + 1; ++i) {
    // Support of the twisted functional f_i, 1-based coordinates.
    std::vector<Int> support;
    for (Int m = 0; m <= i - 2; ++m) support.push_back(m * t + i - 1);
    for (Int m = i; m <= t; ++m) support.push_back(m * t + i);
    std::sort(support.begin(), support.end());

    const auto in_block = [&](Int s) { return (i - 1) * t < s && s <= i * t; };
    const auto in_support = [&](Int s) {
      return std::binary_search(support.begin(), support.end(), s);
    };

    MatZ b = MatZ::Zero(n, n - 1);
    Eigen::Index col = 0;
    for (Int s = (i - 1) * t + 1; s <= i * t; ++s) b(s - 1, col++) = 1;  // U_i
    for (Int s = 1; s <= n; ++s) {
      if (in_block(s) || in_support(s)) continue;
      b(s - 1, col++) = 1;
    }
    for (std::size_t q = 0; q + 1 < support.size(); ++q) {
      b(support[q] - 1, col) = 1;
      b(support[q + 1] - 1, col) = p - 1;
      ++col;
    }
    if (col != n - 1) throw std::logic_error("witness_config: column count off");
    cfg.basis.push_back(std::move(b));
  }
  return cfg;
}

Int witness_nullity_formula(Int t, Int n) {
  return t + (n - t - 1) * (n - t * (t + 1)) + 1;
}

}  // namespace flagorbit
