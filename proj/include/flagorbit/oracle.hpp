#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagorbit/linalg.hpp"
#include "flagorbit/shapes.hpp"

namespace flagorbit {

constexpr std::int64_t kDefaultPrime = 2147483647;  // 2^31 - 1
constexpr std::int64_t kMinOraclePrime = 1 << 20;   // CLI floor; library takes any prime
constexpr Int kDefaultTrials = 3;
constexpr std::uint64_t kDefaultSeed = 0x666c61676f726269ull;
constexpr int kMaxResamples = 32;

/// One sampled configuration: an n x k_r matrix per factor, full column
/// rank, whose first k_i columns span the step-i subspace.  Point factors
/// carry an n x 0 matrix.
struct FlagConfig {
  std::vector<MatZ> basis;  // aligned with spec.factors()
};

enum class OracleStatus {
  DenseCertified,    // some sampled stabilizer hits the expected dimension;
                     // a rank certificate valid in characteristic 0
  SparseEvidence,    // every sample exceeded the expected dimension;
                     // consistent with sparse but not a proof
  Inconclusive,      // dimension count already forbids a dense orbit, so
                     // sampling cannot certify anything
  DegenerateSample,  // a factor stayed column-rank-deficient after
                     // kMaxResamples draws (tiny fields only)
};

[[nodiscard]] std::string_view oracle_status_name(OracleStatus s) noexcept;

struct OracleOptions {
  std::int64_t prime = kDefaultPrime;
  Int trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
};

struct OracleReport {
  Int expected_nullity = 0;    // n^2 - dim_product = expected_stab + 1
  std::vector<Int> nullities;  // one entry per completed trial
  Int min_nullity = 0;         // 0 when no trial completed
  OracleStatus status = OracleStatus::Inconclusive;
  std::int64_t prime = kDefaultPrime;
  std::uint64_t seed = kDefaultSeed;
  std::string detail;
};

/// Samples one configuration, deterministic in (spec, p, seed); draws are
/// keyed per factor and per resample so factor order changes nothing else.
[[nodiscard]] std::optional<FlagConfig> random_flag_config(const ProductSpec& spec,
                                                           std::int64_t p,
                                                           std::uint64_t seed);

/// The linearized stabilizer system: one block row A_k X B_k = 0 per factor
/// and step, unknowns X in gl_n flattened row-major (column u*n + v for
/// X[u,v]).  Row count is sum over steps of (n-k)k.
[[nodiscard]] MatZ stabilizer_constraints(const ProductSpec& spec, const FlagConfig& cfg,
                                          std::int64_t p);

/// dim over F_p of {X in gl_n : X preserves every sampled subspace}.
/// Always >= max(1, n^2 - dim_product): scalars stabilize everything, and
/// each factor's block contributes at most its flag dimension to the rank.
[[nodiscard]] Int stabilizer_nullity(const ProductSpec& spec, const FlagConfig& cfg,
                                     std::int64_t p);

/// Annihilator configuration on dual_product(spec): step j of the dual
/// factor spans the annihilator of step r-j+1.  X -> -X^T identifies the
/// two stabilizers, so the nullity is preserved exactly.
[[nodiscard]] FlagConfig dual_config(const ProductSpec& spec, const FlagConfig& cfg,
                                     std::int64_t p);

/// Runs `trials` independent samples and aggregates.  A sampled nullity
/// can only overshoot the expected one (specialization is closed), so the
/// minimum over trials is the strongest signal.
[[nodiscard]] OracleReport oracle_density(const ProductSpec& spec,
                                          const OracleOptions& opts = {});

/// Explicit configuration on F(t,n-1;n)^(t+1), t >= 1, n >= t(t+1): U_i is
/// the i-th coordinate t-block, V_i the kernel of a 0/1 functional chosen
/// so the common stabilizer is as small as the shape permits.
[[nodiscard]] FlagConfig witness_config(Int t, Int n, std::int64_t p);

/// gl_n stabilizer dimension the witness achieves: t + (n-t-1)(n-t(t+1)) + 1.
[[nodiscard]] Int witness_nullity_formula(Int t, Int n);

}  // namespace flagorbit
