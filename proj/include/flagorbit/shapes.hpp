#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace flagorbit {

using Int = std::int64_t;

/// Dimension vector of a partial flag variety F(k_1,...,k_r;n): nested
/// subspaces W_{k_1} c ... c W_{k_r} of an n-dimensional space, with
/// 0 < k_1 < ... < k_r < n.  r == 0 is admitted and denotes the one-point
/// variety (rewrites can absorb a factor completely).
class FlagShape {
public:
  /// Throws std::invalid_argument unless 0 < k_1 < ... < k_r < n.
  FlagShape(Int n, std::vector<Int> ks);

  [[nodiscard]] Int n() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Int>& ks() const noexcept { return ks_; }
  [[nodiscard]] Int steps() const noexcept { return static_cast<Int>(ks_.size()); }
  [[nodiscard]] bool is_point() const noexcept { return ks_.empty(); }
  /// Largest subspace dimension k_r; 0 for the point variety.
  [[nodiscard]] Int top() const noexcept { return ks_.empty() ? 0 : ks_.back(); }

  friend bool operator==(const FlagShape&, const FlagShape&) = default;

private:
  Int n_;
  std::vector<Int> ks_;
};

/// Product of partial flag varieties over one shared ambient dimension,
/// acted on diagonally.  Factors are kept in a canonical order (sorted
/// lexicographically by ks) so that equal products compare equal.
class ProductSpec {
public:
  /// Throws std::invalid_argument if factors is empty or mixes ambient
  /// dimensions.
  explicit ProductSpec(std::vector<FlagShape> factors);

  [[nodiscard]] Int n() const noexcept { return factors_.front().n(); }
  [[nodiscard]] const std::vector<FlagShape>& factors() const noexcept { return factors_; }
  [[nodiscard]] Int arity() const noexcept { return static_cast<Int>(factors_.size()); }
  /// True when all factors carry the same dimension vector.
  [[nodiscard]] bool is_self_product() const;
  /// Copy with all point factors removed; keeps one point if nothing else
  /// remains (a product cannot be empty).
  [[nodiscard]] ProductSpec without_points() const;

  friend bool operator==(const ProductSpec&, const ProductSpec&) = default;

private:
  std::vector<FlagShape> factors_;
};

/// Product of m copies of one shape.
[[nodiscard]] ProductSpec self_product(const FlagShape& shape, Int m);

/// dim F(k_1,...,k_r;n) = sum_i k_i (k_{i+1} - k_i) with k_{r+1} = n.
[[nodiscard]] Int dim_flag(const FlagShape& shape);

/// Sum of factor dimensions.
[[nodiscard]] Int dim_product(const ProductSpec& spec);

/// dim PGL(n) - dim X = n^2 - 1 - dim X; negative means no orbit can be
/// dense for dimension reasons alone.
[[nodiscard]] Int expected_stab_dim(const ProductSpec& spec);

[[nodiscard]] bool is_trivially_sparse(const ProductSpec& spec);

/// Dimension ledger for one product, all entries exact.
struct DimensionBudget {
  Int n = 0;
  Int dim_product = 0;
  Int dim_pgl = 0;        // n^2 - 1
  Int expected_stab = 0;  // dim_pgl - dim_product
};

[[nodiscard]] DimensionBudget dimension_budget(const ProductSpec& spec);

/// Annihilator duality V -> V*: F(k_1,...,k_r;n) |-> F(n-k_r,...,n-k_1;n).
/// An involution; preserves dim_flag.
[[nodiscard]] FlagShape dual_shape(const FlagShape& shape);

/// Dualizes every factor (the equivalence X ~ X* is via one global V*).
[[nodiscard]] ProductSpec dual_product(const ProductSpec& spec);

/// Intersection profile of a flag with a generic subspace of codimension d:
/// with u minimal such that k_{u-1} <= d < k_u (k_0 = 0), the sequence
/// k_i' = k_{u+i-1} - d for 1 <= i <= r-u+1.  Empty when d >= k_r (the flag
/// is absorbed).  Requires d >= 0.
[[nodiscard]] std::vector<Int> derived_sequence(const std::vector<Int>& ks, Int d);

/// Canonical rendering "F(k1,...,kr;n)"; the point variety prints "F(;n)".
[[nodiscard]] std::string format_shape(const FlagShape& shape);

/// Canonical rendering with equal factors grouped, e.g. "F(1;4) x F(1,2;4)^2".
[[nodiscard]] std::string format_product(const ProductSpec& spec);

}  // namespace flagorbit
