#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "flagorbit/rewrite.hpp"
#include "flagorbit/shapes.hpp"

namespace flagorbit {

enum class Verdict { Dense, Sparse, Unknown };

[[nodiscard]] std::string_view verdict_name(Verdict v) noexcept;

/// A verdict together with the rule that produced it and a one-line reason.
struct RuleDecision {
  Verdict verdict = Verdict::Unknown;
  std::string rule;
  std::string citation;
};

struct Classification {
  ProductSpec input;
  ProductSpec normalized;
  EquivalenceChain chain;
  DimensionBudget budget;  // of the normalized spec
  Verdict verdict = Verdict::Unknown;
  std::string rule;
  std::string citation;
};

/// Normalizes, then runs the rule battery in a fixed order; the first rule
/// that recognizes and decides the normalized spec wins.  Unknown when no
/// rule is decisive.  Verdicts refer to the diagonal PGL(n) action on the
/// product: Dense means some orbit is dense, Sparse means none is.
[[nodiscard]] Classification classify(const ProductSpec& spec);

/// Individual rule evaluators in battery order.  Each returns nullopt when
/// the rule does not recognize the spec or cannot decide it.  They assume a
/// validated spec but NOT a normalized one, so they can be probed directly.
namespace rules {

/// Total factor dimension exceeds n^2 - 1: no orbit can be dense.
[[nodiscard]] std::optional<RuleDecision> dimension_bound(const ProductSpec&);

/// At most two factors: finitely many orbits, hence a dense one.
[[nodiscard]] std::optional<RuleDecision> pair(const ProductSpec&);

/// Top subspace dimensions summing to at most n: a direct-sum configuration
/// has a dense orbit.
[[nodiscard]] std::optional<RuleDecision> small_top_sum(const ProductSpec&);

/// (P^(n-1))^m, or its dual: dense exactly when m <= n + 1.
[[nodiscard]] std::optional<RuleDecision> projective_power(const ProductSpec&);

/// Up to four Grassmannians (mixed dimensions allowed): dense unless exactly
/// four of them have subspace dimensions summing to 2n.
[[nodiscard]] std::optional<RuleDecision> few_grassmannians(const ProductSpec&);

/// Gr(k-1,n)^a x Gr(k,n)^b for any a, b: dense whenever the dimension budget
/// permits, except the tie Gr(k-1,2k-1)^2 x Gr(k,2k-1)^2.
[[nodiscard]] std::optional<RuleDecision> adjacent_grassmannians(const ProductSpec&);

/// F(k1,k2;n)^3: dense exactly when k1 + k2 != n.
[[nodiscard]] std::optional<RuleDecision> two_step_triple(const ProductSpec&);

/// Three or more factors each containing both step a and step n-a: the
/// pairing between complementary subspaces yields an invariant, so sparse.
[[nodiscard]] std::optional<RuleDecision> complementary_pair(const ProductSpec&);

/// F(1,2,...,r;n)^m: dense exactly when m <= 2, or r = 1 with n >= m - 1,
/// or m = 3 with n >= 3r - 2, or m >= 4 with n >= mr - 1.
[[nodiscard]] std::optional<RuleDecision> unit_steps(const ProductSpec&);

/// F(l+1,...,l+r;n)^m for a block of consecutive steps: generic
/// intersections shrink the block, and the residual ambient size decides.
[[nodiscard]] std::optional<RuleDecision> consecutive_block(const ProductSpec&);

/// Self-products whose steps are spread far apart: a chain of generic
/// intersections terminates in a Grassmannian power decided by a quadratic
/// dimension count.
[[nodiscard]] std::optional<RuleDecision> large_gaps(const ProductSpec&);

/// Steps a < b with n - b = t*a + u (checked on the spec and its dual):
/// repeated generic intersections become periodic and stabilize, so sparse
/// once the factor count passes a threshold depending on t and u.
[[nodiscard]] std::optional<RuleDecision> arithmetic_obstruction(const ProductSpec&);

/// Searches projections (forget steps, drop factors) for a sparse
/// sub-product; any hit forces the whole product to be sparse.
[[nodiscard]] std::optional<RuleDecision> sparse_projection(const ProductSpec&);

/// F(t,n-1;n)^(t+1) and its dual F(1,n-t;n)^(t+1) with t >= 3 and
/// n >= t(t+1): an explicit configuration has stabilizer of exactly the
/// expected dimension, so dense.
[[nodiscard]] std::optional<RuleDecision> stabilizer_witness(const ProductSpec&);

}  // namespace rules

}  // namespace flagorbit
