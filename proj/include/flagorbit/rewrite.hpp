#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagorbit/shapes.hpp"

namespace flagorbit {

/// Density-preserving rewrite rules between products.
enum class RewriteRule { Duality, Reduce, ContractTop };

[[nodiscard]] const char* rewrite_rule_name(RewriteRule rule);
/// One-line mathematical justification for a rule, used in traces.
[[nodiscard]] const char* rewrite_rule_citation(RewriteRule rule);

/// One applied rewrite; `after` of step i equals `before` of step i+1.
struct ChainStep {
  RewriteRule rule;
  ProductSpec before;
  ProductSpec after;
};

/// Composable sequence of rewrites, each preserving the density answer.
using EquivalenceChain = std::vector<ChainStep>;

/// Intersects every factor with the span W of the other factors' top
/// subspaces, where n' = dim W = sum of the other tops is generic:
/// applicable when n' <= n < sum of all tops and n' < n (strict progress).
/// Non-pivot factors keep their dimension vectors inside W; the pivot's
/// vector becomes its derived sequence for d = n - n'.  A kept factor whose
/// top entry equals n' loses that entry (W_{k} = W is forced).  Returns
/// nullopt when the precondition fails.  `pivot` indexes the canonical
/// factor order.
[[nodiscard]] std::optional<ProductSpec> reduce_step(const ProductSpec& spec, Int pivot);

/// For a self-product F(k_1..k_r;n)^m with m >= 3 and n == (m-1)*k_r, the m
/// top subspaces are generically in direct sum, so the product is equivalent
/// to F(k_1..k_{r-1};k_r)^m (a point product when r == 1).  Preserves
/// expected_stab_dim exactly.  Returns nullopt when not applicable.
[[nodiscard]] std::optional<ProductSpec> contract_top(const ProductSpec& spec);

struct NormalizeResult {
  ProductSpec terminal;
  EquivalenceChain chain;
};

/// Fixpoint of the cheap rewrites: duality whenever it strictly lowers the
/// total top dimension (ties keep the orientation), then full reduce rounds
/// with the pivot cycling over all factors (a round commits only if every
/// pivot's precondition holds at its turn).  Point factors produced along
/// the way are deleted immediately.  Terminates: each committed step
/// strictly decreases (n, sum of tops) lexicographically.
[[nodiscard]] NormalizeResult normalize(const ProductSpec& spec);

}  // namespace flagorbit
