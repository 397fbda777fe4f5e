#include "flagorbit/rewrite.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace flagorbit {

namespace {

// Working representation during a reduce round: factor order stays stable so
// "pivot cycling 1..m" is well defined even though ProductSpec re-sorts.
struct Working {
  Int n;
  std::vector<std::vector<Int>> ks;  // one dimension vector per live factor
};

Working to_working(const ProductSpec& spec) {
  Working w;
  w.n = spec.n();
  for (const FlagShape& f : spec.factors()) w.ks.push_back(f.ks());
  return w;
}

ProductSpec to_spec(const Working& w) {
  std::vector<FlagShape> fs;
  for (const std::vector<Int>& ks : w.ks) fs.emplace_back(w.n, ks);
  if (fs.empty()) fs.emplace_back(w.n, std::vector<Int>{});
  return ProductSpec(std::move(fs));
}

// Applies one pivot intersection in place; returns false if the precondition
// fails.  Point factors created by the step are removed.
bool apply_pivot(Working& w, std::size_t pivot) {
  Int other_tops = 0;
  Int all_tops = 0;
  for (std::size_t i = 0; i < w.ks.size(); ++i) {
    const Int top = w.ks[i].empty() ? 0 : w.ks[i].back();
    all_tops += top;
    if (i != pivot) other_tops += top;
  }
  const Int np = other_tops;
  if (!(np <= w.n && w.n < all_tops && np < w.n)) return false;
  const Int d = w.n - np;

  std::vector<std::vector<Int>> next;
  for (std::size_t i = 0; i < w.ks.size(); ++i) {
    std::vector<Int> ks = (i == pivot) ? derived_sequence(w.ks[i], d) : w.ks[i];
    // A kept factor's top can equal the new ambient only in degenerate
    // (m = 2 / point-heavy) inputs; the subspace is then the whole space
    // and the entry carries no information.
    while (!ks.empty() && ks.back() >= np) ks.pop_back();
    if (!ks.empty()) next.push_back(std::move(ks));
  }
  w.n = np;
  w.ks = std::move(next);
  return true;
}

}  // namespace

const char* rewrite_rule_name(RewriteRule rule) {
  switch (rule) {
    case RewriteRule::Duality: return "duality";
    case RewriteRule::Reduce: return "reduce";
    case RewriteRule::ContractTop: return "contract-top";
  }
  return "?";
}

const char* rewrite_rule_citation(RewriteRule rule) {
  switch (rule) {
    case RewriteRule::Duality:
      return "annihilators give an equivariant isomorphism F(k_1..k_r;n) = F(n-k_r..n-k_1;n*)";
    case RewriteRule::Reduce:
      return "intersecting with the generic span of the other factors' top subspaces preserves density";
    case RewriteRule::ContractTop:
      return "when n = (m-1)k_r the m top subspaces generically overlap pairwise in 0; quotients decouple";
  }
  return "?";
}

std::optional<ProductSpec> reduce_step(const ProductSpec& spec, Int pivot) {
  if (pivot < 1 || pivot > spec.arity()) throw std::out_of_range("reduce_step: pivot index out of range");
  Working w = to_working(spec);
  if (!apply_pivot(w, static_cast<std::size_t>(pivot - 1))) return std::nullopt;
  return to_spec(w);
}

std::optional<ProductSpec> contract_top(const ProductSpec& spec) {
  if (!spec.is_self_product() || spec.arity() < 3) return std::nullopt;
  const FlagShape& f = spec.factors().front();
  if (f.is_point()) return std::nullopt;
  if (spec.n() != (spec.arity() - 1) * f.top()) return std::nullopt;
  std::vector<Int> inner(f.ks().begin(), f.ks().end() - 1);
  return self_product(FlagShape(f.top(), std::move(inner)), spec.arity());
}

NormalizeResult normalize(const ProductSpec& spec) {
  NormalizeResult result{spec.without_points(), {}};
  ProductSpec& cur = result.terminal;

  for (;;) {
    const Int n = cur.n();
    Int tops = 0;
    Int dual_tops = 0;  // top sum after dualizing: sum of n - k_1
    for (const FlagShape& f : cur.factors()) {
      if (f.is_point()) continue;
      tops += f.top();
      dual_tops += n - f.ks().front();
    }

    if (tops > dual_tops) {
      ProductSpec next = dual_product(cur).without_points();
      result.chain.push_back({RewriteRule::Duality, cur, next});
      cur = next;
      continue;
    }

    // Try a full reduce round: every live factor takes one pivot turn, in
    // stable order; commit all steps or none.
    Working w = to_working(cur);
    std::vector<ChainStep> round;
    bool ok = !w.ks.empty();
    ProductSpec before = cur;
    // Factors deleted mid-round lose their turn; track identity by index
    // into the evolving list, advancing past survivors only.
    std::size_t turns = w.ks.size();
    std::size_t pivot = 0;
    for (std::size_t t = 0; t < turns && ok; ++t) {
      if (pivot >= w.ks.size()) break;
      const std::size_t before_size = w.ks.size();
      ok = apply_pivot(w, pivot);
      if (!ok) break;
      ProductSpec after = to_spec(w);
      round.push_back({RewriteRule::Reduce, before, after});
      before = after;
      // The pivot survives (derived sequence is nonempty under the
      // precondition), so advance; if earlier factors were deleted the list
      // shrank and `pivot` already points past them.
      pivot += 1 - (before_size - w.ks.size());
      turns = std::min(turns, w.ks.size());
    }
    if (ok && !round.empty()) {
      for (ChainStep& step : round) result.chain.push_back(std::move(step));
      cur = to_spec(w);
      continue;
    }
    break;
  }
  return result;
}

}  // namespace flagorbit
