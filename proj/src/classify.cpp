#include "flagorbit/classify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>
#include <utility>

#include "flagorbit/profile.hpp"

namespace flagorbit {

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Dense: return "Dense";
    case Verdict::Sparse: return "Sparse";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

RuleDecision made(Verdict v, const char* rule, const char* citation) {
  return RuleDecision{v, rule, citation};
}

Int top_sum(const ProductSpec& s) {
  Int total = 0;
  for (const auto& f : s.factors()) total += f.top();
  return total;
}

bool all_grassmannians(const ProductSpec& s) {
  return std::all_of(s.factors().begin(), s.factors().end(),
                     [](const FlagShape& f) { return f.steps() == 1; });
}

bool contains_step(const FlagShape& f, Int k) {
  return std::binary_search(f.ks().begin(), f.ks().end(), k);
}

/// Generic-position criterion for Gr(k,n)^m: dense iff m*k*(n-k) < n^2.
bool grassmannian_power_dense(Int m, Int k, Int n) {
  return m * k * (n - k) < n * n;
}

}  // namespace

namespace rules {

std::optional<RuleDecision> dimension_bound(const ProductSpec& spec) {
  if (!is_trivially_sparse(spec)) return std::nullopt;
  return made(Verdict::Sparse, "dimension-bound",
              "the factors' dimensions sum past dim PGL_n = n^2 - 1, so every orbit "
              "has positive codimension");
}

std::optional<RuleDecision> pair(const ProductSpec& spec) {
  if (spec.without_points().arity() > 2) return std::nullopt;
  return made(Verdict::Dense, "pair",
              "a product of at most two flag varieties splits into finitely many "
              "orbits, so one of them is dense");
}

std::optional<RuleDecision> small_top_sum(const ProductSpec& spec) {
  if (top_sum(spec) > spec.n()) return std::nullopt;
  return made(Verdict::Dense, "small-top-sum",
              "top subspaces with dimensions summing to at most n can be put in "
              "direct sum, and that configuration's orbit is dense");
}

std::optional<RuleDecision> projective_power(const ProductSpec& spec) {
  const ProductSpec s = spec.without_points();
  if (!s.is_self_product()) return std::nullopt;
  const FlagShape& f = s.factors().front();
  if (f.steps() != 1) return std::nullopt;
  const Int k = f.top();
  if (k != 1 && k != s.n() - 1) return std::nullopt;
  const bool dense = s.arity() <= s.n() + 1;
  return made(dense ? Verdict::Dense : Verdict::Sparse, "projective-power",
              "m points of P^(n-1) in general position lie on a dense orbit exactly "
              "when m <= n + 1");
}

std::optional<RuleDecision> few_grassmannians(const ProductSpec& spec) {
  const ProductSpec s = spec.without_points();
  if (!all_grassmannians(s) || s.arity() > 4) return std::nullopt;
  Int sum = 0;
  for (const auto& f : s.factors()) sum += f.top();
  const bool sparse = s.arity() == 4 && sum == 2 * s.n();
  return made(sparse ? Verdict::Sparse : Verdict::Dense, "few-grassmannians",
              "up to four Grassmannians are dense in general position unless exactly "
              "four have subspace dimensions summing to 2n");
}

std::optional<RuleDecision> adjacent_grassmannians(const ProductSpec& spec) {
  const ProductSpec s = spec.without_points();
  if (!all_grassmannians(s)) return std::nullopt;
  std::vector<Int> values;
  for (const auto& f : s.factors()) values.push_back(f.top());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.size() > 2) return std::nullopt;
  if (values.size() == 2 && values[1] != values[0] + 1) return std::nullopt;
  const char* cite =
      "Gr(k-1,n)^a x Gr(k,n)^b is dense whenever the dimension budget permits, "
      "except the tie Gr(k-1,2k-1)^2 x Gr(k,2k-1)^2";
  if (is_trivially_sparse(s)) return made(Verdict::Sparse, "adjacent-grassmannians", cite);
  if (values.size() == 2) {
    const Int k = values[1];
    Int a = 0;
    for (const auto& f : s.factors()) a += (f.top() == k - 1) ? 1 : 0;
    const Int b = s.arity() - a;
    if (a == 2 && b == 2 && s.n() == 2 * k - 1)
      return made(Verdict::Sparse, "adjacent-grassmannians", cite);
  }
  return made(Verdict::Dense, "adjacent-grassmannians", cite);
}

std::optional<RuleDecision> two_step_triple(const ProductSpec& spec) {
  const ProductSpec s = spec.without_points();
  if (!s.is_self_product() || s.arity() != 3) return std::nullopt;
  const FlagShape& f = s.factors().front();
  if (f.steps() != 2) return std::nullopt;
  const bool sparse = f.ks()[0] + f.ks()[1] == s.n();
  return made(sparse ? Verdict::Sparse : Verdict::Dense, "two-step-triple",
              "three flags F(k1,k2;n) have a dense orbit exactly when k1 + k2 != n");
}

std::optional<RuleDecision> complementary_pair(const ProductSpec& spec) {
  const ProductSpec s = spec.without_points();
  const Int n = s.n();
  if (s.arity() < 3) return std::nullopt;
  // The two steps must be distinct: a lone middle step n/2 carries no pairing.
  for (Int a = 1; 2 * a < n; ++a) {
    const Int b = n - a;
    Int count = 0;
    for (const auto& f : s.factors())
      if (contains_step(f, a) && contains_step(f, b)) ++count;
    if (count >= 3)
      return made(Verdict::Sparse, "complementary-pair",
                  "three factors each containing steps a and n-a admit an invariant "
                  "built from the pairing of complementary subspaces");
  }
  return std::nullopt;
}

std::optional<RuleDecision> unit_steps(const ProductSpec& spec) {
  const ProductSpec s = spec.without_points();
  if (!s.is_self_product()) return std::nullopt;
  const FlagShape& f = s.factors().front();
  if (f.is_point()) return std::nullopt;
  const Int r = f.steps();
  for (Int i = 0; i < r; ++i)
    if (f.ks()[static_cast<std::size_t>(i)] != i + 1) return std::nullopt;
  const Int m = s.arity();
  const Int n = s.n();
  const bool dense = m <= 2 || (r == 1 && n >= m - 1) ||
                     (m == 3 && r > 1 && n >= 3 * r - 2) ||
                     (m >= 4 && r > 1 && n >= m * r - 1);
  return made(dense ? Verdict::Dense : Verdict::Sparse, "unit-steps",
              "F(1..r;n)^m is dense exactly when m <= 2, or r = 1 with n >= m - 1, "
              "or m = 3 with n >= 3r - 2, or m >= 4 with n >= mr - 1");
}

namespace {

/// F(l+1,...,l+r;n)^3 with n >= 2l + r + 1.  Generic intersections shrink
/// the block; what remains is governed by where n sits between 2l + 2r and
/// 3l + 3r.
bool block_triple_dense(Int ell, Int r, Int n) {
  if (r == 1) return true;
  if (n <= 2 * ell + 2 * r - 1) return false;
  if (n >= 3 * ell + 3 * r - 2) return true;
  if (n <= 3 * ell + 2 * r) return r == 2 || n <= 3 * ell + 5;
  return false;
}

/// F(l+1,...,l+r;n)^m with m >= 4 and n >= (m-1)(l+r).
bool block_many_dense(Int ell, Int r, Int m, Int n) {
  const Int j = n - (m - 1) * (ell + r);
  if (n >= m * (ell + r)) return true;
  if (r == 1) return grassmannian_power_dense(m, ell + 1, n);
  if (j < ell) {
    if (r == 2) return m <= ell - j + 3;
    return ell - j + r >= m * r - m - 1;
  }
  return j == ell + r - 1;
}

}  // namespace

std::optional<RuleDecision> consecutive_block(const ProductSpec& spec) {
  const ProductSpec s = spec.without_points();
  if (!s.is_self_product()) return std::nullopt;
  const FlagShape& f = s.factors().front();
  if (f.is_point()) return std::nullopt;
  const Int r = f.steps();
  const Int ell = f.ks().front() - 1;
  for (Int i = 0; i < r; ++i)
    if (f.ks()[static_cast<std::size_t>(i)] != ell + 1 + i) return std::nullopt;
  const Int m = s.arity();
  const Int n = s.n();
  const char* cite =
      "a block of consecutive steps shrinks under generic intersections to a "
      "smaller block whose residual ambient size decides density";
  if (m == 3) {
    // Ensure n >= 2l + r + 1; the annihilator dual is the block at n-l-r-1.
    const Int ell_norm = (n < 2 * ell + r + 1) ? n - ell - r - 1 : ell;
    const bool dense = block_triple_dense(ell_norm, r, n);
    return made(dense ? Verdict::Dense : Verdict::Sparse, "consecutive-block", cite);
  }
  if (m >= 4) {
    if (n >= (m - 1) * (ell + r)) {
      const bool dense = block_many_dense(ell, r, m, n);
      return made(dense ? Verdict::Dense : Verdict::Sparse, "consecutive-block", cite);
    }
    const Int ell_dual = n - ell - r - 1;
    if (n >= (m - 1) * (ell_dual + r)) {
      const bool dense = block_many_dense(ell_dual, r, m, n);
      return made(dense ? Verdict::Dense : Verdict::Sparse, "consecutive-block", cite);
    }
  }
  return std::nullopt;
}

std::optional<RuleDecision> large_gaps(const ProductSpec& spec) {
  const ProductSpec s = spec.without_points();
  if (!s.is_self_product() || s.arity() < 3) return std::nullopt;
  const FlagShape& f = s.factors().front();
  if (f.is_point()) return std::nullopt;
  const Int m = s.arity();
  const Int n = s.n();
  const Int r = f.steps();
  const auto& ks = f.ks();
  const char* cite =
      "widely spaced steps collapse under a chain of generic intersections to a "
      "Grassmannian power decided by a quadratic dimension count";

  if (r == 2 && m > 3) {
    const Int j2 = n - (m - 1) * ks[1];
    if (j2 >= 0) {
      const bool dense =
          ks[0] <= j2 || m * (ks[0] - j2) * (ks[1] - ks[0]) < (ks[1] - j2) * (ks[1] - j2);
      return made(dense ? Verdict::Dense : Verdict::Sparse, "large-gaps", cite);
    }
  }
  if (r == 3 && m == 3) {
    const Int j3 = n - 2 * ks[2];
    if (j3 >= 0) {
      const bool dense = ks[0] <= j3 || ks[0] + ks[1] != ks[2] + j3;
      return made(dense ? Verdict::Dense : Verdict::Sparse, "large-gaps", cite);
    }
  }
  {
    bool far_apart = n >= (m - 1) * ks[static_cast<std::size_t>(r - 1)];
    for (Int i = 0; i + 1 < r && far_apart; ++i)
      far_apart = ks[static_cast<std::size_t>(i + 1)] >= (m - 1) * ks[static_cast<std::size_t>(i)];
    if (far_apart) return made(Verdict::Dense, "large-gaps", cite);
  }

  const GapProfile p = gap_profile(f, m);
  const Int l0 = p.ell0;
  for (Int l = l0; l <= r; ++l)
    if (p.j[static_cast<std::size_t>(l - 1)] < 0) return std::nullopt;

  bool dense = false;
  for (Int t = l0; t <= r && !dense; ++t)
    dense = p.j[static_cast<std::size_t>(t - 1)] >=
            ks[static_cast<std::size_t>(t - 1)] - p.suffix(t + 1);
  const Int s0 = p.s[static_cast<std::size_t>(l0 - 1)];
  if (!dense && s0 >= l0) dense = true;
  if (!dense && s0 == l0 - 1) {
    const Int S = p.suffix(l0);
    const Int lo = ks[static_cast<std::size_t>(l0 - 2)] - S;
    const Int hi = ks[static_cast<std::size_t>(l0 - 1)];
    dense = m * lo * (hi - ks[static_cast<std::size_t>(l0 - 2)]) < (hi - S) * (hi - S);
  }
  return made(dense ? Verdict::Dense : Verdict::Sparse, "large-gaps", cite);
}

namespace {

/// Steps a < b inside one factor of an m-fold self-product, with
/// n - b = t*a + u, 0 <= u < a: sparse when m passes the threshold for
/// (t, u).  Shared by the direct rule and the projection search.
bool periodic_pair_sparse(Int a, Int b, Int n, Int m) {
  const Int span = n - b;
  if (span < a) return false;
  const Int t = span / a;
  const Int u = span % a;
  if (u == 0) return m >= std::max<Int>(t + 2, 4);
  if (2 * u <= a) return t >= 3 && m >= t + 2;
  return t >= 2 && m >= t + 3;
}

bool periodic_pattern_sparse(const std::vector<Int>& ks, Int n, Int m) {
  const auto r = ks.size();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (periodic_pair_sparse(ks[i], ks[j], n, m)) return true;
  for (std::size_t h = 0; h < r; ++h)
    for (std::size_t i = h + 1; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        if (2 * ks[h] + ks[i] + ks[j] == 2 * n) return true;
  return false;
}

}  // namespace

std::optional<RuleDecision> arithmetic_obstruction(const ProductSpec& spec) {
  const ProductSpec s = spec.without_points();
  if (!s.is_self_product() || s.arity() < 3) return std::nullopt;
  const FlagShape& f = s.factors().front();
  if (f.steps() < 2) return std::nullopt;
  const Int m = s.arity();
  const Int n = s.n();
  if (periodic_pattern_sparse(f.ks(), n, m) ||
      periodic_pattern_sparse(dual_shape(f).ks(), n, m))
    return made(Verdict::Sparse, "arithmetic-obstruction",
                "steps a < b with n - b = t*a + u lock repeated generic intersections "
                "into a periodic pattern with a positive-dimensional stabilizer");
  return std::nullopt;
}

std::optional<RuleDecision> sparse_projection(const ProductSpec& spec) {
  const ProductSpec s = spec.without_points();
  const Int n = s.n();
  const Int m = s.arity();
  const char* cite =
      "forgetting steps or factors is equivariant, so a sparse projection of the "
      "product forces the whole product to be sparse";
  const auto fire = [&] {
    return made(Verdict::Sparse, "sparse-projection", cite);
  };

  // Four distinct factors, one step each, summing to 2n: projects onto a
  // sparse quadruple of Grassmannians.
  if (m >= 4) {
    const auto& fs = s.factors();
    for (std::size_t i1 = 0; i1 < fs.size(); ++i1)
      for (std::size_t i2 = i1 + 1; i2 < fs.size(); ++i2)
        for (std::size_t i3 = i2 + 1; i3 < fs.size(); ++i3)
          for (std::size_t i4 = i3 + 1; i4 < fs.size(); ++i4)
            for (Int a : fs[i1].ks())
              for (Int b : fs[i2].ks())
                for (Int c : fs[i3].ks()) {
                  const Int need = 2 * n - a - b - c;
                  if (contains_step(fs[i4], need)) return fire();
                }
  }

  // Step pairs and triples shared by enough factors project onto sparse
  // self-products of two- and three-step flags.
  std::map<std::pair<Int, Int>, Int> pair_count;
  std::map<std::tuple<Int, Int, Int>, Int> triple_count;
  for (const auto& f : s.factors()) {
    const auto& ks = f.ks();
    for (std::size_t i = 0; i < ks.size(); ++i)
      for (std::size_t j = i + 1; j < ks.size(); ++j) {
        ++pair_count[{ks[i], ks[j]}];
        for (std::size_t h = j + 1; h < ks.size(); ++h)
          ++triple_count[{ks[i], ks[j], ks[h]}];
      }
  }
  for (const auto& [ab, count] : pair_count) {
    if (count < 3) continue;
    const auto [a, b] = ab;
    if (a + b == n) return fire();
    if (periodic_pair_sparse(a, b, n, count)) return fire();
    if (periodic_pair_sparse(n - b, n - a, n, count)) return fire();
  }
  for (const auto& [abc, count] : triple_count) {
    if (count < 3) continue;
    const auto [a, b, c] = abc;
    if (2 * a + b + c == 2 * n) return fire();
    if (2 * (n - c) + (n - b) + (n - a) == 2 * n) return fire();
  }

  // Repeated equal factors form a self-product that the direct rules may
  // already reject.
  std::map<std::vector<Int>, Int> shape_count;
  for (const auto& f : s.factors()) ++shape_count[f.ks()];
  for (const auto& [ks, count] : shape_count) {
    if (count < 3) continue;
    const ProductSpec sub = self_product(FlagShape(n, ks), count);
    using Rule = std::optional<RuleDecision> (*)(const ProductSpec&);
    for (const Rule rule : {&dimension_bound, &projective_power, &two_step_triple,
                            &unit_steps, &consecutive_block, &large_gaps,
                            &arithmetic_obstruction}) {
      const auto d = rule(sub);
      if (d && d->verdict == Verdict::Sparse) return fire();
    }
  }
  return std::nullopt;
}

std::optional<RuleDecision> stabilizer_witness(const ProductSpec& spec) {
  const ProductSpec s = spec.without_points();
  if (!s.is_self_product()) return std::nullopt;
  const FlagShape& f = s.factors().front();
  if (f.steps() != 2) return std::nullopt;
  const Int n = s.n();
  const Int t = s.arity() - 1;
  if (t < 3 || n < t * (t + 1)) return std::nullopt;
  const bool primal = f.ks()[0] == t && f.ks()[1] == n - 1;
  const bool dual = f.ks()[0] == 1 && f.ks()[1] == n - t;
  if (!primal && !dual) return std::nullopt;
  return made(Verdict::Dense, "stabilizer-witness",
              "an explicit configuration of coordinate subspaces and graph twists "
              "has stabilizer of exactly the expected dimension, certifying density");
}

}  // namespace rules

Classification classify(const ProductSpec& spec) {
  NormalizeResult norm = normalize(spec);
  Classification out{spec, norm.terminal, std::move(norm.chain),
                     dimension_budget(norm.terminal), Verdict::Unknown, {}, {}};
  const ProductSpec& t = out.normalized;

  using Rule = std::optional<RuleDecision> (*)(const ProductSpec&);
  constexpr std::array<Rule, 12> battery = {
      &rules::dimension_bound,    &rules::pair,
      &rules::small_top_sum,      &rules::projective_power,
      &rules::few_grassmannians,  &rules::adjacent_grassmannians,
      &rules::two_step_triple,    &rules::complementary_pair,
      &rules::unit_steps,         &rules::consecutive_block,
      &rules::large_gaps,         &rules::arithmetic_obstruction,
  };
  std::optional<RuleDecision> decision;
  for (const Rule rule : battery) {
    decision = rule(t);
    if (decision) break;
  }
  // The projection search can see patterns on either end of the rewrite
  // chain; both carry the same density answer.
  if (!decision) decision = rules::sparse_projection(spec);
  if (!decision) decision = rules::sparse_projection(t);
  if (!decision) decision = rules::stabilizer_witness(t);

  if (decision) {
    out.verdict = decision->verdict;
    out.rule = std::move(decision->rule);
    out.citation = std::move(decision->citation);
  } else {
    out.verdict = Verdict::Unknown;
    out.rule = "none";
    out.citation = "no decision rule recognizes this shape class";
  }
  return out;
}

}  // namespace flagorbit
