#include "flagorbit/shapes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace flagorbit {

FlagShape::FlagShape(Int n, std::vector<Int> ks) : n_(n), ks_(std::move(ks)) {
  if (n_ < 1) throw std::invalid_argument("FlagShape: ambient dimension must be positive");
  Int prev = 0;
  for (Int k : ks_) {
    if (k <= prev) throw std::invalid_argument("FlagShape: subspace dimensions must be strictly increasing and positive");
    if (k >= n_) throw std::invalid_argument("FlagShape: subspace dimensions must be smaller than the ambient dimension");
    prev = k;
  }
}

ProductSpec::ProductSpec(std::vector<FlagShape> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("ProductSpec: at least one factor required");
  const Int n = factors_.front().n();
  for (const FlagShape& f : factors_)
    if (f.n() != n) throw std::invalid_argument("ProductSpec: all factors must share one ambient dimension");
  std::sort(factors_.begin(), factors_.end(),
            [](const FlagShape& a, const FlagShape& b) { return a.ks() < b.ks(); });
}

bool ProductSpec::is_self_product() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [&](const FlagShape& f) { return f.ks() == factors_.front().ks(); });
}

ProductSpec ProductSpec::without_points() const {
  std::vector<FlagShape> kept;
  for (const FlagShape& f : factors_)
    if (!f.is_point()) kept.push_back(f);
  if (kept.empty()) kept.emplace_back(n(), std::vector<Int>{});
  return ProductSpec(std::move(kept));
}

ProductSpec self_product(const FlagShape& shape, Int m) {
  if (m < 1) throw std::invalid_argument("self_product: arity must be positive");
  return ProductSpec(std::vector<FlagShape>(static_cast<std::size_t>(m), shape));
}

Int dim_flag(const FlagShape& shape) {
  Int dim = 0;
  const std::vector<Int>& ks = shape.ks();
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const Int next = (i + 1 < ks.size()) ? ks[i + 1] : shape.n();
    dim += ks[i] * (next - ks[i]);
  }
  return dim;
}

Int dim_product(const ProductSpec& spec) {
  Int dim = 0;
  for (const FlagShape& f : spec.factors()) dim += dim_flag(f);
  return dim;
}

Int expected_stab_dim(const ProductSpec& spec) {
  return spec.n() * spec.n() - 1 - dim_product(spec);
}

bool is_trivially_sparse(const ProductSpec& spec) { return expected_stab_dim(spec) < 0; }

DimensionBudget dimension_budget(const ProductSpec& spec) {
  DimensionBudget b;
  b.n = spec.n();
  b.dim_product = dim_product(spec);
  b.dim_pgl = b.n * b.n - 1;
  b.expected_stab = b.dim_pgl - b.dim_product;
  return b;
}

FlagShape dual_shape(const FlagShape& shape) {
  std::vector<Int> dual(shape.ks().rbegin(), shape.ks().rend());
  for (Int& k : dual) k = shape.n() - k;
  return FlagShape(shape.n(), std::move(dual));
}

ProductSpec dual_product(const ProductSpec& spec) {
  std::vector<FlagShape> duals;
  duals.reserve(spec.factors().size());
  for (const FlagShape& f : spec.factors()) duals.push_back(dual_shape(f));
  return ProductSpec(std::move(duals));
}

std::vector<Int> derived_sequence(const std::vector<Int>& ks, Int d) {
  if (d < 0) throw std::invalid_argument("derived_sequence: codimension must be nonnegative");
  std::vector<Int> derived;
  if (ks.empty() || d >= ks.back()) return derived;
  // u minimal with k_{u-1} <= d < k_u; all entries from u on survive, shifted.
  for (Int k : ks)
    if (k > d) derived.push_back(k - d);
  return derived;
}

std::string format_shape(const FlagShape& shape) {
  std::ostringstream out;
  out << "F(";
  for (std::size_t i = 0; i < shape.ks().size(); ++i) {
    if (i > 0) out << ',';
    out << shape.ks()[i];
  }
  out << ';' << shape.n() << ')';
  return out.str();
}

std::string format_product(const ProductSpec& spec) {
  std::ostringstream out;
  const std::vector<FlagShape>& fs = spec.factors();
  for (std::size_t i = 0; i < fs.size();) {
    std::size_t j = i;
    while (j < fs.size() && fs[j] == fs[i]) ++j;
    if (i > 0) out << " x ";
    out << format_shape(fs[i]);
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  return out.str();
}

}  // namespace flagorbit
