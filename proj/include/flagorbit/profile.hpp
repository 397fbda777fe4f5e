#pragma once

#include <vector>

#include "flagorbit/shapes.hpp"

namespace flagorbit {

/// Gap bookkeeping for a self-product F(k_1..k_r;n)^m.  Writing S_l for
/// j_l + ... + j_r:
///   j_r = n - (m-1) k_r
///   j_l = k_{l+1} - (m-1) k_l + (m-2) S_{l+1}            (l < r)
///   s_l = min{ 0 < i <= l : k_i - S_l > 0 } when k_l - S_l > 0, else l
///   ell0 = max{ l : s_l >= l-1 }
/// j_l measures how much of the level-l subspaces a generic intersection
/// chain leaves untouched; s_l is the first level that survives it.
struct GapProfile {
  std::vector<Int> j;  // j[l-1] = j_l, 1-based levels
  std::vector<Int> s;  // s[l-1] = s_l
  Int ell0 = 0;

  [[nodiscard]] Int levels() const noexcept { return static_cast<Int>(j.size()); }
  /// S_l = j_l + ... + j_r; S_{r+1} = 0.
  [[nodiscard]] Int suffix(Int l) const;
};

/// Requires a nonempty dimension vector and m >= 2.
[[nodiscard]] GapProfile gap_profile(const FlagShape& shape, Int m);

}  // namespace flagorbit
