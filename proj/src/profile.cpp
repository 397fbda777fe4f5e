#include "flagorbit/profile.hpp"

#include <stdexcept>

namespace flagorbit {

Int GapProfile::suffix(Int l) const {
  Int total = 0;
  for (Int t = l; t <= levels(); ++t) total += j[static_cast<std::size_t>(t - 1)];
  return total;
}

GapProfile gap_profile(const FlagShape& shape, Int m) {
  if (shape.is_point()) throw std::invalid_argument("gap_profile: point variety has no levels");
  if (m < 2) throw std::invalid_argument("gap_profile: need at least two factors");
  const auto& ks = shape.ks();
  const Int r = static_cast<Int>(ks.size());
  const Int n = shape.n();

  GapProfile p;
  p.j.assign(static_cast<std::size_t>(r), 0);
  p.s.assign(static_cast<std::size_t>(r), 0);

  // j_l from the top down; S accumulates the suffix sum as we descend.
  Int suffix = 0;
  for (Int l = r; l >= 1; --l) {
    const Int kl = ks[static_cast<std::size_t>(l - 1)];
    const Int above = (l == r) ? n : ks[static_cast<std::size_t>(l)];
    const Int jl = above - (m - 1) * kl + (m - 2) * suffix;
    p.j[static_cast<std::size_t>(l - 1)] = jl;
    suffix += jl;
  }

  for (Int l = 1; l <= r; ++l) {
    const Int Sl = p.suffix(l);
    const Int kl = ks[static_cast<std::size_t>(l - 1)];
    Int sl = l;
    if (kl - Sl > 0) {
      for (Int i = 1; i <= l; ++i) {
        if (ks[static_cast<std::size_t>(i - 1)] - Sl > 0) {
          sl = i;
          break;
        }
      }
    }
    p.s[static_cast<std::size_t>(l - 1)] = sl;
  }

  p.ell0 = 1;
  for (Int l = 1; l <= r; ++l) {
    if (p.s[static_cast<std::size_t>(l - 1)] >= l - 1) p.ell0 = l;
  }
  return p;
}

}  // namespace flagorbit
