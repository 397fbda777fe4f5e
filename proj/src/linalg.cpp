#include "flagorbit/linalg.hpp"

#include <stdexcept>

#include "flagorbit/modm.hpp"

namespace flagorbit {

MatZ reduced_mod(const MatZ& a, std::int64_t p) {
  return a.unaryExpr([p](std::int64_t v) { return mod_reduce(v, p); });
}

Echelon row_reduce_mod(MatZ a, std::int64_t p) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("row_reduce_mod: modulus must be prime");
  Echelon e;
  e.rref = reduced_mod(a, p);
  MatZ& m = e.rref;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index lead = 0;
  for (Eigen::Index col = 0; col < cols && lead < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = lead; r < rows; ++r)
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(lead));
    const std::int64_t inv = invmod(m(lead, col), p);
    m.row(lead) = m.row(lead).unaryExpr([&](std::int64_t v) { return v * inv % p; });
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == lead) continue;
      const std::int64_t f = m(r, col);
      if (f == 0) continue;
      // v - f*w stays within int64: |f*w| <= (p-1)^2 < 2^62.
      m.row(r) = (m.row(r) - f * m.row(lead)).unaryExpr([p](std::int64_t v) {
        return mod_reduce(v, p);
      });
    }
    e.pivot_cols.push_back(col);
    ++lead;
  }
  e.rank = static_cast<Eigen::Index>(e.pivot_cols.size());
  return e;
}

Eigen::Index rank_mod(const MatZ& a, std::int64_t p) { return row_reduce_mod(a, p).rank; }

MatZ kernel_basis_mod(const MatZ& a, std::int64_t p) {
  const Echelon e = row_reduce_mod(a, p);
  const Eigen::Index cols = a.cols();
  const Eigen::Index nullity = cols - e.rank;
  MatZ basis = MatZ::Zero(cols, nullity);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  Eigen::Index out = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, out) = 1;
    for (Eigen::Index i = 0; i < e.rank; ++i)
      basis(e.pivot_cols[static_cast<std::size_t>(i)], out) =
          mod_reduce(-e.rref(i, free), p);
    ++out;
  }
  return basis;
}

MatZ left_annihilator_mod(const MatZ& b, std::int64_t p) {
  return kernel_basis_mod(MatZ(b.transpose()), p).transpose();
}

MatZ matmul_mod(const MatZ& a, const MatZ& b, std::int64_t p) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul_mod: shape mismatch");
  const MatZ ra = reduced_mod(a, p);
  const MatZ rb = reduced_mod(b, p);
  MatZ out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      unsigned __int128 acc = 0;
      for (Eigen::Index k = 0; k < ra.cols(); ++k)
        acc += static_cast<unsigned __int128>(ra(i, k)) * static_cast<unsigned __int128>(rb(k, j));
      out(i, j) = static_cast<std::int64_t>(acc % static_cast<unsigned __int128>(p));
    }
  return out;
}

}  // namespace flagorbit
