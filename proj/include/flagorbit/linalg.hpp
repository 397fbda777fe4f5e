#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace flagorbit {

/// Dense integer matrix holding residues mod a prime p < 2^31.  Exact
/// elimination is hand-rolled (magnitude pivoting means nothing in F_p);
/// storage, views, and whole-array expressions stay Eigen.
using MatZ = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Copy with every entry reduced into [0, p).
[[nodiscard]] MatZ reduced_mod(const MatZ& a, std::int64_t p);

struct Echelon {
  MatZ rref;  // reduced row echelon form, entries in [0, p)
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index rank = 0;
};

/// Gauss-Jordan over F_p with first-nonzero pivoting.
[[nodiscard]] Echelon row_reduce_mod(MatZ a, std::int64_t p);

[[nodiscard]] Eigen::Index rank_mod(const MatZ& a, std::int64_t p);

/// Columns form a basis of the right null space {x : a x = 0}; the basis is
/// the canonical one read off the reduced echelon form (identity on free
/// coordinates), so equal inputs give bitwise-equal bases.
[[nodiscard]] MatZ kernel_basis_mod(const MatZ& a, std::int64_t p);

/// Rows form a basis of {y : y b = 0}; for an n x k input of rank k the
/// result is (n-k) x n of full row rank.
[[nodiscard]] MatZ left_annihilator_mod(const MatZ& b, std::int64_t p);

/// Exact product followed by reduction (128-bit accumulation).
[[nodiscard]] MatZ matmul_mod(const MatZ& a, const MatZ& b, std::int64_t p);

}  // namespace flagorbit
