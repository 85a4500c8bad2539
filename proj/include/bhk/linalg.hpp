#pragma once

#include <cstddef>
#include <optional>

#include "bhk/matrix.hpp"

namespace bhk {

/// U * A * V = D with U, V unimodular and D diagonal with d_1 | d_2 | ... (all >= 0).
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Diagonal of D (length min(rows, cols)).
  IntVector diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& A);

/// H = U * A with U unimodular and H in row Hermite form: pivots positive and
/// strictly moving right, entries above each pivot reduced into [0, pivot),
/// zero rows at the bottom.
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;

  /// Number of nonzero rows of H.
  std::size_t rank() const;
};

HermiteForm hermite_normal_form(const IntMatrix& A);

/// Rank over the rationals.
std::size_t rat_rank(const RatMatrix& A);
std::size_t rat_rank(const SparseMatrix& A);

/// Some x with A x = b, or nullopt when the system is inconsistent.
std::optional<RatVector> rat_solve(const RatMatrix& A, const RatVector& b);

Rat determinant(const RatMatrix& A);
Int determinant(const IntMatrix& A);

/// Inverse of a square nonsingular matrix; throws std::domain_error if singular.
RatMatrix inverse(const RatMatrix& A);

/// Matrices with more columns than this are handed to the sparse rank routine.
inline constexpr std::size_t kSparseColumnThreshold = 2000;

}  // namespace bhk
