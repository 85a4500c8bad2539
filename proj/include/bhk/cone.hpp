#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bhk/matrix.hpp"
#include "bhk/rational.hpp"

namespace bhk {

/// Full-dimensional pointed rational polyhedral cone.
///
/// Both descriptions are kept: extreme ray generators (primitive integer
/// vectors in the ambient coordinates) and facet normals in the dual space
/// (also primitive). Every generator pairs >= 0 with every normal.
class Cone {
 public:
  /// Computes the facet description of cone(generators) by Fourier-Motzkin
  /// elimination of the cone multipliers and drops redundant generators.
  /// Throws InputError if the generators do not span, CapExceeded past the
  /// rank or row caps.
  static Cone from_generators(const std::vector<RatVector>& generators);

  std::size_t rank() const { return rank_; }
  const std::vector<RatVector>& generators() const { return generators_; }
  const std::vector<RatVector>& facet_normals() const { return facet_normals_; }

  bool contains(const RatVector& x) const;
  /// x in the relative interior of C.
  bool contains_interior(const RatVector& x) const;

  /// Generator and normal lists equal as sets.
  friend bool operator==(const Cone& a, const Cone& b);

 private:
  friend Cone dual_cone(const Cone& C);
  std::size_t rank_ = 0;
  std::vector<RatVector> generators_;
  std::vector<RatVector> facet_normals_;
};

/// {y : x . y >= 0 for all x in C}.
Cone dual_cone(const Cone& C);

inline constexpr std::size_t kMaxConeRank = 8;
inline constexpr std::size_t kMaxEliminationRows = 200000;

/// Primitive integer vector on the ray through v (v nonzero).
RatVector primitive(const RatVector& v);

/// All lattice points x = basis * z (z integral) of C with phi . x = s,
/// sorted lexicographically. phi must be strictly positive on every
/// generator; InputError otherwise.
std::vector<RatVector> slice_points(const Cone& C, const RatMatrix& lattice_basis, const RatVector& phi,
                                    const Rat& s);

/// Lattice points z in Z^r with a_k . z >= beta_k for all k and phi . z = s,
/// provided this set is bounded (checked). Used by slice_points and by
/// callers that need shifted cones.
std::vector<RatVector> polytope_points(const std::vector<std::pair<RatVector, Rat>>& inequalities,
                                       const RatVector& phi, const Rat& s);

struct LatticeSlice {
  const Cone* cone;
  const RatMatrix* basis;
  RatVector functional;
};

/// Pairs (m, n) with m in the M-slice at value sM, n in the N-slice at sN, m . n = 0.
std::vector<std::pair<RatVector, RatVector>> zero_pairing_pairs(const LatticeSlice& m_side, const Rat& sM,
                                                                const LatticeSlice& n_side, const Rat& sN);

}  // namespace bhk
