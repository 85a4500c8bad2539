#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "bhk/hodge.hpp"
#include "bhk/model.hpp"
#include "bhk/monomials.hpp"

namespace bhk {

struct MilnorSlice {
  Rat degree;
  std::vector<Monomial> monomials;  ///< all monomials of this weighted degree
  std::size_t rank = 0;             ///< rank of the Jacobian ideal inside the slice
  std::size_t dimension = 0;        ///< monomials.size() - rank
};

/// Graded pieces of C[x_vars] / <d W_vars / d x_j : j in vars>, where W_vars
/// is the sum of the monomials of W supported on vars.
struct MilnorDims {
  std::vector<std::size_t> vars;
  Rat socle;           ///< sum over vars of (1 - 2 q_j)
  Rat window_end;      ///< socle + max q_j
  std::vector<MilnorSlice> slices;  ///< every grid degree in [0, window_end]
  std::size_t total = 0;            ///< sum of dimensions at degrees <= socle
  Rat expected_total;               ///< prod over vars of (1/q_j - 1)
  bool vanishes_above_socle = false;

  bool nondegenerate() const { return vanishes_above_socle && Rat(total) == expected_total; }
  /// Nonzero (degree, dimension) pairs.
  std::vector<std::pair<Rat, std::size_t>> graded() const;
  std::size_t dim_at(const Rat& degree) const;
};

/// Predicate on full-length exponent vectors (zeros outside vars). It must be
/// a union of characters of a group preserving W, so that every generator
/// x^b dW/dx_j lies entirely inside or outside the selected subspace.
using CharacterFilter = std::function<bool(const Monomial&)>;

MilnorDims milnor_dims(const Potential& P, const std::vector<std::size_t>& vars,
                       const CharacterFilter& filter = {});
MilnorDims milnor_dims(const Potential& P);

bool is_nondegenerate(const Potential& P);

/// Per-sector data of the orbifold B ring.
struct SectorData {
  GroupElement g;
  std::vector<std::size_t> fixed_set;
  Rat shift_plus;   ///< sum over moving j of (h_j - q_j)
  Rat shift_minus;  ///< sum over moving j of (1 - h_j - q_j)
  MilnorDims full;       ///< Milnor ring of W_g
  MilnorDims invariant;  ///< G-invariant part of (prod_{fixed} x_j) Jac(W_g)
};

SectorData sector_data(const Potential& P, const SymmetryGroup& G, const GroupElement& g);

/// Orbifold B ring (sum_g of shifted Milnor rings of W_g)^G.
/// Throws NotCalabiYau for non-CY data and DegeneratePotential if some W_g
/// fails the Milnor test.
HodgeTable orbifold_b_table(const Potential& P, const SymmetryGroup& G, unsigned threads = 1);

/// B table with Q_- -> c - Q_-.
HodgeTable orbifold_a_table(const Potential& P, const SymmetryGroup& G, unsigned threads = 1);

/// Cohomology of C[x, y]_0 x Lambda*(e_1..e_d) under
///   sum_i x_i dF/dx_i x contr(e_i^v) + sum_i y_i x wedge(e_i),
/// where x_i has degree q_i and y_i degree 1. With a group, x monomials are
/// restricted to the G-invariant ones. Returns (total degree, dimension) for
/// every grid degree in [0, max_degree].
std::vector<std::pair<Rat, std::size_t>> log_jacobian_cohomology(const Potential& P, const Rat& max_degree,
                                                                  const SymmetryGroup* G = nullptr);

}  // namespace bhk
