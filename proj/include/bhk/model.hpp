#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bhk/linalg.hpp"
#include "bhk/rational.hpp"

namespace bhk {

/// Weights making W quasi-homogeneous of degree one.
struct WeightSystem {
  RatVector q;
  Rat sum;               ///< sum of q_j
  std::optional<Int> k;  ///< sum of q_j when it is a positive integer
};

/// Invertible potential W = sum_i c_i prod_j x_j^{a_ij}.
class Potential {
 public:
  /// Validates the exponent matrix and solves for the weights.
  /// Throws InputError on non-square, negative, zero-row, or singular input,
  /// on a nonpositive weight, and on zero coefficients.
  Potential(IntMatrix exponents, std::optional<RatVector> coefficients = std::nullopt);

  std::size_t dimension() const { return exponents_.rows(); }
  const IntMatrix& exponents() const { return exponents_; }
  Int exponent(std::size_t monomial, std::size_t variable) const { return exponents_(monomial, variable); }
  const RatVector& coefficients() const { return coefficients_; }
  const WeightSystem& weights() const { return weights_; }
  const Int& det() const { return det_; }

  /// A_W^{-1}, cached.
  const RatMatrix& inverse_exponents() const { return inverse_; }

  std::string to_string() const;

 private:
  IntMatrix exponents_;
  RatVector coefficients_;
  WeightSystem weights_;
  Int det_;
  RatMatrix inverse_;
};

Potential make_potential(const IntMatrix& matrix, std::optional<RatVector> coefficients = std::nullopt);

/// W^v: transposed exponents, coefficients reset to one.
Potential transpose_potential(const Potential& P);

/// Diagonal symmetry x_j -> exp(2 pi i h_j) x_j with 0 <= h_j < 1.
class GroupElement {
 public:
  GroupElement() = default;
  /// Reduces every coordinate modulo 1.
  explicit GroupElement(RatVector h);
  static GroupElement identity(std::size_t d) { return GroupElement(RatVector(d)); }

  const RatVector& h() const { return h_; }
  const Rat& operator[](std::size_t j) const { return h_[j]; }
  std::size_t size() const { return h_.size(); }
  bool is_identity() const;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-() const;
  /// Sum of h_j, the determinant exponent of the action.
  Rat age() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.h_ == b.h_; }
  friend bool operator<(const GroupElement& a, const GroupElement& b) { return RatVectorLess{}(a.h_, b.h_); }

 private:
  RatVector h_;
};

/// True when the element preserves every monomial of W: sum_j a_ij h_j in Z for all i.
bool preserves(const Potential& P, const GroupElement& g);

/// Finite subgroup of Aut(W), stored as its sorted element list.
class SymmetryGroup {
 public:
  SymmetryGroup() = default;
  SymmetryGroup(std::vector<GroupElement> elements, std::vector<GroupElement> generators, IntVector invariant_factors);

  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  /// Nontrivial invariant factors d_1 | d_2 | ... of the group.
  const IntVector& invariant_factors() const { return invariant_factors_; }
  bool contains(const GroupElement& g) const;

  friend bool operator==(const SymmetryGroup& a, const SymmetryGroup& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<GroupElement> elements_;
  std::vector<GroupElement> generators_;
  IntVector invariant_factors_;
};

inline constexpr std::size_t kDefaultGroupOrderCap = 1000000;

/// Full diagonal symmetry group, enumerated from the Smith form of A_W.
SymmetryGroup aut_group(const Potential& P, std::size_t cap = kDefaultGroupOrderCap);

/// Smallest subgroup of Aut(W) containing the generators.
/// Throws InputError if a generator is not a symmetry of W, CapExceeded past cap.
SymmetryGroup subgroup_closure(const Potential& P, const std::vector<GroupElement>& generators,
                               std::size_t cap = kDefaultGroupOrderCap);

/// J: h = q mod 1.
GroupElement exponential_grading_element(const Potential& P);

/// Dual lattices N_0 <= N <= M_0^v and M_0 <= M = N^v <= N_0^v.
///
/// Coordinates: N-side vectors are written in the basis (v_j) of N_0, M-side
/// vectors in the basis (e_i) of N_0^v dual to (v_j). Then u_i = row i of A_W,
/// deg = (1,...,1), deg^v = q, and the pairing is the dot product.
struct LatticeData {
  std::size_t rank = 0;
  RatMatrix n_basis;  ///< columns span N
  RatMatrix m_basis;  ///< columns span M, dual to n_basis
  RatMatrix pairing;  ///< m_basis^T n_basis, the identity by construction
  RatVector deg;
  RatVector deg_dual;
  bool deg_in_m = false;
  bool deg_dual_in_n = false;
  Int index_n_over_n0;   ///< [N : N_0] = |G|
  Int index_m0dual_over_n;  ///< [M_0^v : N]

  bool in_n(const RatVector& n) const;
  bool in_m(const RatVector& m) const;
};

LatticeData lattice_data(const Potential& P, const SymmetryGroup& G);

/// Krawitz dual group in Aut(W^v), computed through M = N^v.
SymmetryGroup dual_group(const Potential& P, const SymmetryGroup& G, std::size_t cap = kDefaultGroupOrderCap);

/// Direct evaluation of Krawitz's membership condition for G^v; quadratic in
/// the group orders, intended for cross-checking dual_group on small groups.
SymmetryGroup dual_group_by_definition(const Potential& P, const SymmetryGroup& G);

struct CyReport {
  std::optional<Int> k;
  Rat weight_sum;
  bool deg_in_m = false;
  bool deg_dual_in_n = false;
  Rat central_charge;  ///< d - 2 sum q_j
  bool calabi_yau_type() const { return k.has_value() && deg_in_m && deg_dual_in_n; }
};

CyReport cy_check(const Potential& P, const SymmetryGroup& G);

/// Potential with its chosen group and (optional) mirror-side coefficients g.
struct BhDatum {
  Potential potential;
  SymmetryGroup group;
  RatVector dual_coefficients;  ///< g on Delta^v, i.e. coefficients of W^v

  BhDatum(Potential p, SymmetryGroup g, std::optional<RatVector> dual_coeffs = std::nullopt);

  /// (W^v, G^v) with f and g swapped.
  BhDatum mirror() const;
};

}  // namespace bhk
