#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "bhk/cone.hpp"
#include "bhk/hodge.hpp"
#include "bhk/matrix.hpp"
#include "bhk/model.hpp"

namespace bhk {

/// Which exterior algebra the complex uses: Lambda*(M) for the A ring,
/// Lambda*(N) for the B ring.
enum class RingSide { A, B };

/// The four subcomplexes of the Fock space that compute the chiral rings.
///   BRing:      C[(K_N^v - deg) + K_N] x Lambda*(N)       -> B ring of (W, G)
///   ADualRing:  C[(K_M - deg) + K_M^v] x Lambda*(N)       -> A ring of (W^v, G^v)
///   ARing:      C[K_N^v + (K_N - deg^v)] x Lambda*(M)     -> A ring of (W, G)
///   BDualRing:  C[K_M + (K_M^v - deg^v)] x Lambda*(M)     -> B ring of (W^v, G^v)
/// The degree shifts only move charges, so the mirror-side variants are built
/// as the A/B complexes of the mirror datum.
enum class ComplexVariant { BRing, ADualRing, ARing, BDualRing };

/// Basis vector [m + n] x (wedge of exterior basis vectors in `wedge`).
/// m in e-coordinates (M side), n in v-coordinates (N side).
struct BasisElement {
  RatVector m;
  RatVector n;
  std::uint32_t wedge = 0;  ///< bit j set iff the j-th exterior basis vector occurs

  friend bool operator<(const BasisElement& a, const BasisElement& b);
  friend bool operator==(const BasisElement& a, const BasisElement& b) {
    return a.wedge == b.wedge && a.m == b.m && a.n == b.n;
  }
};

struct ComplexSlice {
  Rat cohomological;
  Rat conformal;
  std::optional<GroupElement> sector;  ///< restricts n to one class of N / N_0
  std::vector<BasisElement> basis;     ///< sorted

  std::size_t index_of(const BasisElement& e) const;  ///< npos if absent
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

struct TableOptions {
  long window_margin = 1;
  unsigned threads = 1;
};

/// Complex C[(K_N^v + K_N)_0] x Lambda* with the A or B differential for one
/// Calabi-Yau type Berglund-Hubsch datum.
///
/// Cohomological degree: m.deg^v + deg.n - k.
/// Conformal degree: B side  m.deg^v - deg.n + |S| - k,
///                   A side -m.deg^v + deg.n + |S| - k.
class ComplexEngine {
 public:
  /// Throws NotCalabiYau unless k is integral, deg in M and deg^v in N.
  ComplexEngine(BhDatum datum, RingSide side);

  /// Engine for one of the four subcomplexes of a datum.
  static ComplexEngine for_variant(const BhDatum& datum, ComplexVariant variant);

  const BhDatum& datum() const { return datum_; }
  RingSide side() const { return side_; }
  const LatticeData& lattices() const { return lattice_; }
  const Int& index() const { return k_; }
  const Rat& central_charge() const { return central_charge_; }

  ComplexSlice build_slice(const Rat& cohomological, const Rat& conformal,
                           std::optional<GroupElement> sector = std::nullopt) const;

  /// Matrix of d (rows: target basis, columns: source basis).
  /// Throws std::invalid_argument unless target is one cohomological step up
  /// at equal conformal degree.
  SparseMatrix differential_matrix(const ComplexSlice& from, const ComplexSlice& to) const;

  std::size_t cohomology_dim(const Rat& cohomological, const Rat& conformal) const;

  /// All bidegrees in [-margin, c + margin]^2.
  HodgeTable bigraded_table(const TableOptions& options = {}) const;

  /// Images d(e) as (target element, coefficient) lists.
  std::vector<std::pair<BasisElement, Rat>> apply(const BasisElement& e) const;

 private:
  const std::vector<RatVector>& m_points(long level) const;
  const std::vector<RatVector>& n_points(long level) const;
  std::size_t rank_step(const Rat& cohomological, const Rat& conformal, const GroupElement& sector) const;
  std::size_t sector_cohomology(const Rat& coh, const Rat& conf, const GroupElement& sector) const;

  BhDatum datum_;
  RingSide side_;
  LatticeData lattice_;
  Int k_;
  Rat central_charge_;
  Cone kn_dual_;  // orthant in e-coordinates
  Cone kn_;       // orthant in v-coordinates

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

}  // namespace bhk
