#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bhk/cone.hpp"
#include "bhk/model.hpp"

namespace bhk {

/// Dual lattices M = N = Z^r with the standard pairing, Delta in M and
/// Delta^v in N, deg in M, deg^v in N, coefficient functions f and g.
class ToricMirrorData {
 public:
  /// Validates integrality, deg . n = m . deg^v = 1, m . n >= 0, nonzero
  /// coefficients and full-dimensional K_M, K_N. Throws InputError.
  ToricMirrorData(std::size_t rank, std::vector<RatVector> delta, std::vector<RatVector> delta_dual, RatVector deg,
                  RatVector deg_dual, std::optional<RatVector> f = std::nullopt,
                  std::optional<RatVector> g = std::nullopt);

  std::size_t rank() const { return rank_; }
  const std::vector<RatVector>& delta() const { return delta_; }
  const std::vector<RatVector>& delta_dual() const { return delta_dual_; }
  const RatVector& deg() const { return deg_; }
  const RatVector& deg_dual() const { return deg_dual_; }
  const RatVector& f() const { return f_; }
  const RatVector& g() const { return g_; }
  bool default_coefficients() const { return default_coefficients_; }

  const Cone& k_m() const { return k_m_; }
  const Cone& k_n() const { return k_n_; }
  /// Primitive generators of the rays of K_N^v (the facet normals of K_N).
  const std::vector<RatVector>& rays() const { return k_n_.facet_normals(); }

  /// The same data with the roles of M and N exchanged.
  ToricMirrorData dual() const;

 private:
  std::size_t rank_;
  std::vector<RatVector> delta_, delta_dual_;
  RatVector deg_, deg_dual_, f_, g_;
  bool default_coefficients_ = false;
  Cone k_m_, k_n_;
};

/// Unified data of a Calabi-Yau type Berglund-Hubsch datum, written in bases
/// of its lattices M and N. Throws NotCalabiYau otherwise.
ToricMirrorData unified_from_bh(const BhDatum& datum);

inline constexpr std::size_t kMaxAmbientUnknowns = 4000;
inline constexpr std::size_t kMaxWitnessUnknowns = 20000;

/// [l v] = sum_n P_n * sum_m f(m) (m . n) [m].
struct MembershipWitness {
  RatVector ray;  ///< primitive generator v
  long exponent = 0;
  RatVector target;  ///< l v
  /// polynomials[k]: P_n for n = delta_dual[k], as (w, coefficient).
  std::vector<std::vector<std::pair<RatVector, Rat>>> polynomials;
  /// True when solved in the polynomial ring on Delta^v and projected to
  /// C[M]; false when that system exceeded the cap and C[M] was used directly.
  bool ambient = false;
  std::size_t unknowns = 0;  ///< size of the linear system that was solved
};

/// Searches l = 1, 2, ... with l (v . deg^v) <= degree_bound. Solves in the
/// polynomial ring with one variable per element of Delta^v, then keeps the
/// monomials coming from M; past kMaxAmbientUnknowns the system is set up in
/// C[M] directly. Every returned witness has passed verify_witness.
std::optional<MembershipWitness> key_lemma_witness(const ToricMirrorData& data, std::size_t ray_index,
                                                   const Rat& degree_bound);
std::optional<MembershipWitness> key_lemma_witness(const BhDatum& datum, std::size_t ray_index,
                                                   const Rat& degree_bound);

/// Expands the right-hand side symbolically and checks it equals [target];
/// also checks the support conditions on every P_n.
bool verify_witness(const ToricMirrorData& data, const MembershipWitness& w);

enum class Verdict { Pass, FailUnknown };
std::string to_string(Verdict v);

struct QuotientSlice {
  long degree;
  std::size_t ring_dim;
  std::size_t ideal_rank;
  std::size_t quotient_dim() const { return ring_dim - ideal_rank; }
};

/// One of the two conditions (primal: rays of K_N^v and f; dual: rays of K_M^v and g).
struct ConditionReport {
  Verdict verdict = Verdict::FailUnknown;
  std::string message;
  std::vector<RatVector> rays;
  std::vector<std::optional<MembershipWitness>> witnesses;
  /// Quotient C[K_N^v] / (C[K_N^v] cap Jac W) by degree of deg^v.
  std::vector<QuotientSlice> quotient;
  long max_generator_degree = 0;  ///< largest degree of a Hilbert basis element of K_N^v cap M
  std::optional<long> vanishing_from;  ///< start of the vanishing window, if found
  bool necessary_condition = false;
};

struct UnifiedReport {
  ConditionReport primal;
  ConditionReport dual;
  std::vector<std::string> warnings;
  bool passed() const { return primal.verdict == Verdict::Pass && dual.verdict == Verdict::Pass; }
};

/// Facet test: every facet theta of K_N has m in Delta and n in theta with
/// m . n <= 1 and m . n' = 0 for the other n' in theta.
bool necessary_condition(const ToricMirrorData& data);

/// The primal condition only.
ConditionReport primal_condition(const ToricMirrorData& data, long degree_bound);

UnifiedReport unified_condition(const ToricMirrorData& data, long degree_bound);

}  // namespace bhk
