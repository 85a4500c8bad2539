#include "bhk/complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "bhk/errors.hpp"
#include "bhk/linalg.hpp"
#include "bhk/parallel.hpp"

namespace bhk {

bool operator<(const BasisElement& a, const BasisElement& b) {
  RatVectorLess less;
  if (less(a.m, b.m)) return true;
  if (less(b.m, a.m)) return false;
  if (less(a.n, b.n)) return true;
  if (less(b.n, a.n)) return false;
  return a.wedge < b.wedge;
}

std::size_t ComplexSlice::index_of(const BasisElement& e) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), e);
  if (it == basis.end() || !(*it == e)) return npos;
  return static_cast<std::size_t>(it - basis.begin());
}

struct ComplexEngine::Cache {
  std::mutex mu;
  std::map<long, std::vector<RatVector>> m_points;
  std::map<long, std::vector<RatVector>> n_points;
};

namespace {

std::vector<RatVector> unit_vectors(std::size_t d) {
  std::vector<RatVector> out;
  for (std::size_t j = 0; j < d; ++j) {
    RatVector e(d);
    e[j] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

/// (-1)^{#{s in mask : s < j}}
int koszul_sign(std::uint32_t mask, std::size_t j) {
  std::uint32_t below = mask & ((std::uint32_t{1} << j) - 1);
  return (std::popcount(below) % 2) ? -1 : 1;
}

bool is_whole(const Rat& r, long& out) {
  if (!is_integer(r)) return false;
  out = to_long(r.get_num());
  return true;
}

}  // namespace

ComplexEngine::ComplexEngine(BhDatum datum, RingSide side)
    : datum_(std::move(datum)), side_(side), cache_(std::make_shared<Cache>()) {
  const std::size_t d = datum_.potential.dimension();
  if (d > 30) throw CapExceeded("complex engine supports at most 30 variables");
  lattice_ = lattice_data(datum_.potential, datum_.group);
  const auto& w = datum_.potential.weights();
  if (!w.k) throw NotCalabiYau("sum of weights " + to_string(w.sum) + " is not a positive integer");
  if (!lattice_.deg_in_m) throw NotCalabiYau("deg is not in M: G is not contained in SL_d");
  if (!lattice_.deg_dual_in_n)
    throw NotCalabiYau("deg^v is not in N: G does not contain the exponential grading operator");
  k_ = *w.k;
  central_charge_ = Rat(static_cast<long>(d)) - 2 * Rat(k_);
  kn_dual_ = Cone::from_generators(unit_vectors(d));
  kn_ = kn_dual_;
}

ComplexEngine ComplexEngine::for_variant(const BhDatum& datum, ComplexVariant variant) {
  switch (variant) {
    case ComplexVariant::BRing:
      return ComplexEngine(datum, RingSide::B);
    case ComplexVariant::ARing:
      return ComplexEngine(datum, RingSide::A);
    case ComplexVariant::ADualRing:
      return ComplexEngine(datum.mirror(), RingSide::A);
    case ComplexVariant::BDualRing:
      return ComplexEngine(datum.mirror(), RingSide::B);
  }
  throw std::invalid_argument("unknown complex variant");
}

const std::vector<RatVector>& ComplexEngine::m_points(long level) const {
  std::lock_guard lock(cache_->mu);
  auto it = cache_->m_points.find(level);
  if (it != cache_->m_points.end()) return it->second;
  auto pts = slice_points(kn_dual_, lattice_.m_basis, lattice_.deg_dual, Rat(level));
  return cache_->m_points.emplace(level, std::move(pts)).first->second;
}

const std::vector<RatVector>& ComplexEngine::n_points(long level) const {
  std::lock_guard lock(cache_->mu);
  auto it = cache_->n_points.find(level);
  if (it != cache_->n_points.end()) return it->second;
  auto pts = slice_points(kn_, lattice_.n_basis, lattice_.deg, Rat(level));
  return cache_->n_points.emplace(level, std::move(pts)).first->second;
}

ComplexSlice ComplexEngine::build_slice(const Rat& cohomological, const Rat& conformal,
                                        std::optional<GroupElement> sector) const {
  ComplexSlice slice{cohomological, conformal, std::move(sector), {}};
  long c = 0, t = 0;
  if (!is_whole(cohomological, c) || !is_whole(conformal, t)) return slice;
  const long d = static_cast<long>(datum_.potential.dimension());
  const long k = to_long(k_);
  for (long a = 0; a <= c + k; ++a) {
    long b = c + k - a;
    long s = side_ == RingSide::B ? t + k - a + b : t + k + a - b;
    if (s < 0 || s > d) continue;
    const auto& ms = m_points(a);
    const auto& ns = n_points(b);
    std::vector<const RatVector*> sector_ns;
    for (const auto& n : ns)
      if (!slice.sector || GroupElement(n) == *slice.sector) sector_ns.push_back(&n);
    for (const auto& m : ms)
      for (const RatVector* n : sector_ns) {
        if (dot(m, *n) != 0) continue;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << d); ++mask)
          if (std::popcount(mask) == s) slice.basis.push_back({m, *n, mask});
      }
  }
  std::sort(slice.basis.begin(), slice.basis.end());
  return slice;
}

std::vector<std::pair<BasisElement, Rat>> ComplexEngine::apply(const BasisElement& e) const {
  const Potential& P = datum_.potential;
  const std::size_t d = P.dimension();
  const RatVector& f = P.coefficients();
  const RatVector& g = datum_.dual_coefficients;
  std::vector<std::pair<BasisElement, Rat>> out;

  // Terms from Delta: multiplication by [u_i], u_i = row i of A_W in e-coordinates.
  for (std::size_t i = 0; i < d; ++i) {
    RatVector m2 = e.m;
    for (std::size_t j = 0; j < d; ++j) m2[j] += Rat(P.exponent(i, j));
    if (dot(m2, e.n) != 0) continue;
    if (side_ == RingSide::B) {
      // Contraction by u_i on Lambda*(N), u_i(v_j) = a_ij.
      int pos = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (!(e.wedge >> j & 1u)) continue;
        if (P.exponent(i, j) != 0) {
          Rat coef = f[i] * Rat(P.exponent(i, j)) * (pos % 2 ? -1 : 1);
          out.push_back({{m2, e.n, e.wedge & ~(std::uint32_t{1} << j)}, coef});
        }
        ++pos;
      }
    } else {
      // Wedge by u_i = sum_j a_ij e_j on Lambda*(M).
      for (std::size_t j = 0; j < d; ++j) {
        if (P.exponent(i, j) == 0 || (e.wedge >> j & 1u)) continue;
        Rat coef = f[i] * Rat(P.exponent(i, j)) * koszul_sign(e.wedge, j);
        out.push_back({{m2, e.n, e.wedge | (std::uint32_t{1} << j)}, coef});
      }
    }
  }
  // Terms from Delta^v: multiplication by [v_j].
  for (std::size_t j = 0; j < d; ++j) {
    if (e.m[j] != 0) continue;  // m . (n + v_j) = m_j > 0 kills the monomial
    RatVector n2 = e.n;
    n2[j] += 1;
    bool present = e.wedge >> j & 1u;
    if (side_ == RingSide::B) {
      if (present) continue;
      out.push_back({{e.m, n2, e.wedge | (std::uint32_t{1} << j)}, g[j] * koszul_sign(e.wedge, j)});
    } else {
      if (!present) continue;
      out.push_back({{e.m, n2, e.wedge & ~(std::uint32_t{1} << j)}, g[j] * koszul_sign(e.wedge, j)});
    }
  }
  return out;
}

SparseMatrix ComplexEngine::differential_matrix(const ComplexSlice& from, const ComplexSlice& to) const {
  if (to.cohomological != from.cohomological + 1 || to.conformal != from.conformal)
    throw std::invalid_argument("differential_matrix: target must be one cohomological degree above the source");
  if (from.sector != to.sector) throw std::invalid_argument("differential_matrix: sector mismatch");
  SparseMatrix D(to.basis.size(), from.basis.size());
  for (std::size_t col = 0; col < from.basis.size(); ++col)
    for (const auto& [target, coef] : apply(from.basis[col])) {
      std::size_t row = to.index_of(target);
      if (row == ComplexSlice::npos) throw std::logic_error("differential leaves the target slice");
      D.add(row, col, coef);
    }
  D.finalize();
  return D;
}

std::size_t ComplexEngine::rank_step(const Rat& coh, const Rat& conf, const GroupElement& sector) const {
  ComplexSlice from = build_slice(coh, conf, sector);
  if (from.basis.empty()) return 0;
  ComplexSlice to = build_slice(coh + 1, conf, sector);
  if (to.basis.empty()) return 0;
  return rat_rank(differential_matrix(from, to));
}

std::size_t ComplexEngine::sector_cohomology(const Rat& coh, const Rat& conf, const GroupElement& sector) const {
  std::size_t dim = build_slice(coh, conf, sector).basis.size();
  if (dim == 0) return 0;
  return dim - rank_step(coh, conf, sector) - rank_step(coh - 1, conf, sector);
}

std::size_t ComplexEngine::cohomology_dim(const Rat& cohomological, const Rat& conformal) const {
  std::size_t total = 0;
  for (const auto& g : datum_.group.elements()) total += sector_cohomology(cohomological, conformal, g);
  return total;
}

HodgeTable ComplexEngine::bigraded_table(const TableOptions& options) const {
  const long chat = to_long(central_charge_.get_num());
  const long lo = -options.window_margin;
  const long hi = chat + options.window_margin;
  const auto& sectors = datum_.group.elements();

  struct Unit {
    std::size_t sector;
    long conformal;
  };
  std::vector<Unit> units;
  for (std::size_t s = 0; s < sectors.size(); ++s)
    for (long t = lo; t <= hi; ++t) units.push_back({s, t});

  // dims[u][c - lo]
  std::vector<std::vector<std::size_t>> dims(units.size());
  auto run = [&](std::size_t u) {
    const auto& sector = sectors[units[u].sector];
    Rat t(units[u].conformal);
    std::vector<ComplexSlice> slices;
    for (long c = lo - 1; c <= hi + 1; ++c) slices.push_back(build_slice(Rat(c), t, sector));
    std::vector<std::size_t> ranks(slices.size() - 1);  // ranks[i]: slices[i] -> slices[i+1]
    for (std::size_t i = 0; i + 1 < slices.size(); ++i)
      ranks[i] = (slices[i].basis.empty() || slices[i + 1].basis.empty())
                     ? 0
                     : rat_rank(differential_matrix(slices[i], slices[i + 1]));
    for (std::size_t i = 1; i + 1 < slices.size(); ++i)
      dims[u].push_back(slices[i].basis.size() - ranks[i] - ranks[i - 1]);
  };

  parallel_for(units.size(), options.threads, run);

  HodgeTable table(central_charge_);
  for (std::size_t u = 0; u < units.size(); ++u)
    for (long c = lo; c <= hi; ++c) table.add(Rat(c), Rat(units[u].conformal), dims[u][static_cast<std::size_t>(c - lo)]);
  return table;
}

}  // namespace bhk
