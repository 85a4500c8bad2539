#include "bhk/cone.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "bhk/errors.hpp"
#include "bhk/linalg.hpp"

namespace bhk {

namespace {

std::size_t vector_rank(const std::vector<RatVector>& vs, std::size_t dim) {
  if (vs.empty()) return 0;
  RatMatrix m(vs.size(), dim);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vs[i][j];
  return rat_rank(m);
}

/// Scales a row (coefficients + constant) to a canonical positive multiple.
void normalize_row(RatVector& row) {
  Int den = common_denominator(row);
  Int g = 0;
  for (auto& x : row) {
    x *= den;
    g = gcd(g, x.get_num());
  }
  if (g > 1)
    for (auto& x : row) x /= g;
}

using Row = RatVector;  // coefficients..., then constant term for affine rows

std::vector<Row> eliminate(const std::vector<Row>& rows, std::size_t var) {
  std::vector<const Row*> pos, neg;
  std::set<Row, RatVectorLess> out;
  for (const auto& r : rows) {
    if (r[var] > 0)
      pos.push_back(&r);
    else if (r[var] < 0)
      neg.push_back(&r);
    else
      out.insert(r);
  }
  for (const Row* p : pos)
    for (const Row* n : neg) {
      Rat cp = (*p)[var];
      Rat cn = -(*n)[var];
      Row combo(p->size());
      for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = cn * (*p)[i] + cp * (*n)[i];
      combo[var] = 0;
      normalize_row(combo);
      out.insert(std::move(combo));
      if (out.size() > kMaxEliminationRows)
        throw CapExceeded("Fourier-Motzkin elimination exceeded " + std::to_string(kMaxEliminationRows) + " rows");
    }
  return {out.begin(), out.end()};
}

}  // namespace

RatVector primitive(const RatVector& v) {
  RatVector p = v;
  normalize_row(p);
  bool nonzero = std::any_of(p.begin(), p.end(), [](const Rat& x) { return x != 0; });
  if (!nonzero) throw std::invalid_argument("primitive: zero vector");
  return p;
}

Cone Cone::from_generators(const std::vector<RatVector>& input) {
  if (input.empty()) throw InputError("cone needs at least one generator");
  const std::size_t r = input.front().size();
  if (r > kMaxConeRank) throw CapExceeded("cone rank " + std::to_string(r) + " exceeds cap " + std::to_string(kMaxConeRank));
  std::set<RatVector, RatVectorLess> uniq;
  for (const auto& g : input) {
    if (g.size() != r) throw InputError("cone generators have inconsistent length");
    if (std::all_of(g.begin(), g.end(), [](const Rat& x) { return x == 0; })) continue;
    uniq.insert(primitive(g));
  }
  std::vector<RatVector> gens(uniq.begin(), uniq.end());
  if (vector_rank(gens, r) != r) throw InputError("cone is not full-dimensional");

  // Split into a spanning subset B and the rest O.
  std::vector<std::size_t> basis_idx, other_idx;
  std::vector<RatVector> chosen;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    chosen.push_back(gens[i]);
    if (vector_rank(chosen, r) == chosen.size()) {
      basis_idx.push_back(i);
      if (chosen.size() == r) {
        for (std::size_t k = i + 1; k < gens.size(); ++k) other_idx.push_back(k);
        break;
      }
    } else {
      chosen.pop_back();
      other_idx.push_back(i);
    }
  }
  RatMatrix B(r, r);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t j = 0; j < r; ++j) B(j, c) = gens[basis_idx[c]][j];
  RatMatrix Binv = inverse(B);

  // x = B lambda_B + sum_O lambda_j g_j; eliminate the free multipliers lambda_O.
  const std::size_t nvar = r + other_idx.size();
  std::vector<Row> rows;
  for (std::size_t i = 0; i < r; ++i) {
    Row row(nvar + 1);
    for (std::size_t j = 0; j < r; ++j) row[j] = Binv(i, j);
    for (std::size_t o = 0; o < other_idx.size(); ++o) {
      Rat bg = 0;
      for (std::size_t j = 0; j < r; ++j) bg += Binv(i, j) * gens[other_idx[o]][j];
      row[r + o] = -bg;
    }
    normalize_row(row);
    rows.push_back(std::move(row));
  }
  for (std::size_t o = 0; o < other_idx.size(); ++o) {
    Row row(nvar + 1);
    row[r + o] = 1;
    rows.push_back(std::move(row));
  }
  for (std::size_t o = other_idx.size(); o-- > 0;) rows = eliminate(rows, r + o);

  Cone C;
  C.rank_ = r;
  std::set<RatVector, RatVectorLess> normals;
  for (const auto& row : rows) {
    RatVector n(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(r));
    if (std::all_of(n.begin(), n.end(), [](const Rat& x) { return x == 0; })) continue;
    std::vector<RatVector> tight;
    for (const auto& g : gens)
      if (dot(n, g) == 0) tight.push_back(g);
    if (vector_rank(tight, r) == r - 1) normals.insert(primitive(n));
  }
  C.facet_normals_.assign(normals.begin(), normals.end());
  for (const auto& g : gens) {
    std::vector<RatVector> tight;
    for (const auto& n : C.facet_normals_)
      if (dot(n, g) == 0) tight.push_back(n);
    if (vector_rank(tight, r) == r - 1) C.generators_.push_back(g);
  }
  if (vector_rank(C.facet_normals_, r) != r) throw InputError("cone is not pointed");
  return C;
}

bool Cone::contains(const RatVector& x) const {
  return std::all_of(facet_normals_.begin(), facet_normals_.end(), [&](const RatVector& n) { return dot(n, x) >= 0; });
}

bool Cone::contains_interior(const RatVector& x) const {
  return std::all_of(facet_normals_.begin(), facet_normals_.end(), [&](const RatVector& n) { return dot(n, x) > 0; });
}

bool operator==(const Cone& a, const Cone& b) {
  return a.rank_ == b.rank_ && a.generators_ == b.generators_ && a.facet_normals_ == b.facet_normals_;
}

Cone dual_cone(const Cone& C) {
  Cone D;
  D.rank_ = C.rank_;
  D.generators_ = C.facet_normals_;
  D.facet_normals_ = C.generators_;
  return D;
}

std::vector<RatVector> polytope_points(const std::vector<std::pair<RatVector, Rat>>& inequalities, const RatVector& phi,
                                       const Rat& s) {
  const std::size_t r = phi.size();
  std::size_t p = r;
  for (std::size_t i = 0; i < r; ++i)
    if (phi[i] != 0) {
      p = i;
      break;
    }
  if (p == r) throw InputError("slice functional is zero");

  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < r; ++i)
    if (i != p) vars.push_back(i);
  const std::size_t R = vars.size();

  // Substitute z_p = (s - sum_{i != p} phi_i z_i) / phi_p. Rows: coeffs (R), then -beta,
  // encoding sum c_i z_i - beta >= 0.
  std::vector<Row> top;
  for (const auto& [a, beta] : inequalities) {
    Row row(R + 1);
    for (std::size_t t = 0; t < R; ++t) row[t] = a[vars[t]] - a[p] * phi[vars[t]] / phi[p];
    row[R] = a[p] * s / phi[p] - beta;
    top.push_back(std::move(row));
  }
  std::vector<std::vector<Row>> levels(R ? R : 1);
  if (R) {
    levels[R - 1] = top;
    for (std::size_t t = R - 1; t > 0; --t) levels[t - 1] = eliminate(levels[t], t);
  }

  std::vector<RatVector> out;
  RatVector reduced(R);
  auto emit = [&]() {
    Rat zp = s;
    for (std::size_t t = 0; t < R; ++t) zp -= phi[vars[t]] * reduced[t];
    zp /= phi[p];
    if (!is_integer(zp)) return;
    RatVector z(r);
    z[p] = zp;
    for (std::size_t t = 0; t < R; ++t) z[vars[t]] = reduced[t];
    for (const auto& [a, beta] : inequalities)
      if (dot(a, z) < beta) return;
    out.push_back(std::move(z));
  };

  std::function<void(std::size_t)> descend = [&](std::size_t t) {
    if (t == R) {
      emit();
      return;
    }
    bool has_lo = false, has_hi = false;
    Int lo, hi;
    for (const auto& row : levels[t]) {
      Rat rest = row[R];
      for (std::size_t i = 0; i < t; ++i) rest += row[i] * reduced[i];
      const Rat& c = row[t];
      if (c == 0) {
        if (rest < 0) return;  // infeasible under the fixed prefix
        continue;
      }
      Rat bound = -rest / c;
      if (c > 0) {
        Int b = ceil(bound);
        if (!has_lo || b > lo) lo = b;
        has_lo = true;
      } else {
        Int b = floor(bound);
        if (!has_hi || b < hi) hi = b;
        has_hi = true;
      }
    }
    if (!has_lo || !has_hi) throw InputError("slice is unbounded");
    for (Int z = lo; z <= hi; ++z) {
      reduced[t] = z;
      descend(t + 1);
    }
  };
  descend(0);
  std::sort(out.begin(), out.end(), RatVectorLess{});
  return out;
}

std::vector<RatVector> slice_points(const Cone& C, const RatMatrix& lattice_basis, const RatVector& phi, const Rat& s) {
  const std::size_t r = C.rank();
  for (const auto& g : C.generators())
    if (dot(phi, g) <= 0) throw InputError("slice functional is not positive on the cone");
  if (s < 0) return {};
  // Work in lattice coordinates z with x = basis * z.
  RatMatrix Bt = lattice_basis.transpose();
  std::vector<std::pair<RatVector, Rat>> ineqs;
  for (const auto& n : C.facet_normals()) ineqs.emplace_back(Bt * n, Rat(0));
  RatVector phi_z = Bt * phi;
  std::vector<RatVector> out;
  for (const auto& z : polytope_points(ineqs, phi_z, s)) {
    RatVector x(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) x[i] += lattice_basis(i, j) * z[j];
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end(), RatVectorLess{});
  return out;
}

std::vector<std::pair<RatVector, RatVector>> zero_pairing_pairs(const LatticeSlice& m_side, const Rat& sM,
                                                                const LatticeSlice& n_side, const Rat& sN) {
  auto ms = slice_points(*m_side.cone, *m_side.basis, m_side.functional, sM);
  auto ns = slice_points(*n_side.cone, *n_side.basis, n_side.functional, sN);
  std::vector<std::pair<RatVector, RatVector>> out;
  for (const auto& m : ms)
    for (const auto& n : ns)
      if (dot(m, n) == 0) out.emplace_back(m, n);
  return out;
}

}  // namespace bhk
