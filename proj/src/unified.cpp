#include "bhk/unified.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "bhk/errors.hpp"
#include "bhk/linalg.hpp"
#include "bhk/monomials.hpp"

namespace bhk {

namespace {

void check_integral(const RatVector& v, std::size_t rank, const std::string& what) {
  if (v.size() != rank) throw InputError(what + " has length " + std::to_string(v.size()) + ", expected " + std::to_string(rank));
  for (const auto& x : v)
    if (!is_integer(x)) throw InputError(what + " has a non-integral entry " + to_string(x));
}

RatVector coefficients_or_ones(const std::optional<RatVector>& c, std::size_t size, const std::string& what) {
  if (!c) return RatVector(size, Rat(1));
  if (c->size() != size)
    throw InputError(what + " has " + std::to_string(c->size()) + " entries, expected " + std::to_string(size));
  for (const auto& x : *c)
    if (x == 0) throw InputError(what + " contains a zero coefficient");
  return *c;
}

RatVector add(RatVector a, const RatVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

RatVector scale(RatVector a, const Rat& s) {
  for (auto& x : a) x *= s;
  return a;
}

/// Strictly positive lambda with sum_n lambda_n n = deg^v.
RatVector positive_weights(const ToricMirrorData& data) {
  const auto& nd = data.delta_dual();
  const std::size_t r = data.rank();
  RatVector sigma(r);
  for (const auto& n : nd) sigma = add(sigma, n);
  std::vector<std::size_t> subset(r);
  for (int k = 1; k <= 64; ++k) {
    Rat t = make_rat(1, 1) / Rat(Int(1) << k);
    RatVector target = add(data.deg_dual(), scale(sigma, -t));
    if (!data.k_n().contains(target)) continue;
    // Caratheodory: some r-subset of Delta^v carries a nonnegative decomposition.
    std::vector<bool> pick(nd.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(r), true);
    do {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < nd.size(); ++i)
        if (pick[i]) idx.push_back(i);
      RatMatrix B(r, r);
      for (std::size_t c = 0; c < r; ++c)
        for (std::size_t i = 0; i < r; ++i) B(i, c) = nd[idx[c]][i];
      auto sol = rat_solve(B, target);
      if (!sol) continue;
      if (std::any_of(sol->begin(), sol->end(), [](const Rat& x) { return x < 0; })) continue;
      RatVector lambda(nd.size(), t);
      for (std::size_t c = 0; c < r; ++c) lambda[idx[c]] += (*sol)[c];
      return lambda;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  throw InputError("deg^v is not in the interior of K_N");
}

/// Left inverse data for w -> (w . n)_n.
struct CoxMap {
  std::vector<std::size_t> rows;  // r independent elements of Delta^v
  RatMatrix inverse;              // inverse of the matrix with those rows

  /// w in Z^r with (w . n)_n = a, if it exists.
  std::optional<RatVector> preimage(const ToricMirrorData& data, const Monomial& a) const {
    const std::size_t r = data.rank();
    RatVector sub(r);
    for (std::size_t i = 0; i < r; ++i) sub[i] = Rat(a[rows[i]]);
    RatVector w = inverse * sub;
    for (const auto& x : w)
      if (!is_integer(x)) return std::nullopt;
    for (std::size_t k = 0; k < data.delta_dual().size(); ++k)
      if (dot(w, data.delta_dual()[k]) != Rat(a[k])) return std::nullopt;
    return w;
  }
};

CoxMap make_cox_map(const ToricMirrorData& data) {
  const auto& nd = data.delta_dual();
  const std::size_t r = data.rank();
  CoxMap cm;
  RatMatrix rowsm(0, r);
  std::vector<RatVector> chosen;
  for (std::size_t k = 0; k < nd.size() && cm.rows.size() < r; ++k) {
    chosen.push_back(nd[k]);
    RatMatrix m(chosen.size(), r);
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = 0; j < r; ++j) m(i, j) = chosen[i][j];
    if (rat_rank(m) == chosen.size())
      cm.rows.push_back(k);
    else
      chosen.pop_back();
  }
  RatMatrix m(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, j) = nd[cm.rows[i]][j];
  cm.inverse = inverse(m);
  return cm;
}

Monomial cox_exponent(const ToricMirrorData& data, const RatVector& w) {
  Monomial a;
  for (const auto& n : data.delta_dual()) a.push_back(to_long(Int(dot(w, n))));
  return a;
}

}  // namespace

ToricMirrorData::ToricMirrorData(std::size_t rank, std::vector<RatVector> delta, std::vector<RatVector> delta_dual,
                                 RatVector deg, RatVector deg_dual, std::optional<RatVector> f,
                                 std::optional<RatVector> g)
    : rank_(rank),
      delta_(std::move(delta)),
      delta_dual_(std::move(delta_dual)),
      deg_(std::move(deg)),
      deg_dual_(std::move(deg_dual)),
      default_coefficients_(!f || !g) {
  if (rank_ == 0) throw InputError("rank must be positive");
  if (delta_.empty()) throw InputError("Delta is empty");
  if (delta_dual_.empty()) throw InputError("Delta_dual is empty");
  for (std::size_t i = 0; i < delta_.size(); ++i) check_integral(delta_[i], rank_, "Delta[" + std::to_string(i) + "]");
  for (std::size_t i = 0; i < delta_dual_.size(); ++i)
    check_integral(delta_dual_[i], rank_, "Delta_dual[" + std::to_string(i) + "]");
  check_integral(deg_, rank_, "deg");
  check_integral(deg_dual_, rank_, "deg_dual");
  if (std::set<RatVector, RatVectorLess>(delta_.begin(), delta_.end()).size() != delta_.size())
    throw InputError("Delta has repeated points");
  if (std::set<RatVector, RatVectorLess>(delta_dual_.begin(), delta_dual_.end()).size() != delta_dual_.size())
    throw InputError("Delta_dual has repeated points");
  f_ = coefficients_or_ones(f, delta_.size(), "f");
  g_ = coefficients_or_ones(g, delta_dual_.size(), "g");
  for (std::size_t i = 0; i < delta_dual_.size(); ++i)
    if (dot(deg_, delta_dual_[i]) != 1) throw InputError("deg . Delta_dual[" + std::to_string(i) + "] != 1");
  for (std::size_t i = 0; i < delta_.size(); ++i)
    if (dot(delta_[i], deg_dual_) != 1) throw InputError("Delta[" + std::to_string(i) + "] . deg_dual != 1");
  for (std::size_t i = 0; i < delta_.size(); ++i)
    for (std::size_t j = 0; j < delta_dual_.size(); ++j)
      if (dot(delta_[i], delta_dual_[j]) < 0)
        throw InputError("Delta[" + std::to_string(i) + "] . Delta_dual[" + std::to_string(j) + "] < 0");
  try {
    k_m_ = Cone::from_generators(delta_);
    k_n_ = Cone::from_generators(delta_dual_);
  } catch (const InputError& e) {
    throw InputError(std::string("cones K_M and K_N must be full-dimensional: ") + e.what());
  }
}

ToricMirrorData ToricMirrorData::dual() const {
  ToricMirrorData out(rank_, delta_dual_, delta_, deg_dual_, deg_, g_, f_);
  out.default_coefficients_ = default_coefficients_;
  return out;
}

ToricMirrorData unified_from_bh(const BhDatum& datum) {
  const Potential& P = datum.potential;
  const std::size_t d = P.dimension();
  LatticeData L = lattice_data(P, datum.group);
  if (!P.weights().k || !L.deg_in_m || !L.deg_dual_in_n)
    throw NotCalabiYau("unified data need deg in M and deg^v in N");
  RatMatrix minv = inverse(L.m_basis);
  RatMatrix ninv = inverse(L.n_basis);
  std::vector<RatVector> delta, delta_dual;
  for (std::size_t i = 0; i < d; ++i) {
    RatVector u(d);
    for (std::size_t j = 0; j < d; ++j) u[j] = Rat(P.exponent(i, j));
    delta.push_back(minv * u);
    RatVector v(d);
    v[i] = 1;
    delta_dual.push_back(ninv * v);
  }
  return ToricMirrorData(d, delta, delta_dual, minv * L.deg, ninv * L.deg_dual, P.coefficients(),
                         datum.dual_coefficients);
}

namespace {

/// Solves A x = e_0 where column c of A is given sparsely.
std::optional<RatVector> solve_columns(std::size_t rows, const std::vector<std::vector<std::pair<std::size_t, Rat>>>& columns) {
  RatMatrix A(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, v] : columns[c]) A(r, c) += v;
  RatVector rhs(rows);
  rhs[0] = 1;
  return rat_solve(A, rhs);
}

void sort_polynomials(MembershipWitness& w) {
  for (auto& p : w.polynomials)
    std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return RatVectorLess{}(a.first, b.first); });
}

}  // namespace

std::optional<MembershipWitness> key_lemma_witness(const ToricMirrorData& data, std::size_t ray_index,
                                                   const Rat& degree_bound) {
  if (ray_index >= data.rays().size()) throw std::out_of_range("ray index out of range");
  const RatVector& ray = data.rays()[ray_index];
  const Rat ray_degree = dot(ray, data.deg_dual());
  if (ray_degree <= 0) throw InputError("ray of K_N^v with nonpositive degree");
  const auto& nd = data.delta_dual();
  const auto& md = data.delta();
  const std::size_t nn = nd.size();

  const RatVector lambda = positive_weights(data);
  Int den = 1;
  for (const auto& x : lambda) den = lcm(den, Int(x.get_den()));
  std::vector<long> weight(nn);
  for (std::size_t k = 0; k < nn; ++k) weight[k] = to_long(Int(lambda[k] * Rat(den)));
  const long unit = to_long(den);  // Cox degree of x_n dW/dx_n
  std::vector<std::size_t> all(nn);
  for (std::size_t k = 0; k < nn; ++k) all[k] = k;
  std::vector<Monomial> delta_cox;
  for (const auto& m : md) delta_cox.push_back(cox_exponent(data, m));
  const CoxMap cox = make_cox_map(data);

  for (long l = 1; Rat(l) * ray_degree <= degree_bound; ++l) {
    MembershipWitness w;
    w.ray = ray;
    w.exponent = l;
    w.target = scale(ray, Rat(l));
    w.polynomials.resize(nn);
    const long total = to_long(Int(Rat(l) * ray_degree * Rat(den)));

    std::size_t ambient_count = 0;
    for (std::size_t k = 0; k < nn && ambient_count <= kMaxAmbientUnknowns; ++k)
      ambient_count += count_monomials_of_weight(weight, all, total - unit + weight[k], kMaxAmbientUnknowns);
    w.ambient = ambient_count <= kMaxAmbientUnknowns;

    if (w.ambient) {
      struct Unknown {
        std::size_t k;
        Monomial a;  // Cox exponent; entry k may be -1
      };
      std::vector<Unknown> unknowns;
      for (std::size_t k = 0; k < nn; ++k)
        for (auto b : monomials_of_weight(weight, all, total - unit + weight[k])) {
          b[k] -= 1;
          unknowns.push_back({k, std::move(b)});
        }
      std::map<Monomial, std::size_t> row_of;
      row_of.emplace(cox_exponent(data, w.target), 0);
      std::vector<std::vector<std::pair<std::size_t, Rat>>> columns(unknowns.size());
      for (std::size_t c = 0; c < unknowns.size(); ++c)
        for (std::size_t i = 0; i < md.size(); ++i) {
          Rat coef = data.f()[i] * Rat(delta_cox[i][unknowns[c].k]);
          if (coef == 0) continue;
          Monomial prod = unknowns[c].a;
          for (std::size_t k = 0; k < nn; ++k) prod[k] += delta_cox[i][k];
          columns[c].emplace_back(row_of.emplace(prod, row_of.size()).first->second, coef);
        }
      w.unknowns = unknowns.size();
      auto sol = solve_columns(row_of.size(), columns);
      if (!sol) continue;
      for (std::size_t c = 0; c < unknowns.size(); ++c) {
        if ((*sol)[c] == 0) continue;
        auto pre = cox.preimage(data, unknowns[c].a);
        if (!pre) continue;  // not a monomial of C[M]: dropped by the invariance projection
        w.polynomials[unknowns[c].k].emplace_back(*pre, (*sol)[c]);
      }
    } else {
      std::vector<std::pair<std::size_t, RatVector>> unknowns;
      for (std::size_t k = 0; k < nn; ++k) {
        std::vector<std::pair<RatVector, Rat>> ineqs;
        for (std::size_t k2 = 0; k2 < nn; ++k2) ineqs.emplace_back(nd[k2], Rat(k2 == k ? -1 : 0));
        for (auto& p : polytope_points(ineqs, data.deg_dual(), Rat(l) * ray_degree - 1)) unknowns.emplace_back(k, std::move(p));
      }
      if (unknowns.size() > kMaxWitnessUnknowns)
        throw CapExceeded("membership system has " + std::to_string(unknowns.size()) + " unknowns");
      std::map<RatVector, std::size_t, RatVectorLess> row_of;
      row_of.emplace(w.target, 0);
      std::vector<std::vector<std::pair<std::size_t, Rat>>> columns(unknowns.size());
      for (std::size_t c = 0; c < unknowns.size(); ++c)
        for (std::size_t i = 0; i < md.size(); ++i) {
          Rat coef = data.f()[i] * dot(md[i], nd[unknowns[c].first]);
          if (coef == 0) continue;
          columns[c].emplace_back(row_of.emplace(add(unknowns[c].second, md[i]), row_of.size()).first->second, coef);
        }
      w.unknowns = unknowns.size();
      auto sol = solve_columns(row_of.size(), columns);
      if (!sol) continue;
      for (std::size_t c = 0; c < unknowns.size(); ++c)
        if ((*sol)[c] != 0) w.polynomials[unknowns[c].first].emplace_back(unknowns[c].second, (*sol)[c]);
    }
    sort_polynomials(w);
    if (!verify_witness(data, w)) throw std::logic_error("membership witness fails verification");
    return w;
  }
  return std::nullopt;
}

std::optional<MembershipWitness> key_lemma_witness(const BhDatum& datum, std::size_t ray_index,
                                                   const Rat& degree_bound) {
  return key_lemma_witness(unified_from_bh(datum), ray_index, degree_bound);
}

bool verify_witness(const ToricMirrorData& data, const MembershipWitness& w) {
  const auto& nd = data.delta_dual();
  if (w.target != scale(w.ray, Rat(w.exponent))) return false;
  if (w.polynomials.size() != nd.size()) return false;
  std::map<RatVector, Rat, RatVectorLess> sum;
  for (std::size_t k = 0; k < nd.size(); ++k)
    for (const auto& [mono, c] : w.polynomials[k]) {
      if (mono.size() != data.rank()) return false;
      for (const auto& x : mono)
        if (!is_integer(x)) return false;
      for (std::size_t k2 = 0; k2 < nd.size(); ++k2)
        if (dot(mono, nd[k2]) < (k2 == k ? -1 : 0)) return false;
      for (std::size_t i = 0; i < data.delta().size(); ++i) {
        Rat coef = c * data.f()[i] * dot(data.delta()[i], nd[k]);
        if (coef != 0) sum[add(mono, data.delta()[i])] += coef;
      }
    }
  std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
  return sum.size() == 1 && sum.begin()->first == w.target && sum.begin()->second == 1;
}

std::string to_string(Verdict v) { return v == Verdict::Pass ? "PASS" : "FAIL-UNKNOWN"; }

bool necessary_condition(const ToricMirrorData& data) {
  for (const auto& rho : data.rays()) {
    std::vector<const RatVector*> facet;
    for (const auto& n : data.delta_dual())
      if (dot(rho, n) == 0) facet.push_back(&n);
    bool found = false;
    for (const auto& m : data.delta()) {
      std::size_t nonzero = 0;
      bool small = true;
      for (const auto* n : facet) {
        Rat p = dot(m, *n);
        if (p != 0) {
          ++nonzero;
          if (p > 1) small = false;
        }
      }
      if (nonzero <= 1 && small) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

/// Largest degree of an irreducible element of the semigroup C cap Z^r.
long max_generator_degree(const Cone& C, const RatVector& phi) {
  const std::size_t r = C.rank();
  std::vector<Rat> ray_degrees;
  for (const auto& g : C.generators()) ray_degrees.push_back(dot(g, phi));
  std::sort(ray_degrees.rbegin(), ray_degrees.rend());
  Rat H = 0;
  for (std::size_t i = 0; i < std::min(r, ray_degrees.size()); ++i) H += ray_degrees[i];
  const RatMatrix id = RatMatrix::identity(r);
  std::vector<RatVector> irreducible;
  long best = 0;
  for (long s = 1; Rat(s) <= H; ++s)
    for (const auto& p : slice_points(C, id, phi, Rat(s))) {
      bool reducible = false;
      for (const auto& g : irreducible)
        if (C.contains(add(p, scale(g, Rat(-1))))) {
          reducible = true;
          break;
        }
      if (!reducible) {
        irreducible.push_back(p);
        best = s;
      }
    }
  return best;
}

}  // namespace

ConditionReport primal_condition(const ToricMirrorData& data, long degree_bound) {
  ConditionReport rep;
  rep.rays = data.rays();
  rep.necessary_condition = necessary_condition(data);
  if (degree_bound <= 0) {
    rep.witnesses.assign(rep.rays.size(), std::nullopt);
    rep.message = "degree bound " + std::to_string(degree_bound) + " leaves nothing to search";
    return rep;
  }

  bool all_rays = true;
  for (std::size_t i = 0; i < rep.rays.size(); ++i) {
    rep.witnesses.push_back(key_lemma_witness(data, i, Rat(degree_bound)));
    if (!rep.witnesses.back()) all_rays = false;
  }

  const Cone dual = dual_cone(data.k_n());
  const RatMatrix id = RatMatrix::identity(data.rank());
  const auto& nd = data.delta_dual();
  rep.max_generator_degree = max_generator_degree(dual, data.deg_dual());
  long run = 0;
  for (long s = 0; s <= degree_bound; ++s) {
    auto ring = slice_points(dual, id, data.deg_dual(), Rat(s));
    std::map<RatVector, std::size_t, RatVectorLess> col;
    for (std::size_t i = 0; i < ring.size(); ++i) col.emplace(ring[i], i);
    std::vector<std::vector<std::pair<std::size_t, Rat>>> rows;
    if (s >= 1 && !ring.empty()) {
      for (std::size_t k = 0; k < nd.size(); ++k) {
        std::vector<std::pair<RatVector, Rat>> ineqs;
        for (std::size_t k2 = 0; k2 < nd.size(); ++k2) ineqs.emplace_back(nd[k2], Rat(k2 == k ? -1 : 0));
        for (const auto& w : polytope_points(ineqs, data.deg_dual(), Rat(s - 1))) {
          std::vector<std::pair<std::size_t, Rat>> row;
          for (std::size_t i = 0; i < data.delta().size(); ++i) {
            Rat coef = data.f()[i] * dot(data.delta()[i], nd[k]);
            if (coef == 0) continue;
            auto it = col.find(add(w, data.delta()[i]));
            if (it == col.end()) throw std::logic_error("Jacobian multiple leaves C[K_N^v]");
            row.emplace_back(it->second, coef);
          }
          if (!row.empty()) rows.push_back(std::move(row));
        }
      }
    }
    SparseMatrix J(rows.size(), ring.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& [c, v] : rows[i]) J.add(i, c, v);
    J.finalize();
    QuotientSlice q{s, ring.size(), rows.empty() ? 0 : rat_rank(J)};
    rep.quotient.push_back(q);
    run = q.quotient_dim() == 0 ? run + 1 : 0;
    if (run >= std::max<long>(rep.max_generator_degree, 1)) {
      rep.vanishing_from = s - run + 1;
      break;
    }
  }

  if (rep.vanishing_from && all_rays) {
    rep.verdict = Verdict::Pass;
    rep.message = "quotient vanishes from degree " + std::to_string(*rep.vanishing_from) +
                  "; witnesses found on all " + std::to_string(rep.rays.size()) + " rays";
  } else {
    std::string why;
    if (!rep.vanishing_from) why += "no vanishing window of length " + std::to_string(rep.max_generator_degree);
    if (!all_rays) why += std::string(why.empty() ? "" : "; ") + "some ray has no witness";
    rep.message = why + " up to degree bound " + std::to_string(degree_bound);
  }
  return rep;
}

UnifiedReport unified_condition(const ToricMirrorData& data, long degree_bound) {
  UnifiedReport rep;
  rep.primal = primal_condition(data, degree_bound);
  rep.dual = primal_condition(data.dual(), degree_bound);
  if (data.default_coefficients())
    rep.warnings.push_back(
        "coefficients default to 1: PASS certifies the condition for these coefficients, hence for generic ones; "
        "FAIL-UNKNOWN may be specific to them");
  return rep;
}

}  // namespace bhk
