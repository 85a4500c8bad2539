#include "bhk/milnor.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <tuple>

#include "bhk/errors.hpp"
#include "bhk/linalg.hpp"
#include "bhk/parallel.hpp"

namespace bhk {

namespace {

struct Triplet {
  std::size_t row, col;
  Rat value;
};

std::size_t sparse_rank(std::size_t rows, std::size_t cols, const std::vector<Triplet>& entries) {
  if (rows == 0 || cols == 0) return 0;
  SparseMatrix S(rows, cols);
  for (const auto& t : entries) S.add(t.row, t.col, t.value);
  S.finalize();
  return rat_rank(S);
}

/// Grid of weighted degrees: common denominator L of the weights on vars and
/// the integer weights q_j * L.
struct Grid {
  long L = 1;
  std::vector<long> w;  // indexed by full variable index; 0 outside vars
};

Grid make_grid(const Potential& P, const std::vector<std::size_t>& vars) {
  const auto& q = P.weights().q;
  Grid g;
  Int L = 1;
  for (auto j : vars) L = lcm(L, Int(q[j].get_den()));
  g.L = to_long(L);
  g.w.assign(P.dimension(), 0);
  for (auto j : vars) g.w[j] = to_long(Int(q[j] * Rat(L)));
  return g;
}

/// Monomials of W supported on vars.
std::vector<std::size_t> restricted_monomials(const Potential& P, const std::vector<std::size_t>& vars) {
  std::vector<bool> in(P.dimension(), false);
  for (auto j : vars) in[j] = true;
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < P.dimension(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < P.dimension() && ok; ++j)
      if (!in[j] && P.exponent(i, j) != 0) ok = false;
    if (ok) rows.push_back(i);
  }
  return rows;
}

}  // namespace

std::vector<std::pair<Rat, std::size_t>> MilnorDims::graded() const {
  std::vector<std::pair<Rat, std::size_t>> out;
  for (const auto& s : slices)
    if (s.dimension) out.emplace_back(s.degree, s.dimension);
  return out;
}

std::size_t MilnorDims::dim_at(const Rat& degree) const {
  for (const auto& s : slices)
    if (s.degree == degree) return s.dimension;
  return 0;
}

MilnorDims milnor_dims(const Potential& P, const std::vector<std::size_t>& vars_in, const CharacterFilter& filter) {
  const std::size_t d = P.dimension();
  std::vector<std::size_t> vars = vars_in;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (auto j : vars)
    if (j >= d) throw InputError("variable index out of range");
  const auto& q = P.weights().q;

  MilnorDims out;
  out.vars = vars;
  out.socle = 0;
  out.expected_total = 1;
  Rat maxq = 0;
  for (auto j : vars) {
    out.socle += 1 - 2 * q[j];
    out.expected_total *= 1 / q[j] - 1;
    maxq = std::max(maxq, q[j]);
  }
  out.window_end = out.socle + maxq;

  const Grid grid = make_grid(P, vars);
  const auto terms = restricted_monomials(P, vars);
  const long nmax = to_long(floor(out.window_end * Rat(grid.L)));
  out.vanishes_above_socle = true;

  for (long n = 0; n <= nmax; ++n) {
    MilnorSlice slice;
    slice.degree = make_rat(n, grid.L);
    std::vector<Monomial> all = monomials_of_weight(grid.w, vars, n);
    for (auto& m : all)
      if (!filter || filter(m)) slice.monomials.push_back(std::move(m));
    std::map<Monomial, std::size_t> index;
    for (std::size_t c = 0; c < slice.monomials.size(); ++c) index.emplace(slice.monomials[c], c);

    std::vector<Triplet> entries;
    std::size_t rows = 0;
    if (!slice.monomials.empty()) {
      for (auto j : vars) {
        std::vector<Monomial> multipliers = monomials_of_weight(grid.w, vars, n - (grid.L - grid.w[j]));
        for (const auto& b : multipliers) {
          std::vector<std::pair<Monomial, Rat>> poly;
          for (auto i : terms) {
            long a = to_long(P.exponent(i, j));
            if (a == 0) continue;
            Monomial m = b;
            for (auto jj : vars) m[jj] += to_long(P.exponent(i, jj));
            m[j] -= 1;
            poly.emplace_back(std::move(m), P.coefficients()[i] * Rat(a));
          }
          if (poly.empty()) continue;
          if (filter && !filter(poly.front().first)) continue;
          for (auto& [m, c] : poly) {
            auto it = index.find(m);
            if (it == index.end()) throw std::logic_error("Jacobian generator leaves its slice");
            entries.push_back({rows, it->second, c});
          }
          ++rows;
        }
      }
    }
    slice.rank = sparse_rank(rows, slice.monomials.size(), entries);
    slice.dimension = slice.monomials.size() - slice.rank;
    if (slice.degree <= out.socle)
      out.total += slice.dimension;
    else if (slice.dimension)
      out.vanishes_above_socle = false;
    out.slices.push_back(std::move(slice));
  }
  return out;
}

MilnorDims milnor_dims(const Potential& P) {
  std::vector<std::size_t> vars(P.dimension());
  for (std::size_t j = 0; j < vars.size(); ++j) vars[j] = j;
  return milnor_dims(P, vars);
}

bool is_nondegenerate(const Potential& P) { return milnor_dims(P).nondegenerate(); }

SectorData sector_data(const Potential& P, const SymmetryGroup& G, const GroupElement& g) {
  const auto& q = P.weights().q;
  SectorData s;
  s.g = g;
  s.shift_plus = 0;
  s.shift_minus = 0;
  for (std::size_t j = 0; j < P.dimension(); ++j) {
    if (g[j] == 0) {
      s.fixed_set.push_back(j);
    } else {
      s.shift_plus += g[j] - q[j];
      s.shift_minus += 1 - g[j] - q[j];
    }
  }
  s.full = milnor_dims(P, s.fixed_set);
  const auto fixed = s.fixed_set;
  const auto gens = G.generators();
  // (prod_{fixed} x_j) x^a is invariant iff sum_{fixed} (1 + a_j) h_j is integral for every generator.
  CharacterFilter invariant = [fixed, gens](const Monomial& a) {
    for (const auto& gen : gens) {
      Rat phase = 0;
      for (auto j : fixed) phase += Rat(1 + a[j]) * gen[j];
      if (!is_integer(phase)) return false;
    }
    return true;
  };
  s.invariant = milnor_dims(P, s.fixed_set, invariant);
  return s;
}

HodgeTable orbifold_b_table(const Potential& P, const SymmetryGroup& G, unsigned threads) {
  CyReport cy = cy_check(P, G);
  if (!cy.calabi_yau_type()) {
    if (!cy.k) throw NotCalabiYau("sum of weights " + to_string(cy.weight_sum) + " is not a positive integer");
    if (!cy.deg_in_m) throw NotCalabiYau("deg is not in M: G is not contained in SL_d");
    throw NotCalabiYau("deg^v is not in N: G does not contain the exponential grading operator");
  }
  const auto& elements = G.elements();
  std::vector<SectorData> sectors(elements.size());
  parallel_for(elements.size(), threads, [&](std::size_t i) { sectors[i] = sector_data(P, G, elements[i]); });

  HodgeTable table(cy.central_charge);
  for (const auto& s : sectors) {
    if (!s.full.nondegenerate())
      throw DegeneratePotential("sector " + to_string(s.g.h()) + ": restricted potential fails the Milnor test (total " +
                                std::to_string(s.full.total) + ", expected " + to_string(s.full.expected_total) + ")");
    for (const auto& slice : s.invariant.slices)
      if (slice.degree <= s.invariant.socle)
        table.add(s.shift_plus + slice.degree, s.shift_minus + slice.degree, slice.dimension);
  }
  return table;
}

HodgeTable orbifold_a_table(const Potential& P, const SymmetryGroup& G, unsigned threads) {
  return orbifold_b_table(P, G, threads).reflect_minus();
}

namespace {

struct LogJacKey {
  Monomial x, y;
  std::uint32_t wedge;
  bool operator<(const LogJacKey& o) const { return std::tie(x, y, wedge) < std::tie(o.x, o.y, o.wedge); }
};

}  // namespace

std::vector<std::pair<Rat, std::size_t>> log_jacobian_cohomology(const Potential& P, const Rat& max_degree,
                                                                  const SymmetryGroup* G) {
  const std::size_t d = P.dimension();
  if (d > 30) throw CapExceeded("log Jacobian complex supports at most 30 variables");
  std::vector<std::size_t> vars(d);
  for (std::size_t j = 0; j < d; ++j) vars[j] = j;
  const Grid grid = make_grid(P, vars);
  const long L = grid.L;
  std::vector<long> ones(d, 1);

  auto invariant = [&](const Monomial& a) {
    if (!G) return true;
    for (const auto& gen : G->generators()) {
      Rat phase = 0;
      for (std::size_t j = 0; j < d; ++j) phase += Rat(a[j]) * gen[j];
      if (!is_integer(phase)) return false;
    }
    return true;
  };

  // Slice (n, T): total degree n / L, and T / L = deg_x - deg_y + |S|, which d preserves.
  auto build = [&](long n, long T) {
    std::vector<LogJacKey> basis;
    if (n < 0) return basis;
    for (long s = 0; s <= static_cast<long>(d); ++s) {
      long twice = n - T + L * s;  // 2 L |b|
      if (twice < 0 || twice % (2 * L)) continue;
      long yb = twice / (2 * L);
      long xw = n - L * yb;
      if (xw < 0) continue;
      auto xs = monomials_of_weight(grid.w, vars, xw);
      auto ys = monomials_of_weight(ones, vars, yb);
      for (const auto& x : xs) {
        if (!invariant(x)) continue;
        for (const auto& y : ys) {
          bool disjoint = true;
          for (std::size_t j = 0; j < d && disjoint; ++j)
            if (x[j] > 0 && y[j] > 0) disjoint = false;
          if (!disjoint) continue;
          for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << d); ++mask)
            if (std::popcount(mask) == s) basis.push_back({x, y, mask});
        }
      }
    }
    std::sort(basis.begin(), basis.end());
    return basis;
  };

  auto rank = [&](const std::vector<LogJacKey>& from, const std::vector<LogJacKey>& to) -> std::size_t {
    if (from.empty() || to.empty()) return 0;
    std::vector<Triplet> entries;
    auto locate = [&](const LogJacKey& k) {
      auto it = std::lower_bound(to.begin(), to.end(), k);
      if (it == to.end() || k < *it) throw std::logic_error("log Jacobian differential leaves its slice");
      return static_cast<std::size_t>(it - to.begin());
    };
    for (std::size_t col = 0; col < from.size(); ++col) {
      const auto& e = from[col];
      for (std::size_t i = 0; i < d; ++i) {
        std::uint32_t bit = std::uint32_t{1} << i;
        int sign = std::popcount(e.wedge & (bit - 1)) % 2 ? -1 : 1;
        if (e.wedge & bit) {
          // x_i dF/dx_i = sum_k c_k a_ki x^{u_k}, then contraction with e_i^v.
          for (std::size_t k = 0; k < d; ++k) {
            long a = to_long(P.exponent(k, i));
            if (a == 0) continue;
            LogJacKey t{e.x, e.y, e.wedge & ~bit};
            bool zero = false;
            for (std::size_t j = 0; j < d; ++j) {
              t.x[j] += to_long(P.exponent(k, j));
              if (t.x[j] > 0 && t.y[j] > 0) zero = true;
            }
            if (!zero) entries.push_back({locate(t), col, P.coefficients()[k] * Rat(a) * sign});
          }
        } else if (e.x[i] == 0) {
          LogJacKey t{e.x, e.y, e.wedge | bit};
          t.y[i] += 1;
          entries.push_back({locate(t), col, Rat(sign)});
        }
      }
    }
    return sparse_rank(to.size(), from.size(), entries);
  };

  std::vector<std::pair<Rat, std::size_t>> out;
  const long nmax = to_long(floor(max_degree * Rat(L)));
  for (long n = 0; n <= nmax; ++n) {
    std::set<long> levels;
    for (long yb = 0; yb * L <= n; ++yb)
      for (long s = 0; s <= static_cast<long>(d); ++s) levels.insert(n - 2 * L * yb + L * s);
    std::size_t total = 0;
    for (long T : levels) {
      auto here = build(n, T);
      if (here.empty()) continue;
      total += here.size() - rank(here, build(n + L, T)) - rank(build(n - L, T), here);
    }
    out.emplace_back(make_rat(n, L), total);
  }
  return out;
}

}  // namespace bhk
