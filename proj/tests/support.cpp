#include "support.hpp"

#include <algorithm>
#include <stdexcept>

namespace testing_support {

IntMatrix matrix(const std::vector<std::vector<long>>& rows) {
  IntMatrix A(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) A(i, j) = rows[i][j];
  return A;
}

IntMatrix diag(const std::vector<long>& a) {
  IntMatrix A(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) A(i, i) = a[i];
  return A;
}

RatVector rats(const std::vector<std::string>& xs) {
  RatVector v;
  for (const auto& x : xs) v.push_back(bhk::parse_rat(x));
  return v;
}

std::vector<bhk::GroupElement> elements(const std::vector<std::vector<std::string>>& gens) {
  std::vector<bhk::GroupElement> out;
  for (const auto& g : gens) out.emplace_back(rats(g));
  return out;
}

bhk::BhDatum datum(const IntMatrix& A, const std::vector<std::vector<std::string>>& gens) {
  bhk::Potential P(A);
  return bhk::BhDatum(P, bhk::subgroup_closure(P, elements(gens)));
}

std::string fixture_path(const std::string& name) { return std::string(BHK_FIXTURE_DIR) + "/" + name + ".json"; }

bhk::InputSpec fixture(const std::string& name) { return bhk::load_input(fixture_path(name)); }

bhk::BhDatum fixture_datum(const std::string& name) { return bhk::make_datum(fixture(name)); }

Element reduce(Element h) {
  for (auto& x : h) {
    x -= Rat(bhk::floor(x));
  }
  return h;
}

ElementSet closure(const std::vector<Element>& gens, std::size_t d) {
  ElementSet seen{Element(d, Rat(0))};
  std::vector<Element> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& s : frontier)
      for (const auto& g : gens) {
        Element t(d);
        for (std::size_t j = 0; j < d; ++j) t[j] = s[j] + g[j];
        t = reduce(t);
        if (seen.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  return seen;
}

std::vector<std::vector<Rat>> inverse_oracle(const IntMatrix& A) {
  const std::size_t n = A.rows();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(A(i, j));
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::runtime_error("singular");
    std::swap(m[p], m[c]);
    Rat piv = m[c][c];
    for (auto& x : m[c]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

std::vector<Rat> weights_oracle(const IntMatrix& A) {
  auto inv = inverse_oracle(A);
  std::vector<Rat> q(A.rows());
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) q[i] += inv[i][j];
  return q;
}

ElementSet aut_oracle(const IntMatrix& A) {
  auto inv = inverse_oracle(A);
  const std::size_t d = A.rows();
  std::vector<Element> gens;
  for (std::size_t j = 0; j < d; ++j) {
    Element c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = inv[i][j];
    gens.push_back(reduce(c));
  }
  return closure(gens, d);
}

ElementSet dual_group_oracle(const IntMatrix& A, const std::vector<Element>& gens) {
  const std::size_t d = A.rows();
  ElementSet out;
  for (const auto& hp : aut_oracle(A.transpose())) {
    bool ok = true;
    for (const auto& h : gens) {
      Rat s;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) s += hp[i] * Rat(A(i, j)) * h[j];
      if (!bhk::is_integer(s)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(hp);
  }
  return out;
}

ElementSet to_set(const bhk::SymmetryGroup& G) {
  ElementSet out;
  for (const auto& g : G.elements()) out.insert(g.h());
  return out;
}

bhk::HodgeTable fermat_orbifold_oracle(const std::vector<long>& a, const std::vector<Element>& gens) {
  const std::size_t d = a.size();
  std::vector<Rat> q(d);
  Rat c = d;
  for (std::size_t j = 0; j < d; ++j) {
    q[j] = bhk::make_rat(1, a[j]);
    c -= 2 * q[j];
  }
  bhk::HodgeTable table(c);
  for (const auto& h : closure(gens, d)) {
    std::vector<std::size_t> fixed;
    Rat plus, minus;
    for (std::size_t j = 0; j < d; ++j) {
      if (h[j] == 0) {
        fixed.push_back(j);
      } else {
        plus += h[j] - q[j];
        minus += 1 - h[j] - q[j];
      }
    }
    // Monomials prod_{fixed} x_j^{e_j}, 0 <= e_j <= a_j - 2, kept when
    // prod x_j^{e_j + 1} is invariant.
    std::vector<long> e(fixed.size(), 0);
    while (true) {
      bool ok = true;
      if (!fixed.empty())
        for (const auto& g : gens) {
          Rat s;
          for (std::size_t i = 0; i < fixed.size(); ++i) s += (e[i] + 1) * g[fixed[i]];
          if (!bhk::is_integer(s)) {
            ok = false;
            break;
          }
        }
      if (ok) {
        Rat p;
        for (std::size_t i = 0; i < fixed.size(); ++i) p += e[i] * q[fixed[i]];
        table.add(plus + p, minus + p, 1);
      }
      std::size_t i = 0;
      while (i < fixed.size() && ++e[i] > a[fixed[i]] - 2) e[i++] = 0;
      if (i == fixed.size()) break;
    }
  }
  return table;
}

std::map<Rat, std::size_t> fermat_milnor_oracle(const std::vector<long>& a) {
  std::map<Rat, std::size_t> poly{{Rat(0), 1}};
  for (long aj : a) {
    std::map<Rat, std::size_t> next;
    for (const auto& [deg, c] : poly)
      for (long e = 0; e <= aj - 2; ++e) next[deg + bhk::make_rat(e, aj)] += c;
    poly = std::move(next);
  }
  return poly;
}

Rat milnor_total_oracle(const std::vector<Rat>& q) {
  Rat t = 1;
  for (const auto& x : q) t *= 1 / x - 1;
  return t;
}

Int power_coefficient(const std::vector<long>& p, unsigned e, std::size_t k) {
  std::vector<Int> acc{Int(1)};
  for (unsigned i = 0; i < e; ++i) {
    std::vector<Int> next(acc.size() + p.size() - 1);
    for (std::size_t x = 0; x < acc.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y) next[x + y] += acc[x] * p[y];
    acc = std::move(next);
  }
  return k < acc.size() ? acc[k] : Int(0);
}

const std::vector<BatteryEntry>& battery() {
  static const std::vector<BatteryEntry> b = {
      {"cubic_J", "fermat cubic"},          {"cubic_SL", "fermat cubic"},
      {"chain_cubic_J", "chain + fermat"},  {"loop_fermat_J", "loop + fermat"},
      {"chain3_J", "chain"},                {"loop3_J", "loop"},
      {"quartic_J", "fermat quartic"},      {"quartic_J_half", "fermat quartic"},
      {"quartic_SL", "fermat quartic"},     {"chain_quartic_J", "chain + fermat"},
      {"chain_quartic_half", "chain + fermat"}, {"chain_quartic_SL", "chain + fermat"},
      {"loop_quartic_J", "loop + fermat"},  {"loop_quartic_half", "loop + fermat"},
      {"loop_quartic_SL", "loop + fermat"},
  };
  return b;
}

namespace {

long uniform(std::mt19937& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Appends a block on variables [start, start + size) to A.
void put_block(IntMatrix& A, std::size_t start, std::size_t size, int kind, std::mt19937& rng, long max_exp) {
  for (std::size_t i = 0; i < size; ++i) {
    A(start + i, start + i) = uniform(rng, 2, max_exp);
    if (kind == 1 && i + 1 < size) A(start + i, start + i + 1) = 1;  // chain
    if (kind == 2) A(start + i, start + (i + 1) % size) = 1;          // loop
  }
}

}  // namespace

IntMatrix random_invertible(std::mt19937& rng, std::size_t rank, long max_exp) {
  IntMatrix A(rank, rank);
  std::size_t start = 0;
  while (start < rank) {
    std::size_t size = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(rank - start)));
    int kind = size == 1 ? 0 : static_cast<int>(uniform(rng, 1, 2));
    put_block(A, start, size, kind, rng, max_exp);
    start += size;
  }
  return A;
}

std::vector<Element> random_subgroup(std::mt19937& rng, const IntMatrix& A, std::size_t count) {
  ElementSet aut = aut_oracle(A);
  std::vector<Element> all(aut.begin(), aut.end());
  std::vector<Element> gens;
  std::size_t n = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(count)));
  for (std::size_t i = 0; i < n; ++i) gens.push_back(all[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(all.size()) - 1))]);
  return gens;
}

RatVector random_coefficients(std::mt19937& rng, std::size_t d) {
  RatVector v;
  for (std::size_t i = 0; i < d; ++i) {
    long num = 0;
    while (num == 0) num = uniform(rng, -7, 7);
    v.push_back(bhk::make_rat(num, uniform(rng, 1, 5)));
  }
  return v;
}

RandomInstance random_cy_instance(std::mt19937& rng) {
  while (true) {
    // Rank 2 admits only x1^2 + x2^2, so it is drawn rarely.
    std::size_t rank = uniform(rng, 0, 5) == 0 ? 2 : 3;
    IntMatrix A = random_invertible(rng, rank, 6);
    auto q = weights_oracle(A);
    Rat k;
    for (const auto& x : q) k += x;
    if (!bhk::is_integer(k)) continue;
    // Admissible group: J plus random elements of SL inside Aut(W).
    Element J = reduce(q);
    std::vector<Element> sl;
    for (const auto& h : aut_oracle(A)) {
      Rat s;
      for (const auto& x : h) s += x;
      if (bhk::is_integer(s)) sl.push_back(h);
    }
    std::vector<Element> gens{J};
    long extra = uniform(rng, 0, 2);
    for (long i = 0; i < extra; ++i) gens.push_back(sl[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(sl.size()) - 1))]);
    return {A, gens, random_coefficients(rng, rank), random_coefficients(rng, rank)};
  }
}

}  // namespace testing_support
