#include "bhk/model.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "bhk/errors.hpp"

namespace bhk {

Potential::Potential(IntMatrix exponents, std::optional<RatVector> coefficients)
    : exponents_(std::move(exponents)) {
  const std::size_t d = exponents_.rows();
  if (!exponents_.square()) throw InputError("exponent matrix must be square");
  if (d == 0) throw InputError("exponent matrix is empty");
  for (std::size_t i = 0; i < d; ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < d; ++j) {
      if (exponents_(i, j) < 0) throw InputError("negative exponent in row " + std::to_string(i + 1));
      if (exponents_(i, j) != 0) nonzero = true;
    }
    if (!nonzero) throw InputError("exponent row " + std::to_string(i + 1) + " is zero");
  }
  det_ = determinant(exponents_);
  if (det_ == 0) throw InputError("singular exponent matrix");
  inverse_ = inverse(to_rat(exponents_));

  weights_.q = inverse_ * RatVector(d, Rat(1));
  for (std::size_t j = 0; j < d; ++j)
    if (weights_.q[j] <= 0) throw InputError("nonpositive weight q_" + std::to_string(j + 1) + " = " + bhk::to_string(weights_.q[j]));
  weights_.sum = 0;
  for (const auto& x : weights_.q) weights_.sum += x;
  if (is_integer(weights_.sum) && weights_.sum > 0) weights_.k = weights_.sum.get_num();

  coefficients_ = coefficients.value_or(RatVector(d, Rat(1)));
  if (coefficients_.size() != d) throw InputError("coefficient count does not match the number of monomials");
  for (const auto& c : coefficients_)
    if (c == 0) throw InputError("zero coefficient");
}

std::string Potential::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (i) out += " + ";
    if (coefficients_[i] != 1) out += bhk::to_string(coefficients_[i]) + "*";
    bool first = true;
    for (std::size_t j = 0; j < dimension(); ++j) {
      if (exponents_(i, j) == 0) continue;
      if (!first) out += "*";
      first = false;
      out += "x" + std::to_string(j + 1);
      if (exponents_(i, j) != 1) out += "^" + exponents_(i, j).get_str();
    }
  }
  return out;
}

Potential make_potential(const IntMatrix& matrix, std::optional<RatVector> coefficients) {
  return Potential(matrix, std::move(coefficients));
}

Potential transpose_potential(const Potential& P) { return Potential(P.exponents().transpose()); }

GroupElement::GroupElement(RatVector h) : h_(std::move(h)) {
  for (auto& x : h_) x = frac(x);
}

bool GroupElement::is_identity() const {
  return std::all_of(h_.begin(), h_.end(), [](const Rat& x) { return x == 0; });
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  RatVector s(h_.size());
  for (std::size_t j = 0; j < h_.size(); ++j) s[j] = h_[j] + other.h_[j];
  return GroupElement(std::move(s));
}

GroupElement GroupElement::operator-() const {
  RatVector s(h_.size());
  for (std::size_t j = 0; j < h_.size(); ++j) s[j] = -h_[j];
  return GroupElement(std::move(s));
}

Rat GroupElement::age() const {
  Rat s = 0;
  for (const auto& x : h_) s += x;
  return s;
}

bool preserves(const Potential& P, const GroupElement& g) {
  if (g.size() != P.dimension()) return false;
  for (std::size_t i = 0; i < P.dimension(); ++i) {
    Rat s = 0;
    for (std::size_t j = 0; j < P.dimension(); ++j) s += Rat(P.exponent(i, j)) * g[j];
    if (!is_integer(s)) return false;
  }
  return true;
}

SymmetryGroup::SymmetryGroup(std::vector<GroupElement> elements, std::vector<GroupElement> generators,
                             IntVector invariant_factors)
    : elements_(std::move(elements)), generators_(std::move(generators)), invariant_factors_(std::move(invariant_factors)) {
  std::sort(elements_.begin(), elements_.end());
}

bool SymmetryGroup::contains(const GroupElement& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

namespace {

/// Columns span the lattice N_0 + <generators>, in v-coordinates.
RatMatrix lattice_basis(std::size_t d, const std::vector<GroupElement>& generators) {
  Int L = 1;
  for (const auto& g : generators) L = lcm(L, common_denominator(g.h()));
  IntMatrix rows(d + generators.size(), d);
  for (std::size_t i = 0; i < d; ++i) rows(i, i) = L;
  for (std::size_t r = 0; r < generators.size(); ++r)
    for (std::size_t j = 0; j < d; ++j) {
      Rat v = generators[r][j] * L;
      rows(d + r, j) = v.get_num();
    }
  HermiteForm hf = hermite_normal_form(rows);
  RatMatrix basis(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) basis(j, i) = Rat(hf.H(i, j)) / L;
  return basis;
}

/// Invariant factors of N / N_0 where N has basis columns B containing Z^d.
IntVector quotient_invariants(const RatMatrix& basis) {
  RatMatrix inv = inverse(basis);  // coordinates of the v_j in the N basis
  IntMatrix z(inv.rows(), inv.cols());
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j) {
      if (!is_integer(inv(i, j))) throw std::logic_error("N_0 is not contained in N");
      z(i, j) = inv(i, j).get_num();
    }
  IntVector out;
  for (const auto& x : smith_normal_form(z).diagonal())
    if (x != 1) out.push_back(abs(x));
  return out;
}

SymmetryGroup close_under_addition(std::size_t d, std::vector<GroupElement> generators, std::size_t cap) {
  std::set<GroupElement> seen{GroupElement::identity(d)};
  std::deque<GroupElement> frontier{GroupElement::identity(d)};
  while (!frontier.empty()) {
    GroupElement x = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      GroupElement y = x + g;
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw CapExceeded("group order exceeds cap " + std::to_string(cap));
        frontier.push_back(std::move(y));
      }
    }
  }
  std::vector<GroupElement> nontrivial;
  for (auto& g : generators)
    if (!g.is_identity()) nontrivial.push_back(std::move(g));
  auto invariants = quotient_invariants(lattice_basis(d, nontrivial));
  return SymmetryGroup(std::vector<GroupElement>(seen.begin(), seen.end()), std::move(nontrivial),
                       std::move(invariants));
}

}  // namespace

SymmetryGroup aut_group(const Potential& P, std::size_t cap) {
  const std::size_t d = P.dimension();
  if (abs(P.det()) > Int(static_cast<unsigned long>(cap)))
    throw CapExceeded("|det A_W| = " + P.det().get_str() + " exceeds group order cap");
  // A^{-1} = V D^{-1} U, so the columns of V scaled by 1/d_i generate A^{-1} Z^d / Z^d.
  SmithForm snf = smith_normal_form(P.exponents());
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < d; ++i) {
    const Int& di = snf.D(i, i);
    if (di == 1) continue;
    RatVector h(d);
    for (std::size_t j = 0; j < d; ++j) h[j] = make_rat(snf.V(j, i), di);
    gens.emplace_back(std::move(h));
  }
  return close_under_addition(d, std::move(gens), cap);
}

SymmetryGroup subgroup_closure(const Potential& P, const std::vector<GroupElement>& generators, std::size_t cap) {
  for (const auto& g : generators) {
    if (g.size() != P.dimension())
      throw InputError("group generator " + to_string(g.h()) + " has wrong length");
    if (!preserves(P, g)) throw InputError("generator " + to_string(g.h()) + " is not a symmetry of W");
  }
  return close_under_addition(P.dimension(), generators, cap);
}

GroupElement exponential_grading_element(const Potential& P) { return GroupElement(P.weights().q); }

bool LatticeData::in_n(const RatVector& n) const {
  // n in N iff it pairs integrally with the M basis.
  for (std::size_t c = 0; c < rank; ++c) {
    Rat s = 0;
    for (std::size_t j = 0; j < rank; ++j) s += m_basis(j, c) * n[j];
    if (!is_integer(s)) return false;
  }
  return true;
}

bool LatticeData::in_m(const RatVector& m) const {
  for (std::size_t c = 0; c < rank; ++c) {
    Rat s = 0;
    for (std::size_t j = 0; j < rank; ++j) s += n_basis(j, c) * m[j];
    if (!is_integer(s)) return false;
  }
  return true;
}

LatticeData lattice_data(const Potential& P, const SymmetryGroup& G) {
  const std::size_t d = P.dimension();
  for (const auto& g : G.generators())
    if (!preserves(P, g)) throw InputError("group is not contained in Aut(W)");
  LatticeData L;
  L.rank = d;
  L.n_basis = lattice_basis(d, G.generators());
  L.m_basis = inverse(L.n_basis).transpose();
  L.pairing = L.m_basis.transpose() * L.n_basis;
  L.deg = RatVector(d, Rat(1));
  L.deg_dual = P.weights().q;
  L.deg_in_m = L.in_m(L.deg);
  L.deg_dual_in_n = L.in_n(L.deg_dual);
  Rat index = 1 / abs(determinant(L.n_basis));
  L.index_n_over_n0 = index.get_num();
  L.index_m0dual_over_n = abs(P.det()) / L.index_n_over_n0;
  return L;
}

SymmetryGroup dual_group(const Potential& P, const SymmetryGroup& G, std::size_t cap) {
  const std::size_t d = P.dimension();
  LatticeData L = lattice_data(P, G);
  Potential dual = transpose_potential(P);
  // m in M (e-coordinates) corresponds to h' = A^{-T} m modulo M_0.
  RatMatrix inv_t = P.inverse_exponents().transpose();
  std::vector<GroupElement> gens;
  for (std::size_t c = 0; c < d; ++c) {
    GroupElement h(inv_t * L.m_basis.col(c));
    if (!h.is_identity()) gens.push_back(std::move(h));
  }
  return subgroup_closure(dual, gens, cap);
}

SymmetryGroup dual_group_by_definition(const Potential& P, const SymmetryGroup& G) {
  Potential dual = transpose_potential(P);
  SymmetryGroup full = aut_group(dual);
  const std::size_t d = P.dimension();
  std::vector<GroupElement> members;
  for (const auto& hd : full.elements()) {
    bool ok = true;
    for (const auto& g : G.generators()) {
      // r^T A^{-1} a with r = A^T h', a = A h reduces to h'^T A h.
      Rat s = 0;
      for (std::size_t i = 0; i < d && ok; ++i)
        for (std::size_t j = 0; j < d; ++j) s += hd[i] * Rat(P.exponent(i, j)) * g[j];
      if (!is_integer(s)) ok = false;
    }
    if (ok) members.push_back(hd);
  }
  return subgroup_closure(dual, members);
}

CyReport cy_check(const Potential& P, const SymmetryGroup& G) {
  LatticeData L = lattice_data(P, G);
  CyReport r;
  r.k = P.weights().k;
  r.weight_sum = P.weights().sum;
  r.deg_in_m = L.deg_in_m;
  r.deg_dual_in_n = L.deg_dual_in_n;
  r.central_charge = Rat(static_cast<long>(P.dimension())) - 2 * P.weights().sum;
  return r;
}

BhDatum::BhDatum(Potential p, SymmetryGroup g, std::optional<RatVector> dual_coeffs)
    : potential(std::move(p)), group(std::move(g)) {
  dual_coefficients = dual_coeffs.value_or(RatVector(potential.dimension(), Rat(1)));
  if (dual_coefficients.size() != potential.dimension())
    throw InputError("dual coefficient count does not match the number of variables");
  for (const auto& c : dual_coefficients)
    if (c == 0) throw InputError("zero dual coefficient");
}

BhDatum BhDatum::mirror() const {
  Potential dual(potential.exponents().transpose(), dual_coefficients);
  SymmetryGroup dual_g = dual_group(potential, group);
  return BhDatum(std::move(dual), std::move(dual_g), potential.coefficients());
}

}  // namespace bhk
