#pragma once

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bhk/hodge.hpp"
#include "bhk/model.hpp"
#include "bhk/rational.hpp"
#include "bhk/verifier.hpp"

namespace testing_support {

using bhk::Int;
using bhk::IntMatrix;
using bhk::Rat;
using bhk::RatVector;

IntMatrix matrix(const std::vector<std::vector<long>>& rows);
IntMatrix diag(const std::vector<long>& a);
RatVector rats(const std::vector<std::string>& xs);
std::vector<bhk::GroupElement> elements(const std::vector<std::vector<std::string>>& gens);
bhk::BhDatum datum(const IntMatrix& A, const std::vector<std::vector<std::string>>& gens);

std::string fixture_path(const std::string& name);
bhk::InputSpec fixture(const std::string& name);
bhk::BhDatum fixture_datum(const std::string& name);

// Oracles written independently of the library: plain Gauss-Jordan over Q,
// closure of generators mod 1, direct sector enumeration for Fermat sums.
using Element = std::vector<Rat>;
using ElementSet = std::set<Element>;

Element reduce(Element h);
ElementSet closure(const std::vector<Element>& gens, std::size_t d);
std::vector<std::vector<Rat>> inverse_oracle(const IntMatrix& A);
std::vector<Rat> weights_oracle(const IntMatrix& A);
ElementSet aut_oracle(const IntMatrix& A);
/// {h' in Aut(A^T) : h'^T A h in Z for every generator h of G}.
ElementSet dual_group_oracle(const IntMatrix& A, const std::vector<Element>& gens);
ElementSet to_set(const bhk::SymmetryGroup& G);

/// Orbifold B table of x_1^a_1 + ... + x_d^a_d under the group generated by gens.
bhk::HodgeTable fermat_orbifold_oracle(const std::vector<long>& a, const std::vector<Element>& gens);
/// Graded Milnor dims of a Fermat sum: coefficients of prod (1 + t^q + ... + t^{(a-2)q}).
std::map<Rat, std::size_t> fermat_milnor_oracle(const std::vector<long>& a);
/// prod (1/q_j - 1).
Rat milnor_total_oracle(const std::vector<Rat>& q);
/// Coefficient of t^k in p^e, p given by its coefficient list.
Int power_coefficient(const std::vector<long>& p, unsigned e, std::size_t k);

struct BatteryEntry {
  std::string fixture;
  std::string family;
};
/// Calabi-Yau type data of rank <= 4 from Fermat, chain and loop blocks.
const std::vector<BatteryEntry>& battery();

// Random instances.
struct RandomInstance {
  IntMatrix A;
  std::vector<Element> gens;
  RatVector f, g;
};
/// Invertible potential of the given rank built from random blocks with
/// exponents in [2, max_exp] (not necessarily Calabi-Yau).
IntMatrix random_invertible(std::mt19937& rng, std::size_t rank, long max_exp);
/// Random subgroup of Aut(W) given by up to `count` random generators.
std::vector<Element> random_subgroup(std::mt19937& rng, const IntMatrix& A, std::size_t count);
/// Calabi-Yau type instance of rank <= 3 with random admissible group and coefficients.
RandomInstance random_cy_instance(std::mt19937& rng);
RatVector random_coefficients(std::mt19937& rng, std::size_t d);

}  // namespace testing_support
