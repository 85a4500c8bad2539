#pragma once

#include <cstddef>
#include <vector>

namespace bhk {

/// Exponent vector.
using Monomial = std::vector<long>;

/// All a >= 0 supported on vars with sum_j w[j] * a[j] == total, as vectors of
/// length w.size(). Weights on vars must be positive.
std::vector<Monomial> monomials_of_weight(const std::vector<long>& w, const std::vector<std::size_t>& vars,
                                          long total);

/// Number of such monomials, saturating at cap + 1.
std::size_t count_monomials_of_weight(const std::vector<long>& w, const std::vector<std::size_t>& vars, long total,
                                      std::size_t cap);

}  // namespace bhk
