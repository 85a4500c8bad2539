#include "bhk/monomials.hpp"

#include <stdexcept>

namespace bhk {

std::vector<Monomial> monomials_of_weight(const std::vector<long>& w, const std::vector<std::size_t>& vars,
                                          long total) {
  std::vector<Monomial> out;
  if (total < 0) return out;
  for (auto j : vars)
    if (w[j] <= 0) throw std::invalid_argument("monomials_of_weight: weights must be positive");
  Monomial cur(w.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos, long rem) -> void {
    if (pos == vars.size()) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    std::size_t j = vars[pos];
    for (long e = 0; e * w[j] <= rem; ++e) {
      cur[j] = e;
      self(self, pos + 1, rem - e * w[j]);
    }
    cur[j] = 0;
  };
  rec(rec, 0, total);
  return out;
}

std::size_t count_monomials_of_weight(const std::vector<long>& w, const std::vector<std::size_t>& vars, long total,
                                      std::size_t cap) {
  if (total < 0) return 0;
  std::vector<std::size_t> ways(static_cast<std::size_t>(total) + 1, 0);
  ways[0] = 1;
  for (auto j : vars)
    for (long t = w[j]; t <= total; ++t) ways[t] = std::min(cap + 1, ways[t] + ways[t - w[j]]);
  return ways[total];
}

}  // namespace bhk
