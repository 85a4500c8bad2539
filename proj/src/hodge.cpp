#include "bhk/hodge.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bhk {

void HodgeTable::add(const Rat& q_plus, const Rat& q_minus, std::size_t dim) {
  if (dim == 0) return;
  entries_[{q_plus, q_minus}] += dim;
}

std::size_t HodgeTable::at(const Rat& q_plus, const Rat& q_minus) const {
  auto it = entries_.find({q_plus, q_minus});
  return it == entries_.end() ? 0 : it->second;
}

std::size_t HodgeTable::total() const {
  std::size_t t = 0;
  for (const auto& [k, v] : entries_) t += v;
  return t;
}

HodgeTable HodgeTable::reflect_minus() const {
  HodgeTable out(central_charge_);
  for (const auto& [k, v] : entries_) out.add(k.first, central_charge_ - k.second, v);
  return out;
}

std::vector<Bicharge> HodgeTable::outside_range() const {
  std::vector<Bicharge> out;
  for (const auto& [k, v] : entries_)
    if (k.first < 0 || k.second < 0 || k.first > central_charge_ || k.second > central_charge_) out.push_back(k);
  return out;
}

std::string HodgeTable::grid() const {
  std::set<Rat> plus, minus;
  for (const auto& [k, v] : entries_) {
    plus.insert(k.first);
    minus.insert(k.second);
  }
  if (entries_.empty()) return "(empty)\n";
  std::size_t width = 1;
  for (const auto& [k, v] : entries_) width = std::max(width, std::to_string(v).size());
  for (const auto& p : plus) width = std::max(width, to_string(p).size());
  std::ostringstream out;
  std::size_t label = 0;
  for (const auto& m : minus) label = std::max(label, to_string(m).size());
  label = std::max<std::size_t>(label, 5);
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
  for (auto it = minus.rbegin(); it != minus.rend(); ++it) {
    out << pad("Q-=" + to_string(*it), label + 3) << " |";
    for (const auto& p : plus) out << ' ' << pad(std::to_string(at(p, *it)), width);
    out << '\n';
  }
  out << std::string(label + 3, ' ') << " +" << std::string(plus.size() * (width + 1), '-') << '\n';
  out << pad("Q+", label + 3) << "  ";
  for (const auto& p : plus) out << ' ' << pad(to_string(p), width);
  out << '\n';
  return out.str();
}

std::string charge_key(const Bicharge& q) { return to_string(q.first) + "/" + to_string(q.second); }

}  // namespace bhk
