#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bhk/rational.hpp"

namespace bhk {

using Bicharge = std::pair<Rat, Rat>;  // (Q_+, Q_-)

/// Bigraded dimensions; zero entries are never stored.
class HodgeTable {
 public:
  HodgeTable() = default;
  explicit HodgeTable(Rat central_charge) : central_charge_(std::move(central_charge)) {}

  const Rat& central_charge() const { return central_charge_; }
  const std::map<Bicharge, std::size_t>& entries() const { return entries_; }

  void add(const Rat& q_plus, const Rat& q_minus, std::size_t dim);
  std::size_t at(const Rat& q_plus, const Rat& q_minus) const;
  std::size_t total() const;
  bool empty() const { return entries_.empty(); }

  /// (Q_+, Q_-) -> (Q_+, c - Q_-).
  HodgeTable reflect_minus() const;

  /// Entries with a charge outside [0, c].
  std::vector<Bicharge> outside_range() const;

  /// Human-readable diamond-style grid, rows by descending Q_-.
  std::string grid() const;

  friend bool operator==(const HodgeTable& a, const HodgeTable& b) {
    return a.central_charge_ == b.central_charge_ && a.entries_ == b.entries_;
  }

 private:
  Rat central_charge_;
  std::map<Bicharge, std::size_t> entries_;
};

/// "Q+/Q-" text key used in serialized tables.
std::string charge_key(const Bicharge& q);

}  // namespace bhk
