#include "zerodim/stirling.hpp"

#include <stdexcept>
#include <string>

namespace zerodim {

StirlingRow::StirlingRow(int n, std::vector<BigCount> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 1 || entries_.size() != static_cast<std::size_t>(n_)) {
    throw std::domain_error("Stirling row length must equal its row index");
  }
}

const BigCount& StirlingRow::entry(int i) const {
  if (i < 1 || i > n_) {
    throw std::domain_error("S(" + std::to_string(n_) + "," + std::to_string(i) +
                            ") is outside the row");
  }
  return entries_[static_cast<std::size_t>(i - 1)];
}

BigCount StirlingRow::sum() const {
  BigCount total = 0;
  for (const BigCount& e : entries_) total += e;
  return total;
}

StirlingRow stirling_row(int n) {
  if (n < 1) throw std::domain_error("Stirling rows are defined for n >= 1");
  std::vector<BigCount> entries(static_cast<std::size_t>(n));
  entries[0] = 1;
  for (int row = 2; row <= n; ++row) {
    entries[static_cast<std::size_t>(row - 1)] = 1;
    // Update in place from the right so entries[i-2] is still row-1 data.
    for (int i = row - 1; i >= 2; --i) {
      entries[i - 1] = i * entries[i - 1] + entries[i - 2];
    }
  }
  return StirlingRow(n, std::move(entries));
}

}  // namespace zerodim
