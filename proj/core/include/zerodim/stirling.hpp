#pragma once

#include <span>
#include <vector>

#include "zerodim/bigcount.hpp"

namespace zerodim {

// Row n of the Stirling triangle of the second kind; entry i counts the
// partitions of an n-set into exactly i blocks.
class StirlingRow {
 public:
  StirlingRow(int n, std::vector<BigCount> entries);

  int n() const { return n_; }

  // S(n, i) for i in 1..n; throws std::domain_error outside that range.
  const BigCount& entry(int i) const;

  std::span<const BigCount> entries() const { return entries_; }

  // Bell(n), the total number of partitions of an n-set.
  BigCount sum() const;

 private:
  int n_;
  std::vector<BigCount> entries_;
};

// Computes row n via S(n,i) = i*S(n-1,i) + S(n-1,i-1), bottom-up with a
// single row in memory. Throws std::domain_error for n < 1.
StirlingRow stirling_row(int n);

}  // namespace zerodim
