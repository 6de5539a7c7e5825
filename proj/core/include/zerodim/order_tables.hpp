#pragma once

#include <string_view>
#include <vector>

#include "zerodim/bigcount.hpp"

namespace zerodim {

// Published counts of partial orders on {1..n}. Entries are 1-indexed and
// stop at n = 18; no larger value has been published, so out-of-range
// queries are hard errors rather than silent zeros.
class OrdTable {
 public:
  static constexpr int kMaxN = 18;

  // Validates the table shape: exactly 18 entries, the n = 1 and n = 2
  // anchors, and strict monotonic growth. Throws std::runtime_error.
  explicit OrdTable(std::vector<BigCount> values);

  // ORD(n) for n in 1..18; throws std::domain_error outside that range.
  const BigCount& value(int n) const;

  int max_n() const { return kMaxN; }

 private:
  std::vector<BigCount> values_;
};

// Counts of partial orders on {1..n} that have a greatest element,
// derived from OrdTable one step further: 1-indexed, n = 1..19.
class OrdStarTable {
 public:
  static constexpr int kMaxN = 19;

  explicit OrdStarTable(std::vector<BigCount> values);

  // ORD*(n) for n in 1..19; throws std::domain_error outside that range.
  const BigCount& value(int n) const;

  int max_n() const { return kMaxN; }

 private:
  std::vector<BigCount> values_;
};

// Parses table data: one decimal integer per line, line k = ORD(k),
// exactly 18 lines, nothing else. Throws std::runtime_error on malformed
// or truncated input.
OrdTable parse_ord_table(std::string_view text);

// The table compiled into the binary.
OrdTable load_ord_table();

// ORD*(1) = 1 and ORD*(n+1) = (n+1) * ORD(n).
OrdStarTable derive_ord_star(const OrdTable& table);

}  // namespace zerodim
