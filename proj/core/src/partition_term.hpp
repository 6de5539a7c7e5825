#pragma once

// Internal to the library; not installed.

#include <span>
#include <stdexcept>
#include <string>

#include "zerodim/bigcount.hpp"
#include "zerodim/order_tables.hpp"
#include "zerodim/partition_gen.hpp"

namespace zerodim::detail {

inline void require_count_range(int n, const OrdStarTable& ord_star) {
  if (n < 1 || n > ord_star.max_n()) {
    throw std::domain_error(
        "ZDIM_T0(" + std::to_string(n) + ") is not computable: the ORD* table "
        "covers 1 <= n <= " + std::to_string(ord_star.max_n()) +
        " because no count of partial orders beyond ORD(18) is published");
  }
}

// Adds one partition's contribution per visit: the product, over block
// sizes greater than 1, of the matching ORD* entry. A partition of
// singletons contributes the empty product, 1. The loop runs over all n
// slots with a size guard; skipping the guard in favour of unconditional
// multiplications by ORD*(1) = 1 costs up to 20% at scale.
class PartitionTermAccumulator {
 public:
  PartitionTermAccumulator(const OrdStarTable& ord_star, BigCount& total)
      : ord_star_(ord_star), total_(total) {}

  void operator()(const GeneratorState& state) { add(state.block_sizes); }

  void add(std::span<const int> block_sizes) {
    bool nontrivial = false;
    for (const int size : block_sizes) {
      if (size > 1) {
        if (nontrivial) {
          product_ *= ord_star_.value(size);
        } else {
          product_ = ord_star_.value(size);
          nontrivial = true;
        }
      }
    }
    if (nontrivial) {
      total_ += product_;
    } else {
      total_ += 1;
    }
  }

 private:
  const OrdStarTable& ord_star_;
  BigCount& total_;
  BigCount product_;  // scratch, reused across visits
};

}  // namespace zerodim::detail
