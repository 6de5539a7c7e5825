#pragma once

#include <span>
#include <string_view>

#include "zerodim/bigcount.hpp"
#include "zerodim/order_tables.hpp"
#include "zerodim/stirling.hpp"

namespace zerodim {

enum class Algorithm { iterative, recursive, parallel };

std::string_view to_string(Algorithm algorithm);

// Accepts "iterative", "recursive" or "parallel"; throws
// std::invalid_argument otherwise.
Algorithm parse_algorithm(std::string_view name);

struct CountResult {
  int n = 0;
  BigCount value;
  Algorithm algorithm = Algorithm::recursive;
  int depth = 0;  // split depth of the run; 0 for sequential runs
};

// Number of zero-dimensional T0-topologies on {1..n}: the sum over all
// partitions of the product, over blocks with more than one element, of
// the count of partial orders with a greatest element on that block.
//
// The iterative variant drives the codeword generator and recounts block
// sizes from each codeword; the recursive variant keeps the block-size
// vector incrementally up to date and never touches codewords. Both
// require 1 <= n <= 19 (the ORD* table bound) and throw std::domain_error
// outside it.
BigCount zdim_t0_iterative(int n, const OrdStarTable& ord_star);
BigCount zdim_t0_recursive(int n, const OrdStarTable& ord_star);

// Number of zero-dimensional topologies on {1..n}:
// sum over i of S(n,i) * ZDIM_T0(i). `zdim_t0_values` must hold
// ZDIM_T0(1..n) and `row` must be Stirling row n; a length mismatch is a
// std::domain_error.
BigCount zdim(int n, std::span<const BigCount> zdim_t0_values, const StirlingRow& row);

}  // namespace zerodim
