#include "zerodim/zerodim_count.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "partition_term.hpp"
#include "zerodim/partition_gen.hpp"

namespace zerodim {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::iterative: return "iterative";
    case Algorithm::recursive: return "recursive";
    case Algorithm::parallel: return "parallel";
  }
  throw std::invalid_argument("unknown algorithm value");
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "iterative") return Algorithm::iterative;
  if (name == "recursive") return Algorithm::recursive;
  if (name == "parallel") return Algorithm::parallel;
  throw std::invalid_argument("unknown algorithm \"" + std::string(name) +
                              "\"; expected iterative, recursive or parallel");
}

BigCount zdim_t0_iterative(int n, const OrdStarTable& ord_star) {
  detail::require_count_range(n, ord_star);
  BigCount total = 0;
  detail::PartitionTermAccumulator term(ord_star, total);
  std::vector<int> block_sizes(static_cast<std::size_t>(n) + 1, 0);  // 1-offset
  const std::span<const int> sizes_view(block_sizes.data() + 1,
                                        static_cast<std::size_t>(n));
  generate_iterative(n, [&](CodewordView codeword) {
    for (int l = 1; l <= n; ++l) block_sizes[l] = 0;
    for (const int label : codeword) ++block_sizes[label];
    term.add(sizes_view);
  });
  return total;
}

BigCount zdim_t0_recursive(int n, const OrdStarTable& ord_star) {
  detail::require_count_range(n, ord_star);
  BigCount total = 0;
  detail::PartitionTermAccumulator term(ord_star, total);
  generate_recursive(n, term);
  return total;
}

BigCount zdim(int n, std::span<const BigCount> zdim_t0_values, const StirlingRow& row) {
  if (n < 1) throw std::domain_error("ZDIM(n) is defined for n >= 1");
  if (zdim_t0_values.size() != static_cast<std::size_t>(n)) {
    throw std::domain_error("ZDIM(" + std::to_string(n) + ") needs ZDIM_T0(1.." +
                            std::to_string(n) + "); got " +
                            std::to_string(zdim_t0_values.size()) + " values");
  }
  if (row.n() != n) {
    throw std::domain_error("ZDIM(" + std::to_string(n) + ") needs Stirling row " +
                            std::to_string(n) + ", got row " + std::to_string(row.n()));
  }
  BigCount total = 0;
  for (int i = 1; i <= n; ++i) {
    total += row.entry(i) * zdim_t0_values[static_cast<std::size_t>(i - 1)];
  }
  return total;
}

}  // namespace zerodim
