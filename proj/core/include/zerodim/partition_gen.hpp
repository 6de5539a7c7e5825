#pragma once

#include <concepts>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zerodim {

// Read-only view of a codeword (restricted growth string): view[k] is the
// 1-based block label of element k+1. Valid only during the visit; the
// generator reuses its buffers between visits.
using CodewordView = std::span<const int>;

// Snapshot handed to leaf visitors of the recursive generator. The span
// aliases the generator's working buffer; do not retain it past the visit.
struct GeneratorState {
  int carrier_size;                  // number of elements being partitioned
  int block_count;                   // largest block label in the prefix
  std::span<const int> block_sizes;  // block_sizes[l-1] = occurrences of label l in the prefix
  int prefix_length;                 // equals carrier_size at leaves
};

// Owned prefix of the recursive generation tree. Copying one yields an
// independent state; the parallel engine clones these at branch points.
struct PartitionPrefix {
  int carrier_size = 0;
  int block_count = 0;
  std::vector<int> block_sizes;  // 1-offset: block_sizes[l] belongs to label l; slot 0 unused
  int prefix_length = 0;
};

namespace detail {

inline void require_positive_carrier(int n) {
  if (n < 1) throw std::domain_error("carrier size must be at least 1");
}

// Depth-first walk over all completions of the prefix (n, m, d, i).
// d is 1-offset and updated incrementally: increment before descending,
// decrement after returning, so the buffer is restored on exit.
template <typename Visitor>
void complete_prefix(const int n, const int m, int* const d, const int i,
                     GeneratorState& state, Visitor& visit) {
  if (i == n) {
    state.block_count = m;
    state.prefix_length = i;
    visit(std::as_const(state));
    return;
  }
  for (int j = 1; j <= m; ++j) {
    ++d[j];
    complete_prefix(n, m, d, i + 1, state, visit);
    --d[j];
  }
  d[m + 1] = 1;
  complete_prefix(n, m + 1, d, i + 1, state, visit);
  d[m + 1] = 0;
}

}  // namespace detail

// The root of the generation tree for {1..n}: element 1 alone in block 1.
inline PartitionPrefix root_prefix(int n) {
  detail::require_positive_carrier(n);
  PartitionPrefix root;
  root.carrier_size = n;
  root.block_count = 1;
  root.block_sizes.assign(static_cast<std::size_t>(n) + 1, 0);
  root.block_sizes[1] = 1;
  root.prefix_length = 1;
  return root;
}

// Visits every leaf below `prefix` exactly once, in generation order.
// The prefix is borrowed as scratch space and restored before returning.
template <std::invocable<const GeneratorState&> Visitor>
void generate_recursive_from(PartitionPrefix& prefix, Visitor&& visit) {
  const int n = prefix.carrier_size;
  GeneratorState state{
      n, prefix.block_count,
      std::span<const int>(prefix.block_sizes.data() + 1, static_cast<std::size_t>(n)),
      prefix.prefix_length};
  detail::complete_prefix(n, prefix.block_count, prefix.block_sizes.data(),
                          prefix.prefix_length, state, visit);
}

// Backtracking generator over block-size vectors: the visitor runs once
// per partition of {1..n}, at the leaves of the recursion. Codewords are
// not materialized; only the block-size vector d is maintained.
template <std::invocable<const GeneratorState&> Visitor>
void generate_recursive(int n, Visitor&& visit) {
  detail::require_positive_carrier(n);
  PartitionPrefix root = root_prefix(n);
  generate_recursive_from(root, visit);
}

// Iterative codeword generator. Visits the codeword of every partition of
// {1..n} exactly once, in the classic repeat-loop order: the codewords of
// length n in restricted-growth order, all-ones first, (1,2,...,n) last.
//
// The loop keeps index-0 sentinels in both arrays. Its first sweep fills
// c[1..n-1] with 1 while g is still all zero, which would emit the
// all-ones codeword a second time; the `calc` flag swallows that priming
// pass, and the n = 1 input never enters the loop at all.
template <std::invocable<CodewordView> Visitor>
void generate_iterative(int n, Visitor&& visit) {
  detail::require_positive_carrier(n);
  if (n == 1) {
    const int only[] = {1};
    visit(CodewordView(only, 1));
    return;
  }

  std::vector<int> c(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> g(static_cast<std::size_t>(n) + 1, 0);
  const CodewordView view(c.data() + 1, static_cast<std::size_t>(n));
  bool calc = false;
  int r = 0;
  do {
    while (r < n - 1) {
      ++r;
      c[r] = 1;
      g[r] = g[r - 1];
    }
    const int last_max = g[n - 1];
    for (int j = 1; j <= last_max + 1; ++j) {
      c[n] = j;
      if (calc) visit(view);
      calc = true;
    }
    while (c[r] > g[r - 1]) --r;
    ++c[r];
    if (c[r] > g[r]) g[r] = c[r];
  } while (r != 1);
}

}  // namespace zerodim
