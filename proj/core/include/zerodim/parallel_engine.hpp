#pragma once

#include <span>
#include <vector>

#include "zerodim/bigcount.hpp"
#include "zerodim/order_tables.hpp"
#include "zerodim/partition_gen.hpp"

namespace zerodim {

// Where the recursion tree is cut into independent work items, and how
// many worker threads consume them.
struct SplitConfig {
  int depth = 0;         // recursion level whose subtrees become work items
  unsigned workers = 1;  // pool width; must be positive
};

// One arbitrary-precision partial sum per worker. The final result is the
// plain sum of the partials, taken after all workers have joined.
struct WorkerAccumulators {
  std::vector<BigCount> partials;
};

// Hardware thread count, with a floor of 1.
unsigned default_worker_count();

// min(9, n-1): 9 was the sweet spot in depth sweeps on a 32-core machine;
// deeper splits only add task-management overhead.
int default_split_depth(int n);

// Splitting below the leaves is meaningless; depths beyond n-1 clamp.
int clamp_split_depth(int depth, int n);

// The coordinator walk: traverses levels above `depth` cloning the state
// at every branch, and returns one independent prefix per level-`depth`
// subtree (the whole tree as a single item for depth 0).
std::vector<PartitionPrefix> split_prefixes(int n, int depth);

// ZDIM_T0(n) by fork-join over the split prefixes. Work items are claimed
// from a shared queue; each adds its leaf products into its worker's own
// partial, and the partials are summed once the pool has joined, so the
// result is bit-identical to the sequential run regardless of scheduling.
// Pass `accumulators` to observe the per-worker partials.
//
// Throws std::domain_error for n outside 1..19 and std::invalid_argument
// for workers == 0 or depth < 0.
BigCount zdim_t0_parallel(int n, const OrdStarTable& ord_star, SplitConfig cfg,
                          WorkerAccumulators* accumulators = nullptr);

struct BenchRow {
  int depth = 0;
  int run = 0;  // 1-based run index within a depth
  double seconds = 0.0;
  BigCount value;
};

struct BenchReport {
  int n = 0;
  std::vector<BenchRow> rows;
};

// Times zdim_t0_parallel once per (depth, run) pair. All runs must agree
// on the value; a mismatch is a std::logic_error.
BenchReport bench_depth_sweep(int n, const OrdStarTable& ord_star,
                              std::span<const int> depths, SplitConfig base,
                              int repeats = 1);

}  // namespace zerodim
