#include "zerodim/parallel_engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <stdexcept>
#include <thread>

#include "partition_term.hpp"

namespace zerodim {
namespace {

void collect_subtrees(const PartitionPrefix& prefix, int split_level,
                      std::vector<PartitionPrefix>& items) {
  if (prefix.prefix_length >= split_level) {
    items.push_back(prefix);
    return;
  }
  // Clone at every branch: siblings must share no mutable state.
  for (int j = 1; j <= prefix.block_count; ++j) {
    PartitionPrefix child = prefix;
    ++child.block_sizes[j];
    ++child.prefix_length;
    collect_subtrees(child, split_level, items);
  }
  PartitionPrefix child = prefix;
  child.block_sizes[prefix.block_count + 1] = 1;
  ++child.block_count;
  ++child.prefix_length;
  collect_subtrees(child, split_level, items);
}

}  // namespace

unsigned default_worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

int default_split_depth(int n) { return std::min(9, n - 1); }

int clamp_split_depth(int depth, int n) { return std::min(depth, n - 1); }

std::vector<PartitionPrefix> split_prefixes(int n, int depth) {
  detail::require_positive_carrier(n);
  if (depth < 0) throw std::invalid_argument("split depth must be non-negative");
  // Depth 0 and 1 both yield the whole tree: the first codeword position
  // is forced, so there is exactly one length-1 prefix.
  const int split_level = std::clamp(depth, 1, n);
  std::vector<PartitionPrefix> items;
  collect_subtrees(root_prefix(n), split_level, items);
  return items;
}

BigCount zdim_t0_parallel(int n, const OrdStarTable& ord_star, SplitConfig cfg,
                          WorkerAccumulators* accumulators) {
  detail::require_count_range(n, ord_star);
  if (cfg.workers == 0) throw std::invalid_argument("worker count must be positive");
  if (cfg.depth < 0) throw std::invalid_argument("split depth must be non-negative");

  const int depth = clamp_split_depth(cfg.depth, n);
  std::vector<PartitionPrefix> items = split_prefixes(n, depth);

  WorkerAccumulators acc;
  acc.partials.resize(cfg.workers);
  std::atomic<std::size_t> next_item{0};
  std::vector<std::exception_ptr> failures(cfg.workers);

  {
    std::vector<std::thread> pool;
    pool.reserve(cfg.workers);
    for (unsigned w = 0; w < cfg.workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          detail::PartitionTermAccumulator term(ord_star, acc.partials[w]);
          std::size_t k;
          while ((k = next_item.fetch_add(1, std::memory_order_relaxed)) < items.size()) {
            generate_recursive_from(items[k], term);
          }
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();  // completion barrier
  }

  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  BigCount total = 0;
  for (const BigCount& partial : acc.partials) total += partial;
  if (accumulators != nullptr) *accumulators = std::move(acc);
  return total;
}

BenchReport bench_depth_sweep(int n, const OrdStarTable& ord_star,
                              std::span<const int> depths, SplitConfig base,
                              int repeats) {
  if (repeats < 1) throw std::invalid_argument("repeats must be positive");
  BenchReport report;
  report.n = n;
  bool have_first = false;
  BigCount first_value;
  for (const int depth : depths) {
    for (int run = 1; run <= repeats; ++run) {
      SplitConfig cfg = base;
      cfg.depth = depth;
      const auto started = std::chrono::steady_clock::now();
      BigCount value = zdim_t0_parallel(n, ord_star, cfg);
      const auto finished = std::chrono::steady_clock::now();
      if (!have_first) {
        first_value = value;
        have_first = true;
      } else if (value != first_value) {
        throw std::logic_error("depth sweep produced disagreeing values");
      }
      report.rows.push_back(BenchRow{
          depth, run, std::chrono::duration<double>(finished - started).count(),
          std::move(value)});
    }
  }
  return report;
}

}  // namespace zerodim
