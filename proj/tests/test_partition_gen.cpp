#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "zerodim/partition_gen.hpp"
#include "zerodim/stirling.hpp"

using namespace zerodim;

namespace {

std::vector<std::vector<int>> collect_codewords(int n) {
  std::vector<std::vector<int>> out;
  generate_iterative(n, [&](CodewordView codeword) {
    out.emplace_back(codeword.begin(), codeword.end());
  });
  return out;
}

std::vector<std::vector<int>> collect_leaf_block_sizes(int n) {
  std::vector<std::vector<int>> out;
  generate_recursive(n, [&](const GeneratorState& state) {
    out.emplace_back(state.block_sizes.begin(), state.block_sizes.end());
  });
  return out;
}

std::vector<int> block_sizes_of(const std::vector<int>& codeword) {
  std::vector<int> sizes(codeword.size(), 0);
  for (const int label : codeword) ++sizes[static_cast<std::size_t>(label - 1)];
  return sizes;
}

// The 15 codewords of the partitions of {1,2,3,4} in repeat-loop order.
const std::vector<std::vector<int>> kCodewords4 = {
    {1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 2, 1}, {1, 1, 2, 2}, {1, 1, 2, 3},
    {1, 2, 1, 1}, {1, 2, 1, 2}, {1, 2, 1, 3}, {1, 2, 2, 1}, {1, 2, 2, 2},
    {1, 2, 2, 3}, {1, 2, 3, 1}, {1, 2, 3, 2}, {1, 2, 3, 3}, {1, 2, 3, 4},
};

}  // namespace

TEST_CASE("iterative generator handles the singleton carrier") {
  const auto codewords = collect_codewords(1);
  REQUIRE(codewords.size() == 1);
  CHECK(codewords[0] == std::vector<int>{1});
}

TEST_CASE("iterative generator emits the n=4 table in order") {
  const auto codewords = collect_codewords(4);
  REQUIRE(codewords.size() == 15);
  CHECK(codewords.front() == std::vector<int>({1, 1, 1, 1}));
  CHECK(codewords[11] == std::vector<int>({1, 2, 3, 1}));
  CHECK(codewords.back() == std::vector<int>({1, 2, 3, 4}));
  CHECK(codewords == kCodewords4);
}

TEST_CASE("iterative generator visits once per partition") {
  BigCount visits = 0;
  generate_iterative(7, [&](CodewordView) { visits += 1; });
  CHECK(visits == stirling_row(7).sum());
  CHECK(visits == 877);
}

TEST_CASE("every emitted codeword is a restricted growth string") {
  for (int n = 1; n <= 10; ++n) {
    generate_iterative(n, [&](CodewordView codeword) {
      REQUIRE(codeword.size() == static_cast<std::size_t>(n));
      REQUIRE(codeword[0] == 1);
      int prefix_max = codeword[0];
      for (std::size_t k = 1; k < codeword.size(); ++k) {
        REQUIRE(codeword[k] >= 1);
        REQUIRE(codeword[k] <= prefix_max + 1);
        prefix_max = std::max(prefix_max, codeword[k]);
      }
    });
  }
}

TEST_CASE("recursive generator handles the singleton carrier") {
  const auto leaves = collect_leaf_block_sizes(1);
  REQUIRE(leaves.size() == 1);
  CHECK(leaves[0] == std::vector<int>{1});
}

TEST_CASE("recursive generator reproduces the n=4 block-size column") {
  const auto leaves = collect_leaf_block_sizes(4);
  REQUIRE(leaves.size() == 15);

  std::map<std::vector<int>, int> multiset;
  for (const auto& d : leaves) ++multiset[d];

  const std::map<std::vector<int>, int> expected = {
      {{4, 0, 0, 0}, 1}, {{3, 1, 0, 0}, 3}, {{2, 2, 0, 0}, 3}, {{2, 1, 1, 0}, 3},
      {{1, 3, 0, 0}, 1}, {{1, 2, 1, 0}, 2}, {{1, 1, 2, 0}, 1}, {{1, 1, 1, 1}, 1},
  };
  CHECK(multiset == expected);
}

TEST_CASE("recursive generator visits once per partition") {
  BigCount leaves = 0;
  generate_recursive(6, [&](const GeneratorState& state) {
    CHECK(state.carrier_size == 6);
    CHECK(state.prefix_length == 6);
    leaves += 1;
  });
  CHECK(leaves == stirling_row(6).sum());
  CHECK(leaves == 203);
}

TEST_CASE("the two generators reach the same block-size multisets") {
  for (int n = 1; n <= 10; ++n) {
    std::map<std::vector<int>, int> from_codewords;
    generate_iterative(n, [&](CodewordView codeword) {
      ++from_codewords[block_sizes_of({codeword.begin(), codeword.end()})];
    });
    std::map<std::vector<int>, int> from_leaves;
    generate_recursive(n, [&](const GeneratorState& state) {
      ++from_leaves[{state.block_sizes.begin(), state.block_sizes.end()}];
    });
    CHECK(from_codewords == from_leaves);
  }
}

TEST_CASE("incrementally maintained block sizes match a from-scratch recount") {
  // Reference walk: same branching order as the generator, but carrying the
  // codeword prefix and recounting the block sizes at every leaf with the
  // two-loop method.
  for (int n = 1; n <= 9; ++n) {
    std::vector<std::vector<int>> reference;
    std::vector<int> codeword(static_cast<std::size_t>(n), 0);
    codeword[0] = 1;
    auto walk = [&](auto&& self, int m, int i) -> void {
      if (i == n) {
        reference.push_back(block_sizes_of(codeword));
        return;
      }
      for (int j = 1; j <= m; ++j) {
        codeword[static_cast<std::size_t>(i)] = j;
        self(self, m, i + 1);
      }
      codeword[static_cast<std::size_t>(i)] = m + 1;
      self(self, m + 1, i + 1);
    };
    walk(walk, 1, 1);

    const auto incremental = collect_leaf_block_sizes(n);
    CHECK(incremental == reference);
  }
}

TEST_CASE("empty carriers are rejected") {
  CHECK_THROWS_AS(generate_iterative(0, [](CodewordView) {}), std::domain_error);
  CHECK_THROWS_AS(generate_recursive(0, [](const GeneratorState&) {}), std::domain_error);
}
