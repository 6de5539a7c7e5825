#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "zerodim/partition_gen.hpp"
#include "zerodim/stirling.hpp"

using namespace zerodim;

TEST_CASE("first row is the single partition") {
  const StirlingRow row = stirling_row(1);
  REQUIRE(row.n() == 1);
  CHECK(row.entry(1) == 1);
}

TEST_CASE("row 4 counts the 15 partitions by block count") {
  const StirlingRow row = stirling_row(4);
  CHECK(row.entry(1) == 1);
  CHECK(row.entry(2) == 7);
  CHECK(row.entry(3) == 6);
  CHECK(row.entry(4) == 1);
  CHECK(row.sum() == 15);
}

TEST_CASE("row 5 matches a tally of generated codewords by block count") {
  // Independent route: enumerate all codewords and bucket them by their
  // largest label.
  std::vector<BigCount> tally(5, 0);
  generate_iterative(5, [&](CodewordView codeword) {
    const int blocks = *std::max_element(codeword.begin(), codeword.end());
    tally[static_cast<std::size_t>(blocks - 1)] += 1;
  });
  const StirlingRow row = stirling_row(5);
  BigCount total = 0;
  for (int i = 1; i <= 5; ++i) {
    CHECK(row.entry(i) == tally[static_cast<std::size_t>(i - 1)]);
    total += tally[static_cast<std::size_t>(i - 1)];
  }
  CHECK(total == 52);
  CHECK(row.sum() == 52);
}

TEST_CASE("triangle recurrence holds entrywise up to row 30") {
  StirlingRow previous = stirling_row(1);
  for (int n = 2; n <= 30; ++n) {
    const StirlingRow row = stirling_row(n);
    CHECK(row.entry(1) == 1);
    CHECK(row.entry(n) == 1);
    for (int i = 2; i < n; ++i) {
      CHECK(row.entry(i) == i * previous.entry(i) + previous.entry(i - 1));
    }
    previous = row;
  }
}

TEST_CASE("row sums count the codewords emitted by either generator") {
  for (int n = 1; n <= 12; ++n) {
    const BigCount bell = stirling_row(n).sum();
    BigCount iterative_count = 0;
    generate_iterative(n, [&](CodewordView) { iterative_count += 1; });
    BigCount recursive_count = 0;
    generate_recursive(n, [&](const GeneratorState&) { recursive_count += 1; });
    CHECK(iterative_count == bell);
    CHECK(recursive_count == bell);
  }
}

TEST_CASE("row 0 is a domain error") {
  CHECK_THROWS_AS(stirling_row(0), std::domain_error);
  CHECK_THROWS_AS(stirling_row(-3), std::domain_error);
}
