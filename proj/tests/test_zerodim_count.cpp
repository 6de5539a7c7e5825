#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "zerodim/oracle.hpp"
#include "zerodim/order_tables.hpp"
#include "zerodim/partition_gen.hpp"
#include "zerodim/stirling.hpp"
#include "zerodim/zerodim_count.hpp"

using namespace zerodim;

namespace {

const OrdStarTable& ord_star() {
  static const OrdStarTable table = derive_ord_star(load_ord_table());
  return table;
}

}  // namespace

TEST_CASE("T0 counts match the published values on small carriers") {
  CHECK(zdim_t0_iterative(1, ord_star()) == 1);
  CHECK(zdim_t0_iterative(2, ord_star()) == 3);
  CHECK(zdim_t0_recursive(3, ord_star()) == 16);
  CHECK(zdim_t0_recursive(5, ord_star()) == 1826);
  CHECK(zdim_t0_iterative(8, ord_star()) == 60075185);
  CHECK(zdim_t0_recursive(10, ord_star()) == BigCount("493489876721"));
}

TEST_CASE("both algorithms agree") {
  for (int n = 1; n <= 12; ++n) {
    CHECK(zdim_t0_iterative(n, ord_star()) == zdim_t0_recursive(n, ord_star()));
  }
}

TEST_CASE("both algorithms agree with brute force on tiny carriers") {
  for (int n = 1; n <= 5; ++n) {
    const BigCount truth = oracle::count_zerodim_t0(n);
    CHECK(zdim_t0_iterative(n, ord_star()) == truth);
    CHECK(zdim_t0_recursive(n, ord_star()) == truth);
  }
}

TEST_CASE("carrier sizes outside the table bound are domain errors") {
  CHECK_THROWS_AS(zdim_t0_iterative(0, ord_star()), std::domain_error);
  CHECK_THROWS_AS(zdim_t0_recursive(0, ord_star()), std::domain_error);
  CHECK_THROWS_WITH_AS(zdim_t0_recursive(20, ord_star()),
                       doctest::Contains("ORD"), std::domain_error);
}

TEST_CASE("arbitrary-topology counts match the published values") {
  std::vector<BigCount> t0_values;
  for (int i = 1; i <= 7; ++i) t0_values.push_back(zdim_t0_recursive(i, ord_star()));

  CHECK(zdim(2, std::span<const BigCount>(t0_values.data(), 2), stirling_row(2)) == 4);
  CHECK(zdim(7, t0_values, stirling_row(7)) == 2316169);
}

TEST_CASE("summing by block count equals summing partition by partition") {
  // The block-count route is the production one; the direct route walks
  // every partition and looks up the T0 count of its size.
  for (int n = 1; n <= 8; ++n) {
    std::vector<BigCount> t0_values;
    for (int i = 1; i <= n; ++i) t0_values.push_back(zdim_t0_recursive(i, ord_star()));

    BigCount direct = 0;
    generate_iterative(n, [&](CodewordView codeword) {
      const int blocks = *std::max_element(codeword.begin(), codeword.end());
      direct += t0_values[static_cast<std::size_t>(blocks - 1)];
    });

    CHECK(zdim(n, t0_values, stirling_row(n)) == direct);
  }
}

TEST_CASE("non-T0 topologies strictly widen the count from two points on") {
  std::vector<BigCount> t0_values;
  for (int i = 1; i <= 12; ++i) t0_values.push_back(zdim_t0_recursive(i, ord_star()));
  for (int n = 2; n <= 12; ++n) {
    const BigCount both =
        zdim(n, std::span<const BigCount>(t0_values.data(), static_cast<std::size_t>(n)),
             stirling_row(n));
    CHECK(t0_values[static_cast<std::size_t>(n - 1)] < both);
  }
}

TEST_CASE("mismatched inputs to the arbitrary-topology sum are domain errors") {
  std::vector<BigCount> three(3, 1);
  CHECK_THROWS_AS(zdim(4, three, stirling_row(4)), std::domain_error);
  CHECK_THROWS_AS(zdim(3, three, stirling_row(4)), std::domain_error);
  CHECK_THROWS_AS(zdim(0, {}, stirling_row(1)), std::domain_error);
}

TEST_CASE("algorithm names round-trip") {
  CHECK(parse_algorithm("iterative") == Algorithm::iterative);
  CHECK(parse_algorithm("recursive") == Algorithm::recursive);
  CHECK(parse_algorithm("parallel") == Algorithm::parallel);
  CHECK(to_string(Algorithm::parallel) == "parallel");
  CHECK_THROWS_AS(parse_algorithm("fastest"), std::invalid_argument);
}
