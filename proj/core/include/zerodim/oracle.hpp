#pragma once

#include <cstdint>

#include "zerodim/bigcount.hpp"

namespace zerodim::oracle {

// Brute-force ground truth for tiny carrier sets: relations are enumerated
// as bitmasks over the off-diagonal cells (the diagonal is forced on) and
// filtered by the axioms. At the cap of 5 points that is about a million
// candidates with an O(n^2) bit-parallel transitivity check each.

inline constexpr int kMaxPosetCarrier = 5;
inline constexpr int kMaxPreorderCarrier = 4;

// Relation on {1..n}; leq(x, y) reads "x <= y". Rows are stored as
// bitmasks, which keeps the axiom checks branch-free.
class Relation {
 public:
  explicit Relation(int n);  // the identity relation

  // Decodes `mask`, one bit per off-diagonal cell in row-major order,
  // on top of the forced diagonal.
  static Relation from_offdiag_mask(int n, std::uint32_t mask);

  static int offdiag_cells(int n) { return n * n - n; }

  int carrier_size() const { return n_; }

  bool leq(int x, int y) const;       // 1-based points
  void set(int x, int y, bool value); // 1-based points

  bool is_reflexive() const;
  bool is_antisymmetric() const;
  bool is_transitive() const;
  bool is_partial_order() const;
  bool is_preorder() const;

  // The zero-dimensionality test for posets: every connected component of
  // the comparability graph contains an element above all of that
  // component's elements.
  bool components_have_greatest() const;

  // Whole-carrier greatest element: some g with x <= g for all x.
  bool has_greatest() const;

  // Collapses mutually comparable points to single points and returns the
  // induced relation on the classes. Meaningful for preorders, where the
  // result is the quotient partial order.
  Relation quotient_by_mutual_comparability() const;

 private:
  int n_;
  std::uint8_t rows_[kMaxPosetCarrier];  // rows_[x-1] bit y-1 <=> x <= y
};

// Number of partial orders on {1..n}; n <= 5 (cost guard).
BigCount count_posets(int n);

// Number of partial orders on {1..n} with a greatest element; n <= 5.
BigCount count_posets_with_greatest(int n);

// Number of partial orders on {1..n} satisfying the zero-dimensionality
// characterisation (each comparability component has a greatest element);
// n <= 5. Equals the count of zero-dimensional T0-topologies.
BigCount count_zerodim_t0(int n);

// Number of preorders on {1..n} whose quotient by mutual comparability
// satisfies the same characterisation; n <= 4. Equals the count of
// zero-dimensional arbitrary topologies.
BigCount count_zerodim(int n);

}  // namespace zerodim::oracle
