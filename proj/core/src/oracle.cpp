#include "zerodim/oracle.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace zerodim::oracle {
namespace {

void require_carrier(int n, int cap, const char* what) {
  if (n < 1) throw std::domain_error("carrier size must be at least 1");
  if (n > cap) {
    throw std::domain_error(std::string(what) + " enumeration is capped at n = " +
                            std::to_string(cap) + " (exponential cost); got n = " +
                            std::to_string(n));
  }
}

}  // namespace

Relation::Relation(int n) : n_(n), rows_{} {
  require_carrier(n, kMaxPosetCarrier, "relation");
  for (int x = 0; x < n_ && x < kMaxPosetCarrier; ++x) {
    rows_[x] = static_cast<std::uint8_t>(1u << x);
  }
}

Relation Relation::from_offdiag_mask(int n, std::uint32_t mask) {
  Relation rel(n);
  int bit = 0;
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      if (x == y) continue;
      if (mask & (1u << bit)) rel.set(x, y, true);
      ++bit;
    }
  }
  return rel;
}

bool Relation::leq(int x, int y) const {
  return (rows_[x - 1] >> (y - 1)) & 1u;
}

void Relation::set(int x, int y, bool value) {
  const auto bit = static_cast<std::uint8_t>(1u << (y - 1));
  if (value) {
    rows_[x - 1] |= bit;
  } else {
    rows_[x - 1] &= static_cast<std::uint8_t>(~bit);
  }
}

bool Relation::is_reflexive() const {
  for (int x = 0; x < n_; ++x) {
    if (!((rows_[x] >> x) & 1u)) return false;
  }
  return true;
}

bool Relation::is_antisymmetric() const {
  for (int x = 0; x < n_; ++x) {
    for (int y = x + 1; y < n_; ++y) {
      if (((rows_[x] >> y) & 1u) && ((rows_[y] >> x) & 1u)) return false;
    }
  }
  return true;
}

bool Relation::is_transitive() const {
  // x <= y forces everything above y to sit above x as well.
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if ((rows_[x] >> y) & 1u) {
        if ((rows_[x] | rows_[y]) != rows_[x]) return false;
      }
    }
  }
  return true;
}

bool Relation::is_partial_order() const {
  return is_reflexive() && is_antisymmetric() && is_transitive();
}

bool Relation::is_preorder() const { return is_reflexive() && is_transitive(); }

bool Relation::has_greatest() const {
  const auto all = static_cast<std::uint8_t>((1u << n_) - 1u);
  for (int g = 0; g < n_; ++g) {
    std::uint8_t below = 0;
    for (int x = 0; x < n_; ++x) {
      if ((rows_[x] >> g) & 1u) below |= static_cast<std::uint8_t>(1u << x);
    }
    if (below == all) return true;
  }
  return false;
}

bool Relation::components_have_greatest() const {
  // Symmetrized comparability: x touches y if x <= y or y <= x.
  std::uint8_t touches[kMaxPosetCarrier];
  for (int x = 0; x < n_; ++x) touches[x] = rows_[x];
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if ((rows_[x] >> y) & 1u) touches[y] |= static_cast<std::uint8_t>(1u << x);
    }
  }

  std::uint8_t seen = 0;
  const auto all = static_cast<std::uint8_t>((1u << n_) - 1u);
  while (seen != all) {
    // Grow the component of the lowest unseen point to closure.
    int start = 0;
    while ((seen >> start) & 1u) ++start;
    std::uint8_t component = static_cast<std::uint8_t>(1u << start);
    for (;;) {
      std::uint8_t grown = component;
      for (int x = 0; x < n_; ++x) {
        if ((component >> x) & 1u) grown |= touches[x];
      }
      if (grown == component) break;
      component = grown;
    }
    // Greatest element within the component, under the restriction of the
    // relation to the component's own points.
    bool found = false;
    for (int g = 0; g < n_ && !found; ++g) {
      if (!((component >> g) & 1u)) continue;
      bool greatest = true;
      for (int x = 0; x < n_ && greatest; ++x) {
        if (((component >> x) & 1u) && !((rows_[x] >> g) & 1u)) greatest = false;
      }
      found = greatest;
    }
    if (!found) return false;
    seen |= component;
  }
  return true;
}

Relation Relation::quotient_by_mutual_comparability() const {
  // Class representative per point: the lowest mutually-comparable point.
  int rep[kMaxPosetCarrier];
  int class_index[kMaxPosetCarrier];
  int classes = 0;
  for (int x = 0; x < n_; ++x) {
    rep[x] = x;
    for (int y = 0; y < x; ++y) {
      if (((rows_[x] >> y) & 1u) && ((rows_[y] >> x) & 1u)) {
        rep[x] = rep[y];
        break;
      }
    }
    if (rep[x] == x) {
      class_index[x] = classes++;
    } else {
      class_index[x] = class_index[rep[x]];
    }
  }

  Relation quotient(classes);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if ((rows_[x] >> y) & 1u) quotient.set(class_index[x] + 1, class_index[y] + 1, true);
    }
  }
  return quotient;
}

BigCount count_posets(int n) {
  require_carrier(n, kMaxPosetCarrier, "partial-order");
  const std::uint32_t masks = 1u << Relation::offdiag_cells(n);
  BigCount total = 0;
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    const Relation rel = Relation::from_offdiag_mask(n, mask);
    if (rel.is_antisymmetric() && rel.is_transitive()) total += 1;
  }
  return total;
}

BigCount count_posets_with_greatest(int n) {
  require_carrier(n, kMaxPosetCarrier, "partial-order");
  const std::uint32_t masks = 1u << Relation::offdiag_cells(n);
  BigCount total = 0;
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    const Relation rel = Relation::from_offdiag_mask(n, mask);
    if (rel.is_antisymmetric() && rel.is_transitive() && rel.has_greatest()) total += 1;
  }
  return total;
}

BigCount count_zerodim_t0(int n) {
  require_carrier(n, kMaxPosetCarrier, "partial-order");
  const std::uint32_t masks = 1u << Relation::offdiag_cells(n);
  BigCount total = 0;
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    const Relation rel = Relation::from_offdiag_mask(n, mask);
    if (rel.is_antisymmetric() && rel.is_transitive() && rel.components_have_greatest()) {
      total += 1;
    }
  }
  return total;
}

BigCount count_zerodim(int n) {
  require_carrier(n, kMaxPreorderCarrier, "preorder");
  const std::uint32_t masks = 1u << Relation::offdiag_cells(n);
  BigCount total = 0;
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    const Relation rel = Relation::from_offdiag_mask(n, mask);
    if (!rel.is_transitive()) continue;
    const Relation quotient = rel.quotient_by_mutual_comparability();
    assert(quotient.is_partial_order());
    if (quotient.components_have_greatest()) total += 1;
  }
  return total;
}

}  // namespace zerodim::oracle
