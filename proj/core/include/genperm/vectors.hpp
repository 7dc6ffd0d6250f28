#pragma once

#include <vector>

#include "genperm/numbers.hpp"

namespace genperm {

/// A point of a polytope with exact integer coordinates.
using VertexVector = std::vector<Int>;

/// A linear functional given by its coefficient vector.
using FunctionalVector = std::vector<Rat>;

/// Ordered set partition of {0,...,n-1} induced by a functional: blocks of
/// equal coefficient value, listed from the lowest value to the highest.
struct OrderType {
  std::vector<std::vector<int>> blocks;

  int ground_size() const {
    int total = 0;
    for (const auto& b : blocks) total += static_cast<int>(b.size());
    return total;
  }

  bool operator==(const OrderType&) const = default;
};

OrderType order_type_of(const FunctionalVector& c);

}  // namespace genperm
