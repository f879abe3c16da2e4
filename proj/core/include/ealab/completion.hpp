#pragma once

#include <cstddef>
#include <vector>

#include "ealab/order.hpp"

namespace ealab {

/// Dedekind-MacNeille completion of a finite poset.
///
/// Each completed element is a cut, stored as the bitset of its lower part
/// (a set A with A = L(U(A))). Cuts are ordered by inclusion and listed by
/// (cardinality, bitset) so that the result is deterministic.
struct CompletionResult {
  Poset completed;
  std::vector<Bitset> cuts;
  /// embedding[x] = index of the principal cut of x.
  std::vector<Element> embedding;
  std::size_t added_count = 0;
};

CompletionResult dedekind_macneille(const Poset& poset);

}  // namespace ealab
