#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ealab/table.hpp"

namespace ealab {

inline constexpr std::size_t kDefaultEnumerationBound = 8;

enum class Filter { kAll, kLattice, kMv, kModular };

std::string to_string(Filter f);
/// "all", "lattice", "mv", "modular"; throws Error(kInvalidArgument).
Filter parse_filter(const std::string& s);

bool passes_filter(const EffectAlgebraTable& t, Filter f);

/// Every effect algebra with exactly n elements, one canonical_form() per
/// isomorphism class, sorted by sum_encoding(). Throws
/// Error(kInvalidArgument) for n < 2 and Error(kBoundExceeded) for
/// n > bound.
std::vector<EffectAlgebraTable> enumerate_all(
    std::size_t n, Filter filter = Filter::kAll,
    std::size_t bound = kDefaultEnumerationBound);

struct CensusRow {
  std::size_t size = 0;
  std::size_t count_total = 0;
  std::size_t count_lattice = 0;
  std::size_t count_mv = 0;
  std::size_t count_modular = 0;
  /// Lattice effect algebras with C(E) = {0, 1}.
  std::size_t count_irreducible = 0;
  std::size_t count_with_faithful_state = 0;
};

/// Census over an already enumerated list of size-n algebras.
CensusRow census(std::size_t n, const std::vector<EffectAlgebraTable>& all);

}  // namespace ealab
