#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ealab/table.hpp"

namespace ealab {

/// A bijection between the elements of two tables; mapping[x] is the image
/// of x.
struct Morphism {
  std::vector<Element> mapping;
};

/// Checks that m is a bijection with m(1) = 1 such that a <= b' iff
/// m(a) <= m(b)', and then m(a + b) = m(a) + m(b).
bool verify_isomorphism(const EffectAlgebraTable& from,
                        const EffectAlgebraTable& to, const Morphism& m);

/// Backtracking search over bijections that respect per-element invariants
/// (height, ord, up/down-set sizes, sum degrees). The returned morphism has
/// passed verify_isomorphism(). Both tables must be valid effect algebras.
std::optional<Morphism> are_isomorphic(const EffectAlgebraTable& a,
                                       const EffectAlgebraTable& b);

/// Canonical representative: elements are grouped by the same invariants,
/// groups ordered by them (which always extends the algebra's order, so 0
/// stays first and 1 becomes last), and within groups the labelling that
/// makes the encoding below lexicographically smallest is chosen. Names
/// are reset to default_names().
EffectAlgebraTable canonical_form(const EffectAlgebraTable& t);

/// For each element z in index order, the sorted list of pairs x <= y of
/// non-zero elements with x + y = z, each list prefixed by its length.
/// Determines the table completely for tables whose sums exceed both
/// summands; used as the comparison key for canonical forms.
std::vector<std::uint32_t> sum_encoding(const EffectAlgebraTable& t);

}  // namespace ealab
