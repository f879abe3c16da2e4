#pragma once

// Deliberately naive reference implementations used to cross-check the
// library. None of them share code with src/.

#include <cstddef>
#include <optional>
#include <vector>

#include "ealab/order.hpp"
#include "ealab/table.hpp"

namespace oracle {

using ealab::EffectAlgebraTable;
using ealab::Element;

/// The four axioms, written out directly from their statements.
bool is_effect_algebra(const EffectAlgebraTable& t);

/// Every labelled table on n elements with 0 = index 0, 1 = index n-1 and
/// 1 + x undefined for x != 0 (forced by the axioms), filtered by
/// is_effect_algebra(). Cells range over all of {undefined, 0..n-1}.
std::vector<EffectAlgebraTable> all_labelled(std::size_t n);

/// Isomorphism by trying every permutation fixing 0.
bool isomorphic(const EffectAlgebraTable& a, const EffectAlgebraTable& b);

/// Number of isomorphism classes among all_labelled(n).
std::size_t class_count(std::size_t n);

/// Sets A with A = L(U(A)), found by trying every subset.
std::vector<std::vector<bool>> all_cuts(const ealab::Poset& p);

/// Least upper bound found by scanning all upper bounds; nullopt if none.
std::optional<Element> brute_join(const ealab::Poset& p, Element x, Element y);
std::optional<Element> brute_meet(const ealab::Poset& p, Element x, Element y);

/// x <= y iff x + z = y for some z, straight from the table.
bool table_leq(const EffectAlgebraTable& t, Element x, Element y);

/// Copy of t with element x renamed to perm[x] (perm must fix 0).
EffectAlgebraTable permuted(const EffectAlgebraTable& t,
                            const std::vector<Element>& perm);

}  // namespace oracle
