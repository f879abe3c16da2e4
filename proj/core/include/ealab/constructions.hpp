#pragma once

#include <cstddef>
#include <vector>

#include "ealab/order.hpp"
#include "ealab/table.hpp"

namespace ealab {

/// The k-element chain {0, a, 2a, ..., (k-1)a = 1}; k >= 2.
EffectAlgebraTable chain(std::size_t k);

/// Coordinatewise product. Tuples are flattened in row-major order, so the
/// last factor varies fastest; element names are "(x,y,...)". A single
/// factor is returned unchanged. Throws Error(kEmptyFactorList).
EffectAlgebraTable direct_product(const std::vector<EffectAlgebraTable>& ts);

/// Disjoint union with zeros and units identified; sums across summands are
/// defined only when one side is 0. Layout: 0, the inner elements of each
/// summand in order (named "s<k>.<name>"), then 1. A single summand is
/// returned unchanged. Throws Error(kEmptyFactorList) and
/// Error(kFactorTooSmall) for summands with fewer than three elements.
EffectAlgebraTable horizontal_sum(const std::vector<EffectAlgebraTable>& ts);

/// A bounded poset with a map x -> x^perp, intended to be an orthomodular
/// lattice.
struct OrthoLattice {
  Poset order;
  std::vector<Element> perp;
};

/// x + y = x v y whenever x <= y^perp. Throws Error(kNotALattice),
/// Error(kNotOrthocomplemented) when perp is not an order-reversing
/// involutive complementation, and Error(kNotOrthomodular) naming the first
/// pair x <= y with y != x v (x^perp ^ y).
EffectAlgebraTable oml_to_ea(const OrthoLattice& oml);

}  // namespace ealab
