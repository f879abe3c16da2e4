#pragma once

#include <optional>
#include <vector>

#include "ealab/lattice.hpp"
#include "ealab/order.hpp"
#include "ealab/table.hpp"

namespace ealab {

/// A validated lattice effect algebra with its derived order and lattice
/// tables, built once and shared by the structure and state operations.
struct LatticeEffectAlgebra {
  EffectAlgebraTable table;
  OrderStructure order;
  LatticeTables lattice;

  /// Throws Error(kNotAnEffectAlgebra) or Error(kNotALattice).
  static LatticeEffectAlgebra make(EffectAlgebraTable t);

  std::size_t size() const noexcept { return table.size(); }
  Element one() const noexcept { return table.one(); }
  Element meet(Element x, Element y) const { return lattice.meet(x, y); }
  Element join(Element x, Element y) const { return lattice.join(x, y); }
  Element complement(Element x) const { return order.complement(x); }
  bool leq(Element x, Element y) const { return order.leq(x, y); }
};

/// S(E) = {w : w ^ w' = 0}, sorted. Also checks that S(E) is a sub-effect
/// algebra closed under joins; a failure there raises
/// Error(kInternalInconsistency).
std::vector<Element> sharp_elements(const LatticeEffectAlgebra& e);

/// x <-> y iff x v y = x + (y - (x ^ y)).
bool compatible(const LatticeEffectAlgebra& e, Element x, Element y);

/// Maximal sets of pairwise compatible elements, each sorted ascending and
/// the list ordered lexicographically. Every block is checked to be a
/// sub-lattice, a sub-effect algebra and an MV-effect algebra on its own.
std::vector<std::vector<Element>> blocks(const LatticeEffectAlgebra& e);

struct StructureReport {
  std::vector<Element> sharp;
  std::vector<std::vector<Element>> blocks;
  std::vector<Element> compat_center;  // B(E)
  std::vector<Element> center;         // C(E)
  std::vector<Element> central_atoms;
  bool is_mv = false;
  bool is_irreducible = false;
  bool sharply_dominating = false;
  /// Joins of sharp elements agree whether taken in S(E) or in E.
  bool sharp_joins_agree = false;
};

/// Computes C(E) and B(E) two ways each and cross-checks them (and
/// C = B n S). Disagreement raises Error(kInternalInconsistency).
StructureReport centers(const LatticeEffectAlgebra& e);

/// The three equivalent conditions on central atoms:
///  (i)   C(E) is atomic and the join of its atoms is 1;
///  (ii)  every atom of E lies under an atom of C(E);
///  (iii) x -> (x ^ p) over central atoms p embeds E into the product of
///        the intervals [0, p] with every projection onto.
struct CentralAtomConditions {
  bool center_atomic_with_unit_join = false;
  bool atoms_below_central_atoms = false;
  bool subdirect_embedding = false;

  bool agree() const noexcept {
    return center_atomic_with_unit_join == atoms_below_central_atoms &&
           atoms_below_central_atoms == subdirect_embedding;
  }
};

CentralAtomConditions check_central_atom_conditions(
    const LatticeEffectAlgebra& e);

/// [0, z] with the inherited sum and unit z. `members[i]` is the element of
/// E that is element i of the interval.
struct IntervalAlgebra {
  EffectAlgebraTable table;
  std::vector<Element> members;
};

/// Throws Error(kDegenerateInterval) for z = 0 and Error(kNotCentral) when
/// z is not in C(E).
IntervalAlgebra interval_algebra(const LatticeEffectAlgebra& e, Element z);

struct Decomposition {
  std::vector<Element> central_atoms;
  std::vector<IntervalAlgebra> factors;
  /// iso[x][i] = index of x ^ p_i inside factor i.
  std::vector<std::vector<Element>> iso;
  std::vector<bool> factor_irreducible;
  bool iso_bijective = false;
  bool iso_preserves_sum = false;

  std::size_t product_size() const;
  bool all_factors_irreducible() const;
};

/// Factors E over the atoms of its center.
Decomposition decompose(const LatticeEffectAlgebra& e);

/// Least w in S(E) with x <= w, if there is one.
std::optional<Element> least_sharp_above(const LatticeEffectAlgebra& e,
                                         Element x);

/// Every x has a least sharp element above it.
bool sharply_dominating(const LatticeEffectAlgebra& e);

/// Sub-effect algebra test: 1 in Q, and whenever x + y = z with two of
/// x, y, z in Q, all three are.
bool is_sub_effect_algebra(const EffectAlgebraTable& t,
                           const std::vector<Element>& subset);

}  // namespace ealab
