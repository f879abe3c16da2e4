#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ealab/order.hpp"

namespace ealab {

/// Meet/join tables of a finite poset. When the poset is not a lattice the
/// tables are left empty and `counterexample` names the first pair (in
/// lexicographic order) lacking a meet or a join.
struct LatticeTables {
  std::size_t size = 0;
  bool is_lattice = false;
  std::optional<std::pair<Element, Element>> counterexample;
  /// Finite lattices are complete; recorded for reports.
  bool is_complete = false;
  std::vector<Element> meet_table;
  std::vector<Element> join_table;

  Element meet(Element x, Element y) const { return meet_table[x * size + y]; }
  Element join(Element x, Element y) const { return join_table[x * size + y]; }
};

LatticeTables lattice_tables(const Poset& poset);

/// Outcome of a brute-force law check; `witness` is empty when it holds.
struct LawCheck {
  bool holds = true;
  std::vector<Element> witness;
};

/// x <= z implies x v (y ^ z) = (x v y) ^ z, over all triples.
/// Throws Error(kNotALattice).
LawCheck is_modular(const LatticeTables& lt);

/// x ^ (y v z) = (x ^ y) v (x ^ z), over all triples.
LawCheck is_distributive(const LatticeTables& lt);

/// True iff `subset`, which must be closed under meet, join and the given
/// complement (Error(kSubsetNotClosed) otherwise), is a distributive lattice
/// whose elements all satisfy x ^ x' = 0 and x v x' = 1.
bool is_boolean_subalgebra(const LatticeTables& lt,
                           const std::vector<Element>& complement,
                           const std::vector<Element>& subset);

}  // namespace ealab
