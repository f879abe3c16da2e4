#pragma once

#include <string>
#include <vector>

#include "ealab/table.hpp"

namespace ealab {

enum class Axiom {
  kCommutativity,  // Ei
  kAssociativity,  // Eii
  kComplement,     // Eiii
  kUnitOrthogonal  // Eiv
};

/// "Ei", "Eii", "Eiii", "Eiv".
std::string axiom_tag(Axiom a);

struct AxiomViolation {
  Axiom axiom;
  std::vector<Element> witness;

  friend bool operator==(const AxiomViolation&,
                         const AxiomViolation&) = default;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;

  bool passed() const noexcept { return violations.empty(); }
};

/// Checks the four effect-algebra axioms. At most one violation is reported
/// per axiom, carrying the lexicographically smallest witness:
///   Ei   (x, y)        with x + y != y + x
///   Eii  (x, y, z)     where exactly one side of the associative law is
///                      defined, or both are and differ
///   Eiii (x)           x has no complement, or (x, y1, y2) with two
///   Eiv  (x)           x != 0 and 1 + x (or x + 1) defined
AxiomReport validate_axioms(const EffectAlgebraTable& t);

}  // namespace ealab
