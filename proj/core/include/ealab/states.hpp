#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ealab/lp.hpp"
#include "ealab/table.hpp"

namespace ealab {

enum class StateMode { kAny, kFaithful, kSubadditive, kFaithfulSubadditive };

std::string to_string(StateMode mode);
/// "any", "faithful", "subadditive", "faithful_subadditive" (also accepts
/// "faithful-subadditive"); throws Error(kInvalidArgument).
StateMode parse_state_mode(const std::string& text);

inline bool is_faithful(StateMode m) {
  return m == StateMode::kFaithful || m == StateMode::kFaithfulSubadditive;
}
inline bool is_subadditive(StateMode m) {
  return m == StateMode::kSubadditive || m == StateMode::kFaithfulSubadditive;
}

/// One exact value per element.
struct StateVector {
  std::vector<Rational> values;
};

/// The linear system whose solutions are the states of the requested kind.
///
/// Variable i is the value at element i; faithful modes add a last variable
/// t. Rows: w(0) = 0, w(1) = 1, one equality per defined sum of an
/// unordered pair of non-zero elements, w(x) <= 1. Subadditive modes add
/// w(x v y) = w(x) + w(y) for every unordered pair with x ^ y = 0 (a state
/// is subadditive iff it is a valuation). Faithful modes add w(a) - t >= 0
/// for every atom a, t <= 1, and maximize t: since states are monotone, a
/// faithful state exists iff the optimum t* is positive.
///
/// Throws Error(kNotAnEffectAlgebra), and Error(kNotALattice) for the
/// subadditive modes on a non-lattice.
LinearSystem state_system(const EffectAlgebraTable& t, StateMode mode);

struct StateFound {
  StateVector state;
  /// Optimal minimum atom value, for the faithful modes.
  std::optional<Rational> t_star;
};

struct StateInfeasible {
  /// kInfeasible: no state of the mode's additivity kind exists at all.
  /// kObjectiveBound: states exist but t <= bound = 0 on all of them, so
  /// none is faithful.
  Certificate certificate;
};

struct StateQuery {
  StateMode mode = StateMode::kAny;
  std::variant<StateFound, StateInfeasible> result;

  bool found() const { return std::holds_alternative<StateFound>(result); }
};

/// state_system + solve. Found states are re-checked with verify_state();
/// a failed re-check raises Error(kInternalInconsistency). Finite algebras
/// make every state (o)-continuous, so nothing further is checked for it.
StateQuery find_state(const EffectAlgebraTable& t, StateMode mode);

struct StateCheck {
  bool ok = false;
  std::string reason;
  std::vector<Element> witness;
  /// Subadditive modes only: w(x v y) <= w(x) + w(y) over all pairs, and
  /// w(x v y) = w(x) + w(y) over pairs with x ^ y = 0.
  std::optional<bool> inequality_form;
  std::optional<bool> valuation_form;
};

/// Replays the state conditions directly on the algebra (no solver):
/// range, w(0) = 0, w(1) = 1, additivity on every defined sum; faithful
/// modes require w(x) > 0 for every x != 0; subadditive modes evaluate both
/// forms and require both.
StateCheck verify_state(const EffectAlgebraTable& t, const StateVector& w,
                        StateMode mode);

}  // namespace ealab
