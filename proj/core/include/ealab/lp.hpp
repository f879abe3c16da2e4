#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace ealab {

using Rational = mpq_class;

/// "p/q", or just "p" for integers. Never a decimal.
std::string to_string(const Rational& q);
/// Accepts "p/q" or "p"; throws Error(kParseError) otherwise.
Rational parse_rational(std::string_view text);

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Term {
  std::size_t var;
  Rational coeff;
};

struct LinearConstraint {
  std::string label;
  std::vector<Term> terms;
  Relation relation;
  Rational rhs;
};

/// A system of linear constraints over non-negative variables, with an
/// optional objective to maximize.
struct LinearSystem {
  std::vector<std::string> variables;
  std::vector<LinearConstraint> constraints;
  /// Coefficients of the objective to maximize; empty for pure feasibility.
  std::vector<Rational> objective;

  std::size_t add_variable(std::string name);
  void add_constraint(std::string label, std::vector<Term> terms,
                      Relation relation, Rational rhs);
};

/// Multipliers y (one per constraint) with y >= 0 on <= rows, y <= 0 on >=
/// rows and free on = rows, so that sum_i y_i * row_i is a valid inequality
/// (sum_i y_i a_i) x <= sum_i y_i b_i for every feasible x.
///
/// kInfeasible:    sum_i y_i a_i >= 0 componentwise and sum_i y_i b_i < 0,
///                 which no x >= 0 can satisfy.
/// kObjectiveBound: sum_i y_i a_i >= c componentwise, proving
///                 c.x <= sum_i y_i b_i = bound on the feasible set.
struct Certificate {
  enum class Kind { kInfeasible, kObjectiveBound };
  Kind kind = Kind::kInfeasible;
  std::vector<Rational> multipliers;
  Rational bound;
};

struct Feasible {
  std::vector<Rational> assignment;
  /// Set when an objective was given and is bounded.
  std::optional<Rational> objective_value;
  /// Dual certificate that objective_value is the maximum.
  std::optional<Certificate> optimality;
  bool unbounded = false;
};

struct Infeasible {
  Certificate certificate;
};

using SolveResult = std::variant<Feasible, Infeasible>;

/// Exact two-phase simplex with Bland's rule.
SolveResult solve(const LinearSystem& system);

/// Exact replay of every constraint (and non-negativity) on an assignment.
/// Returns the label of the first violated constraint, or nullopt.
std::optional<std::string> first_violation(const LinearSystem& system,
                                           const std::vector<Rational>& x);

inline bool satisfies(const LinearSystem& system,
                      const std::vector<Rational>& x) {
  return !first_violation(system, x).has_value();
}

/// Replays a certificate against the system without trusting the solver.
bool replay_certificate(const LinearSystem& system, const Certificate& cert);

}  // namespace ealab
