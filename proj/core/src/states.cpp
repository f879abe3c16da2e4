#include "ealab/states.hpp"

#include <map>
#include <set>

#include "ealab/error.hpp"
#include "ealab/lattice.hpp"
#include "ealab/order.hpp"

namespace ealab {

std::string to_string(StateMode mode) {
  switch (mode) {
    case StateMode::kAny: return "any";
    case StateMode::kFaithful: return "faithful";
    case StateMode::kSubadditive: return "subadditive";
    case StateMode::kFaithfulSubadditive: return "faithful_subadditive";
  }
  return "?";
}

StateMode parse_state_mode(const std::string& text) {
  if (text == "any") return StateMode::kAny;
  if (text == "faithful") return StateMode::kFaithful;
  if (text == "subadditive") return StateMode::kSubadditive;
  if (text == "faithful_subadditive" || text == "faithful-subadditive") {
    return StateMode::kFaithfulSubadditive;
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown state mode '" + text + "'");
}

namespace {

// Collects rows, dropping exact duplicates (same normalized terms, relation
// and right-hand side) and rows that reduce to 0 = 0.
class SystemBuilder {
 public:
  explicit SystemBuilder(LinearSystem& sys) : sys_(sys) {}

  void add(std::string label, const std::map<std::size_t, Rational>& terms,
           Relation rel, const Rational& rhs) {
    std::vector<Term> row;
    std::string key = std::to_string(static_cast<int>(rel)) + "|" +
                      to_string(rhs) + "|";
    for (const auto& [var, c] : terms) {
      if (sgn(c) == 0) continue;
      row.push_back({var, c});
      key += std::to_string(var) + ":" + to_string(c) + ",";
    }
    if (row.empty() && rel == Relation::kEqual && sgn(rhs) == 0) return;
    if (!seen_.insert(key).second) return;
    sys_.add_constraint(std::move(label), std::move(row), rel, rhs);
  }

 private:
  LinearSystem& sys_;
  std::set<std::string> seen_;
};

}  // namespace

LinearSystem state_system(const EffectAlgebraTable& t, StateMode mode) {
  const auto order = derive_order(t);
  const auto n = static_cast<Element>(t.size());
  std::optional<LatticeTables> lt;
  if (is_subadditive(mode)) {
    lt = lattice_tables(order.poset());
    if (!lt->is_lattice) {
      throw Error(ErrorKind::kNotALattice,
                  "subadditive states need a lattice effect algebra");
    }
  }

  LinearSystem sys;
  for (Element x = 0; x < n; ++x) sys.add_variable("w(" + t.name(x) + ")");
  SystemBuilder rows(sys);
  rows.add("zero", {{kZero, 1}}, Relation::kEqual, 0);
  rows.add("unit", {{t.one(), 1}}, Relation::kEqual, 1);
  for (Element x = 1; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      const auto z = t.sum(x, y);
      if (!z) continue;
      std::map<std::size_t, Rational> terms;
      terms[x] += 1;
      terms[y] += 1;
      terms[*z] -= 1;
      rows.add("sum(" + t.name(x) + "," + t.name(y) + ")", terms,
               Relation::kEqual, 0);
    }
  }
  for (Element x = 0; x < n; ++x) {
    rows.add("le1(" + t.name(x) + ")", {{x, 1}}, Relation::kLessEqual, 1);
  }
  if (lt) {
    for (Element x = 1; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        if (lt->meet(x, y) != kZero) continue;
        std::map<std::size_t, Rational> terms;
        terms[lt->join(x, y)] += 1;
        terms[x] -= 1;
        terms[y] -= 1;
        rows.add("valuation(" + t.name(x) + "," + t.name(y) + ")", terms,
                 Relation::kEqual, 0);
      }
    }
  }
  if (is_faithful(mode)) {
    const auto tv = sys.add_variable("t");
    for (auto a : atoms(order)) {
      rows.add("atom(" + t.name(a) + ")", {{a, 1}, {tv, -1}},
               Relation::kGreaterEqual, 0);
    }
    rows.add("t<=1", {{tv, 1}}, Relation::kLessEqual, 1);
    sys.objective.assign(sys.variables.size(), Rational(0));
    sys.objective[tv] = 1;
  }
  return sys;
}

StateQuery find_state(const EffectAlgebraTable& t, StateMode mode) {
  const auto sys = state_system(t, mode);
  StateQuery q;
  q.mode = mode;
  auto res = solve(sys);
  if (auto* inf = std::get_if<Infeasible>(&res)) {
    q.result = StateInfeasible{std::move(inf->certificate)};
    return q;
  }
  auto& feas = std::get<Feasible>(res);
  if (is_faithful(mode)) {
    if (!feas.objective_value || !feas.optimality) {
      throw Error(ErrorKind::kInternalInconsistency,
                  "faithfulness objective is unbounded");
    }
    if (sgn(*feas.objective_value) <= 0) {
      q.result = StateInfeasible{std::move(*feas.optimality)};
      return q;
    }
  }
  StateFound found;
  found.state.values.assign(feas.assignment.begin(),
                            feas.assignment.begin() + t.size());
  if (is_faithful(mode)) found.t_star = feas.objective_value;
  const auto check = verify_state(t, found.state, mode);
  if (!check.ok) {
    throw Error(ErrorKind::kInternalInconsistency,
                "solver state fails verification: " + check.reason);
  }
  q.result = std::move(found);
  return q;
}

StateCheck verify_state(const EffectAlgebraTable& t, const StateVector& w,
                        StateMode mode) {
  StateCheck c;
  const auto n = static_cast<Element>(t.size());
  auto fail = [&](std::string reason, std::vector<Element> witness) {
    c.ok = false;
    c.reason = std::move(reason);
    c.witness = std::move(witness);
    return c;
  };
  if (w.values.size() != n) return fail("wrong number of values", {});
  for (Element x = 0; x < n; ++x) {
    if (w.values[x] < 0 || w.values[x] > 1) {
      return fail("value outside [0,1] at " + t.name(x), {x});
    }
  }
  if (w.values[kZero] != 0) return fail("w(0) != 0", {kZero});
  if (w.values[t.one()] != 1) return fail("w(1) != 1", {t.one()});
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      const auto z = t.sum(x, y);
      if (z && w.values[x] + w.values[y] != w.values[*z]) {
        return fail("not additive on " + t.name(x) + " + " + t.name(y) +
                        " = " + t.name(*z),
                    {x, y, *z});
      }
    }
  }
  if (is_faithful(mode)) {
    for (Element x = 1; x < n; ++x) {
      if (sgn(w.values[x]) <= 0) {
        return fail("not faithful: w(" + t.name(x) + ") = 0", {x});
      }
    }
  }
  if (is_subadditive(mode)) {
    const auto order = derive_order(t);
    const auto lt = lattice_tables(order.poset());
    if (!lt.is_lattice) return fail("not a lattice effect algebra", {});
    std::vector<Element> ineq_witness;
    std::vector<Element> val_witness;
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        const auto j = lt.join(x, y);
        if (ineq_witness.empty() && w.values[j] > w.values[x] + w.values[y]) {
          ineq_witness = {x, y};
        }
        if (val_witness.empty() && lt.meet(x, y) == kZero &&
            w.values[j] != w.values[x] + w.values[y]) {
          val_witness = {x, y};
        }
      }
    }
    c.inequality_form = ineq_witness.empty();
    c.valuation_form = val_witness.empty();
    if (!ineq_witness.empty()) {
      return fail("not subadditive on (" + t.name(ineq_witness[0]) + ", " +
                      t.name(ineq_witness[1]) + ")",
                  ineq_witness);
    }
    if (!val_witness.empty()) {
      return fail("not a valuation on (" + t.name(val_witness[0]) + ", " +
                      t.name(val_witness[1]) + ")",
                  val_witness);
    }
  }
  c.ok = true;
  return c;
}

}  // namespace ealab
