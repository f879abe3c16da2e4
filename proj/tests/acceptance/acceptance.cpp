// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
//
//   ealab_acceptance        run all of them
//   ealab_acceptance N      run criterion N only
//
// Exit status is 0 iff every criterion that ran passed.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ealab/axioms.hpp"
#include "ealab/completion.hpp"
#include "ealab/constructions.hpp"
#include "ealab/enumerate.hpp"
#include "ealab/error.hpp"
#include "ealab/io.hpp"
#include "ealab/lattice.hpp"
#include "ealab/lp.hpp"
#include "ealab/states.hpp"
#include "ealab/structure.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_systems.hpp"

using namespace ealab;

namespace {

// Pinned limits. Results are exact rationals, so the only tolerances are
// wall-clock budgets.
constexpr double kExampleSeconds = 1.0;       // criteria 1 and 2
constexpr double kSweepSeconds = 600.0;       // criterion 3, corpus included
constexpr std::size_t kCorpusMaxSize = 8;
constexpr std::size_t kOracleMaxSize = 5;
constexpr std::size_t kSolverSystems = 1000;
constexpr std::uint64_t kSolverSeed = 20240601;
constexpr std::size_t kChainMin = 2;
constexpr std::size_t kChainMax = 10;
const char* const kExampleExpr = "product (chain 3) (hsum (chain 3) (chain 3))";

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Collects named sub-checks; the outcome fails if any of them does.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      failed_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }

  Outcome outcome() const {
    std::ostringstream d;
    for (std::size_t i = 0; i < notes_.size(); ++i) d << (i ? "; " : "") << notes_[i];
    if (!failed_.empty()) {
      d << (notes_.empty() ? "" : "; ") << "failed:";
      for (const auto& f : failed_) d << " [" << f << "]";
    }
    return {pass_, d.str()};
  }

 private:
  bool pass_ = true;
  std::vector<std::string> notes_;
  std::vector<std::string> failed_;
};

std::string secs(double s) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s << " s";
  return o.str();
}

EffectAlgebraTable example_algebra() {
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run({"construct", kExampleExpr}, in, out, err);
  if (code != cli::kExitOk) {
    throw std::runtime_error("construct failed: " + err.str());
  }
  return parse_ea(out.str());
}

bool is_subset(const std::vector<Element>& a, const std::vector<Element>& b) {
  return std::all_of(a.begin(), a.end(), [&](Element x) {
    return std::find(b.begin(), b.end(), x) != b.end();
  });
}

const std::vector<EffectAlgebraTable>& lattice_corpus() {
  static const auto corpus = fixtures::lattice_corpus(kCorpusMaxSize);
  return corpus;
}

Outcome criterion1() {
  Timer timer;
  Checks c;
  const auto t = example_algebra();
  const auto e = LatticeEffectAlgebra::make(t);
  const auto bs = blocks(e);
  const auto sr = centers(e);
  const bool boolean =
      is_boolean_subalgebra(e.lattice, e.order.complements(), sr.compat_center);
  const bool in_sharp = is_subset(sr.compat_center, sr.sharp);
  const double elapsed = timer.seconds();

  c.note("|E| = " + std::to_string(t.size()));
  c.note(std::to_string(bs.size()) + " blocks of sizes " +
         [&] {
           std::string s;
           for (const auto& b : bs) s += (s.empty() ? "" : ",") + std::to_string(b.size());
           return s;
         }());
  c.note("|B(E)| = " + std::to_string(sr.compat_center.size()));
  c.note(std::string("B(E) boolean: ") + (boolean ? "yes" : "no"));
  c.note(std::string("B(E) in S(E): ") + (in_sharp ? "yes" : "no"));
  c.note(secs(elapsed));

  c.expect(t.size() == 12, "12 elements");
  c.expect(bs.size() == 2, "exactly 2 blocks");
  c.expect(std::all_of(bs.begin(), bs.end(),
                       [](const auto& b) { return b.size() == 9; }),
           "blocks of 9 elements");
  c.expect(sr.compat_center.size() == 3, "B(E) has exactly 3 elements");
  c.expect(!boolean, "B(E) fails the Boolean test");
  c.expect(in_sharp == boolean, "B(E) in S(E) iff B(E) Boolean");
  c.expect(elapsed < kExampleSeconds, "runtime < 1 s");
  return c.outcome();
}

Outcome criterion2() {
  Timer timer;
  Checks c;
  const auto t = example_algebra();
  const auto q = find_state(t, StateMode::kSubadditive);
  c.expect(q.found(), "subadditive state found");
  if (q.found()) {
    const auto& w = std::get<StateFound>(q.result).state.values;
    const auto check = verify_state(t, StateVector{w}, StateMode::kSubadditive);
    c.expect(check.ok, "state verifies: " + check.reason);
    const auto lt = lattice_tables(derive_order(t).poset());
    std::size_t equalities = 0;
    bool exact = true;
    for (Element x = 0; x < t.size(); ++x) {
      for (Element y = 0; y < t.size(); ++y) {
        if (lt.meet(x, y) != kZero) continue;
        ++equalities;
        exact = exact && w[lt.join(x, y)] == w[x] + w[y];
      }
    }
    c.expect(exact, "valuation equalities hold exactly");
    c.note(std::to_string(equalities) + " valuation equalities checked");
  }
  const double elapsed = timer.seconds();
  c.note(secs(elapsed));
  c.expect(elapsed < kExampleSeconds, "runtime < 1 s");
  return c.outcome();
}

Outcome criterion3() {
  Timer timer;
  Checks c;
  for (std::size_t n = 2; n <= kOracleMaxSize; ++n) {
    const auto fast = enumerate_all(n).size();
    const auto slow = oracle::class_count(n);
    c.expect(fast == slow, "n = " + std::to_string(n) + ": enumerate " +
                               std::to_string(fast) + " vs oracle " +
                               std::to_string(slow));
  }
  std::size_t exceptions = 0;
  for (const auto& t : lattice_corpus()) {
    const auto cond = check_central_atom_conditions(LatticeEffectAlgebra::make(t));
    if (!cond.agree()) ++exceptions;
  }
  const double elapsed = timer.seconds();
  c.note(std::to_string(lattice_corpus().size()) + " lattice algebras of size <= " +
         std::to_string(kCorpusMaxSize));
  c.note(std::to_string(exceptions) + " exceptions");
  c.note(secs(elapsed));
  c.expect(exceptions == 0, "conditions agree everywhere");
  c.expect(elapsed < kSweepSeconds, "runtime < 10 min");
  return c.outcome();
}

Outcome criterion4() {
  Checks c;
  std::size_t exceptions = 0;
  for (const auto& t : lattice_corpus()) {
    const auto e = LatticeEffectAlgebra::make(t);
    const auto sr = centers(e);
    const auto& center = sr.center;

    // Atoms of C(E), found directly.
    std::vector<Element> center_atoms;
    for (auto z : center) {
      if (z == kZero) continue;
      const bool minimal = std::none_of(center.begin(), center.end(), [&](Element y) {
        return y != kZero && y != z && e.leq(y, z);
      });
      if (minimal) center_atoms.push_back(z);
    }
    const bool atomic = std::all_of(center.begin(), center.end(), [&](Element z) {
      return z == kZero ||
             std::any_of(center_atoms.begin(), center_atoms.end(),
                         [&](Element p) { return e.leq(p, z); });
    });
    bool atoms_covered = true;
    for (auto a : atoms(e.order)) {
      atoms_covered = atoms_covered &&
                      std::any_of(center_atoms.begin(), center_atoms.end(),
                                  [&](Element p) { return e.leq(a, p); });
    }
    const auto d = decompose(e);
    const bool ok =
        is_boolean_subalgebra(e.lattice, e.order.complements(), center) &&
        atomic && atoms_covered && center_atoms == sr.central_atoms &&
        d.all_factors_irreducible() && d.product_size() == t.size() &&
        d.iso_bijective && d.iso_preserves_sum;
    if (!ok) ++exceptions;
  }
  c.note(std::to_string(lattice_corpus().size()) + " lattice algebras");
  c.note(std::to_string(exceptions) + " exceptions");
  c.expect(exceptions == 0, "zero exceptions");
  return c.outcome();
}

Outcome criterion5() {
  Checks c;
  std::size_t modular = 0, exceptions = 0;
  for (const auto& t : lattice_corpus()) {
    if (!is_modular(lattice_tables(derive_order(t).poset())).holds) continue;
    ++modular;
    const auto q = find_state(t, StateMode::kFaithful);
    const auto* f = std::get_if<StateFound>(&q.result);
    const bool ok = f != nullptr && f->t_star && sgn(*f->t_star) > 0 &&
                    verify_state(t, f->state, StateMode::kFaithful).ok;
    if (!ok) ++exceptions;
  }
  c.note(std::to_string(modular) + " modular algebras");
  c.note(std::to_string(exceptions) + " exceptions");
  c.expect(modular > 0, "corpus has modular algebras");
  c.expect(exceptions == 0, "zero exceptions");
  return c.outcome();
}

Outcome criterion6() {
  Checks c;
  for (std::size_t k = kChainMin; k <= kChainMax; ++k) {
    const auto t = chain(k);
    const auto e = LatticeEffectAlgebra::make(t);
    const auto sr = centers(e);
    const std::vector<Element> bounds{kZero, t.one()};
    const auto tag = "C" + std::to_string(k) + ": ";
    c.expect(sr.sharp == bounds, tag + "S = {0,1}");
    c.expect(sr.center == bounds, tag + "C = {0,1}");
    c.expect(sr.compat_center.size() == k, tag + "B = chain");
    c.expect(sr.blocks.size() == 1 && sr.blocks[0].size() == k, tag + "one block");

    const Rational expected(1, static_cast<long>(k - 1));
    const auto q = find_state(t, StateMode::kAny);
    c.expect(q.found() &&
                 std::get<StateFound>(q.result).state.values[1] == expected,
             tag + "state value 1/(k-1)");
    // Uniqueness: the atom's value is pinned from above and below.
    auto sys = state_system(t, StateMode::kAny);
    for (int sign : {1, -1}) {
      sys.objective.assign(sys.variables.size(), Rational(0));
      sys.objective[1] = sign;
      const auto res = solve(sys);
      const auto* f = std::get_if<Feasible>(&res);
      c.expect(f != nullptr && f->assignment[1] == expected,
               tag + (sign > 0 ? "max" : "min") + " of atom value");
    }
  }
  c.note("chains C" + std::to_string(kChainMin) + "..C" + std::to_string(kChainMax));
  return c.outcome();
}

Outcome criterion7() {
  Checks c;
  std::size_t exceptions = 0;
  for (const auto& t : lattice_corpus()) {
    const auto p = derive_order(t).poset();
    const auto r = dedekind_macneille(p);
    bool ok = r.added_count == 0 && r.completed.size() == p.size();
    std::vector<Element> image = r.embedding;
    std::sort(image.begin(), image.end());
    ok = ok && std::adjacent_find(image.begin(), image.end()) == image.end();
    for (Element x = 0; ok && x < p.size(); ++x) {
      for (Element y = 0; ok && y < p.size(); ++y) {
        ok = p.leq(x, y) == r.completed.leq(r.embedding[x], r.embedding[y]);
      }
    }
    if (!ok) ++exceptions;
  }
  c.note(std::to_string(lattice_corpus().size()) + " lattices, " +
         std::to_string(exceptions) + " exceptions");
  c.expect(exceptions == 0, "lattices are fixed points");

  const auto p = fixtures::poset("nonlattice6.poset");
  const auto added = dedekind_macneille(p).added_count;
  const auto oracle_added = oracle::all_cuts(p).size() - p.size();
  c.note("non-lattice fixture: added " + std::to_string(added) + ", oracle " +
         std::to_string(oracle_added));
  c.expect(added == 1, "non-lattice fixture adds 1");
  c.expect(added == oracle_added, "agrees with cut oracle");
  return c.outcome();
}

Outcome criterion8() {
  Checks c;
  std::mt19937_64 rng(kSolverSeed);
  std::size_t found = 0, infeasible = 0, wrong = 0;
  for (std::size_t i = 0; i < kSolverSystems; ++i) {
    const bool feasible = i % 2 == 0;
    const auto planted = oracle::planted_system(rng, feasible);
    const auto res = solve(planted.system);
    if (const auto* f = std::get_if<Feasible>(&res)) {
      ++found;
      if (!feasible || !satisfies(planted.system, f->assignment)) ++wrong;
    } else {
      ++infeasible;
      const auto& cert = std::get<Infeasible>(res).certificate;
      if (feasible || !replay_certificate(planted.system, cert)) ++wrong;
    }
  }
  c.note(std::to_string(kSolverSystems) + " systems: " + std::to_string(found) +
         " found, " + std::to_string(infeasible) + " infeasible, " +
         std::to_string(wrong) + " wrong");
  c.expect(wrong == 0, "every answer replays");
  return c.outcome();
}

Outcome criterion9() {
  Checks c;
  for (const auto& name : {"boolean1.oml", "boolean2.oml", "boolean3.oml", "mo2.oml"}) {
    try {
      const auto t = oml_to_ea(fixtures::oml(name));
      const bool axioms = validate_axioms(t).passed();
      c.expect(axioms, std::string(name) + " passes the axioms");
      if (axioms) {
        const auto sharp = sharp_elements(LatticeEffectAlgebra::make(t));
        c.expect(sharp.size() == t.size(), std::string(name) + " all sharp");
      }
      c.note(std::string(name) + ": " + std::to_string(t.size()) + " elements");
    } catch (const Error& ex) {
      c.expect(false, std::string(name) + ": " + ex.what());
    }
  }
  try {
    oml_to_ea(fixtures::oml("o6.oml"));
    c.expect(false, "O6 rejected");
  } catch (const Error& ex) {
    c.expect(ex.kind() == ErrorKind::kNotOrthomodular, "O6 rejected as non-orthomodular");
    c.expect(ex.witness().size() == 2, "O6 rejection carries a witness pair");
    c.note(std::string("O6: ") + ex.what());
  }
  return c.outcome();
}

Outcome criterion10() {
  Checks c;
  const auto text = serialize_ea(example_algebra());
  std::string reports[2];
  for (auto& report : reports) {
    std::istringstream in(text);
    std::ostringstream out, err;
    const int code = cli::run({"analyze", "-", "--json", "-"}, in, out, err);
    c.expect(code == cli::kExitOk, "analyze exits 0: " + err.str());
    report = out.str();
  }
  c.note(std::to_string(reports[0].size()) + " bytes");
  c.expect(!reports[0].empty(), "report is non-empty");
  c.expect(reports[0] == reports[1], "byte-identical reports");
  return c.outcome();
}

const std::vector<std::function<Outcome()>> kCriteria = {
    criterion1, criterion2, criterion3, criterion4, criterion5,
    criterion6, criterion7, criterion8, criterion9, criterion10,
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> selected;
  if (argc > 1) {
    const auto n = std::strtoul(argv[1], nullptr, 10);
    if (argc > 2 || n < 1 || n > kCriteria.size()) {
      std::cerr << "usage: ealab_acceptance [1-" << kCriteria.size() << "]\n";
      return 2;
    }
    selected.push_back(n);
  } else {
    for (std::size_t n = 1; n <= kCriteria.size(); ++n) selected.push_back(n);
  }
  bool all = true;
  for (auto n : selected) {
    Outcome o;
    try {
      o = kCriteria[n - 1]();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << n << (o.pass ? " PASS: " : " FAIL: ") << o.detail
              << std::endl;
  }
  return all ? 0 : 1;
}
