#include "ealab/report.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "ealab/axioms.hpp"
#include "ealab/error.hpp"
#include "ealab/lattice.hpp"
#include "ealab/order.hpp"
#include "ealab/states.hpp"
#include "ealab/structure.hpp"

namespace ealab {

namespace {

using Json = nlohmann::ordered_json;

constexpr StateMode kAllModes[] = {StateMode::kAny, StateMode::kFaithful,
                                   StateMode::kSubadditive,
                                   StateMode::kFaithfulSubadditive};

Json names_of(const EffectAlgebraTable& t, const std::vector<Element>& xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(t.name(x));
  return out;
}

Json certificate_json(const LinearSystem& sys, const Certificate& c) {
  Json mult = Json::object();
  for (std::size_t i = 0; i < c.multipliers.size(); ++i) {
    if (sgn(c.multipliers[i]) != 0) {
      mult[sys.constraints[i].label] = to_string(c.multipliers[i]);
    }
  }
  Json out;
  out["kind"] = c.kind == Certificate::Kind::kInfeasible ? "infeasible"
                                                          : "objective_bound";
  if (c.kind == Certificate::Kind::kObjectiveBound) {
    out["bound"] = to_string(c.bound);
  }
  out["multipliers"] = std::move(mult);
  return out;
}

Json state_json(const EffectAlgebraTable& t, StateMode mode) {
  const auto q = find_state(t, mode);
  Json out;
  out["found"] = q.found();
  if (const auto* f = std::get_if<StateFound>(&q.result)) {
    Json values = Json::object();
    for (Element x = 0; x < t.size(); ++x) {
      values[t.name(x)] = to_string(f->state.values[x]);
    }
    out["values"] = std::move(values);
    if (f->t_star) out["t_star"] = to_string(*f->t_star);
  } else {
    const auto& cert = std::get<StateInfeasible>(q.result).certificate;
    out["certificate"] = certificate_json(state_system(t, mode), cert);
  }
  return out;
}

Json predicates_json(const EffectAlgebraTable& t) {
  Json doc;
  const auto axioms = validate_axioms(t);
  Json ax;
  ax["passed"] = axioms.passed();
  ax["violations"] = Json::array();
  for (const auto& v : axioms.violations) {
    ax["violations"].push_back(
        Json{{"axiom", axiom_tag(v.axiom)}, {"witness", names_of(t, v.witness)}});
  }
  doc["axioms"] = std::move(ax);
  if (!axioms.passed()) return doc;

  const auto order = derive_order(t);
  const auto n = static_cast<Element>(t.size());
  Json ord;
  Json covers = Json::array();
  for (auto [x, y] : order.poset().covers()) {
    covers.push_back(Json::array({t.name(x), t.name(y)}));
  }
  ord["covers"] = std::move(covers);
  Json comp = Json::object();
  Json ords = Json::object();
  for (Element x = 0; x < n; ++x) {
    comp[t.name(x)] = t.name(order.complement(x));
    if (x != kZero) ords[t.name(x)] = ord_of(t, x);
  }
  ord["complement"] = std::move(comp);
  ord["ord"] = std::move(ords);
  ord["atoms"] = names_of(t, atoms(order));
  doc["order"] = std::move(ord);

  const auto lt = lattice_tables(order.poset());
  Json lat;
  lat["is_lattice"] = lt.is_lattice;
  if (!lt.is_lattice) {
    lat["counterexample"] = Json::array(
        {t.name(lt.counterexample->first), t.name(lt.counterexample->second)});
    doc["lattice"] = std::move(lat);
    return doc;
  }
  lat["complete"] = lt.is_complete;
  const auto law = [&](const LawCheck& c) {
    return Json{{"holds", c.holds}, {"witness", names_of(t, c.witness)}};
  };
  lat["modular"] = law(is_modular(lt));
  lat["distributive"] = law(is_distributive(lt));
  doc["lattice"] = std::move(lat);

  const auto e = LatticeEffectAlgebra::make(t);
  const auto sr = centers(e);
  Json st;
  st["sharp"] = names_of(t, sr.sharp);
  Json blocks = Json::array();
  for (const auto& b : sr.blocks) blocks.push_back(names_of(t, b));
  st["blocks"] = std::move(blocks);
  st["compat_center"] = names_of(t, sr.compat_center);
  st["center"] = names_of(t, sr.center);
  st["central_atoms"] = names_of(t, sr.central_atoms);
  st["is_mv"] = sr.is_mv;
  st["is_irreducible"] = sr.is_irreducible;
  st["sharply_dominating"] = sr.sharply_dominating;
  const bool compat_in_sharp =
      std::includes(sr.sharp.begin(), sr.sharp.end(),
                    sr.compat_center.begin(), sr.compat_center.end());
  st["compat_center_in_sharp"] = compat_in_sharp;
  st["compat_center_boolean"] =
      is_boolean_subalgebra(lt, order.complements(), sr.compat_center);
  st["center_boolean"] =
      is_boolean_subalgebra(lt, order.complements(), sr.center);
  doc["structure"] = std::move(st);

  const auto cac = check_central_atom_conditions(e);
  doc["central_atom_conditions"] = {
      {"center_atomic_with_unit_join", cac.center_atomic_with_unit_join},
      {"atoms_below_central_atoms", cac.atoms_below_central_atoms},
      {"subdirect_embedding", cac.subdirect_embedding},
      {"agree", cac.agree()}};

  const auto dec = decompose(e);
  Json factors = Json::array();
  for (std::size_t i = 0; i < dec.factors.size(); ++i) {
    factors.push_back({{"central_atom", t.name(dec.central_atoms[i])},
                       {"elements", names_of(t, dec.factors[i].members)},
                       {"irreducible", static_cast<bool>(
                                           dec.factor_irreducible[i])}});
  }
  doc["decomposition"] = {{"factors", std::move(factors)},
                          {"product_size", dec.product_size()},
                          {"iso_bijective", dec.iso_bijective},
                          {"iso_preserves_sum", dec.iso_preserves_sum}};

  // Properties every finite algebra has; recorded, not computed.
  doc["finite_flags"] = {{"archimedean", true},
                         {"complete_lattice", lt.is_complete},
                         {"sharp_elements_complete", true},
                         {"separable", true},
                         {"states_o_continuous", true},
                         {"sharp_joins_agree", sr.sharp_joins_agree}};
  return doc;
}

Json full_report(const EffectAlgebraTable& t) {
  Json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["size"] = t.size();
  doc["names"] = t.names();
  doc["one"] = t.name(t.one());
  const auto predicates = predicates_json(t);
  for (const auto& [key, value] : predicates.items()) doc[key] = value;
  if (!doc["axioms"]["passed"].get<bool>()) return doc;
  const bool lattice = doc["lattice"]["is_lattice"].get<bool>();
  Json states;
  for (auto mode : kAllModes) {
    if (is_subadditive(mode) && !lattice) continue;
    states[to_string(mode)] = state_json(t, mode);
  }
  doc["states"] = std::move(states);
  return doc;
}

void check_state_entry(const EffectAlgebraTable& t, StateMode mode,
                       const Json& entry, std::vector<std::string>& problems) {
  const auto where = "states." + to_string(mode) + ": ";
  if (!entry.at("found").get<bool>()) {
    const auto sys = state_system(t, mode);
    const auto& cj = entry.at("certificate");
    Certificate cert;
    const auto kind = cj.at("kind").get<std::string>();
    cert.kind = kind == "infeasible" ? Certificate::Kind::kInfeasible
                                     : Certificate::Kind::kObjectiveBound;
    if (cert.kind == Certificate::Kind::kObjectiveBound) {
      cert.bound = parse_rational(cj.at("bound").get<std::string>());
      if (sgn(cert.bound) > 0) {
        problems.push_back(where + "objective bound is positive");
      }
    }
    std::map<std::string, std::size_t> row;
    for (std::size_t i = 0; i < sys.constraints.size(); ++i) {
      row.emplace(sys.constraints[i].label, i);
    }
    cert.multipliers.assign(sys.constraints.size(), Rational(0));
    for (const auto& [label, value] : cj.at("multipliers").items()) {
      auto it = row.find(label);
      if (it == row.end()) {
        problems.push_back(where + "certificate names unknown row " + label);
        return;
      }
      cert.multipliers[it->second] =
          parse_rational(value.get<std::string>());
    }
    if (!replay_certificate(sys, cert)) {
      problems.push_back(where + "certificate does not replay");
    }
    return;
  }
  StateVector w;
  for (Element x = 0; x < t.size(); ++x) {
    w.values.push_back(
        parse_rational(entry.at("values").at(t.name(x)).get<std::string>()));
  }
  const auto check = verify_state(t, w, mode);
  if (!check.ok) problems.push_back(where + check.reason);
  if (is_faithful(mode)) {
    const auto ts = parse_rational(entry.at("t_star").get<std::string>());
    const auto order = derive_order(t);
    for (auto a : atoms(order)) {
      if (w.values[a] < ts) {
        problems.push_back(where + "t_star exceeds w(" + t.name(a) + ")");
      }
    }
    if (sgn(ts) <= 0) problems.push_back(where + "t_star is not positive");
  }
}

}  // namespace

std::string analysis_report(const EffectAlgebraTable& t) {
  return full_report(t).dump(2) + "\n";
}

std::vector<std::string> verify_report(const EffectAlgebraTable& t,
                                       std::string_view report_json) {
  std::vector<std::string> problems;
  Json doc;
  try {
    doc = Json::parse(report_json);
  } catch (const nlohmann::json::exception& ex) {
    return {std::string("report is not valid JSON: ") + ex.what()};
  }
  try {
    if (doc.at("schema_version") != kReportSchemaVersion) {
      problems.push_back("unsupported schema_version");
      return problems;
    }
    if (doc.at("size") != t.size() || doc.at("names") != Json(t.names()) ||
        doc.at("one") != t.name(t.one())) {
      problems.push_back("report describes a different algebra");
      return problems;
    }
    // Predicates: recomputed from scratch and compared section by section.
    const auto predicates = predicates_json(t);
    for (const auto& [key, value] : predicates.items()) {
      if (!doc.contains(key)) {
        problems.push_back("missing section " + key);
      } else if (doc[key] != value) {
        problems.push_back("section " + key + " does not match recomputation");
      }
    }
    std::set<std::string> expected_modes;
    if (predicates["axioms"]["passed"].get<bool>()) {
      const bool lattice = predicates["lattice"]["is_lattice"].get<bool>();
      for (auto mode : kAllModes) {
        if (!is_subadditive(mode) || lattice) {
          expected_modes.insert(to_string(mode));
        }
      }
    }
    std::set<std::string> modes;
    if (doc.contains("states")) {
      for (auto& [key, entry] : doc["states"].items()) {
        modes.insert(key);
        check_state_entry(t, parse_state_mode(key), entry, problems);
      }
    }
    if (modes != expected_modes) {
      problems.push_back("states section lists the wrong modes");
    }
  } catch (const nlohmann::json::exception& ex) {
    problems.push_back(std::string("malformed report: ") + ex.what());
  } catch (const Error& ex) {
    problems.push_back(ex.what());
  }
  return problems;
}

}  // namespace ealab
