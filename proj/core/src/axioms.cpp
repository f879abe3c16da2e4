#include "ealab/axioms.hpp"

namespace ealab {

std::string axiom_tag(Axiom a) {
  switch (a) {
    case Axiom::kCommutativity: return "Ei";
    case Axiom::kAssociativity: return "Eii";
    case Axiom::kComplement: return "Eiii";
    case Axiom::kUnitOrthogonal: return "Eiv";
  }
  return "?";
}

namespace {

std::optional<std::vector<Element>> commutativity_witness(
    const EffectAlgebraTable& t) {
  const auto n = static_cast<Element>(t.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (t.sum(x, y) != t.sum(y, x)) return std::vector<Element>{x, y};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> associativity_witness(
    const EffectAlgebraTable& t) {
  const auto n = static_cast<Element>(t.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const auto xy = t.sum(x, y);
      for (Element z = 0; z < n; ++z) {
        const auto yz = t.sum(y, z);
        const auto lhs = xy ? t.sum(*xy, z) : std::nullopt;
        const auto rhs = yz ? t.sum(x, *yz) : std::nullopt;
        if (lhs != rhs) return std::vector<Element>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> complement_witness(
    const EffectAlgebraTable& t) {
  const auto n = static_cast<Element>(t.size());
  for (Element x = 0; x < n; ++x) {
    std::vector<Element> found;
    for (Element y = 0; y < n && found.size() < 2; ++y) {
      if (t.sum(x, y) == t.one()) found.push_back(y);
    }
    if (found.empty()) return std::vector<Element>{x};
    if (found.size() > 1) return std::vector<Element>{x, found[0], found[1]};
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> unit_witness(const EffectAlgebraTable& t) {
  const auto n = static_cast<Element>(t.size());
  for (Element x = 1; x < n; ++x) {
    if (t.defined(t.one(), x) || t.defined(x, t.one())) {
      return std::vector<Element>{x};
    }
  }
  return std::nullopt;
}

}  // namespace

AxiomReport validate_axioms(const EffectAlgebraTable& t) {
  AxiomReport report;
  if (auto w = commutativity_witness(t)) {
    report.violations.push_back({Axiom::kCommutativity, std::move(*w)});
  }
  if (auto w = associativity_witness(t)) {
    report.violations.push_back({Axiom::kAssociativity, std::move(*w)});
  }
  if (auto w = complement_witness(t)) {
    report.violations.push_back({Axiom::kComplement, std::move(*w)});
  }
  if (auto w = unit_witness(t)) {
    report.violations.push_back({Axiom::kUnitOrthogonal, std::move(*w)});
  }
  return report;
}

}  // namespace ealab
