#include "ealab/order.hpp"

#include <algorithm>

#include "ealab/axioms.hpp"
#include "ealab/error.hpp"

namespace ealab {

namespace {

std::vector<std::string> index_names(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
  return names;
}

}  // namespace

Poset::Poset(std::vector<Bitset> up, std::vector<std::string> names)
    : up_(std::move(up)), names_(std::move(names)) {
  const auto n = up_.size();
  if (names_.empty()) names_ = index_names(n);
  if (names_.size() != n) {
    throw Error(ErrorKind::kNotAPoset, "name count does not match size");
  }
  down_.assign(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) {
    if (up_[x].size() != n) {
      throw Error(ErrorKind::kNotAPoset, "relation rows have wrong width");
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (up_[x][y]) down_[y].set(x);
    }
  }
}

Poset Poset::from_relation(std::size_t size,
                           const std::vector<std::pair<Element, Element>>& leq,
                           std::vector<std::string> names) {
  std::vector<Bitset> up(size, Bitset(size));
  for (std::size_t x = 0; x < size; ++x) up[x].set(x);
  for (auto [x, y] : leq) {
    if (x >= size || y >= size) {
      throw Error(ErrorKind::kNotAPoset, "relation index out of range");
    }
    up[x].set(y);
  }
  // Warshall closure on rows.
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t x = 0; x < size; ++x) {
      if (up[x][k]) up[x] |= up[k];
    }
  }
  return from_rows(std::move(up), std::move(names));
}

Poset Poset::from_rows(std::vector<Bitset> up_sets,
                       std::vector<std::string> names) {
  const auto n = up_sets.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (up_sets[x].size() != n) {
      throw Error(ErrorKind::kNotAPoset, "relation rows have wrong width");
    }
    if (!up_sets[x][x]) {
      throw Error(ErrorKind::kNotAPoset, "relation is not reflexive");
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (!up_sets[x][y]) continue;
      if (x != y && up_sets[y][x]) {
        throw Error(ErrorKind::kNotAPoset,
                    "relation is not antisymmetric at (" + std::to_string(x) +
                        ", " + std::to_string(y) + ")");
      }
      if (!up_sets[y].is_subset_of(up_sets[x])) {
        throw Error(ErrorKind::kNotAPoset, "relation is not transitive");
      }
    }
  }
  return Poset(std::move(up_sets), std::move(names));
}

std::optional<Element> Poset::bottom() const {
  for (Element x = 0; x < size(); ++x) {
    if (up_[x].all()) return x;
  }
  return std::nullopt;
}

std::optional<Element> Poset::top() const {
  for (Element x = 0; x < size(); ++x) {
    if (down_[x].all()) return x;
  }
  return std::nullopt;
}

std::vector<std::pair<Element, Element>> Poset::covers() const {
  std::vector<std::pair<Element, Element>> out;
  const auto n = static_cast<Element>(size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!less(x, y)) continue;
      // Something strictly between x and y?
      Bitset between = up_[x] & down_[y];
      between.reset(x);
      between.reset(y);
      if (between.none()) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<Element> Poset::atoms() const {
  std::vector<Element> out;
  const auto b = bottom();
  if (!b) return out;
  for (auto [x, y] : covers()) {
    if (x == *b) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

OrderStructure::OrderStructure(Poset poset, std::vector<Element> complement,
                               std::vector<std::int32_t> ominus)
    : poset_(std::move(poset)),
      complement_(std::move(complement)),
      ominus_(std::move(ominus)) {}

std::optional<Element> OrderStructure::ominus(Element y, Element x) const {
  const auto v = ominus_[static_cast<std::size_t>(y) * size() + x];
  if (v < 0) return std::nullopt;
  return static_cast<Element>(v);
}

OrderStructure derive_order(const EffectAlgebraTable& t) {
  const auto report = validate_axioms(t);
  if (!report.passed()) {
    throw Error(ErrorKind::kNotAnEffectAlgebra,
                "table violates axiom " +
                    axiom_tag(report.violations.front().axiom));
  }
  const auto n = static_cast<Element>(t.size());
  std::vector<Bitset> up(n, Bitset(n));
  std::vector<std::int32_t> ominus(static_cast<std::size_t>(n) * n, -1);
  std::vector<Element> complement(n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element z = 0; z < n; ++z) {
      const auto y = t.sum(x, z);
      if (!y) continue;
      auto& cell = ominus[static_cast<std::size_t>(*y) * n + x];
      if (cell >= 0) {
        throw Error(ErrorKind::kInternalInconsistency,
                    "cancellation fails: " + t.name(x) + " + z = " +
                        t.name(*y) + " has two solutions");
      }
      cell = static_cast<std::int32_t>(z);
      up[x].set(*y);
      if (*y == t.one()) complement[x] = z;
    }
  }
  Poset poset;
  try {
    poset = Poset::from_rows(std::move(up), t.names());
  } catch (const Error& e) {
    throw Error(ErrorKind::kInternalInconsistency,
                std::string("derived order is not a partial order: ") +
                    e.what());
  }
  return OrderStructure(std::move(poset), std::move(complement),
                        std::move(ominus));
}

std::size_t ord_of(const EffectAlgebraTable& t, Element x) {
  if (x == kZero) {
    throw Error(ErrorKind::kZeroHasNoOrder, "ord(0) is infinite");
  }
  Element acc = x;
  std::size_t k = 1;
  while (auto next = t.sum(acc, x)) {
    acc = *next;
    if (++k > t.size()) {
      throw Error(ErrorKind::kNotAnEffectAlgebra,
                  "multiples of " + t.name(x) + " do not terminate");
    }
  }
  return k;
}

std::vector<Element> atoms(const OrderStructure& order) {
  return order.poset().atoms();
}

std::optional<Element> orthogonal_sum(const EffectAlgebraTable& t,
                                      const std::vector<Element>& xs) {
  Element acc = kZero;
  for (auto x : xs) {
    auto s = t.sum(acc, x);
    if (!s) return std::nullopt;
    acc = *s;
  }
  return acc;
}

}  // namespace ealab
