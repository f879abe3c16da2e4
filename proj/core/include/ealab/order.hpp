#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ealab/table.hpp"

namespace ealab {

using Bitset = boost::dynamic_bitset<>;

/// A finite partial order stored as one bitset row per element:
/// row(x)[y] <=> x <= y.
class Poset {
 public:
  Poset() = default;

  /// Builds from an arbitrary relation by reflexive-transitive closure.
  /// Throws Error(kNotAPoset) if the closure is not antisymmetric.
  static Poset from_relation(std::size_t size,
                             const std::vector<std::pair<Element, Element>>& leq,
                             std::vector<std::string> names = {});

  /// Takes rows as given; throws Error(kNotAPoset) unless they already form
  /// a partial order.
  static Poset from_rows(std::vector<Bitset> up_sets,
                         std::vector<std::string> names = {});

  std::size_t size() const noexcept { return up_.size(); }
  bool leq(Element x, Element y) const { return up_[x][y]; }
  bool less(Element x, Element y) const { return x != y && up_[x][y]; }

  const Bitset& up_set(Element x) const { return up_[x]; }
  const Bitset& down_set(Element x) const { return down_[x]; }

  std::optional<Element> bottom() const;
  std::optional<Element> top() const;

  /// Pairs (x, y) with x < y and nothing strictly between, sorted.
  std::vector<std::pair<Element, Element>> covers() const;

  /// Minimal elements strictly above the bottom (requires a bottom).
  std::vector<Element> atoms() const;

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Element x) const { return names_.at(x); }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.up_ == b.up_;
  }

 private:
  Poset(std::vector<Bitset> up, std::vector<std::string> names);

  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<std::string> names_;
};

/// Order, orthosupplement and difference derived from an effect-algebra
/// table: x <= y and y - x = z iff x + z = y.
class OrderStructure {
 public:
  OrderStructure(Poset poset, std::vector<Element> complement,
                 std::vector<std::int32_t> ominus);

  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  bool leq(Element x, Element y) const { return poset_.leq(x, y); }
  Element complement(Element x) const { return complement_[x]; }
  const std::vector<Element>& complements() const noexcept {
    return complement_;
  }
  /// y - x, defined iff x <= y.
  std::optional<Element> ominus(Element y, Element x) const;

 private:
  Poset poset_;
  std::vector<Element> complement_;
  std::vector<std::int32_t> ominus_;
};

/// Throws Error(kNotAnEffectAlgebra) unless validate_axioms passes, and
/// Error(kInternalInconsistency) if cancellation or the partial-order laws
/// fail on a table that passed.
OrderStructure derive_order(const EffectAlgebraTable& t);

/// ord(x): largest k with x + x + ... + x (k times) defined. Finite tables
/// are Archimedean, so this terminates within size() steps.
std::size_t ord_of(const EffectAlgebraTable& t, Element x);

std::vector<Element> atoms(const OrderStructure& order);

/// Left fold of + over xs; the empty sum is 0.
std::optional<Element> orthogonal_sum(const EffectAlgebraTable& t,
                                      const std::vector<Element>& xs);

}  // namespace ealab
