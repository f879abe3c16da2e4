#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ealab {

/// Index of an element inside one algebra. Element 0 is always the zero.
using Element = std::uint32_t;

inline constexpr Element kZero = 0;

/// A finite partial algebra (E; +, 0, 1) given by its dense sum table.
///
/// Cells hold either an element index or "undefined". Row and column 0 are
/// pinned to 0 + x = x. The table itself does not enforce the effect-algebra
/// axioms; see validate_axioms().
class EffectAlgebraTable {
 public:
  /// All cells undefined apart from the zero row/column. Throws
  /// Error(kInvalidTable) when size < 2 or one is zero or out of range.
  EffectAlgebraTable(std::size_t size, Element one,
                     std::vector<std::string> names = {});

  std::size_t size() const noexcept { return size_; }
  Element zero() const noexcept { return kZero; }
  Element one() const noexcept { return one_; }

  std::optional<Element> sum(Element x, Element y) const;
  bool defined(Element x, Element y) const {
    return cells_[index(x, y)] != kUndefinedCell;
  }

  /// Sets x + y = z and y + x = z.
  void set_sum(Element x, Element y, Element z);
  /// Sets a single (ordered) cell. Used by fixtures that need asymmetric
  /// tables; normal construction goes through set_sum().
  void set_cell(Element x, Element y, std::optional<Element> z);

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Element x) const { return names_.at(x); }
  void set_names(std::vector<std::string> names);

  /// Same size, unit and sum table; names are ignored.
  bool same_structure(const EffectAlgebraTable& other) const noexcept {
    return size_ == other.size_ && one_ == other.one_ &&
           cells_ == other.cells_;
  }

  friend bool operator==(const EffectAlgebraTable&,
                         const EffectAlgebraTable&) = default;

 private:
  static constexpr std::int32_t kUndefinedCell = -1;

  std::size_t index(Element x, Element y) const;

  std::size_t size_;
  Element one_;
  std::vector<std::int32_t> cells_;
  std::vector<std::string> names_;
};

/// Default element names: "0", "e1", ..., "1" (the unit keeps "1").
std::vector<std::string> default_names(std::size_t size, Element one);

/// Restriction of a table to a subset containing 0 and the unit. Sums that
/// leave the subset become undefined. Members are renumbered in ascending
/// order; members[i] is the original index of new element i.
struct SubTable {
  EffectAlgebraTable table;
  std::vector<Element> members;
};

SubTable restrict_table(const EffectAlgebraTable& t,
                        const std::vector<Element>& members, Element new_one);

}  // namespace ealab
