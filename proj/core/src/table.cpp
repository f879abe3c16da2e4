#include "ealab/table.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "ealab/error.hpp"

namespace ealab {

EffectAlgebraTable::EffectAlgebraTable(std::size_t size, Element one,
                                       std::vector<std::string> names)
    : size_(size), one_(one), cells_(size * size, kUndefinedCell) {
  if (size < 2) {
    throw Error(ErrorKind::kInvalidTable,
                "an effect algebra needs at least two elements");
  }
  if (one == kZero || one >= size) {
    throw Error(ErrorKind::kInvalidTable,
                "unit must be a non-zero element index");
  }
  for (Element x = 0; x < size; ++x) {
    cells_[index(kZero, x)] = static_cast<std::int32_t>(x);
    cells_[index(x, kZero)] = static_cast<std::int32_t>(x);
  }
  set_names(names.empty() ? default_names(size, one) : std::move(names));
}

std::size_t EffectAlgebraTable::index(Element x, Element y) const {
  if (x >= size_ || y >= size_) {
    throw Error(ErrorKind::kInvalidTable, "element index out of range");
  }
  return static_cast<std::size_t>(x) * size_ + y;
}

std::optional<Element> EffectAlgebraTable::sum(Element x, Element y) const {
  auto v = cells_[index(x, y)];
  if (v == kUndefinedCell) return std::nullopt;
  return static_cast<Element>(v);
}

void EffectAlgebraTable::set_sum(Element x, Element y, Element z) {
  set_cell(x, y, z);
  set_cell(y, x, z);
}

void EffectAlgebraTable::set_cell(Element x, Element y,
                                  std::optional<Element> z) {
  if (z && *z >= size_) {
    throw Error(ErrorKind::kInvalidTable, "sum value out of range");
  }
  const std::int32_t v = z ? static_cast<std::int32_t>(*z) : kUndefinedCell;
  if ((x == kZero || y == kZero)) {
    const Element other = x == kZero ? y : x;
    if (v != static_cast<std::int32_t>(other)) {
      throw Error(ErrorKind::kInvalidTable, "0 + x must equal x");
    }
  }
  cells_[index(x, y)] = v;
}

void EffectAlgebraTable::set_names(std::vector<std::string> names) {
  if (names.size() != size_) {
    throw Error(ErrorKind::kInvalidTable, "name count does not match size");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || !seen.insert(n).second) {
      throw Error(ErrorKind::kInvalidTable, "element names must be unique "
                                            "and non-empty: '" + n + "'");
    }
    // Names are written unquoted into .ea files.
    if (std::any_of(n.begin(), n.end(), [](unsigned char c) {
          return std::isspace(c) || c == '#';
        })) {
      throw Error(ErrorKind::kInvalidTable,
                  "element names cannot contain spaces or '#': '" + n + "'");
    }
  }
  names_ = std::move(names);
}

std::vector<std::string> default_names(std::size_t size, Element one) {
  std::vector<std::string> names(size);
  std::size_t k = 1;
  for (Element x = 0; x < size; ++x) {
    if (x == kZero) {
      names[x] = "0";
    } else if (x == one) {
      names[x] = "1";
    } else {
      names[x] = "e" + std::to_string(k++);
    }
  }
  return names;
}

SubTable restrict_table(const EffectAlgebraTable& t,
                        const std::vector<Element>& members, Element new_one) {
  std::vector<Element> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty() || sorted.front() != kZero) {
    throw Error(ErrorKind::kInvalidArgument, "subset must contain zero");
  }
  std::vector<std::int64_t> local(t.size(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) local[sorted[i]] = i;
  if (new_one >= t.size() || local[new_one] < 0) {
    throw Error(ErrorKind::kInvalidArgument, "subset must contain the unit");
  }
  std::vector<std::string> names;
  names.reserve(sorted.size());
  for (auto m : sorted) names.push_back(t.name(m));
  EffectAlgebraTable out(sorted.size(), static_cast<Element>(local[new_one]),
                         std::move(names));
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    for (std::size_t j = 1; j < sorted.size(); ++j) {
      auto s = t.sum(sorted[i], sorted[j]);
      if (s && local[*s] >= 0) {
        out.set_cell(static_cast<Element>(i), static_cast<Element>(j),
                     static_cast<Element>(local[*s]));
      }
    }
  }
  return {std::move(out), std::move(sorted)};
}

}  // namespace ealab
