#include "ealab/lattice.hpp"

#include <algorithm>

#include "ealab/error.hpp"

namespace ealab {

namespace {

// Least element of `candidates` w.r.t. the poset, if one exists.
std::optional<Element> least_of(const Poset& p, const Bitset& candidates) {
  for (auto c = candidates.find_first(); c != Bitset::npos;
       c = candidates.find_next(c)) {
    if (candidates.is_subset_of(p.up_set(static_cast<Element>(c)))) {
      return static_cast<Element>(c);
    }
  }
  return std::nullopt;
}

std::optional<Element> greatest_of(const Poset& p, const Bitset& candidates) {
  for (auto c = candidates.find_first(); c != Bitset::npos;
       c = candidates.find_next(c)) {
    if (candidates.is_subset_of(p.down_set(static_cast<Element>(c)))) {
      return static_cast<Element>(c);
    }
  }
  return std::nullopt;
}

void require_lattice(const LatticeTables& lt) {
  if (!lt.is_lattice) {
    throw Error(ErrorKind::kNotALattice, "operation requires a lattice");
  }
}

}  // namespace

LatticeTables lattice_tables(const Poset& poset) {
  LatticeTables lt;
  const auto n = static_cast<Element>(poset.size());
  lt.size = n;
  std::vector<Element> meet(static_cast<std::size_t>(n) * n);
  std::vector<Element> join(static_cast<std::size_t>(n) * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      const auto upper = poset.up_set(x) & poset.up_set(y);
      const auto lower = poset.down_set(x) & poset.down_set(y);
      const auto j = least_of(poset, upper);
      const auto m = greatest_of(poset, lower);
      if (!j || !m) {
        lt.counterexample = std::make_pair(x, y);
        return lt;
      }
      join[x * n + y] = join[y * n + x] = *j;
      meet[x * n + y] = meet[y * n + x] = *m;
    }
  }
  lt.is_lattice = true;
  lt.is_complete = true;
  lt.meet_table = std::move(meet);
  lt.join_table = std::move(join);
  return lt;
}

LawCheck is_modular(const LatticeTables& lt) {
  require_lattice(lt);
  const auto n = static_cast<Element>(lt.size);
  for (Element x = 0; x < n; ++x) {
    for (Element z = 0; z < n; ++z) {
      if (lt.meet(x, z) != x) continue;  // need x <= z
      for (Element y = 0; y < n; ++y) {
        if (lt.join(x, lt.meet(y, z)) != lt.meet(lt.join(x, y), z)) {
          return {false, {x, y, z}};
        }
      }
    }
  }
  return {};
}

LawCheck is_distributive(const LatticeTables& lt) {
  require_lattice(lt);
  const auto n = static_cast<Element>(lt.size);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (lt.meet(x, lt.join(y, z)) !=
            lt.join(lt.meet(x, y), lt.meet(x, z))) {
          return {false, {x, y, z}};
        }
      }
    }
  }
  return {};
}

bool is_boolean_subalgebra(const LatticeTables& lt,
                           const std::vector<Element>& complement,
                           const std::vector<Element>& subset) {
  require_lattice(lt);
  std::vector<bool> in(lt.size, false);
  for (auto x : subset) {
    if (x >= lt.size) {
      throw Error(ErrorKind::kInvalidArgument, "subset index out of range");
    }
    in[x] = true;
  }
  if (subset.empty()) {
    throw Error(ErrorKind::kSubsetNotClosed, "empty subset");
  }
  for (auto x : subset) {
    if (!in[complement[x]]) {
      throw Error(ErrorKind::kSubsetNotClosed,
                  "subset not closed under complement");
    }
    for (auto y : subset) {
      if (!in[lt.meet(x, y)] || !in[lt.join(x, y)]) {
        throw Error(ErrorKind::kSubsetNotClosed,
                    "subset not closed under meet/join");
      }
    }
  }
  Element bottom = 0;
  Element top = 0;
  for (Element x = 0; x < lt.size; ++x) {
    bottom = lt.meet(bottom, x);
    top = lt.join(top, x);
  }
  for (auto x : subset) {
    if (lt.meet(x, complement[x]) != bottom ||
        lt.join(x, complement[x]) != top) {
      return false;
    }
    for (auto y : subset) {
      for (auto z : subset) {
        if (lt.meet(x, lt.join(y, z)) !=
            lt.join(lt.meet(x, y), lt.meet(x, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace ealab
