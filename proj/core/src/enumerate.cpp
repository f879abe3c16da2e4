#include "ealab/enumerate.hpp"

#include <map>
#include <utility>

#include "ealab/axioms.hpp"
#include "ealab/error.hpp"
#include "ealab/isomorphism.hpp"
#include "ealab/lattice.hpp"
#include "ealab/order.hpp"
#include "ealab/states.hpp"
#include "ealab/structure.hpp"

namespace ealab {

namespace {

constexpr int kUnknown = -2;
constexpr int kUndefined = -1;

// Backtracking over the cells (i, j), 1 <= i <= j <= n-2, row by row. The
// unit row is fixed (1 + x undefined for x != 0), the zero row is the
// identity, and a defined value k satisfies k > max(i, j) because sums lie
// strictly above non-zero summands. Rows keep defined values distinct
// (cancellation) and each element gets exactly one complement. Every
// associativity triple is checked as soon as its last cell is assigned.
class Generator {
 public:
  explicit Generator(Element n)
      : n_(n), top_(n - 1), cell_(n * n, kUnknown), used_(n, 0),
        complements_(n, 0) {
    for (Element x = 0; x < n_; ++x) {
      put(0, x, static_cast<int>(x));
      if (x != 0) put(x, top_, kUndefined);
    }
    complements_[0] = 1;
    complements_[top_] = 1;
    for (Element i = 1; i + 1 < n_; ++i) {
      for (Element j = i; j + 1 < n_; ++j) order_.push_back({i, j});
    }
  }

  template <class Emit>
  void run(Emit&& emit) {
    dfs(0, emit);
  }

 private:
  int at(Element x, Element y) const { return cell_[x * n_ + y]; }

  void put(Element x, Element y, int v) {
    cell_[x * n_ + y] = v;
    cell_[y * n_ + x] = v;
  }

  // -1 undecidable yet, 0 violated, 1 fine.
  int triple(Element x, Element y, Element z) const {
    const int xy = at(x, y), yz = at(y, z);
    if (xy == kUnknown || yz == kUnknown) return -1;
    int lhs = kUndefined, rhs = kUndefined;
    if (xy != kUndefined) {
      lhs = at(static_cast<Element>(xy), z);
      if (lhs == kUnknown) return -1;
    }
    if (yz != kUndefined) {
      rhs = at(x, static_cast<Element>(yz));
      if (rhs == kUnknown) return -1;
    }
    return lhs == rhs ? 1 : 0;
  }

  bool associative_around(Element p, Element q) const {
    const auto bad = [&](Element x, Element y, Element z) {
      return triple(x, y, z) == 0;
    };
    for (Element z = 0; z < n_; ++z) {
      if (bad(p, q, z) || bad(q, p, z) || bad(z, p, q) || bad(z, q, p)) {
        return false;
      }
    }
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        const int s = at(x, y);
        if (s == static_cast<int>(p) && (bad(x, y, q) || bad(q, x, y))) {
          return false;
        }
        if (s == static_cast<int>(q) && (bad(x, y, p) || bad(p, x, y))) {
          return false;
        }
      }
    }
    return true;
  }

  template <class Emit>
  void dfs(std::size_t idx, Emit& emit) {
    if (idx == order_.size()) {
      emit(build());
      return;
    }
    const auto [i, j] = order_[idx];
    const bool row_done = j + 2 == n_;
    const auto try_value = [&](int v) {
      const std::uint32_t bit = v >= 0 ? (1u << v) : 0u;
      if (v >= 0 && ((used_[i] | used_[j]) & bit)) return;
      if (v == static_cast<int>(top_) &&
          (complements_[i] != 0 || complements_[j] != 0)) {
        return;
      }
      put(i, j, v);
      used_[i] |= bit;
      used_[j] |= bit;
      if (v == static_cast<int>(top_)) {
        ++complements_[i];
        if (i != j) ++complements_[j];
      }
      if ((!row_done || complements_[i] == 1) && associative_around(i, j)) {
        dfs(idx + 1, emit);
      }
      if (v == static_cast<int>(top_)) {
        --complements_[i];
        if (i != j) --complements_[j];
      }
      used_[i] &= ~bit;
      used_[j] &= ~bit;
      put(i, j, kUnknown);
    };
    try_value(kUndefined);
    for (Element v = j + 1; v <= top_; ++v) try_value(static_cast<int>(v));
  }

  EffectAlgebraTable build() const {
    EffectAlgebraTable t(n_, top_);
    for (Element x = 1; x < n_; ++x) {
      for (Element y = x; y < n_; ++y) {
        const int v = at(x, y);
        if (v >= 0) t.set_sum(x, y, static_cast<Element>(v));
      }
    }
    return t;
  }

  Element n_;
  Element top_;
  std::vector<int> cell_;
  std::vector<std::uint32_t> used_;
  std::vector<int> complements_;
  std::vector<std::pair<Element, Element>> order_;
};

bool all_pairs_compatible(const LatticeEffectAlgebra& e) {
  const auto n = static_cast<Element>(e.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (!compatible(e, x, y)) return false;
    }
  }
  return true;
}

}  // namespace

std::string to_string(Filter f) {
  switch (f) {
    case Filter::kAll: return "all";
    case Filter::kLattice: return "lattice";
    case Filter::kMv: return "mv";
    case Filter::kModular: return "modular";
  }
  return "?";
}

Filter parse_filter(const std::string& s) {
  if (s == "all") return Filter::kAll;
  if (s == "lattice") return Filter::kLattice;
  if (s == "mv") return Filter::kMv;
  if (s == "modular") return Filter::kModular;
  throw Error(ErrorKind::kInvalidArgument, "unknown filter '" + s + "'");
}

bool passes_filter(const EffectAlgebraTable& t, Filter f) {
  if (f == Filter::kAll) return true;
  const auto lt = lattice_tables(derive_order(t).poset());
  if (!lt.is_lattice) return false;
  switch (f) {
    case Filter::kLattice: return true;
    case Filter::kModular: return is_modular(lt).holds;
    case Filter::kMv:
      return all_pairs_compatible(LatticeEffectAlgebra::make(t));
    case Filter::kAll: break;
  }
  return true;
}

std::vector<EffectAlgebraTable> enumerate_all(std::size_t n, Filter filter,
                                              std::size_t bound) {
  if (n < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "an effect algebra has at least 2 elements");
  }
  if (n > bound) {
    throw Error(ErrorKind::kBoundExceeded,
                "size " + std::to_string(n) + " exceeds the bound " +
                    std::to_string(bound));
  }
  // The cell domain uses a 32-bit mask per row.
  if (n > 32) {
    throw Error(ErrorKind::kBoundExceeded, "sizes above 32 are unsupported");
  }
  std::map<std::vector<std::uint32_t>, EffectAlgebraTable> classes;
  Generator gen(static_cast<Element>(n));
  gen.run([&](EffectAlgebraTable t) {
    if (!validate_axioms(t).passed()) {
      throw Error(ErrorKind::kInternalInconsistency,
                  "generator produced a table that fails the axioms");
    }
    auto c = canonical_form(t);
    auto key = sum_encoding(c);
    classes.try_emplace(std::move(key), std::move(c));
  });
  std::vector<EffectAlgebraTable> out;
  for (auto& [key, t] : classes) {
    if (passes_filter(t, filter)) out.push_back(std::move(t));
  }
  return out;
}

CensusRow census(std::size_t n, const std::vector<EffectAlgebraTable>& all) {
  CensusRow row;
  row.size = n;
  for (const auto& t : all) {
    ++row.count_total;
    const auto lt = lattice_tables(derive_order(t).poset());
    if (find_state(t, StateMode::kFaithful).found()) {
      ++row.count_with_faithful_state;
    }
    if (!lt.is_lattice) continue;
    ++row.count_lattice;
    if (is_modular(lt).holds) ++row.count_modular;
    const auto e = LatticeEffectAlgebra::make(t);
    if (all_pairs_compatible(e)) ++row.count_mv;
    if (centers(e).is_irreducible) ++row.count_irreducible;
  }
  return row;
}

}  // namespace ealab
