#include "ealab/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "ealab/error.hpp"
#include "ealab/order.hpp"

namespace ealab {

namespace {

using Key = std::array<std::uint32_t, 6>;

std::vector<Key> element_keys(const EffectAlgebraTable& t,
                              const OrderStructure& order) {
  const auto n = static_cast<Element>(t.size());
  const auto& p = order.poset();
  // Height: longest chain from 0; elements sorted by down-set size give a
  // linear extension to sweep along.
  std::vector<Element> by_down(n);
  std::iota(by_down.begin(), by_down.end(), 0);
  std::sort(by_down.begin(), by_down.end(), [&](Element a, Element b) {
    return p.down_set(a).count() < p.down_set(b).count();
  });
  std::vector<std::uint32_t> height(n, 0);
  for (auto y : by_down) {
    for (Element x = 0; x < n; ++x) {
      if (p.less(x, y)) height[y] = std::max(height[y], height[x] + 1);
    }
  }
  std::vector<Key> keys(n);
  std::vector<std::uint32_t> decompositions(n, 0);
  for (Element x = 1; x < n; ++x) {
    for (Element y = 1; y < n; ++y) {
      if (auto z = t.sum(x, y)) ++decompositions[*z];
    }
  }
  for (Element x = 0; x < n; ++x) {
    std::uint32_t degree = 0;
    for (Element y = 0; y < n; ++y) degree += t.defined(x, y) ? 1 : 0;
    keys[x] = {height[x],
               x == kZero ? 0u : static_cast<std::uint32_t>(ord_of(t, x)),
               static_cast<std::uint32_t>(p.down_set(x).count()),
               static_cast<std::uint32_t>(p.up_set(x).count()),
               degree,
               decompositions[x]};
  }
  return keys;
}

class CanonicalSearch {
 public:
  CanonicalSearch(const EffectAlgebraTable& t, const std::vector<Key>& keys)
      : n_(static_cast<Element>(t.size())) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Element a, Element b) { return keys[a] < keys[b]; });
    slot_key_.resize(n_);
    for (Element k = 0; k < n_; ++k) slot_key_[k] = keys[order_[k]];
    keys_ = keys;
    label_.assign(n_, kUnset);
    label_[kZero] = 0;
    // Pairs of non-zero summands for each element.
    parts_.resize(n_);
    for (Element x = 1; x < n_; ++x) {
      for (Element y = x; y < n_; ++y) {
        if (auto z = t.sum(x, y)) parts_[*z].push_back({x, y});
      }
    }
    cur_offsets_.assign(n_ + 1, 0);
  }

  std::vector<Element> run() {
    cur_.clear();
    cur_.push_back(0);  // element 0 has no decompositions
    cur_offsets_[1] = cur_.size();
    dfs(1, false);
    return best_label_;
  }

 private:
  static constexpr Element kUnset = static_cast<Element>(-1);

  void append_block(Element z) {
    std::vector<std::pair<Element, Element>> pairs;
    for (auto [x, y] : parts_[z]) {
      auto a = label_[x], b = label_[y];
      if (a > b) std::swap(a, b);
      pairs.push_back({a, b});
    }
    std::sort(pairs.begin(), pairs.end());
    cur_.push_back(static_cast<std::uint32_t>(pairs.size()));
    for (auto [a, b] : pairs) {
      cur_.push_back(a);
      cur_.push_back(b);
    }
  }

  // -1: current prefix smaller than best's, 0: equal, 1: larger.
  int compare_prefix(Element level) const {
    const auto cur_end = cur_offsets_[level + 1];
    const auto best_end = best_offsets_[level + 1];
    const auto prev = cur_offsets_[level];  // equal to best's by invariant
    for (std::size_t i = prev, j = best_offsets_[level];
         i < cur_end || j < best_end; ++i, ++j) {
      if (i >= cur_end) return -1;
      if (j >= best_end) return 1;
      if (cur_[i] != best_[j]) return cur_[i] < best_[j] ? -1 : 1;
    }
    return 0;
  }

  void dfs(Element pos, bool already_better) {
    if (pos == n_) {
      if (best_.empty() || already_better) {
        best_ = cur_;
        best_offsets_ = cur_offsets_;
        best_label_ = label_;
        ++best_version_;
      }
      return;
    }
    for (Element x = 0; x < n_; ++x) {
      if (label_[x] != kUnset || keys_[x] != slot_key_[pos]) continue;
      label_[x] = pos;
      const auto mark = cur_.size();
      append_block(x);
      cur_offsets_[pos + 1] = cur_.size();
      bool better = already_better;
      bool prune = false;
      if (!best_.empty() && !already_better) {
        const int c = compare_prefix(pos);
        if (c > 0) prune = true;
        if (c < 0) better = true;
      }
      const auto version = best_version_;
      if (!prune) dfs(pos + 1, better);
      cur_.resize(mark);
      label_[x] = kUnset;
      // A new best shares this prefix, so later siblings compare against it.
      if (best_version_ != version) already_better = false;
    }
  }

  Element n_;
  std::vector<Element> order_;
  std::vector<Key> keys_;
  std::vector<Key> slot_key_;
  std::vector<Element> label_;
  std::vector<std::vector<std::pair<Element, Element>>> parts_;
  std::vector<std::uint32_t> cur_;
  std::vector<std::size_t> cur_offsets_;
  std::vector<std::uint32_t> best_;
  std::vector<std::size_t> best_offsets_;
  std::vector<Element> best_label_;
  std::size_t best_version_ = 0;
};

EffectAlgebraTable relabel(const EffectAlgebraTable& t,
                           const std::vector<Element>& label) {
  const auto n = static_cast<Element>(t.size());
  EffectAlgebraTable out(n, label[t.one()], default_names(n, label[t.one()]));
  for (Element x = 1; x < n; ++x) {
    for (Element y = 1; y < n; ++y) {
      if (auto z = t.sum(x, y)) out.set_cell(label[x], label[y], label[*z]);
    }
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const EffectAlgebraTable& a, const EffectAlgebraTable& b,
            std::vector<Key> ka, std::vector<Key> kb)
      : a_(a), b_(b), ka_(std::move(ka)), kb_(std::move(kb)),
        n_(static_cast<Element>(a.size())) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Element x, Element y) { return ka_[x] < ka_[y]; });
    map_.assign(n_, kUnset);
    inv_.assign(n_, kUnset);
  }

  std::optional<Morphism> run() {
    if (dfs(0)) return Morphism{map_};
    return std::nullopt;
  }

 private:
  static constexpr Element kUnset = static_cast<Element>(-1);

  bool consistent(Element x) const {
    const auto fx = map_[x];
    for (Element y = 0; y < n_; ++y) {
      if (map_[y] == kUnset) continue;
      const auto fy = map_[y];
      const auto s = a_.sum(x, y);
      const auto fs = b_.sum(fx, fy);
      if (s.has_value() != fs.has_value()) return false;
      if (!s) continue;
      if (map_[*s] != kUnset) {
        if (map_[*s] != *fs) return false;
      } else if (inv_[*fs] != kUnset || ka_[*s] != kb_[*fs]) {
        return false;
      }
    }
    return true;
  }

  bool dfs(std::size_t depth) {
    if (depth == n_) return verify_isomorphism(a_, b_, Morphism{map_});
    const auto x = order_[depth];
    for (Element c = 0; c < n_; ++c) {
      if (inv_[c] != kUnset || kb_[c] != ka_[x]) continue;
      map_[x] = c;
      inv_[c] = x;
      if (consistent(x) && dfs(depth + 1)) return true;
      map_[x] = kUnset;
      inv_[c] = kUnset;
    }
    return false;
  }

  const EffectAlgebraTable& a_;
  const EffectAlgebraTable& b_;
  std::vector<Key> ka_, kb_;
  Element n_;
  std::vector<Element> order_;
  std::vector<Element> map_, inv_;
};

}  // namespace

bool verify_isomorphism(const EffectAlgebraTable& from,
                        const EffectAlgebraTable& to, const Morphism& m) {
  const auto n = static_cast<Element>(from.size());
  if (to.size() != n || m.mapping.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto v : m.mapping) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  if (m.mapping[from.one()] != to.one()) return false;
  const auto of = derive_order(from);
  const auto ot = derive_order(to);
  const auto& f = m.mapping;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const bool lhs = of.leq(a, of.complement(b));
      const bool rhs = ot.leq(f[a], ot.complement(f[b]));
      if (lhs != rhs) return false;
      if (lhs) {
        const auto s = from.sum(a, b);
        const auto fs = to.sum(f[a], f[b]);
        if (!s || !fs || f[*s] != *fs) return false;
      }
    }
  }
  return true;
}

std::optional<Morphism> are_isomorphic(const EffectAlgebraTable& a,
                                       const EffectAlgebraTable& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto ka = element_keys(a, derive_order(a));
  auto kb = element_keys(b, derive_order(b));
  auto sa = ka, sb = kb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  return IsoSearch(a, b, std::move(ka), std::move(kb)).run();
}

EffectAlgebraTable canonical_form(const EffectAlgebraTable& t) {
  const auto order = derive_order(t);
  const auto keys = element_keys(t, order);
  const auto label = CanonicalSearch(t, keys).run();
  return relabel(t, label);
}

std::vector<std::uint32_t> sum_encoding(const EffectAlgebraTable& t) {
  const auto n = static_cast<Element>(t.size());
  std::vector<std::vector<std::pair<Element, Element>>> parts(n);
  for (Element x = 1; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      if (auto z = t.sum(x, y)) parts[*z].push_back({x, y});
    }
  }
  std::vector<std::uint32_t> out;
  for (Element z = 0; z < n; ++z) {
    out.push_back(static_cast<std::uint32_t>(parts[z].size()));
    for (auto [x, y] : parts[z]) {
      out.push_back(x);
      out.push_back(y);
    }
  }
  return out;
}

}  // namespace ealab
