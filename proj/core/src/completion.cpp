#include "ealab/completion.hpp"

#include <algorithm>
#include <set>

namespace ealab {

namespace {

struct CutOrder {
  bool operator()(const Bitset& a, const Bitset& b) const {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  }
};

}  // namespace

CompletionResult dedekind_macneille(const Poset& poset) {
  const auto n = poset.size();
  // The lower parts of cuts are exactly the intersections of principal
  // down-sets (the empty intersection being the whole poset), so close the
  // principal down-sets under pairwise intersection.
  std::set<Bitset, CutOrder> cuts;
  std::vector<Bitset> frontier;
  Bitset full(n);
  full.set();
  cuts.insert(full);
  frontier.push_back(full);
  std::vector<Bitset> principal;
  for (Element x = 0; x < n; ++x) principal.push_back(poset.down_set(x));
  for (const auto& p : principal) {
    if (cuts.insert(p).second) frontier.push_back(p);
  }
  while (!frontier.empty()) {
    auto current = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& p : principal) {
      auto meet = current & p;
      if (cuts.insert(meet).second) frontier.push_back(std::move(meet));
    }
  }

  CompletionResult result;
  result.cuts.assign(cuts.begin(), cuts.end());
  const auto m = result.cuts.size();
  std::vector<Bitset> up(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (result.cuts[i].is_subset_of(result.cuts[j])) up[i].set(j);
    }
  }
  result.embedding.resize(n);
  std::vector<std::string> names(m);
  std::vector<bool> named(m, false);
  for (Element x = 0; x < n; ++x) {
    const auto it = std::find(result.cuts.begin(), result.cuts.end(),
                              principal[x]);
    const auto idx = static_cast<Element>(it - result.cuts.begin());
    result.embedding[x] = idx;
    names[idx] = poset.name(x);
    named[idx] = true;
  }
  std::size_t fresh = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!named[i]) names[i] = "cut" + std::to_string(fresh++);
  }
  result.added_count = fresh;
  result.completed = Poset::from_rows(std::move(up), std::move(names));
  return result;
}

}  // namespace ealab
