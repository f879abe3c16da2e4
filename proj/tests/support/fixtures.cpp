#include "fixtures.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ealab/enumerate.hpp"

namespace fixtures {

std::string path(const std::string& name) {
  return std::string(EALAB_TEST_DATA_DIR) + "/" + name;
}

ealab::Element element(const ealab::EffectAlgebraTable& t,
                       const std::string& name) {
  const auto& names = t.names();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::out_of_range("no element " + name);
  return static_cast<ealab::Element>(it - names.begin());
}

const std::vector<ealab::EffectAlgebraTable>& corpus(std::size_t max_size) {
  static std::map<std::size_t, std::vector<ealab::EffectAlgebraTable>> cache;
  auto it = cache.find(max_size);
  if (it != cache.end()) return it->second;
  std::vector<ealab::EffectAlgebraTable> all;
  for (std::size_t n = 2; n <= max_size; ++n) {
    for (auto& t : ealab::enumerate_all(n)) all.push_back(std::move(t));
  }
  return cache.emplace(max_size, std::move(all)).first->second;
}

std::vector<ealab::EffectAlgebraTable> lattice_corpus(std::size_t max_size) {
  std::vector<ealab::EffectAlgebraTable> out;
  for (const auto& t : corpus(max_size)) {
    if (ealab::passes_filter(t, ealab::Filter::kLattice)) out.push_back(t);
  }
  return out;
}

}  // namespace fixtures
