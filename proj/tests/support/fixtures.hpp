#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ealab/io.hpp"

namespace fixtures {

/// Absolute path of a file in tests/data.
std::string path(const std::string& name);

inline ealab::EffectAlgebraTable ea(const std::string& name) {
  return ealab::parse_ea(ealab::read_file(path(name)));
}
inline ealab::Poset poset(const std::string& name) {
  return ealab::parse_poset(ealab::read_file(path(name)));
}
inline ealab::OrthoLattice oml(const std::string& name) {
  return ealab::parse_ortholattice(ealab::read_file(path(name)));
}

/// Index of the element called `name`; throws std::out_of_range if absent.
ealab::Element element(const ealab::EffectAlgebraTable& t,
                       const std::string& name);

/// All effect algebras with 2..max_size elements (cached per process).
const std::vector<ealab::EffectAlgebraTable>& corpus(std::size_t max_size = 8);

/// The lattice effect algebras of corpus(max_size).
std::vector<ealab::EffectAlgebraTable> lattice_corpus(std::size_t max_size = 8);

}  // namespace fixtures
