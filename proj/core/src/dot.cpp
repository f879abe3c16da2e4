#include "ealab/dot.hpp"

#include <sstream>

#include "ealab/error.hpp"
#include "ealab/order.hpp"
#include "ealab/structure.hpp"

namespace ealab {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Graph parse_graph(const std::string& s) {
  if (s == "hasse") return Graph::kHasse;
  if (s == "compat") return Graph::kCompat;
  throw Error(ErrorKind::kInvalidArgument, "unknown graph '" + s + "'");
}

std::string to_dot(const EffectAlgebraTable& t, Graph g) {
  std::ostringstream out;
  const auto n = static_cast<Element>(t.size());
  if (g == Graph::kHasse) {
    const auto order = derive_order(t);
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (Element x = 0; x < n; ++x) out << "  " << quoted(t.name(x)) << ";\n";
    for (auto [x, y] : order.poset().covers()) {
      out << "  " << quoted(t.name(x)) << " -> " << quoted(t.name(y))
          << ";\n";
    }
  } else {
    const auto e = LatticeEffectAlgebra::make(t);
    out << "graph compat {\n";
    for (Element x = 0; x < n; ++x) out << "  " << quoted(t.name(x)) << ";\n";
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        if (compatible(e, x, y)) {
          out << "  " << quoted(t.name(x)) << " -- " << quoted(t.name(y))
              << ";\n";
        }
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace ealab
