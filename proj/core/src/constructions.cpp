#include "ealab/constructions.hpp"

#include "ealab/error.hpp"
#include "ealab/lattice.hpp"

namespace ealab {

EffectAlgebraTable chain(std::size_t k) {
  if (k < 2) {
    throw Error(ErrorKind::kInvalidArgument, "a chain needs k >= 2");
  }
  std::vector<std::string> names(k);
  names[0] = "0";
  for (std::size_t i = 1; i + 1 < k; ++i) {
    names[i] = i == 1 ? "a" : std::to_string(i) + "a";
  }
  names[k - 1] = "1";
  EffectAlgebraTable t(k, static_cast<Element>(k - 1), std::move(names));
  for (Element i = 1; i < k; ++i) {
    for (Element j = 1; i + j < k; ++j) t.set_cell(i, j, i + j);
  }
  return t;
}

EffectAlgebraTable direct_product(const std::vector<EffectAlgebraTable>& ts) {
  if (ts.empty()) {
    throw Error(ErrorKind::kEmptyFactorList, "product of no factors");
  }
  if (ts.size() == 1) return ts.front();
  const auto k = ts.size();
  std::size_t n = 1;
  for (const auto& t : ts) n *= t.size();

  auto decode = [&](std::size_t idx) {
    std::vector<Element> c(k);
    for (std::size_t i = k; i-- > 0;) {
      c[i] = static_cast<Element>(idx % ts[i].size());
      idx /= ts[i].size();
    }
    return c;
  };
  auto encode = [&](const std::vector<Element>& c) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * ts[i].size() + c[i];
    return static_cast<Element>(idx);
  };

  std::vector<std::vector<Element>> coords(n);
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    coords[x] = decode(x);
    std::string s = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) s += ",";
      s += ts[i].name(coords[x][i]);
    }
    names[x] = s + ")";
  }
  std::vector<Element> unit(k);
  for (std::size_t i = 0; i < k; ++i) unit[i] = ts[i].one();

  EffectAlgebraTable out(n, encode(unit), std::move(names));
  std::vector<Element> c(k);
  for (Element x = 1; x < n; ++x) {
    for (Element y = 1; y < n; ++y) {
      bool defined = true;
      for (std::size_t i = 0; i < k && defined; ++i) {
        const auto s = ts[i].sum(coords[x][i], coords[y][i]);
        if (s) c[i] = *s; else defined = false;
      }
      if (defined) out.set_cell(x, y, encode(c));
    }
  }
  return out;
}

EffectAlgebraTable horizontal_sum(const std::vector<EffectAlgebraTable>& ts) {
  if (ts.empty()) {
    throw Error(ErrorKind::kEmptyFactorList, "horizontal sum of no summands");
  }
  for (const auto& t : ts) {
    if (t.size() < 3) {
      throw Error(ErrorKind::kFactorTooSmall,
                  "horizontal summands need at least three elements");
    }
  }
  if (ts.size() == 1) return ts.front();

  // Global index of each summand's elements.
  std::vector<std::vector<Element>> global(ts.size());
  std::vector<std::string> names{"0"};
  for (std::size_t s = 0; s < ts.size(); ++s) {
    global[s].assign(ts[s].size(), 0);
    for (Element x = 0; x < ts[s].size(); ++x) {
      if (x == kZero || x == ts[s].one()) continue;
      global[s][x] = static_cast<Element>(names.size());
      names.push_back("s" + std::to_string(s) + "." + ts[s].name(x));
    }
  }
  const auto one = static_cast<Element>(names.size());
  names.push_back("1");
  for (std::size_t s = 0; s < ts.size(); ++s) global[s][ts[s].one()] = one;
  const auto size = names.size();
  EffectAlgebraTable out(size, one, std::move(names));
  for (std::size_t s = 0; s < ts.size(); ++s) {
    const auto& t = ts[s];
    for (Element x = 1; x < t.size(); ++x) {
      for (Element y = 1; y < t.size(); ++y) {
        if (auto z = t.sum(x, y)) {
          out.set_cell(global[s][x], global[s][y], global[s][*z]);
        }
      }
    }
  }
  return out;
}

EffectAlgebraTable oml_to_ea(const OrthoLattice& oml) {
  const auto& p = oml.order;
  const auto n = static_cast<Element>(p.size());
  if (oml.perp.size() != n) {
    throw Error(ErrorKind::kInvalidArgument, "perp map has wrong size");
  }
  const auto lt = lattice_tables(p);
  if (!lt.is_lattice) {
    throw Error(ErrorKind::kNotALattice, "ortholattice input is not a lattice");
  }
  const auto bottom = *p.bottom();
  const auto top = *p.top();
  if (bottom == top) {
    throw Error(ErrorKind::kInvalidArgument, "lattice has a single element");
  }
  const auto& perp = oml.perp;
  for (Element x = 0; x < n; ++x) {
    if (perp[x] >= n || perp[perp[x]] != x) {
      throw Error(ErrorKind::kNotOrthocomplemented,
                  "perp is not an involution at " + p.name(x));
    }
    if (lt.meet(x, perp[x]) != bottom || lt.join(x, perp[x]) != top) {
      throw Error(ErrorKind::kNotOrthocomplemented,
                  "perp is not a complement at " + p.name(x));
    }
    for (Element y = 0; y < n; ++y) {
      if (p.leq(x, y) && !p.leq(perp[y], perp[x])) {
        throw Error(ErrorKind::kNotOrthocomplemented,
                    "perp is not order-reversing at (" + p.name(x) + ", " +
                        p.name(y) + ")");
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (p.leq(x, y) && lt.join(x, lt.meet(perp[x], y)) != y) {
        throw Error(ErrorKind::kNotOrthomodular,
                    "orthomodular law fails for (" + p.name(x) + ", " +
                        p.name(y) + ")",
                    {x, y});
      }
    }
  }

  // Renumber so that the bottom is element 0.
  std::vector<Element> to_new(n), to_old(n);
  Element next = 1;
  to_new[bottom] = 0;
  to_old[0] = bottom;
  for (Element x = 0; x < n; ++x) {
    if (x == bottom) continue;
    to_new[x] = next;
    to_old[next] = x;
    ++next;
  }
  std::vector<std::string> names(n);
  for (Element x = 0; x < n; ++x) names[to_new[x]] = p.name(x);
  EffectAlgebraTable out(n, to_new[top], std::move(names));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x == bottom || y == bottom) continue;
      if (p.leq(x, perp[y])) {
        out.set_cell(to_new[x], to_new[y], to_new[lt.join(x, y)]);
      }
    }
  }
  return out;
}

}  // namespace ealab
