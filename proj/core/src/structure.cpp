#include "ealab/structure.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ealab/error.hpp"

namespace ealab {

namespace {

using Matrix = std::vector<std::vector<bool>>;

Matrix compatibility_matrix(const LatticeEffectAlgebra& e) {
  const auto n = static_cast<Element>(e.size());
  Matrix m(n, std::vector<bool>(n, false));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) m[x][y] = compatible(e, x, y);
  }
  return m;
}

bool is_central_by_identity(const LatticeEffectAlgebra& e, Element z) {
  const auto zc = e.complement(z);
  for (Element x = 0; x < e.size(); ++x) {
    if (e.join(e.meet(x, z), e.meet(x, zc)) != x) return false;
  }
  return true;
}

// Minimal non-zero members of a set that contains 0.
std::vector<Element> atoms_of_subset(const LatticeEffectAlgebra& e,
                                     const std::vector<Element>& subset) {
  std::vector<Element> out;
  for (auto z : subset) {
    if (z == kZero) continue;
    const bool minimal = std::none_of(
        subset.begin(), subset.end(),
        [&](Element c) { return c != kZero && c != z && e.leq(c, z); });
    if (minimal) out.push_back(z);
  }
  return out;
}

void bron_kerbosch(const std::vector<Bitset>& adj, Bitset r, Bitset p,
                   Bitset x, std::vector<Bitset>& out) {
  if (p.none() && x.none()) {
    out.push_back(std::move(r));
    return;
  }
  // Pivot: vertex of P u X with the most neighbours in P.
  const Bitset px = p | x;
  std::size_t pivot = px.find_first();
  std::size_t best = (p & adj[pivot]).count();
  for (auto u = px.find_next(pivot); u != Bitset::npos; u = px.find_next(u)) {
    const auto c = (p & adj[u]).count();
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  const Bitset candidates = p - adj[pivot];
  for (auto v = candidates.find_first(); v != Bitset::npos;
       v = candidates.find_next(v)) {
    Bitset r2 = r;
    r2.set(v);
    bron_kerbosch(adj, std::move(r2), p & adj[v], x & adj[v], out);
    p.reset(v);
    x.set(v);
  }
}

std::vector<Element> to_vector(const Bitset& b) {
  std::vector<Element> v;
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) {
    v.push_back(static_cast<Element>(i));
  }
  return v;
}

// Standalone check that a block is an MV-effect algebra: as an algebra of
// its own, every pair of its elements is compatible.
bool is_mv_standalone(const EffectAlgebraTable& t,
                      const std::vector<Element>& members, Element one) {
  auto sub = restrict_table(t, members, one);
  auto e = LatticeEffectAlgebra::make(std::move(sub.table));
  for (Element x = 0; x < e.size(); ++x) {
    for (Element y = x + 1; y < e.size(); ++y) {
      if (!compatible(e, x, y)) return false;
    }
  }
  return true;
}

void verify_block(const LatticeEffectAlgebra& e,
                  const std::vector<Element>& block) {
  std::vector<bool> in(e.size(), false);
  for (auto x : block) in[x] = true;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::kInternalInconsistency, "block " + what);
  };
  if (!in[kZero] || !in[e.one()]) fail("misses 0 or 1");
  for (auto x : block) {
    if (!in[e.complement(x)]) fail("not closed under complement");
    for (auto y : block) {
      if (!in[e.meet(x, y)] || !in[e.join(x, y)]) {
        fail("not a sub-lattice");
      }
      if (auto s = e.table.sum(x, y); s && !in[*s]) {
        fail("not closed under +");
      }
    }
  }
  if (!is_sub_effect_algebra(e.table, block)) fail("not a sub-effect algebra");
  if (!is_mv_standalone(e.table, block, e.one())) {
    fail("is not an MV-effect algebra");
  }
}

}  // namespace

LatticeEffectAlgebra LatticeEffectAlgebra::make(EffectAlgebraTable t) {
  auto order = derive_order(t);
  auto lattice = lattice_tables(order.poset());
  if (!lattice.is_lattice) {
    const auto [x, y] = *lattice.counterexample;
    throw Error(ErrorKind::kNotALattice,
                "no meet or join for (" + t.name(x) + ", " + t.name(y) + ")");
  }
  return {std::move(t), std::move(order), std::move(lattice)};
}

bool is_sub_effect_algebra(const EffectAlgebraTable& t,
                           const std::vector<Element>& subset) {
  std::vector<bool> in(t.size(), false);
  for (auto x : subset) in[x] = true;
  if (!in[t.one()]) return false;
  for (Element x = 0; x < t.size(); ++x) {
    for (Element y = 0; y < t.size(); ++y) {
      const auto z = t.sum(x, y);
      if (!z) continue;
      const int count = int(in[x]) + int(in[y]) + int(in[*z]);
      if (count == 2) return false;
    }
  }
  return true;
}

std::vector<Element> sharp_elements(const LatticeEffectAlgebra& e) {
  std::vector<Element> sharp;
  std::vector<bool> in(e.size(), false);
  for (Element w = 0; w < e.size(); ++w) {
    if (e.meet(w, e.complement(w)) == kZero) {
      sharp.push_back(w);
      in[w] = true;
    }
  }
  if (!is_sub_effect_algebra(e.table, sharp)) {
    throw Error(ErrorKind::kInternalInconsistency,
                "S(E) is not a sub-effect algebra");
  }
  for (auto x : sharp) {
    for (auto y : sharp) {
      if (!in[e.join(x, y)] || !in[e.meet(x, y)]) {
        throw Error(ErrorKind::kInternalInconsistency,
                    "S(E) is not a sub-lattice");
      }
    }
  }
  return sharp;
}

bool compatible(const LatticeEffectAlgebra& e, Element x, Element y) {
  const auto m = e.meet(x, y);
  const auto d = e.order.ominus(y, m);
  if (!d) {
    throw Error(ErrorKind::kInternalInconsistency, "x ^ y is not below y");
  }
  const auto s = e.table.sum(x, *d);
  return s && *s == e.join(x, y);
}

std::vector<std::vector<Element>> blocks(const LatticeEffectAlgebra& e) {
  const auto n = e.size();
  const auto comp = compatibility_matrix(e);
  std::vector<Bitset> adj(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && comp[x][y]) adj[x].set(y);
    }
  }
  Bitset all(n);
  all.set();
  std::vector<Bitset> cliques;
  bron_kerbosch(adj, Bitset(n), all, Bitset(n), cliques);

  std::vector<std::vector<Element>> out;
  out.reserve(cliques.size());
  for (const auto& c : cliques) out.push_back(to_vector(c));
  std::sort(out.begin(), out.end());

  Bitset covered(n);
  for (const auto& b : out) {
    verify_block(e, b);
    for (auto x : b) covered.set(x);
  }
  if (!covered.all()) {
    throw Error(ErrorKind::kInternalInconsistency,
                "blocks do not cover the algebra");
  }
  return out;
}

StructureReport centers(const LatticeEffectAlgebra& e) {
  const auto n = static_cast<Element>(e.size());
  StructureReport r;
  r.sharp = sharp_elements(e);
  r.blocks = blocks(e);
  const auto comp = compatibility_matrix(e);

  std::vector<Element> b_from_blocks;
  for (Element x = 0; x < n; ++x) {
    const bool everywhere =
        std::all_of(r.blocks.begin(), r.blocks.end(), [&](const auto& b) {
          return std::binary_search(b.begin(), b.end(), x);
        });
    if (everywhere) b_from_blocks.push_back(x);
  }
  std::vector<Element> b_from_compat;
  for (Element x = 0; x < n; ++x) {
    if (std::all_of(comp[x].begin(), comp[x].end(), [](bool c) { return c; })) {
      b_from_compat.push_back(x);
    }
  }
  if (b_from_blocks != b_from_compat) {
    throw Error(ErrorKind::kInternalInconsistency,
                "B(E) differs between block intersection and compatibility");
  }
  r.compat_center = std::move(b_from_compat);

  std::vector<Element> c_identity;
  std::vector<Element> c_sharp_compat;
  for (Element z = 0; z < n; ++z) {
    if (is_central_by_identity(e, z)) c_identity.push_back(z);
    const bool sharp = e.meet(z, e.complement(z)) == kZero;
    const bool all_compat =
        std::all_of(comp[z].begin(), comp[z].end(), [](bool c) { return c; });
    if (sharp && all_compat) c_sharp_compat.push_back(z);
  }
  if (c_identity != c_sharp_compat) {
    throw Error(ErrorKind::kInternalInconsistency,
                "C(E) differs between the two characterizations");
  }
  std::vector<Element> b_and_s;
  std::set_intersection(r.compat_center.begin(), r.compat_center.end(),
                        r.sharp.begin(), r.sharp.end(),
                        std::back_inserter(b_and_s));
  if (b_and_s != c_identity) {
    throw Error(ErrorKind::kInternalInconsistency, "C(E) != B(E) n S(E)");
  }
  r.center = std::move(c_identity);
  r.central_atoms = atoms_of_subset(e, r.center);
  r.is_mv = r.blocks.size() == 1;
  r.is_irreducible = r.center.size() == 2;
  r.sharply_dominating = sharply_dominating(e);

  r.sharp_joins_agree = true;
  for (auto x : r.sharp) {
    for (auto y : r.sharp) {
      // Least upper bound of {x, y} inside S(E).
      std::optional<Element> least;
      for (auto w : r.sharp) {
        if (!e.leq(x, w) || !e.leq(y, w)) continue;
        const bool below_all = std::all_of(
            r.sharp.begin(), r.sharp.end(), [&](Element u) {
              return !(e.leq(x, u) && e.leq(y, u)) || e.leq(w, u);
            });
        if (below_all) least = w;
      }
      if (!least || *least != e.join(x, y)) r.sharp_joins_agree = false;
    }
  }
  return r;
}

CentralAtomConditions check_central_atom_conditions(
    const LatticeEffectAlgebra& e) {
  const auto n = static_cast<Element>(e.size());
  CentralAtomConditions out;
  std::vector<Element> center;
  for (Element z = 0; z < n; ++z) {
    if (is_central_by_identity(e, z)) center.push_back(z);
  }
  const auto central_atoms = atoms_of_subset(e, center);

  // (i)
  const bool atomic = std::all_of(center.begin(), center.end(), [&](Element z) {
    return z == kZero ||
           std::any_of(central_atoms.begin(), central_atoms.end(),
                       [&](Element p) { return e.leq(p, z); });
  });
  Element joined = kZero;
  for (auto p : central_atoms) joined = e.join(joined, p);
  out.center_atomic_with_unit_join = atomic && joined == e.one();

  // (ii)
  const auto e_atoms = atoms(e.order);
  out.atoms_below_central_atoms =
      std::all_of(e_atoms.begin(), e_atoms.end(), [&](Element a) {
        return std::any_of(central_atoms.begin(), central_atoms.end(),
                           [&](Element p) { return e.leq(a, p); });
      });

  // (iii) Map x -> (x ^ p_1, ..., x ^ p_k); coordinate i lives in [0, p_i].
  const auto k = central_atoms.size();
  auto image = [&](Element x) {
    std::vector<Element> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = e.meet(x, central_atoms[i]);
    return v;
  };
  std::vector<std::vector<Element>> phi(n);
  for (Element x = 0; x < n; ++x) phi[x] = image(x);
  std::set<std::vector<Element>> img(phi.begin(), phi.end());
  bool ok = k > 0 && img.size() == n;

  // Coordinatewise sum in the product of intervals.
  auto product_sum = [&](const std::vector<Element>& u,
                         const std::vector<Element>& v)
      -> std::optional<std::vector<Element>> {
    std::vector<Element> w(k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto s = e.table.sum(u[i], v[i]);
      if (!s || !e.leq(*s, central_atoms[i])) return std::nullopt;
      w[i] = *s;
    }
    return w;
  };
  // Unit goes to the unit, and + is preserved and reflected.
  for (std::size_t i = 0; ok && i < k; ++i) {
    ok = phi[e.one()][i] == central_atoms[i];
  }
  for (Element a = 0; ok && a < n; ++a) {
    for (Element b = 0; ok && b < n; ++b) {
      const auto s = e.table.sum(a, b);
      const auto ps = product_sum(phi[a], phi[b]);
      if (s.has_value() != ps.has_value()) ok = false;
      else if (s && phi[*s] != *ps) ok = false;
    }
  }
  // Projections are onto.
  for (std::size_t i = 0; ok && i < k; ++i) {
    std::set<Element> proj;
    for (const auto& v : phi) proj.insert(v[i]);
    const auto& down = e.order.poset().down_set(central_atoms[i]);
    ok = proj.size() == down.count();
  }
  // The image is a sub-lattice and a sub-effect algebra of the product.
  for (std::size_t a = 0; ok && a < n; ++a) {
    for (std::size_t b = 0; ok && b < n; ++b) {
      std::vector<Element> m(k), j(k), diff(k);
      bool diff_defined = true;
      for (std::size_t i = 0; i < k; ++i) {
        m[i] = e.meet(phi[a][i], phi[b][i]);
        j[i] = e.join(phi[a][i], phi[b][i]);
        const auto d = e.order.ominus(phi[b][i], phi[a][i]);
        if (d) diff[i] = *d; else diff_defined = false;
      }
      if (!img.count(m) || !img.count(j)) ok = false;
      if (auto s = product_sum(phi[a], phi[b]); s && !img.count(*s)) ok = false;
      if (diff_defined && !img.count(diff)) ok = false;
    }
  }
  out.subdirect_embedding = ok;
  return out;
}

IntervalAlgebra interval_algebra(const LatticeEffectAlgebra& e, Element z) {
  if (z >= e.size()) {
    throw Error(ErrorKind::kInvalidArgument, "element out of range");
  }
  if (z == kZero) {
    throw Error(ErrorKind::kDegenerateInterval,
                "[0, 0] has a single element");
  }
  if (!is_central_by_identity(e, z)) {
    throw Error(ErrorKind::kNotCentral,
                e.table.name(z) + " is not a central element");
  }
  auto sub = restrict_table(
      e.table, [&] {
        std::vector<Element> down;
        for (Element x = 0; x < e.size(); ++x) {
          if (e.leq(x, z)) down.push_back(x);
        }
        return down;
      }(),
      z);
  return {std::move(sub.table), std::move(sub.members)};
}

std::size_t Decomposition::product_size() const {
  std::size_t p = 1;
  for (const auto& f : factors) p *= f.table.size();
  return p;
}

bool Decomposition::all_factors_irreducible() const {
  return std::all_of(factor_irreducible.begin(), factor_irreducible.end(),
                     [](bool b) { return b; });
}

Decomposition decompose(const LatticeEffectAlgebra& e) {
  const auto n = static_cast<Element>(e.size());
  Decomposition d;
  std::vector<Element> center;
  for (Element z = 0; z < n; ++z) {
    if (is_central_by_identity(e, z)) center.push_back(z);
  }
  d.central_atoms = atoms_of_subset(e, center);
  const auto k = d.central_atoms.size();
  std::vector<std::vector<std::int64_t>> local(k);
  for (std::size_t i = 0; i < k; ++i) {
    d.factors.push_back(interval_algebra(e, d.central_atoms[i]));
    local[i].assign(n, -1);
    const auto& members = d.factors[i].members;
    for (std::size_t j = 0; j < members.size(); ++j) local[i][members[j]] = j;
    auto factor = LatticeEffectAlgebra::make(d.factors[i].table);
    d.factor_irreducible.push_back(centers(factor).is_irreducible);
  }
  d.iso.assign(n, std::vector<Element>(k));
  for (Element x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < k; ++i) {
      d.iso[x][i] =
          static_cast<Element>(local[i][e.meet(x, d.central_atoms[i])]);
    }
  }
  const std::set<std::vector<Element>> distinct(d.iso.begin(), d.iso.end());
  d.iso_bijective = distinct.size() == n && d.product_size() == n;

  d.iso_preserves_sum = true;
  for (Element a = 0; a < n && d.iso_preserves_sum; ++a) {
    for (Element b = 0; b < n; ++b) {
      const auto s = e.table.sum(a, b);
      bool all_defined = true;
      bool values_match = true;
      for (std::size_t i = 0; i < k; ++i) {
        const auto fs = d.factors[i].table.sum(d.iso[a][i], d.iso[b][i]);
        if (!fs) {
          all_defined = false;
        } else if (s && d.iso[*s][i] != *fs) {
          values_match = false;
        }
      }
      if (s.has_value() != all_defined || !values_match) {
        d.iso_preserves_sum = false;
        break;
      }
    }
  }
  return d;
}

std::optional<Element> least_sharp_above(const LatticeEffectAlgebra& e,
                                         Element x) {
  const auto n = static_cast<Element>(e.size());
  std::vector<Element> above;
  for (Element w = 0; w < n; ++w) {
    if (e.meet(w, e.complement(w)) == kZero && e.leq(x, w)) above.push_back(w);
  }
  for (auto w : above) {
    if (std::all_of(above.begin(), above.end(),
                    [&](Element u) { return e.leq(w, u); })) {
      return w;
    }
  }
  return std::nullopt;
}

bool sharply_dominating(const LatticeEffectAlgebra& e) {
  for (Element x = 0; x < e.size(); ++x) {
    if (!least_sharp_above(e, x)) return false;
  }
  return true;
}

}  // namespace ealab
