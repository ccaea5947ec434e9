#include "valuator/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace valuator {

namespace {

std::vector<std::string> numeric_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string set_name(const Matroid& m, Mask f) {
  std::string s = "{";
  bool first = true;
  for (const std::string& l : m.labels_of(f)) {
    if (!first) s += ",";
    s += l;
    first = false;
  }
  return s + "}";
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  // Returns false if x and y were already connected.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

}  // namespace

Matroid graphic_matroid(int nv, const std::vector<std::pair<int, int>>& edges) {
  const int ne = static_cast<int>(edges.size());
  UnionFind whole(nv);
  int rank = 0;
  for (const auto& [a, b] : edges) rank += whole.unite(a, b) ? 1 : 0;

  std::vector<Mask> bases;
  const Mask full = ne == 0 ? 0 : (Mask(1) << ne) - 1;
  for (Mask s = 0; s <= full; ++s) {
    if (popcount(s) != rank) {
      if (ne == 0) break;
      continue;
    }
    UnionFind uf(nv);
    bool forest = true;
    for (Mask rest = s; rest && forest; rest &= rest - 1) {
      const int e = lowest_bit(rest);
      forest = uf.unite(edges[e].first, edges[e].second);
    }
    if (forest) bases.push_back(s);
    if (ne == 0) break;
  }
  return Matroid::from_masks(numeric_labels(ne), bases);
}

Matroid graphic_k4() {
  // vertices a=0, b=1, c=2, d=3
  return graphic_matroid(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Matroid wheel(int spokes) {
  std::vector<std::pair<int, int>> edges;
  const int hub = spokes;
  for (int i = 0; i < spokes; ++i) edges.emplace_back(i, (i + 1) % spokes);  // rim
  for (int i = 0; i < spokes; ++i) edges.emplace_back(i, hub);               // spokes
  return graphic_matroid(spokes + 1, edges);
}

std::vector<Mask> eligible_stressed_flats(const Matroid& m) {
  std::vector<Mask> out;
  for (Mask f : m.flats()) {
    if (!is_stressed(m, f)) continue;
    if (cusp(m, f).empty()) continue;
    if (m == pi_matroid(m, f)) continue;
    out.push_back(f);
  }
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    std::set<Matroid> seen;
    auto add = [&](const std::string& name, const Matroid& m) {
      if (seen.insert(m).second) out.push_back({name, m});
    };

    for (int n = 0; n <= 7; ++n)
      for (int k = 0; k <= n; ++k)
        add("U(" + std::to_string(k) + "," + std::to_string(n) + ")",
            Matroid::uniform(k, numeric_labels(n)));
    add("K4", graphic_k4());
    add("W3", wheel(3));
    add("W4", wheel(4));

    // pi/lambda companions of the stressed pairs of the families above.
    const std::size_t base_count = out.size();
    for (std::size_t i = 0; i < base_count; ++i) {
      const auto& e = out[i];
      for (Mask f : eligible_stressed_flats(e.m)) {
        const std::string at = e.name + "@" + set_name(e.m, f);
        add("pi(" + at + ")", pi_matroid(e.m, f));
        add("lambda(" + at + ")", lambda_matroid(e.m, f));
      }
    }

    // Single relaxations of everything listed so far.
    const std::size_t listed = out.size();
    for (std::size_t i = 0; i < listed; ++i) {
      const auto& e = out[i];
      for (Mask f : eligible_stressed_flats(e.m))
        add("relax(" + e.name + "@" + set_name(e.m, f) + ")", relax(e.m, f));
    }
    return out;
  }();
  return entries;
}

std::vector<StressedPair> stressed_pairs() {
  std::vector<StressedPair> out;
  for (const CatalogEntry& e : catalog())
    for (Mask f : eligible_stressed_flats(e.m))
      out.push_back({e.name + "@" + set_name(e.m, f), e.m, f});
  return out;
}

Mask apply_perm(Mask s, const std::vector<int>& perm) {
  Mask out = 0;
  for (Mask rest = s; rest; rest &= rest - 1) out |= bit(perm[lowest_bit(rest)]);
  return out;
}

std::vector<std::vector<int>> automorphisms(const Matroid& m) {
  const int nn = m.n();
  std::vector<int> p(nn);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  std::vector<Mask> imgs;
  do {
    imgs.clear();
    imgs.reserve(m.bases().size());
    for (Mask b : m.bases()) imgs.push_back(apply_perm(b, p));
    std::sort(imgs.begin(), imgs.end());
    if (imgs == m.bases()) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Mask> orbit_of(Mask f, const std::vector<std::vector<int>>& perms) {
  std::set<Mask> seen;
  for (const auto& p : perms) seen.insert(apply_perm(f, p));
  return {seen.begin(), seen.end()};
}

Decomposition octahedron_decomposition() {
  const Matroid u24 = Matroid::uniform(2, numeric_labels(4));
  std::vector<Mask> bases = u24.bases();
  bases.erase(std::remove(bases.begin(), bases.end(), Mask(0b1100)), bases.end());
  const Matroid pyramid = Matroid::from_masks(u24.ground(), bases);
  return relax_decomposition(pyramid, Mask(0b1100));
}

std::vector<WeakMap> weak_map_pairs(std::size_t min_count) {
  std::vector<WeakMap> out;

  // Relaxation inclusions: bases only shrink along each map.
  for (const StressedPair& p : stressed_pairs()) {
    out.push_back(WeakMap::identity_map(relax(p.m, p.flat), p.m));
    out.push_back(
        WeakMap::identity_map(lambda_matroid(p.m, p.flat), pi_matroid(p.m, p.flat)));
  }

  // Cell -> face inclusions of the octahedron decomposition.
  {
    const SignedComplex c = build_complex(octahedron_decomposition());
    for (int k = 1; k <= c.top; ++k)
      for (std::size_t j = 0; j < c.cells[k].size(); ++j)
        for (std::size_t i = 0; i < c.cells[k - 1].size(); ++i)
          if (c.diff[k].at(static_cast<int>(i), static_cast<int>(j)) != 0)
            out.push_back(WeakMap::identity_map(c.cells[k][j], c.cells[k - 1][i]));
  }

  // Single-basis drops across the catalog until the quota is met.
  for (const CatalogEntry& e : catalog()) {
    if (out.size() >= min_count) break;
    if (e.m.bases().size() < 2) continue;
    for (std::size_t i = 0; i < e.m.bases().size(); ++i) {
      std::vector<Mask> nb = e.m.bases();
      nb.erase(nb.begin() + static_cast<std::ptrdiff_t>(i));
      try {
        const Matroid dropped = Matroid::from_masks(e.m.ground(), nb);
        out.push_back(WeakMap::identity_map(e.m, dropped));
      } catch (const ValidationError&) {
        // dropping this basis breaks the exchange axiom; skip
      }
    }
  }
  return out;
}

}  // namespace valuator
