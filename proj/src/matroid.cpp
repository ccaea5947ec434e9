#include "valuator/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace valuator {

namespace {

std::vector<int> sort_permutation(const std::vector<std::string>& labels) {
  std::vector<int> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return labels[a] < labels[b]; });
  return order;
}

}  // namespace

void Matroid::finish_construction() {
  const int nn = n();
  if (nn > kMaxGround) throw ValidationError("ground set larger than 12 elements");
  for (const auto& l : ground_)
    if (l.empty()) throw ValidationError("empty ground label");
  for (std::size_t i = 0; i + 1 < ground_.size(); ++i)
    if (ground_[i] == ground_[i + 1]) throw ValidationError("duplicate ground label '" + ground_[i] + "'");
  if (bases_.empty()) throw ValidationError("matroid must have at least one basis");

  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  const Mask full = full_mask();
  rank_ = popcount(bases_[0]);
  for (Mask b : bases_) {
    if (!subset_of(b, full)) throw ValidationError("basis uses elements outside the ground set");
    if (popcount(b) != rank_) throw ValidationError("bases of unequal size");
  }

  // Basis exchange: for all bases A, B and a in A - B there is b in B - A
  // with A - a + b a basis.
  for (Mask a : bases_)
    for (Mask b : bases_) {
      if (a == b) continue;
      Mask diff = a & ~b;
      while (diff) {
        const int e = lowest_bit(diff);
        diff &= diff - 1;
        bool ok = false;
        Mask cand = b & ~a;
        while (cand && !ok) {
          const int f = lowest_bit(cand);
          cand &= cand - 1;
          ok = std::binary_search(bases_.begin(), bases_.end(), (a & ~bit(e)) | bit(f));
        }
        if (!ok) throw ValidationError("basis-exchange axiom fails");
      }
    }

  rank_table_.assign(std::size_t(1) << nn, 0);
  for (Mask s = 0; s <= full; ++s) {
    int best = 0;
    for (Mask b : bases_) {
      const int c = popcount(b & s);
      if (c > best) best = c;
    }
    rank_table_[s] = static_cast<std::int8_t>(best);
    if (nn == 0) break;
  }
}

Matroid Matroid::from_masks(std::vector<std::string> ground, std::vector<Mask> bases) {
  Matroid m;
  const std::vector<int> order = sort_permutation(ground);
  // order[k] = old index of the element that lands at new index k.
  std::vector<int> new_index(ground.size());
  for (std::size_t k = 0; k < order.size(); ++k) new_index[order[k]] = static_cast<int>(k);
  m.ground_.resize(ground.size());
  for (std::size_t k = 0; k < order.size(); ++k) m.ground_[k] = ground[order[k]];
  m.bases_.reserve(bases.size());
  for (Mask b : bases) {
    Mask nb = 0;
    Mask rest = b;
    while (rest) {
      const int e = lowest_bit(rest);
      rest &= rest - 1;
      if (e >= static_cast<int>(ground.size())) throw ValidationError("basis uses elements outside the ground set");
      nb |= bit(new_index[e]);
    }
    m.bases_.push_back(nb);
  }
  m.finish_construction();
  return m;
}

Matroid Matroid::from_bases(const std::vector<std::string>& ground,
                            const std::vector<std::vector<std::string>>& bases) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (idx.count(ground[i])) throw ValidationError("duplicate ground label '" + ground[i] + "'");
    idx[ground[i]] = static_cast<int>(i);
  }
  std::vector<Mask> masks;
  masks.reserve(bases.size());
  for (const auto& b : bases) {
    Mask mb = 0;
    for (const auto& l : b) {
      auto it = idx.find(l);
      if (it == idx.end()) throw ValidationError("basis element '" + l + "' not in ground set");
      if (mb & bit(it->second)) throw ValidationError("repeated element in basis");
      mb |= bit(it->second);
    }
    masks.push_back(mb);
  }
  return from_masks(ground, masks);
}

Matroid Matroid::uniform(int k, const std::vector<std::string>& labels) {
  const int nn = static_cast<int>(labels.size());
  if (k < 0 || k > nn) throw ValidationError("uniform matroid rank out of range");
  std::vector<Mask> bases;
  const Mask full = nn == 0 ? 0 : (Mask(1) << nn) - 1;
  for (Mask s = 0; s <= full; ++s) {
    if (popcount(s) == k) bases.push_back(s);
    if (nn == 0) break;
  }
  return from_masks(labels, bases);
}

Matroid Matroid::uniform_kn(int k, int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return uniform(k, labels);
}

bool Matroid::has_basis(Mask b) const { return std::binary_search(bases_.begin(), bases_.end(), b); }

int Matroid::index_of(const std::string& label) const {
  auto it = std::lower_bound(ground_.begin(), ground_.end(), label);
  if (it == ground_.end() || *it != label) return -1;
  return static_cast<int>(it - ground_.begin());
}

Mask Matroid::mask_of(const std::vector<std::string>& labels) const {
  Mask s = 0;
  for (const auto& l : labels) {
    const int i = index_of(l);
    if (i < 0) throw ValidationError("label '" + l + "' not in ground set");
    s |= bit(i);
  }
  return s;
}

std::vector<std::string> Matroid::labels_of(Mask s) const {
  std::vector<std::string> out;
  Mask rest = s;
  while (rest) {
    const int e = lowest_bit(rest);
    rest &= rest - 1;
    out.push_back(ground_[e]);
  }
  return out;
}

Mask Matroid::closure(Mask s) const {
  Mask c = s;
  const int r = rk(s);
  for (int e = 0; e < n(); ++e)
    if (!(s & bit(e)) && rk(s | bit(e)) == r) c |= bit(e);
  return c;
}

std::vector<Mask> Matroid::flats() const {
  std::vector<Mask> out;
  const Mask full = full_mask();
  for (Mask s = 0; s <= full; ++s) {
    if (is_flat(s)) out.push_back(s);
    if (n() == 0) break;
  }
  return out;
}

std::vector<Mask> Matroid::flats_of_rank(int r) const {
  std::vector<Mask> out;
  for (Mask f : flats())
    if (rk(f) == r) out.push_back(f);
  return out;
}

std::vector<Mask> Matroid::independent_sets(int size) const {
  std::vector<Mask> out;
  const Mask full = full_mask();
  for (Mask s = 0; s <= full; ++s) {
    if (popcount(s) == size && independent(s)) out.push_back(s);
    if (n() == 0) break;
  }
  return out;
}

std::vector<Mask> Matroid::circuits() const {
  std::vector<Mask> out;
  const Mask full = full_mask();
  for (Mask s = 1; s <= full && full != 0; ++s) {
    if (independent(s)) continue;
    bool minimal = true;
    Mask rest = s;
    while (rest && minimal) {
      const int e = lowest_bit(rest);
      rest &= rest - 1;
      if (!independent(s & ~bit(e))) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<Mask> Matroid::broken_circuits() const {
  std::vector<Mask> out;
  for (Mask c : circuits()) out.push_back(c & ~bit(lowest_bit(c)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Matroid::is_nbc(Mask s) const {
  for (Mask b : broken_circuits())
    if (subset_of(b, s)) return false;
  return true;
}

std::vector<Mask> Matroid::nbc_sets(int size) const {
  std::vector<Mask> out;
  const auto bcs = broken_circuits();
  const Mask full = full_mask();
  for (Mask s = 0; s <= full; ++s) {
    if (popcount(s) == size) {
      bool ok = true;
      for (Mask b : bcs)
        if (subset_of(b, s)) {
          ok = false;
          break;
        }
      if (ok) out.push_back(s);
    }
    if (n() == 0) break;
  }
  return out;
}

Mask Matroid::loops() const {
  Mask l = 0;
  for (int e = 0; e < n(); ++e)
    if (rk(bit(e)) == 0) l |= bit(e);
  return l;
}

Mask Matroid::coloops() const {
  Mask c = 0;
  for (int e = 0; e < n(); ++e)
    if (rk(full_mask() & ~bit(e)) == rank_ - 1) c |= bit(e);
  return c;
}

std::vector<Mask> Matroid::components() const {
  std::vector<int> parent(n());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Mask c : circuits()) {
    const int head = lowest_bit(c);
    Mask rest = c & (c - 1);
    while (rest) {
      const int e = lowest_bit(rest);
      rest &= rest - 1;
      parent[find(e)] = find(head);
    }
  }
  std::map<int, Mask> groups;
  for (int e = 0; e < n(); ++e) groups[find(e)] |= bit(e);
  std::vector<Mask> out;
  for (const auto& [root, mask] : groups) out.push_back(mask);
  std::sort(out.begin(), out.end());
  return out;
}

int Matroid::d() const { return n() - static_cast<int>(components().size()); }

Matroid Matroid::restriction(Mask s) const {
  // Bases of M^S are the maximal sets of the form B intersect S.
  int best = rk(s);
  std::vector<Mask> sub;
  for (Mask b : bases_)
    if (popcount(b & s) == best) sub.push_back(b & s);
  // Re-index into the compressed ground set S.
  std::vector<std::string> labels = labels_of(s);
  std::vector<int> posmap(n(), -1);
  {
    int j = 0;
    for (int e = 0; e < n(); ++e)
      if (s & bit(e)) posmap[e] = j++;
  }
  std::vector<Mask> bases;
  for (Mask b : sub) {
    Mask nb = 0;
    Mask rest = b;
    while (rest) {
      const int e = lowest_bit(rest);
      rest &= rest - 1;
      nb |= bit(posmap[e]);
    }
    bases.push_back(nb);
  }
  return from_masks(labels, bases);
}

Matroid Matroid::contraction(Mask s) const {
  const int rs = rk(s);
  const Mask rest_mask = full_mask() & ~s;
  std::vector<Mask> sub;
  for (Mask b : bases_)
    if (popcount(b & s) == rs) sub.push_back(b & rest_mask);
  std::vector<std::string> labels = labels_of(rest_mask);
  std::vector<int> posmap(n(), -1);
  {
    int j = 0;
    for (int e = 0; e < n(); ++e)
      if (rest_mask & bit(e)) posmap[e] = j++;
  }
  std::vector<Mask> bases;
  for (Mask b : sub) {
    Mask nb = 0;
    Mask r = b;
    while (r) {
      const int e = lowest_bit(r);
      r &= r - 1;
      nb |= bit(posmap[e]);
    }
    bases.push_back(nb);
  }
  return from_masks(labels, bases);
}

Matroid Matroid::direct_sum(const Matroid& o) const {
  std::vector<std::string> labels = ground_;
  for (const auto& l : o.ground_) {
    if (index_of(l) >= 0) throw ValidationError("direct sum requires disjoint ground sets");
    labels.push_back(l);
  }
  std::vector<Mask> bases;
  for (Mask a : bases_)
    for (Mask b : o.bases_) bases.push_back(a | (b << n()));
  return from_masks(labels, bases);
}

Matroid Matroid::relabel(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n()) throw ValidationError("relabel permutation arity mismatch");
  std::vector<bool> seen(n(), false);
  for (int p : perm) {
    if (p < 0 || p >= n() || seen[p]) throw ValidationError("relabel is not a permutation");
    seen[p] = true;
  }
  std::vector<Mask> bases;
  for (Mask b : bases_) {
    Mask nb = 0;
    Mask rest = b;
    while (rest) {
      const int e = lowest_bit(rest);
      rest &= rest - 1;
      nb |= bit(perm[e]);
    }
    bases.push_back(nb);
  }
  return from_masks(ground_, bases);
}

UPoly Matroid::characteristic_polynomial() const {
  if (loops() != 0) return UPoly();
  const std::vector<Mask> fl = flats();
  // Mobius values mu(empty set, F) by increasing rank.
  std::vector<Mask> sorted = fl;
  std::sort(sorted.begin(), sorted.end(), [&](Mask a, Mask b) {
    if (rk(a) != rk(b)) return rk(a) < rk(b);
    return a < b;
  });
  std::map<Mask, Rat> mu;
  for (Mask f : sorted) {
    Rat acc = 0;
    for (Mask g : sorted) {
      if (g == f) continue;
      if (subset_of(g, f)) acc += mu[g];
    }
    mu[f] = (f == 0 ? Rat(1) : -acc);
  }
  UPoly chi;
  for (Mask f : sorted) chi.add_coeff(rank_ - rk(f), mu[f]);
  return chi;
}

WeakMap WeakMap::identity_map(const Matroid& src, const Matroid& dst) {
  if (src.ground() != dst.ground()) throw ValidationError("weak map requires matching ground sets");
  std::vector<int> phi(src.n());
  std::iota(phi.begin(), phi.end(), 0);
  return with_perm(src, dst, phi);
}

WeakMap WeakMap::with_relabel(const Matroid& src, const Matroid& dst,
                              const std::map<std::string, std::string>& relabel) {
  if (src.n() != dst.n()) throw ValidationError("weak map requires ground sets of equal size");
  std::vector<int> phi(src.n(), -1);
  for (int i = 0; i < src.n(); ++i) {
    const std::string& l = src.ground()[i];
    auto it = relabel.find(l);
    const std::string target = it == relabel.end() ? l : it->second;
    const int j = dst.index_of(target);
    if (j < 0) throw ValidationError("relabel image '" + target + "' not in target ground set");
    phi[i] = j;
  }
  return with_perm(src, dst, phi);
}

WeakMap WeakMap::with_perm(const Matroid& src, const Matroid& dst, const std::vector<int>& phi) {
  if (src.n() != dst.n() || static_cast<int>(phi.size()) != src.n())
    throw ValidationError("weak map requires ground sets of equal size");
  std::vector<bool> seen(dst.n(), false);
  for (int p : phi) {
    if (p < 0 || p >= dst.n() || seen[p]) throw ValidationError("weak map relabelling is not a bijection");
    seen[p] = true;
  }
  WeakMap w{src, dst, phi};
  // Every basis of dst must be the image of a basis of src.
  std::set<Mask> images;
  for (Mask b : src.bases()) images.insert(w.image(b));
  for (Mask b : dst.bases())
    if (!images.count(b)) throw ValidationError("not a weak map: target basis not an image of a source basis");
  return w;
}

bool WeakMap::is_identity_relabel() const {
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (phi[i] != static_cast<int>(i)) return false;
  return src.ground() == dst.ground();
}

Mask WeakMap::image(Mask s) const {
  Mask out = 0;
  Mask rest = s;
  while (rest) {
    const int e = lowest_bit(rest);
    rest &= rest - 1;
    out |= bit(phi[e]);
  }
  return out;
}

}  // namespace valuator
