#include "valuator/equivariant.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "valuator/catalog.hpp"

namespace valuator {

// --- permutations -----------------------------------------------------------

std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

std::vector<int> perm_inverse(const std::vector<int>& a) {
  std::vector<int> inv(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) inv[a[i]] = static_cast<int>(i);
  return inv;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<int> lens;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::vector<int> cycle_type_on(const std::vector<int>& perm, Mask support) {
  std::vector<int> lens;
  Mask seen = 0;
  for (Mask rest = support; rest; rest &= rest - 1) {
    const int i = lowest_bit(rest);
    if (seen & bit(i)) continue;
    int len = 0;
    for (int j = i; !(seen & bit(j)); j = perm[j]) {
      if (!(support & bit(j)))
        throw ValidationError("support is not invariant under the permutation");
      seen |= bit(j);
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::string cycle_type_string(const std::vector<int>& type) {
  std::string out;
  for (std::size_t i = 0; i < type.size(); ++i)
    out += (i ? "+" : "") + std::to_string(type[i]);
  return out.empty() ? "0" : out;
}

PermGroup PermGroup::trivial(int n) {
  PermGroup g;
  g.n = n;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  g.elements.push_back(id);
  return g;
}

PermGroup PermGroup::generate(int n, const std::vector<std::vector<int>>& gens) {
  constexpr std::size_t kMaxOrder = 100000;
  PermGroup g = trivial(n);
  std::set<std::vector<int>> seen(g.elements.begin(), g.elements.end());
  for (const auto& p : gens)
    if (static_cast<int>(p.size()) != n) throw ValidationError("generator has wrong size");
  std::size_t head = 0;
  while (head < g.elements.size()) {
    const std::vector<int> cur = g.elements[head++];
    for (const auto& p : gens) {
      std::vector<int> next = perm_compose(p, cur);
      if (seen.insert(next).second) {
        g.elements.push_back(std::move(next));
        if (g.elements.size() > kMaxOrder) throw ValidationError("group too large");
      }
    }
  }
  return g;
}

PermGroup PermGroup::symmetric_on(int n, Mask support) {
  std::vector<int> members;
  for (Mask rest = support; rest; rest &= rest - 1) members.push_back(lowest_bit(rest));
  std::vector<std::vector<int>> gens;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  if (members.size() >= 2) {
    std::vector<int> t = id;
    std::swap(t[members[0]], t[members[1]]);
    gens.push_back(t);
    std::vector<int> c = id;
    for (std::size_t i = 0; i < members.size(); ++i)
      c[members[i]] = members[(i + 1) % members.size()];
    gens.push_back(c);
  }
  return generate(n, gens);
}

PermGroup PermGroup::full_automorphisms(const Matroid& m) {
  PermGroup g;
  g.n = m.n();
  g.elements = automorphisms(m);
  // automorphisms() emits in lexicographic order, so the identity is first.
  return g;
}

std::vector<std::size_t> PermGroup::conjugacy_class_reps() const {
  std::vector<std::size_t> reps;
  std::set<std::vector<int>> assigned;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (assigned.count(elements[i])) continue;
    reps.push_back(i);
    for (const auto& g : elements)
      assigned.insert(perm_compose(g, perm_compose(elements[i], perm_inverse(g))));
  }
  return reps;
}

std::vector<std::size_t> PermGroup::conjugacy_class_sizes() const {
  std::vector<std::size_t> sizes;
  for (std::size_t r : conjugacy_class_reps()) {
    std::set<std::vector<int>> cls;
    for (const auto& g : elements)
      cls.insert(perm_compose(g, perm_compose(elements[r], perm_inverse(g))));
    sizes.push_back(cls.size());
  }
  return sizes;
}

PermGroup PermGroup::stabilizer_of(Mask f) const {
  PermGroup g;
  g.n = n;
  for (const auto& p : elements)
    if (apply_perm(f, p) == f) g.elements.push_back(p);
  return g;
}

std::vector<PermGroup> PermGroup::subgroups() const {
  if (elements.size() > 16) throw ValidationError("subgroup enumeration capped at order 16");
  std::vector<PermGroup> out;
  std::set<std::vector<std::vector<int>>> seen;
  const std::size_t m = elements.size();
  for (std::size_t sub = 0; sub < (std::size_t(1) << m); ++sub) {
    std::vector<std::vector<int>> gens;
    for (std::size_t i = 0; i < m; ++i)
      if (sub & (std::size_t(1) << i)) gens.push_back(elements[i]);
    PermGroup h = generate(n, gens);
    std::vector<std::vector<int>> key = h.elements;
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second) out.push_back(std::move(h));
  }
  return out;
}

bool PermGroup::preserves(const Matroid& m) const {
  for (const auto& p : elements)
    if (m.relabel(p) != m) return false;
  return true;
}

// --- characters -------------------------------------------------------------

namespace {

// Columns spanning the direction space of P(m): a maximal independent set of
// e_B - e_{B_0}.
QMatrix direction_basis(const Matroid& m) {
  const int nn = m.n();
  const Mask b0 = m.bases()[0];
  std::vector<Vec> cols;
  QMatrix cur(nn, 0);
  for (Mask b : m.bases()) {
    if (b == b0) continue;
    Vec v(nn, Rat(0));
    for (int i = 0; i < nn; ++i) v[i] = Rat(int(bool(b & bit(i))) - int(bool(b0 & bit(i))));
    std::vector<Vec> trial = cols;
    trial.push_back(v);
    QMatrix t = QMatrix::from_cols(trial);
    if (t.rank() == static_cast<int>(trial.size())) cols = std::move(trial);
  }
  return cols.empty() ? QMatrix(nn, 0) : QMatrix::from_cols(cols);
}

QMatrix permute_rows(const QMatrix& a, const std::vector<int>& gamma) {
  QMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(gamma[i], j) = a.at(i, j);
  return out;
}

bool is_perm_basis(const FunctorSpec& f) { return f.name != "os"; }

}  // namespace

int det_character(const Matroid& m, const std::vector<int>& gamma) {
  if (m.relabel(gamma) != m) throw ValidationError("permutation does not preserve the matroid");
  const QMatrix b = direction_basis(m);
  if (b.cols() == 0) return 1;
  const QMatrix c = b.solve_in_column_space(permute_rows(b, gamma));
  const Rat d = c.det();
  if (d != 1 && d != -1) throw std::logic_error("direction-space determinant is not a sign");
  return d == 1 ? 1 : -1;
}

std::map<Deg, Rat> trace_on(const FunctorSpec& f, const Matroid& m,
                            const std::vector<int>& gamma) {
  if (!f.equivariant)
    throw ValidationError("functor " + f.name + " does not act on relabellings");
  const WeakMap w = WeakMap::with_perm(m, m, gamma);
  const MorBlocks blocks = f.mor(w);
  std::map<Deg, Rat> tr;
  for (const auto& [d, dim] : f.obj(m).dims()) {
    Rat t(0);
    auto it = blocks.find(d);
    if (it != blocks.end())
      for (int i = 0; i < dim; ++i) t += it->second.at(i, i);
    if (is_perm_basis(f) && denominator(t) != 1)
      throw std::logic_error("non-integral trace for a permutation-basis functor");
    tr[d] = t;
  }
  return tr;
}

CharReport character_identity_check(const SignedComplex& c, const PermGroup& g,
                                    const FunctorSpec& f) {
  // The group must permute the cells in each position.
  for (const auto& gamma : g.elements)
    for (const auto& level : c.cells) {
      std::vector<Matroid> imgs;
      imgs.reserve(level.size());
      for (const Matroid& cell : level) imgs.push_back(cell.relabel(gamma));
      std::sort(imgs.begin(), imgs.end());
      std::vector<Matroid> orig = level;
      std::sort(orig.begin(), orig.end());
      if (imgs != orig) throw ValidationError("group does not preserve the decomposition");
    }

  CharReport rep;
  for (std::size_t gi = 0; gi < g.elements.size(); ++gi) {
    const auto& gamma = g.elements[gi];
    std::map<Deg, Rat> acc;
    for (int k = 0; k <= c.top; ++k) {
      const Rat sign = (k % 2 == 0) ? 1 : -1;
      for (const Matroid& cell : c.cells[k]) {
        if (cell.relabel(gamma) != cell) continue;
        const Rat dc = det_character(cell, gamma);
        for (const auto& [d, t] : trace_on(f, cell, gamma)) acc[d] += sign * dc * t;
      }
    }
    for (const auto& [d, v] : acc)
      if (v != 0) {
        rep.pass = false;
        std::ostringstream os;
        os << f.name << ": element " << gi << " (" << cycle_type_string(cycle_type(gamma))
           << ") degree (" << d.first << "," << d.second << ") sum " << v.str();
        rep.detail = os.str();
        return rep;
      }
  }
  return rep;
}

Matroid relax_orbit(const Matroid& m, const std::vector<Mask>& orbit) {
  std::vector<Mask> bases = m.bases();
  for (Mask g : orbit) {
    const auto extra = cusp(m, g);
    bases.insert(bases.end(), extra.begin(), extra.end());
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return Matroid::from_masks(m.ground(), bases);
}

CharReport virtual_identity_check(const Matroid& m, Mask f, const PermGroup& g,
                                  const FunctorSpec& phi) {
  const std::vector<Mask> orbit = orbit_of(f, g.elements);
  const Matroid mt = relax_orbit(m, orbit);

  CharReport rep;
  for (std::size_t gi = 0; gi < g.elements.size(); ++gi) {
    const auto& gamma = g.elements[gi];
    std::map<Deg, Rat> lhs = trace_on(phi, mt, gamma);
    std::map<Deg, Rat> rhs = trace_on(phi, m, gamma);
    for (Mask G : orbit) {
      if (apply_perm(G, gamma) != G) continue;
      for (const auto& [d, t] : trace_on(phi, lambda_matroid(m, G), gamma)) rhs[d] += t;
      for (const auto& [d, t] : trace_on(phi, pi_matroid(m, G), gamma)) rhs[d] -= t;
    }
    std::set<Deg> degs;
    for (const auto& [d, t] : lhs) degs.insert(d);
    for (const auto& [d, t] : rhs) degs.insert(d);
    for (Deg d : degs) {
      const Rat a = lhs.count(d) ? lhs[d] : Rat(0);
      const Rat b = rhs.count(d) ? rhs[d] : Rat(0);
      if (a != b) {
        rep.pass = false;
        std::ostringstream os;
        os << phi.name << ": element " << gi << " degree (" << d.first << "," << d.second
           << "): relaxed " << a.str() << " vs sum " << b.str();
        rep.detail = os.str();
        return rep;
      }
    }
  }
  return rep;
}

// --- skew characters --------------------------------------------------------

namespace {

Partition trimmed(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) throw ValidationError("not a partition");
  if (!p.empty() && p.back() < 0) throw ValidationError("negative part");
  return p;
}

int part(const Partition& p, std::size_t i) { return i < p.size() ? p[i] : 0; }

void check_shape(const SkewShape& s) {
  for (std::size_t i = 0; i < s.inner.size(); ++i)
    if (part(s.inner, i) > part(s.outer, i))
      throw ValidationError("inner shape not contained in outer shape");
}

// Is outer/nu a border strip (connected, no 2x2 block)?
bool is_border_strip(const Partition& outer, const Partition& nu) {
  int first = -1, last = -1;
  for (std::size_t t = 0; t < outer.size(); ++t) {
    if (part(outer, t) > part(nu, t)) {
      if (first < 0) first = static_cast<int>(t);
      last = static_cast<int>(t);
    }
  }
  if (first < 0) return false;
  for (int t = first; t <= last; ++t) {
    if (part(outer, t) == part(nu, t)) return false;  // disconnected rows
    if (t < last && part(nu, t) != part(outer, t + 1) - 1) return false;
  }
  return true;
}

// All partitions nu with inner <= nu <= outer and |nu| = |outer| - r such
// that outer/nu is a border strip; emits (nu, height).
void strip_removals(const Partition& outer, const Partition& inner, int r,
                    std::vector<std::pair<Partition, int>>& out) {
  // A border strip occupies a row interval [i, j]; rows i..j-1 are forced to
  // nu_t = outer_{t+1} - 1, and nu_j absorbs the remaining cells.
  const int nrows = static_cast<int>(outer.size());
  for (int i = 0; i < nrows; ++i) {
    for (int j = i; j < nrows; ++j) {
      Partition nu = outer;
      int removed = 0;
      bool ok = true;
      for (int t = i; t < j; ++t) {
        nu[t] = part(outer, t + 1) - 1;
        if (nu[t] < 0) {
          ok = false;
          break;
        }
        removed += outer[t] - nu[t];
      }
      if (!ok) continue;
      const int from_last = r - removed;
      if (from_last <= 0) continue;
      nu[j] = outer[j] - from_last;
      if (nu[j] < 0 || nu[j] < part(outer, j + 1)) continue;
      if (j > i && nu[j] > nu[j - 1]) continue;
      bool contains = true;
      for (int t = 0; t < nrows; ++t)
        if (part(nu, t) < part(inner, t)) {
          contains = false;
          break;
        }
      if (!contains) continue;
      if (!is_border_strip(outer, nu)) continue;
      out.emplace_back(trimmed(nu), j - i);
    }
  }
}

}  // namespace

int SkewShape::size() const {
  int s = 0;
  for (int p : outer) s += p;
  for (int p : inner) s -= p;
  return s;
}

long long syt_count(const SkewShape& s) {
  check_shape(s);
  if (s.size() == 0) return 1;
  long long total = 0;
  for (std::size_t t = 0; t < s.outer.size(); ++t) {
    if (s.outer[t] == 0) continue;
    if (part(s.outer, t + 1) == s.outer[t]) continue;       // not a corner
    if (s.outer[t] - 1 < part(s.inner, t)) continue;        // would cut into inner
    Partition smaller = s.outer;
    smaller[t] -= 1;
    total += syt_count({trimmed(smaller), s.inner});
  }
  return total;
}

Rat mn_skew_character(const SkewShape& s, const Partition& rho) {
  check_shape(s);
  int rho_size = 0;
  for (int p : rho) rho_size += p;
  if (rho_size != s.size()) throw ValidationError("cycle type size mismatch");
  if (s.size() == 0) return 1;

  // Remove the largest part of rho as a border strip of the outer shape.
  Partition rest = rho;
  std::sort(rest.rbegin(), rest.rend());
  const int r = rest.front();
  rest.erase(rest.begin());

  std::vector<std::pair<Partition, int>> removals;
  strip_removals(s.outer, s.inner, r, removals);
  Rat total(0);
  for (const auto& [nu, height] : removals) {
    const Rat sign = (height % 2 == 0) ? 1 : -1;
    total += sign * mn_skew_character({nu, s.inner}, rest);
  }
  return total;
}

// --- equivariant Kazhdan-Lusztig --------------------------------------------

Rat eq_kl_coeff(const Matroid& m, const std::vector<int>& gamma, int i) {
  static const FunctorSpec f = kl_bigraded();
  Rat acc(0);
  for (const auto& [d, t] : trace_on(f, m, gamma))
    if (d.first == i) acc += (d.second % 2 == 0) ? t : -t;
  return acc;
}

HyperplanePair hyperplane_pair(int k, int h) {
  if (k < 1 || h < k - 1 || h + 1 > Matroid::kMaxGround)
    throw ValidationError("hyperplane pair out of range");
  std::vector<std::string> hl, el;
  for (int i = 1; i <= h; ++i) hl.push_back(std::to_string(i));
  el.push_back(std::to_string(h + 1));
  const Mask hm = (Mask(1) << h) - 1;
  Matroid pi = Matroid::uniform(1, el).direct_sum(Matroid::uniform(k - 1, hl));
  Matroid lam = relax(pi, hm);
  HyperplanePair hp(std::move(pi), std::move(lam));
  hp.h_mask = hm;
  hp.sym = PermGroup::symmetric_on(h + 1, hm);
  return hp;
}

SkewShape kl_correction_shape(int i, int k, int h) {
  Partition outer{h - 2 * i + 1};
  for (int t = 0; t < i; ++t) outer.push_back(k - 2 * i + 1);
  Partition inner{k - 2 * i};
  for (int t = 0; t + 1 < i; ++t) inner.push_back(k - 2 * i - 1);
  SkewShape s{trimmed(outer), trimmed(inner)};
  if (s.size() != h) throw std::logic_error("skew shape has wrong size");
  return s;
}

CharReport kl_correction_check(int k, int h) {
  const HyperplanePair hp = hyperplane_pair(k, h);
  CharReport rep;
  for (std::size_t ri : hp.sym.conjugacy_class_reps()) {
    const auto& gamma = hp.sym.elements[ri];
    const Partition rho = cycle_type_on(gamma, hp.h_mask);
    for (int i = 0; 2 * i <= k; ++i) {
      const Rat diff = eq_kl_coeff(hp.lambda, gamma, i) - eq_kl_coeff(hp.pi, gamma, i);
      const Rat want =
          (i > 0 && 2 * i < k) ? mn_skew_character(kl_correction_shape(i, k, h), rho) : Rat(0);
      if (diff != want) {
        rep.pass = false;
        std::ostringstream os;
        os << "k=" << k << " h=" << h << " class " << cycle_type_string(rho) << " t^" << i
           << ": KL difference " << diff.str() << " vs skew character " << want.str();
        rep.detail = os.str();
        return rep;
      }
    }
  }
  return rep;
}

OsExponentReport os_correction_report(int k, int h) {
  const HyperplanePair hp = hyperplane_pair(k, h);
  OsExponentReport rep;

  // Matrix of gamma on the standard representation of S_h, basis
  // e_i - e_{h-1} for i = 0..h-2.
  auto std_matrix = [&](const std::vector<int>& gamma) {
    QMatrix s(h - 1, h - 1);
    for (int i = 0; i + 1 < h; ++i) {
      const int gi = gamma[i], glast = gamma[h - 1];
      if (gi != h - 1) s.at(gi, i) += 1;
      if (glast != h - 1) s.at(glast, i) -= 1;
    }
    return s;
  };

  std::ostringstream detail;
  const FunctorSpec osf = os();
  for (std::size_t ri : hp.sym.conjugacy_class_reps()) {
    const auto& gamma = hp.sym.elements[ri];
    auto trl = trace_on(osf, hp.lambda, gamma);
    auto trp = trace_on(osf, hp.pi, gamma);
    std::map<Deg, Rat> diff;
    for (const auto& [d, t] : trl) diff[d] += t;
    for (const auto& [d, t] : trp) diff[d] -= t;
    for (const auto& [d, v] : diff)
      if (d.first != k - 1 && d.first != k && v != 0)
        throw std::logic_error("OS difference outside degrees k-1 and k");
    const QMatrix s = std_matrix(gamma);
    const Rat wedge_km1 = s.ext_trace(k - 1), wedge_k = s.ext_trace(k);
    const Rat dk1 = diff.count({k - 1, 0}) ? diff[{k - 1, 0}] : Rat(0);
    const Rat dk = diff.count({k, 0}) ? diff[{k, 0}] : Rat(0);
    if (dk1 != wedge_km1 || dk != wedge_km1) rep.matches_km1 = false;
    if (dk1 != wedge_k || dk != wedge_k) rep.matches_k = false;
    detail << cycle_type_string(cycle_type_on(gamma, hp.h_mask)) << ": diff(" << dk1.str() << ","
           << dk.str() << ") wedge^" << (k - 1) << "=" << wedge_km1.str() << " wedge^" << k << "="
           << wedge_k.str() << "; ";
  }
  rep.detail = detail.str();
  return rep;
}

}  // namespace valuator
