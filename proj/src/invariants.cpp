#include "valuator/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace valuator {

namespace {

// Enumerates chains of flats F_lo = start < F_1 < ... < F_r (any r >= 0)
// together with the generating-function weight of the exponent choices, and
// accumulates t^{base + sum m_i} into out.  gap_poly(g) is the polynomial
// sum of t^m over 0 < m < g.
void accumulate_chains(const Matroid& m, Mask start, int start_rank, int degree_base,
                       const UPoly& acc, UPoly& out) {
  out = out + acc * UPoly::monomial(degree_base, 1);
  for (Mask f : m.flats()) {
    if (f == start || !subset_of(start, f)) continue;
    const int gap = m.rk(f) - start_rank;
    if (gap < 2) continue;  // no admissible exponent
    UPoly gap_poly;
    for (int e = 1; e < gap; ++e) gap_poly.add_coeff(e, 1);
    accumulate_chains(m, f, m.rk(f), degree_base, acc * gap_poly, out);
  }
}

}  // namespace

UPoly poincare_poly(const Matroid& m) {
  UPoly p;
  for (int k = 0; k <= m.rank(); ++k) p.add_coeff(k, static_cast<long>(m.nbc_sets(k).size()));
  return p;
}

UPoly chow_poly(const Matroid& m) {
  if (!m.loopless()) return UPoly();
  UPoly out;
  accumulate_chains(m, 0, 0, 0, UPoly::monomial(0, 1), out);
  return out;
}

UPoly aug_chow_poly(const Matroid& m) {
  UPoly out;
  for (Mask f : m.flats())
    accumulate_chains(m, f, m.rk(f), m.rk(f), UPoly::monomial(0, 1), out);
  return out;
}

namespace {

UPoly kl_memoized(const Matroid& m, std::map<Matroid, UPoly>& cache) {
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  UPoly p;
  if (m.loopless() && m.rank() == 0) {
    p.set_coeff(0, 1);
  } else if (m.loopless()) {
    const int k = m.rank();
    // R(t) = t^k P(1/t) - P(t) over nonempty flats.
    UPoly r;
    for (Mask f : m.flats()) {
      if (f == 0) continue;
      r = r + m.restriction(f).characteristic_polynomial() * kl_memoized(m.contraction(f), cache);
    }
    for (int j = 0; 2 * j < k; ++j) p.set_coeff(j, -r.coeff(j));
    if (p.coeff(0) != 1) throw std::logic_error("KL recursion: constant term is not 1");
    // The high coefficients of R must mirror P.
    for (int j = (k + 1) / 2; j <= std::max(k, r.degree()); ++j)
      if (r.coeff(j) != p.coeff(k - j)) throw std::logic_error("KL recursion: palindromy defect mismatch");
  }
  cache.emplace(m, p);
  return p;
}

}  // namespace

UPoly kl_poly(const Matroid& m) {
  std::map<Matroid, UPoly> cache;
  return kl_memoized(m, cache);
}

UPoly z_poly(const Matroid& m) {
  std::map<Matroid, UPoly> cache;
  UPoly z;
  for (Mask f : m.flats()) z = z + UPoly::monomial(m.rk(f), 1) * kl_memoized(m.contraction(f), cache);
  return z;
}

std::map<std::string, long long> g_invariant(const Matroid& m, bool increment_is_y) {
  const int n = m.n();
  if (n > 8) throw ValidationError("G-invariant is capped at 8 elements");
  const char inc = increment_is_y ? 'y' : 'x';
  const char non = increment_is_y ? 'x' : 'y';
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::map<std::string, long long> words;
  do {
    std::string w(n, non);
    Mask prefix = 0;
    int r = 0;
    for (int j = 0; j < n; ++j) {
      prefix |= bit(perm[j]);
      const int nr = m.rk(prefix);
      if (nr > r) w[j] = inc;
      r = nr;
    }
    ++words[w];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return words;
}

namespace {

void extend_cone_chains(const std::vector<Mask>& sets, Mask below, Mask full,
                        BergmanCone& cone, std::vector<BergmanCone>& out) {
  out.push_back(cone);
  for (Mask s : sets) {
    if (s == below || s == full || !subset_of(below, s)) continue;
    cone.chain.push_back(s);
    extend_cone_chains(sets, s, full, cone, out);
    cone.chain.pop_back();
  }
}

std::vector<BergmanCone> cones_from(const Matroid& m, const std::vector<Mask>& indep,
                                    const std::vector<Mask>& sets) {
  if (m.n() > 7) throw ValidationError("Bergman signature is capped at 7 elements");
  std::vector<BergmanCone> out;
  for (Mask i : indep) {
    BergmanCone cone{i, {}};
    // r = 0: the chain is empty and I is unconstrained.
    out.push_back(cone);
    // r >= 1: S_1 contains I, the chain strictly increases, S_r != E.
    for (Mask s : sets) {
      if (s == m.full_mask() || !subset_of(i, s)) continue;
      cone.chain.push_back(s);
      extend_cone_chains(sets, s, m.full_mask(), cone, out);
      cone.chain.pop_back();
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<BergmanCone> bergman_cones(const Matroid& m) {
  std::vector<Mask> indep;
  for (int k = 0; k <= m.rank(); ++k)
    for (Mask s : m.independent_sets(k)) indep.push_back(s);
  return cones_from(m, indep, m.flats());
}

std::vector<BergmanCone> stellahedral_cones(const Matroid& boolean_reference) {
  const Matroid& m = boolean_reference;
  std::vector<Mask> all;
  for (Mask s = 0; s < (Mask(1) << m.n()); ++s) all.push_back(s);
  return cones_from(m, all, all);
}

}  // namespace valuator
