#include "valuator/polytope.hpp"

#include <algorithm>
#include <set>

#include "valuator/linsystem.hpp"

namespace valuator {

Vec vertex_of(const Matroid& m, Mask basis) {
  Vec v(m.n(), Rat(0));
  for (int e = 0; e < m.n(); ++e)
    if (basis & bit(e)) v[e] = 1;
  return v;
}

Vec barycenter(const Matroid& m) {
  Vec v(m.n(), Rat(0));
  for (Mask b : m.bases())
    for (int e = 0; e < m.n(); ++e)
      if (b & bit(e)) v[e] += 1;
  const Rat inv = Rat(1) / static_cast<int>(m.bases().size());
  for (Rat& x : v) x *= inv;
  return v;
}

Vec delta(const Matroid& m, Mask s) {
  Vec v(m.n(), Rat(0));
  for (int e = 0; e < m.n(); ++e)
    if (s & bit(e)) v[e] = 1;
  return v;
}

namespace {

Rat basis_weight(const Matroid& m, Mask b, const Vec& psi) {
  Rat w = 0;
  Mask rest = b;
  while (rest) {
    const int e = lowest_bit(rest);
    rest &= rest - 1;
    w += psi[e];
  }
  return w;
}

}  // namespace

Rat max_value(const Matroid& m, const Vec& psi) {
  Rat best = basis_weight(m, m.bases()[0], psi);
  for (Mask b : m.bases()) {
    const Rat w = basis_weight(m, b, psi);
    if (w > best) best = w;
  }
  return best;
}

Matroid maximize(const Matroid& m, const Vec& psi) {
  const Rat best = max_value(m, psi);
  std::vector<Mask> bases;
  for (Mask b : m.bases())
    if (basis_weight(m, b, psi) == best) bases.push_back(b);
  return Matroid::from_masks(m.ground(), bases);
}

QMatrix vspace_basis(const Matroid& m) {
  const int n = m.n();
  const Vec v0 = vertex_of(m, m.bases()[0]);
  std::vector<Vec> chosen;
  for (std::size_t i = 1; i < m.bases().size(); ++i) {
    Vec diff = vertex_of(m, m.bases()[i]);
    for (int e = 0; e < n; ++e) diff[e] -= v0[e];
    chosen.push_back(diff);
    if (QMatrix::from_cols(chosen).rank() < static_cast<int>(chosen.size())) chosen.pop_back();
  }
  return QMatrix::from_cols(chosen);
}

std::vector<Matroid> all_faces(const Matroid& m) {
  // Work on basis lists and construct each distinct face only once: matroid
  // construction re-validates the exchange axiom, which would dominate if
  // done per (face, functional) pair.
  std::set<std::vector<Mask>> seen;
  std::vector<std::vector<Mask>> queue = {m.bases()};
  seen.insert(m.bases());
  auto argmax = [&](const std::vector<Mask>& bases, Mask s) {
    int best = 0;
    for (Mask b : bases) best = std::max(best, popcount(b & s));
    std::vector<Mask> out;
    for (Mask b : bases)
      if (popcount(b & s) == best) out.push_back(b);
    return out;
  };
  while (!queue.empty()) {
    std::vector<Mask> cur = std::move(queue.back());
    queue.pop_back();
    for (Mask s = 1; s < m.full_mask(); ++s) {
      std::vector<Mask> f = argmax(cur, s);
      if (f.size() < cur.size() && !seen.count(f)) {
        seen.insert(f);
        queue.push_back(f);
      }
    }
  }
  std::vector<Matroid> out;
  for (const auto& bases : seen) out.push_back(Matroid::from_masks(m.ground(), bases));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_face_of(const Matroid& face, const Matroid& m) {
  if (face.ground() != m.ground()) return false;
  for (Mask b : face.bases())
    if (!m.has_basis(b)) return false;
  // Find psi and c with psi . v = c on the face's vertices and
  // psi . v <= c - 1 on all other vertices of P(m).  Scaling makes the
  // gap-1 normalization harmless.
  const int n = m.n();
  LinSystem sys(n + 1);  // variables: psi_0..psi_{n-1}, c
  for (Mask b : face.bases()) {
    Vec a(n + 1, Rat(0));
    for (int e = 0; e < n; ++e)
      if (b & bit(e)) a[e] = 1;
    a[n] = -1;
    sys.add_eq(a, Rat(0));
  }
  for (Mask b : m.bases()) {
    if (face.has_basis(b)) continue;
    Vec a(n + 1, Rat(0));
    for (int e = 0; e < n; ++e)
      if (b & bit(e)) a[e] = 1;
    a[n] = -1;
    sys.add_le(a, Rat(-1));
  }
  return sys.feasible();
}

bool is_internal_face(const Matroid& q, const Matroid& m) {
  if (q.ground() != m.ground()) throw ValidationError("internality test requires matching ground sets");
  const Vec b = barycenter(q);
  const int n = m.n();
  // Coordinate lower bounds x_e >= 0.
  for (int e = 0; e < n; ++e) {
    bool constant = true;
    const Rat first = vertex_of(m, m.bases()[0])[e];
    for (Mask bb : m.bases())
      if (Rat((bb & bit(e)) ? 1 : 0) != first) {
        constant = false;
        break;
      }
    if (!constant && b[e] == 0) return false;
  }
  // Rank upper bounds delta_S <= rk(S).
  for (Mask s = 1; s < m.full_mask(); ++s) {
    const int lo = [&] {
      int best = popcount(m.bases()[0] & s);
      for (Mask bb : m.bases()) best = std::min(best, popcount(bb & s));
      return best;
    }();
    if (lo == m.rk(s)) continue;  // constant would need lo == max; non-tight anywhere
    Rat val = 0;
    for (int e = 0; e < n; ++e)
      if (s & bit(e)) val += b[e];
    if (val == m.rk(s)) return false;
  }
  return true;
}

}  // namespace valuator
