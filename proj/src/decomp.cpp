#include "valuator/decomp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "valuator/linsystem.hpp"

namespace valuator {

namespace {

std::string describe(const Matroid& m) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < m.bases().size(); ++i) {
    if (i) os << ",";
    const auto labels = m.labels_of(m.bases()[i]);
    for (std::size_t j = 0; j < labels.size(); ++j) os << (j ? " " : "") << labels[j];
  }
  os << "}";
  return os.str();
}

bool bases_subset(const Matroid& small, const Matroid& big) {
  for (Mask b : small.bases())
    if (!big.has_basis(b)) return false;
  return true;
}

}  // namespace

Decomposition Decomposition::build(const Matroid& target, const std::vector<Matroid>& faces) {
  Decomposition d(target);
  d.faces_ = faces;
  std::sort(d.faces_.begin(), d.faces_.end());
  for (std::size_t i = 0; i + 1 < d.faces_.size(); ++i)
    if (d.faces_[i] == d.faces_[i + 1]) throw ValidationError("duplicate face in decomposition");
  if (d.faces_.empty()) throw ValidationError("decomposition has no faces");
  d.d_ = target.d();
  for (const Matroid& f : d.faces_) {
    if (f.ground() != target.ground())
      throw ValidationError("decomposition face has a different ground set than the target");
    if (!bases_subset(f, target))
      throw ValidationError("decomposition face " + describe(f) + " has a basis the target lacks");
  }
  // Closure under faces: one maximization step from any listed face must
  // land on a listed face.  Work on basis lists to avoid re-validating a
  // matroid per (face, functional) pair.
  std::set<std::vector<Mask>> present;
  for (const Matroid& f : d.faces_) present.insert(f.bases());
  bool has_maximal = false;
  for (const Matroid& f : d.faces_) {
    if (f.d() > d.d_) throw ValidationError("face dimension exceeds target dimension");
    if (f.d() == d.d_) has_maximal = true;
    for (Mask s = 1; s < target.full_mask(); ++s) {
      int best = 0;
      for (Mask b : f.bases()) best = std::max(best, popcount(b & s));
      std::vector<Mask> sub;
      for (Mask b : f.bases())
        if (popcount(b & s) == best) sub.push_back(b);
      if (!present.count(sub))
        throw ValidationError("decomposition is not closed under taking faces");
    }
  }
  if (!has_maximal) throw ValidationError("decomposition has no maximal cell");
  for (const Matroid& f : d.faces_) {
    d.dims_.push_back(f.d());
    d.internal_.push_back(is_internal_face(f, target));
  }
  return d;
}

std::vector<std::size_t> Decomposition::internal_of_dim(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (internal_[i] && dims_[i] == k) out.push_back(i);
  return out;
}

std::vector<std::size_t> Decomposition::maximal_cells() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (dims_[i] == d_) out.push_back(i);
  return out;
}

bool contains_point(const Matroid& m, const Vec& x) {
  for (const Rat& c : x)
    if (c < 0) return false;
  Rat total = 0;
  for (const Rat& c : x) total += c;
  if (total != m.rank()) return false;
  for (Mask s = 1; s < m.full_mask(); ++s) {
    Rat v = 0;
    for (int e = 0; e < m.n(); ++e)
      if (s & bit(e)) v += x[e];
    if (v > m.rk(s)) return false;
  }
  return true;
}

namespace {

// Exact emptiness test for the intersection of two base polytopes.
bool polytopes_disjoint(const Matroid& a, const Matroid& b) {
  const int n = a.n();
  LinSystem sys(n);
  for (int e = 0; e < n; ++e) {
    Vec unit(n, Rat(0));
    unit[e] = 1;
    sys.add_ge(unit, Rat(0));
  }
  Vec ones(n, Rat(1));
  sys.add_eq(ones, Rat(a.rank()));
  for (Mask s = 1; s < a.full_mask(); ++s) {
    Vec ind = delta(a, s);
    const int ra = a.rk(s), rb = b.rk(s);
    sys.add_le(ind, Rat(std::min(ra, rb)));
  }
  return !sys.feasible();
}

}  // namespace

void Decomposition::validate(unsigned seed, int random_samples) const {
  // (a) pairwise intersections among maximal cells and internal faces.
  std::vector<std::size_t> heavy = maximal_cells();
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (internal_[i] && dims_[i] < d_) heavy.push_back(i);
  std::set<std::vector<Mask>> present;
  for (const Matroid& f : faces_) present.insert(f.bases());
  for (std::size_t a = 0; a < heavy.size(); ++a)
    for (std::size_t b = a + 1; b < heavy.size(); ++b) {
      const Matroid& fa = faces_[heavy[a]];
      const Matroid& fb = faces_[heavy[b]];
      std::vector<Mask> common;
      std::set_intersection(fa.bases().begin(), fa.bases().end(), fb.bases().begin(), fb.bases().end(),
                            std::back_inserter(common));
      if (common.empty()) {
        if (!polytopes_disjoint(fa, fb))
          throw ValidationError("cells " + describe(fa) + " and " + describe(fb) +
                                " intersect but share no vertex");
        continue;
      }
      Matroid inter = [&] {
        try {
          return Matroid::from_masks(target_.ground(), common);
        } catch (const ValidationError&) {
          throw ValidationError("common bases of " + describe(fa) + " and " + describe(fb) +
                                " do not form a matroid");
        }
      }();
      if (!is_face_of(inter, fa) || !is_face_of(inter, fb))
        throw ValidationError("intersection of " + describe(fa) + " and " + describe(fb) +
                              " is not a common face");
      if (!present.count(inter.bases()))
        throw ValidationError("common face of two cells is missing from the face list");
    }

  // (b)+(c) covering and the signed indicator identity on sample points.
  std::vector<Vec> samples;
  for (Mask bb : target_.bases()) samples.push_back(vertex_of(target_, bb));
  for (const Matroid& f : faces_) samples.push_back(barycenter(f));
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick_vertex(0, static_cast<int>(target_.bases().size()) - 1);
  std::uniform_int_distribution<int> pick_weight(1, 7);
  std::uniform_int_distribution<int> pick_count(2, 3);
  for (int t = 0; t < random_samples; ++t) {
    const int k = pick_count(rng);
    Vec x(target_.n(), Rat(0));
    Rat wsum = 0;
    for (int j = 0; j < k; ++j) {
      const Vec v = vertex_of(target_, target_.bases()[pick_vertex(rng)]);
      const int w = pick_weight(rng);
      wsum += w;
      for (int e = 0; e < target_.n(); ++e) x[e] += Rat(w) * v[e];
    }
    for (int e = 0; e < target_.n(); ++e) x[e] /= wsum;
    samples.push_back(std::move(x));
  }
  const std::vector<std::size_t> cells = maximal_cells();
  for (const Vec& x : samples) {
    bool covered = false;
    for (std::size_t ci : cells)
      if (contains_point(faces_[ci], x)) {
        covered = true;
        break;
      }
    if (!covered) throw ValidationError("a point of the target polytope is not covered by any maximal cell");
    long alt = 0;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      if (!internal_[i]) continue;
      if (contains_point(faces_[i], x)) alt += (dims_[i] % 2 == 0) ? 1 : -1;
    }
    alt += ((d_ + 1) % 2 == 0) ? 1 : -1;  // the target contains every sample
    if (alt != 0) throw ValidationError("signed indicator identity fails at a sample point");
  }

  // (d) sandwich cardinality and connectivity of the internal adjacency
  // graphs.
  auto internal_dim = [&](int k) { return internal_of_dim(k); };
  for (int k = 1; k <= d_; ++k) {
    const auto lows = internal_dim(k - 1);
    const auto mids = internal_dim(k);
    // Upper layer: internal (k+1)-faces, or the target alone at k = d.
    std::vector<std::vector<Mask>> uppers;
    if (k == d_)
      uppers.push_back(target_.bases());
    else
      for (std::size_t i : internal_dim(k + 1)) uppers.push_back(faces_[i].bases());
    for (std::size_t lo : lows) {
      const auto& rb = faces_[lo].bases();
      std::vector<std::size_t> verts;
      for (std::size_t mi : mids) {
        const auto& qb = faces_[mi].bases();
        if (std::includes(qb.begin(), qb.end(), rb.begin(), rb.end())) verts.push_back(mi);
      }
      std::map<std::size_t, std::size_t> comp;
      for (std::size_t v : verts) comp[v] = v;
      std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
      };
      for (const auto& sb : uppers) {
        if (!std::includes(sb.begin(), sb.end(), rb.begin(), rb.end())) continue;
        std::vector<std::size_t> between;
        for (std::size_t v : verts) {
          const auto& qb = faces_[v].bases();
          if (std::includes(sb.begin(), sb.end(), qb.begin(), qb.end())) between.push_back(v);
        }
        if (between.size() != 2)
          throw ValidationError("an internal face sandwich does not contain exactly two middle faces");
        comp[find(between[0])] = find(between[1]);
      }
      std::set<std::size_t> roots;
      for (std::size_t v : verts) roots.insert(find(v));
      if (roots.size() > 1)
        throw ValidationError("the adjacency graph over an internal face is disconnected");
    }
  }
}

void SignedComplex::assert_square_zero() const {
  for (int k = 2; k <= top; ++k) {
    if (diff[k].cols() == 0 || diff[k - 1].rows() == 0) continue;
    if (!(diff[k - 1] * diff[k]).is_zero())
      throw std::logic_error("signed incidence differential does not square to zero");
  }
}

namespace {

int facet_sign(const Matroid& q, const QMatrix& omega_q, const Matroid& r, const QMatrix& omega_r) {
  // Outward normal direction: from a vertex of Q off aff(R) toward R.
  Mask off = 0;
  for (Mask b : q.bases())
    if (!r.has_basis(b)) {
      off = b;
      break;
    }
  const Vec x = vertex_of(q, off);
  const Vec y = vertex_of(r, r.bases()[0]);
  const int n = q.n();
  std::vector<Vec> cols;
  Vec nout(n);
  for (int e = 0; e < n; ++e) nout[e] = y[e] - x[e];
  cols.push_back(nout);
  for (int j = 0; j < omega_r.cols(); ++j) cols.push_back(omega_r.col(j));
  const QMatrix c = omega_q.solve_in_column_space(QMatrix::from_cols(cols));
  const int s = sign_of(c.det());
  if (s == 0) throw std::logic_error("degenerate facet orientation");
  return s;
}

int top_sign(const QMatrix& omega_p, const QMatrix& omega_q) {
  const int s = sign_of(omega_p.solve_in_column_space(omega_q).det());
  if (s == 0) throw std::logic_error("degenerate top orientation");
  return s;
}

}  // namespace

SignedComplex build_complex(const Decomposition& dec) {
  SignedComplex c(dec.target());
  const int d = dec.d();
  c.top = d + 1;
  c.cells.assign(d + 2, {});
  for (int k = 0; k <= d; ++k)
    for (std::size_t i : dec.internal_of_dim(k)) c.cells[k].push_back(dec.faces()[i]);
  c.cells[d + 1] = {dec.target()};

  std::vector<std::vector<QMatrix>> omega(d + 2);
  for (int k = 0; k <= d + 1; ++k)
    for (const Matroid& f : c.cells[k]) omega[k].push_back(vspace_basis(f));

  c.diff.assign(d + 2, QMatrix());
  for (int k = 1; k <= d; ++k) {
    QMatrix m(static_cast<int>(c.cells[k - 1].size()), static_cast<int>(c.cells[k].size()));
    for (std::size_t qi = 0; qi < c.cells[k].size(); ++qi)
      for (std::size_t ri = 0; ri < c.cells[k - 1].size(); ++ri) {
        const Matroid& q = c.cells[k][qi];
        const Matroid& r = c.cells[k - 1][ri];
        if (!std::includes(q.bases().begin(), q.bases().end(), r.bases().begin(), r.bases().end())) continue;
        m.at(static_cast<int>(ri), static_cast<int>(qi)) =
            facet_sign(q, omega[k][qi], r, omega[k - 1][ri]);
      }
    c.diff[k] = std::move(m);
  }
  {
    QMatrix m(static_cast<int>(c.cells[d].size()), 1);
    for (std::size_t qi = 0; qi < c.cells[d].size(); ++qi)
      m.at(static_cast<int>(qi), 0) = top_sign(omega[d + 1][0], omega[d][qi]);
    c.diff[d + 1] = std::move(m);
  }
  c.assert_square_zero();
  return c;
}

std::vector<int> tau_homology(const SignedComplex& c) {
  std::vector<int> h(c.top + 1, 0);
  std::vector<int> rk(c.top + 2, 0);
  for (int k = 1; k <= c.top; ++k) rk[k] = c.diff[k].cols() == 0 ? 0 : c.diff[k].rank();
  for (int k = 0; k <= c.top; ++k)
    h[k] = static_cast<int>(c.cells[k].size()) - rk[k] - rk[k + 1];
  return h;
}

bool is_stressed(const Matroid& m, Mask f) {
  if (!m.is_flat(f)) return false;
  auto is_uniform = [](const Matroid& x) {
    long count = 1;
    for (int i = 0; i < x.rank(); ++i) count = count * (x.n() - i) / (i + 1);
    return static_cast<long>(x.bases().size()) == count;
  };
  return is_uniform(m.restriction(f)) && is_uniform(m.contraction(f));
}

std::vector<Mask> cusp(const Matroid& m, Mask f) {
  const int r = m.rk(f);
  const int k = m.rank();
  std::vector<Mask> out;
  for (Mask s = 0; s <= m.full_mask(); ++s) {
    if (popcount(s) == k && popcount(s & f) == r + 1) out.push_back(s);
    if (m.n() == 0) break;
  }
  return out;
}

Matroid relax(const Matroid& m, Mask f) {
  if (!m.is_flat(f)) throw ValidationError("relaxation requires a flat");
  if (!is_stressed(m, f)) throw ValidationError("relaxation requires a stressed flat");
  std::vector<Mask> bases = m.bases();
  for (Mask s : cusp(m, f)) bases.push_back(s);
  return Matroid::from_masks(m.ground(), bases);
}

Matroid pi_matroid(const Matroid& m, Mask f) {
  const int r = m.rk(f);
  const int k = m.rank();
  std::vector<Mask> bases;
  for (Mask s = 0; s <= m.full_mask(); ++s) {
    if (popcount(s) == k && popcount(s & f) == r) bases.push_back(s);
    if (m.n() == 0) break;
  }
  return Matroid::from_masks(m.ground(), bases);
}

Matroid lambda_matroid(const Matroid& m, Mask f) {
  const int r = m.rk(f);
  const int k = m.rank();
  std::vector<Mask> bases;
  for (Mask s = 0; s <= m.full_mask(); ++s) {
    const int meet = popcount(s & f);
    if (popcount(s) == k && (meet == r || meet == r + 1)) bases.push_back(s);
    if (m.n() == 0) break;
  }
  return Matroid::from_masks(m.ground(), bases);
}

namespace {

Decomposition faces_to_decomposition(const Matroid& target, const std::vector<Matroid>& cells) {
  std::set<std::vector<Mask>> seen;
  std::vector<Matroid> faces;
  for (const Matroid& cell : cells)
    for (const Matroid& f : all_faces(cell))
      if (seen.insert(f.bases()).second) faces.push_back(f);
  return Decomposition::build(target, faces);
}

}  // namespace

Decomposition relax_decomposition(const Matroid& m, Mask f) {
  const Matroid tilde = relax(m, f);
  const Matroid pi = pi_matroid(m, f);
  if (m == pi) return faces_to_decomposition(tilde, {tilde});
  return faces_to_decomposition(tilde, {m, lambda_matroid(m, f)});
}

Decomposition relax_decomposition_orbit(const Matroid& m, const std::vector<Mask>& orbit) {
  if (orbit.empty()) throw ValidationError("empty orbit of flats");
  std::set<Mask> distinct(orbit.begin(), orbit.end());
  if (distinct.size() != orbit.size()) throw ValidationError("repeated flat in orbit");
  std::vector<Mask> bases = m.bases();
  std::vector<Matroid> cells = {m};
  for (Mask g : orbit) {
    if (!m.is_flat(g) || !is_stressed(m, g))
      throw ValidationError("orbit member is not a stressed flat");
    const auto cu = cusp(m, g);
    if (cu.empty()) throw ValidationError("orbit member has an empty cusp");
    bases.insert(bases.end(), cu.begin(), cu.end());
    cells.push_back(lambda_matroid(m, g));
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const Matroid tilde = Matroid::from_masks(m.ground(), bases);
  return faces_to_decomposition(tilde, cells);
}

SignedComplex project_complex(const SignedComplex& c, const Vec& psi) {
  SignedComplex out(maximize(c.target, psi));
  out.top = c.top;
  out.cells.assign(c.top + 1, {});
  std::vector<std::vector<Rat>> maxima(c.top + 1);
  for (int k = 0; k <= c.top; ++k)
    for (const Matroid& f : c.cells[k]) {
      out.cells[k].push_back(maximize(f, psi));
      maxima[k].push_back(max_value(f, psi));
    }
  out.diff.assign(c.top + 1, QMatrix());
  for (int k = 1; k <= c.top; ++k) {
    QMatrix m(static_cast<int>(out.cells[k - 1].size()), static_cast<int>(out.cells[k].size()));
    for (int qi = 0; qi < m.cols(); ++qi)
      for (int ri = 0; ri < m.rows(); ++ri) {
        const Rat& s = c.diff[k].at(ri, qi);
        if (s == 0) continue;
        if (maxima[k][qi] != maxima[k - 1][ri]) continue;
        // Equal maxima force the projected faces to nest.
        const Matroid& pq = out.cells[k][qi];
        const Matroid& pr = out.cells[k - 1][ri];
        if (!std::includes(pq.bases().begin(), pq.bases().end(), pr.bases().begin(), pr.bases().end()))
          throw std::logic_error("projected faces fail to nest at equal maxima");
        m.at(ri, qi) = s;
      }
    out.diff[k] = std::move(m);
  }
  out.assert_square_zero();
  return out;
}

Decomposition face_decomposition(const Decomposition& dec, const Vec& psi) {
  const Matroid face = maximize(dec.target(), psi);
  std::vector<Matroid> faces;
  for (const Matroid& f : dec.faces())
    if (std::includes(face.bases().begin(), face.bases().end(), f.bases().begin(), f.bases().end()))
      faces.push_back(f);
  return Decomposition::build(face, faces);
}

}  // namespace valuator
