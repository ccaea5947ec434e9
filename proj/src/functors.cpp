#include "valuator/functors.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace valuator {

namespace {

std::string set_label(const Matroid& m, Mask s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < m.n(); ++i) {
    if (!(s & bit(i))) continue;
    if (!first) out += ",";
    out += m.ground()[i];
    first = false;
  }
  return out + "}";
}

std::string flag_label(const Matroid& m, const std::vector<Mask>& flag) {
  if (flag.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < flag.size(); ++i) {
    if (i) out += "<";
    out += set_label(m, flag[i]);
  }
  return out;
}

// Per-degree map from basis label to its index.
std::map<Deg, std::map<std::string, int>> index_maps(const GradedSpace& g) {
  std::map<Deg, std::map<std::string, int>> out;
  for (const auto& [d, labels] : g.basis)
    for (std::size_t i = 0; i < labels.size(); ++i) out[d].emplace(labels[i], static_cast<int>(i));
  return out;
}

// Ensures a block of the right shape exists for degree d.
QMatrix& block_for(MorBlocks& blocks, Deg d, const GradedSpace& dst, const GradedSpace& src) {
  auto it = blocks.find(d);
  if (it == blocks.end()) it = blocks.emplace(d, QMatrix(dst.dim(d), src.dim(d))).first;
  return it->second;
}

// Flags of flats with the given strictly increasing rank tuple, in
// deterministic order.
void enum_flags(const Matroid& m, const std::vector<int>& ranks, std::size_t pos, Mask below,
                std::vector<Mask>& cur, std::vector<std::vector<Mask>>& out) {
  if (pos == ranks.size()) {
    out.push_back(cur);
    return;
  }
  for (Mask f : m.flats_of_rank(ranks[pos])) {
    if (!subset_of(below, f)) continue;
    cur.push_back(f);
    enum_flags(m, ranks, pos + 1, f, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<Mask>> flags_of(const Matroid& m, const std::vector<int>& ranks) {
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> cur;
  enum_flags(m, ranks, 0, 0, cur, out);
  return out;
}

// phi-image of a flag, or nothing when some rank is not preserved.  The
// image flag consists of closures in the target.
std::optional<std::vector<Mask>> map_flag(const WeakMap& w, const std::vector<Mask>& flag) {
  std::vector<Mask> out;
  out.reserve(flag.size());
  for (Mask f : flag) {
    const Mask img = w.image(f);
    if (w.dst.rk(img) != w.src.rk(f)) return std::nullopt;
    out.push_back(w.dst.closure(img));
  }
  return out;
}

}  // namespace

FunctorSpec tau() {
  FunctorSpec f;
  f.name = "tau";
  f.equivariant = true;
  f.obj = [](const Matroid&) {
    GradedSpace g;
    g.add({0, 0}, "*");
    return g;
  };
  f.mor = [](const WeakMap&) {
    MorBlocks b;
    b.emplace(Deg{0, 0}, QMatrix::identity(1));
    return b;
  };
  return f;
}

FunctorSpec restrict_rank(const FunctorSpec& f, int k) {
  FunctorSpec r;
  r.name = "[" + f.name + "]_" + std::to_string(k);
  r.equivariant = f.equivariant;
  r.obj = [f, k](const Matroid& m) { return m.rank() == k ? f.obj(m) : GradedSpace{}; };
  r.mor = [f, k](const WeakMap& w) {
    return (w.src.rank() == k && w.dst.rank() == k) ? f.mor(w) : MorBlocks{};
  };
  return r;
}

namespace {

GradedSpace nbc_space(const Matroid& m) {
  GradedSpace g;
  for (int k = 0; k <= m.rank(); ++k)
    for (Mask s : m.nbc_sets(k)) g.add({k, 0}, "u" + set_label(m, s));
  return g;
}

}  // namespace

FunctorSpec gros() {
  FunctorSpec f;
  f.name = "gros";
  f.equivariant = false;
  f.obj = nbc_space;
  f.mor = [](const WeakMap& w) {
    if (!w.is_identity_relabel())
      throw ValidationError("gros does not accept nontrivial relabellings");
    const GradedSpace src = nbc_space(w.src), dst = nbc_space(w.dst);
    auto dst_index = index_maps(dst);
    MorBlocks blocks;
    for (int k = 0; k <= w.src.rank(); ++k) {
      const auto sets = w.src.nbc_sets(k);
      for (std::size_t j = 0; j < sets.size(); ++j) {
        if (!w.dst.is_nbc(sets[j])) continue;
        const Deg d{k, 0};
        const int i = dst_index[d].at("u" + set_label(w.dst, sets[j]));
        block_for(blocks, d, dst, src).at(i, static_cast<int>(j)) = 1;
      }
    }
    return blocks;
  };
  return f;
}

namespace {

// Number of pairs (x in a, y in b) with y < x; the parity is the sign of the
// shuffle merging two sorted blocks into one sorted word.
int cross_inversions(Mask a, Mask b) {
  int inv = 0;
  for (int x = 0; x < Matroid::kMaxGround; ++x)
    if (a & bit(x)) inv += popcount(b & (bit(x) - 1));
  return inv;
}

// Expansion of the monomial e_s in the nbc basis of m, via the circuit
// relations.  bc_pairs lists (broken circuit, full circuit) for every
// circuit of m.
const std::map<Mask, Rat>& straighten(const Matroid& m, Mask s,
                                      const std::vector<std::pair<Mask, Mask>>& bc_pairs,
                                      std::map<Mask, std::map<Mask, Rat>>& memo) {
  auto it = memo.find(s);
  if (it != memo.end()) return it->second;
  std::map<Mask, Rat> result;
  if (!m.independent(s)) {
    // e_s = 0: s contains a full circuit.
  } else if (m.is_nbc(s)) {
    result[s] = 1;
  } else {
    Mask bc = 0, circ = 0;
    for (const auto& [b, c] : bc_pairs)
      if (subset_of(b, s)) {
        bc = b;
        circ = c;
        break;
      }
    if (circ == 0) throw std::logic_error("non-nbc independent set without a broken circuit");
    const Mask rest = s & ~bc;
    const int outer = cross_inversions(bc, rest);
    // e_{bc} = sum over i >= 2 of (-1)^i e_{C minus c_i} with C sorted
    // ascending; c_1 never lies in s, so every term is a genuine monomial.
    std::vector<int> c_elems;
    for (int x = 0; x < m.n(); ++x)
      if (circ & bit(x)) c_elems.push_back(x);
    for (std::size_t i = 1; i < c_elems.size(); ++i) {
      const Mask dropped = circ & ~bit(c_elems[i]);
      const Mask t = dropped | rest;
      const int sign_exp = static_cast<int>(i + 1) + outer + cross_inversions(dropped, rest);
      const Rat sgn = (sign_exp % 2 == 0) ? 1 : -1;
      for (const auto& [mono, coef] : straighten(m, t, bc_pairs, memo)) result[mono] += sgn * coef;
    }
    for (auto iter = result.begin(); iter != result.end();)
      iter = (iter->second == 0) ? result.erase(iter) : std::next(iter);
  }
  return memo.emplace(s, std::move(result)).first->second;
}

}  // namespace

FunctorSpec os() {
  FunctorSpec f;
  f.name = "os";
  f.equivariant = true;
  f.obj = nbc_space;
  f.mor = [](const WeakMap& w) {
    const GradedSpace src = nbc_space(w.src), dst = nbc_space(w.dst);
    auto dst_index = index_maps(dst);
    std::vector<std::pair<Mask, Mask>> bc_pairs;
    for (Mask c : w.dst.circuits()) bc_pairs.emplace_back(c & ~bit(lowest_bit(c)), c);
    std::map<Mask, std::map<Mask, Rat>> memo;
    MorBlocks blocks;
    for (int k = 0; k <= w.src.rank(); ++k) {
      const auto sets = w.src.nbc_sets(k);
      const Deg d{k, 0};
      for (std::size_t j = 0; j < sets.size(); ++j) {
        // Image monomial: apply phi elementwise in ascending source order,
        // then sort, tracking the permutation sign.
        std::vector<int> imgs;
        for (int x = 0; x < w.src.n(); ++x)
          if (sets[j] & bit(x)) imgs.push_back(w.phi[x]);
        int inv = 0;
        Mask t = 0;
        for (std::size_t p = 0; p < imgs.size(); ++p) {
          for (std::size_t q = p + 1; q < imgs.size(); ++q)
            if (imgs[p] > imgs[q]) ++inv;
          t |= bit(imgs[p]);
        }
        const Rat sgn = (inv % 2 == 0) ? 1 : -1;
        for (const auto& [mono, coef] : straighten(w.dst, t, bc_pairs, memo)) {
          const int i = dst_index[d].at("u" + set_label(w.dst, mono));
          block_for(blocks, d, dst, src).at(i, static_cast<int>(j)) = sgn * coef;
        }
      }
    }
    return blocks;
  };
  return f;
}

FunctorSpec whitney(const std::vector<int>& ranks) {
  for (std::size_t i = 0; i + 1 < ranks.size(); ++i)
    if (ranks[i] >= ranks[i + 1]) throw ValidationError("whitney rank tuple must strictly increase");
  FunctorSpec f;
  std::string suffix;
  for (std::size_t i = 0; i < ranks.size(); ++i)
    suffix += (i ? "," : "") + std::to_string(ranks[i]);
  f.name = "phi(" + suffix + ")";
  f.equivariant = true;
  f.obj = [ranks](const Matroid& m) {
    GradedSpace g;
    for (const auto& flag : flags_of(m, ranks)) g.add({0, 0}, flag_label(m, flag));
    return g;
  };
  f.mor = [ranks](const WeakMap& w) {
    const auto src_flags = flags_of(w.src, ranks);
    GradedSpace src, dst;
    for (const auto& flag : src_flags) src.add({0, 0}, flag_label(w.src, flag));
    for (const auto& flag : flags_of(w.dst, ranks)) dst.add({0, 0}, flag_label(w.dst, flag));
    auto dst_index = index_maps(dst);
    MorBlocks blocks;
    for (std::size_t j = 0; j < src_flags.size(); ++j) {
      const auto img = map_flag(w, src_flags[j]);
      if (!img) continue;
      const int i = dst_index[{0, 0}].at(flag_label(w.dst, *img));
      block_for(blocks, {0, 0}, dst, src).at(i, static_cast<int>(j)) = 1;
    }
    return blocks;
  };
  return f;
}

FunctorSpec psi_flag(const std::vector<int>& ranks,
                     const std::vector<std::vector<std::string>>& sets) {
  if (ranks.size() != sets.size()) throw ValidationError("psi_flag: ranks and sets differ in length");
  FunctorSpec f;
  f.name = "psi";
  f.equivariant = false;
  auto holds = [ranks, sets](const Matroid& m) {
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      const Mask s = m.mask_of(sets[i]);
      if (!m.is_flat(s) || m.rk(s) != ranks[i]) return false;
      if (i > 0 && !subset_of(m.mask_of(sets[i - 1]), s)) return false;
    }
    return true;
  };
  f.obj = [holds](const Matroid& m) {
    GradedSpace g;
    if (holds(m)) g.add({0, 0}, "psi");
    return g;
  };
  f.mor = [holds](const WeakMap& w) {
    if (!w.is_identity_relabel())
      throw ValidationError("psi_flag does not accept nontrivial relabellings");
    MorBlocks b;
    if (holds(w.src) && holds(w.dst)) b.emplace(Deg{0, 0}, QMatrix::identity(1));
    return b;
  };
  return f;
}

namespace {

// A chain of flats with exponents; for the non-augmented functor the chain
// starts implicitly at the empty flat with no y part.
struct XChain {
  Mask f0 = 0;       // only meaningful when has_y
  bool has_y = false;
  std::vector<Mask> fs;
  std::vector<int> ms;

  int degree(const Matroid& m) const {
    int d = has_y ? m.rk(f0) : 0;
    for (int e : ms) d += e;
    return d;
  }
  std::string label(const Matroid& m) const {
    std::string out = has_y ? "y" + set_label(m, f0) : "1";
    for (std::size_t i = 0; i < fs.size(); ++i)
      out += ".x" + set_label(m, fs[i]) + "^" + std::to_string(ms[i]);
    return out;
  }
};

void enum_xchains(const Matroid& m, Mask start, int start_rank, XChain& cur,
                  std::vector<XChain>& out) {
  out.push_back(cur);
  for (Mask f : m.flats()) {
    if (f == start || !subset_of(start, f)) continue;
    const int gap = m.rk(f) - start_rank;
    if (gap < 2) continue;
    cur.fs.push_back(f);
    for (int e = 1; e < gap; ++e) {
      cur.ms.push_back(e);
      enum_xchains(m, f, m.rk(f), cur, out);
      cur.ms.pop_back();
    }
    cur.fs.pop_back();
  }
}

std::vector<XChain> chow_chains(const Matroid& m, bool augmented) {
  std::vector<XChain> out;
  if (augmented) {
    for (Mask f : m.flats()) {
      XChain cur{f, true, {}, {}};
      enum_xchains(m, f, m.rk(f), cur, out);
    }
  } else if (m.loopless()) {
    XChain cur;
    enum_xchains(m, 0, 0, cur, out);
  }
  return out;
}

GradedSpace chow_space(const Matroid& m, bool augmented) {
  GradedSpace g;
  for (const auto& c : chow_chains(m, augmented)) g.add({c.degree(m), 0}, c.label(m));
  return g;
}

MorBlocks chow_mor(const WeakMap& w, bool augmented) {
  if (!augmented && !w.dst.loopless()) return {};  // target space is zero
  const GradedSpace src = chow_space(w.src, augmented), dst = chow_space(w.dst, augmented);
  auto dst_index = index_maps(dst);
  MorBlocks blocks;
  const auto src_chains = chow_chains(w.src, augmented);
  std::map<Deg, int> col;
  for (const auto& c : src_chains) {
    const Deg d{c.degree(w.src), 0};
    const int j = col[d]++;
    XChain img{0, c.has_y, {}, c.ms};
    bool ok = true;
    if (c.has_y) {
      const Mask i0 = w.image(c.f0);
      ok = w.dst.rk(i0) == w.src.rk(c.f0);
      img.f0 = w.dst.closure(i0);
    }
    for (std::size_t i = 0; ok && i < c.fs.size(); ++i) {
      const Mask fi = w.image(c.fs[i]);
      ok = w.dst.rk(fi) == w.src.rk(c.fs[i]);
      img.fs.push_back(w.dst.closure(fi));
    }
    if (!ok) continue;
    const int r = dst_index[d].at(img.label(w.dst));
    block_for(blocks, d, dst, src).at(r, j) = 1;
  }
  return blocks;
}

}  // namespace

FunctorSpec chow() {
  FunctorSpec f;
  f.name = "chow";
  f.equivariant = true;
  f.obj = [](const Matroid& m) { return chow_space(m, false); };
  f.mor = [](const WeakMap& w) { return chow_mor(w, false); };
  return f;
}

FunctorSpec aug_chow() {
  FunctorSpec f;
  f.name = "augchow";
  f.equivariant = true;
  f.obj = [](const Matroid& m) { return chow_space(m, true); };
  f.mor = [](const WeakMap& w) { return chow_mor(w, true); };
  return f;
}

namespace {

// One direct summand of the Kazhdan-Lusztig functor: the flag space of
// `ktuple` sitting in bidegree (i, |R|).
struct KlBlock {
  int i = 0;
  std::vector<int> a;  // a_0 = 0, a_1, ..., a_r = i, a_{r+1} = k - i
  Mask rset = 0;       // subset of {1..r}, bit j-1 <-> j in R
  std::vector<int> ktuple;

  std::string id() const {
    std::string out = "i" + std::to_string(i) + ";a=";
    for (std::size_t j = 1; j + 1 < a.size(); ++j) out += (j > 1 ? "," : "") + std::to_string(a[j]);
    out += ";R=";
    for (int j = 0; j < 31; ++j)
      if (rset & bit(j)) out += std::to_string(j + 1) + ",";
    return out + ";";
  }
  Deg deg() const { return {i, popcount(rset)}; }
};

int s_of(int j, Mask rset) {
  int t = j;
  while (rset & bit(t - 1)) ++t;
  return t;
}

void enum_a_chains(int r, int i, std::vector<int>& mid, int next, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(mid.size()) == r - 1) {
    out.push_back(mid);
    return;
  }
  for (int v = next; v < i; ++v) {
    mid.push_back(v);
    enum_a_chains(r, i, mid, v + 1, out);
    mid.pop_back();
  }
}

std::vector<KlBlock> kl_blocks(int k) {
  std::vector<KlBlock> out;
  for (int i = 1; 2 * i < k; ++i) {
    for (int r = 1; r <= i; ++r) {
      std::vector<std::vector<int>> mids;
      std::vector<int> mid;
      enum_a_chains(r, i, mid, 1, mids);
      for (const auto& middle : mids) {
        KlBlock b;
        b.i = i;
        b.a.push_back(0);
        for (int v : middle) b.a.push_back(v);
        b.a.push_back(i);
        b.a.push_back(k - i);
        for (Mask rset = 0; rset < (Mask(1) << r); ++rset) {
          b.rset = rset;
          b.ktuple.clear();
          for (int j = 1; j <= r; ++j)
            b.ktuple.push_back(k - b.a[s_of(r + 1 - j, rset)] - b.a[r - j]);
          for (int j = 0; j + 1 < r; ++j)
            if (b.ktuple[j] >= b.ktuple[j + 1])
              throw std::logic_error("KL rank tuple is not strictly increasing");
          if (b.ktuple.front() <= 0 || b.ktuple.back() >= k)
            throw std::logic_error("KL rank tuple out of range");
          out.push_back(b);
        }
      }
    }
  }
  return out;
}

GradedSpace kl_space(const Matroid& m) {
  GradedSpace g;
  if (!m.loopless()) return g;
  g.add({0, 0}, "tau");
  for (const auto& b : kl_blocks(m.rank()))
    for (const auto& flag : flags_of(m, b.ktuple)) g.add(b.deg(), b.id() + flag_label(m, flag));
  return g;
}

MorBlocks kl_mor(const WeakMap& w) {
  MorBlocks blocks;
  if (!w.src.loopless() || !w.dst.loopless()) return blocks;
  const GradedSpace src = kl_space(w.src), dst = kl_space(w.dst);
  auto dst_index = index_maps(dst);
  blocks.emplace(Deg{0, 0}, QMatrix(dst.dim({0, 0}), src.dim({0, 0})));
  blocks[{0, 0}].at(dst_index[{0, 0}].at("tau"), 0) = 1;  // tau is listed first
  std::map<Deg, int> col;
  ++col[{0, 0}];
  for (const auto& b : kl_blocks(w.src.rank())) {
    const Deg d = b.deg();
    for (const auto& flag : flags_of(w.src, b.ktuple)) {
      const int j = col[d]++;
      const auto img = map_flag(w, flag);
      if (!img) continue;
      const int i = dst_index[d].at(b.id() + flag_label(w.dst, *img));
      block_for(blocks, d, dst, src).at(i, j) = 1;
    }
  }
  return blocks;
}

}  // namespace

FunctorSpec kl_bigraded() {
  FunctorSpec f;
  f.name = "kl";
  f.equivariant = true;
  f.obj = kl_space;
  f.mor = kl_mor;
  return f;
}

namespace {

GradedSpace sigma_space(const Matroid& m) {
  GradedSpace g;
  for (Mask f : m.flats()) {
    const std::string prefix = "S" + set_label(m, f) + ";";
    const GradedSpace inner = kl_space(m.contraction(f));
    for (const auto& [d, labels] : inner.basis)
      for (const auto& l : labels) g.add({d.first + m.rk(f), d.second}, prefix + l);
  }
  return g;
}

}  // namespace

FunctorSpec sigma_bigraded() {
  FunctorSpec f;
  f.name = "sigma";
  f.equivariant = true;
  f.obj = sigma_space;
  f.mor = [](const WeakMap& w) {
    const GradedSpace src = sigma_space(w.src), dst = sigma_space(w.dst);
    auto src_index = index_maps(src);
    auto dst_index = index_maps(dst);
    MorBlocks blocks;
    for (Mask fmask : w.src.flats()) {
      const Mask gmask = w.image(fmask);
      if (w.src.rk(fmask) != w.dst.rk(gmask)) continue;  // convolution rank gate
      if (!w.dst.is_flat(gmask)) continue;               // target summand is zero
      const Matroid csrc = w.src.contraction(fmask);
      const Matroid cdst = w.dst.contraction(gmask);
      std::map<std::string, std::string> relabel;
      for (int e = 0; e < w.src.n(); ++e)
        if (!(fmask & bit(e))) relabel[w.src.ground()[e]] = w.dst.ground()[w.phi[e]];
      const WeakMap inner = WeakMap::with_relabel(csrc, cdst, relabel);
      const GradedSpace isrc = kl_space(csrc), idst = kl_space(cdst);
      const std::string sp = "S" + set_label(w.src, fmask) + ";";
      const std::string dp = "S" + set_label(w.dst, gmask) + ";";
      const int shift = w.src.rk(fmask);
      for (const auto& [d, mat] : kl_mor(inner)) {
        const Deg gd{d.first + shift, d.second};
        QMatrix& block = block_for(blocks, gd, dst, src);
        for (int r = 0; r < mat.rows(); ++r)
          for (int c = 0; c < mat.cols(); ++c) {
            if (mat.at(r, c) == 0) continue;
            const int gr = dst_index[gd].at(dp + idst.basis.at(d)[r]);
            const int gc = src_index[gd].at(sp + isrc.basis.at(d)[c]);
            block.at(gr, gc) = mat.at(r, c);
          }
      }
    }
    return blocks;
  };
  return f;
}

namespace {

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          r.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
    }
  return r;
}

// The tensor product of two graded spaces, with the (dA, dB) blocks emitted
// in sorted order; returns the product space and, per block, the offset of
// the block inside its total degree.
struct TensorLayout {
  GradedSpace space;
  std::map<std::pair<Deg, Deg>, int> offset;
};

TensorLayout tensor_layout(const GradedSpace& a, const GradedSpace& b) {
  TensorLayout t;
  for (const auto& [da, la] : a.basis)
    for (const auto& [db, lb] : b.basis) {
      const Deg d{da.first + db.first, da.second + db.second};
      t.offset[{da, db}] = t.space.dim(d);
      for (const auto& x : la)
        for (const auto& y : lb) t.space.add(d, x + "(x)" + y);
    }
  return t;
}

}  // namespace

FunctorSpec convolve(const FunctorSpec& f, const FunctorSpec& g,
                     const std::vector<std::string>& e1_labels) {
  FunctorSpec r;
  r.name = f.name + "*" + g.name;
  r.equivariant = false;
  auto split = [e1_labels](const Matroid& m) {
    const Mask e1 = m.mask_of(e1_labels);
    return std::pair<Matroid, Matroid>{m.restriction(e1), m.contraction(e1)};
  };
  r.obj = [f, g, split](const Matroid& m) {
    const auto [left, right] = split(m);
    return tensor_layout(f.obj(left), g.obj(right)).space;
  };
  r.mor = [f, g, split, e1_labels](const WeakMap& w) {
    if (!w.is_identity_relabel())
      throw ValidationError("convolve does not accept nontrivial relabellings");
    MorBlocks blocks;
    if (w.src.rk(w.src.mask_of(e1_labels)) != w.dst.rk(w.dst.mask_of(e1_labels))) return blocks;
    const auto [sl, sr] = split(w.src);
    const auto [dl, dr] = split(w.dst);
    const TensorLayout src = tensor_layout(f.obj(sl), g.obj(sr));
    const TensorLayout dst = tensor_layout(f.obj(dl), g.obj(dr));
    const MorBlocks fm = f.mor(WeakMap::identity_map(sl, dl));
    const MorBlocks gm = g.mor(WeakMap::identity_map(sr, dr));
    for (const auto& [da, ma] : fm)
      for (const auto& [db, mb] : gm) {
        if (ma.rows() == 0 || ma.cols() == 0 || mb.rows() == 0 || mb.cols() == 0) continue;
        const Deg d{da.first + db.first, da.second + db.second};
        const QMatrix k = kron(ma, mb);
        QMatrix& block = block_for(blocks, d, dst.space, src.space);
        const int ro = dst.offset.at({da, db});
        const int co = src.offset.at({da, db});
        for (int i = 0; i < k.rows(); ++i)
          for (int j = 0; j < k.cols(); ++j)
            if (k.at(i, j) != 0) block.at(ro + i, co + j) = k.at(i, j);
      }
    return blocks;
  };
  return r;
}

std::map<Deg, int> graded_dims(const FunctorSpec& f, const Matroid& m) { return f.obj(m).dims(); }

}  // namespace valuator
