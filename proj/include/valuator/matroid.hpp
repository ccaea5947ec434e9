#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "valuator/polynomial.hpp"
#include "valuator/rat.hpp"

namespace valuator {

// Subsets of the ground set are bitmasks over the internal element order.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
inline Mask bit(int i) { return Mask(1) << i; }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }

// Error raised for structurally invalid inputs (bad bases, bad labels, bad
// decompositions, out-of-range sizes).  The command-line driver maps it to
// exit code 2.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A matroid on a labelled ground set of at most 12 elements, represented by
// its list of bases.  The basis-exchange axiom is verified at construction.
// Ground labels are canonicalized to ascending lexicographic order; that
// order is also the linear order used wherever one is needed (e.g. broken
// circuits).  Equality is labelled equality: same ground labels, same bases.
class Matroid {
 public:
  static constexpr int kMaxGround = 12;

  static Matroid from_bases(const std::vector<std::string>& ground,
                            const std::vector<std::vector<std::string>>& bases);
  // `bases` are masks over the given (pre-canonicalization) label order.
  static Matroid from_masks(std::vector<std::string> ground, std::vector<Mask> bases);
  static Matroid uniform(int k, const std::vector<std::string>& labels);
  // Uniform matroid with labels "1".."n".
  static Matroid uniform_kn(int k, int n);

  int n() const { return static_cast<int>(ground_.size()); }
  int rank() const { return rank_; }
  Mask full_mask() const { return n() == 0 ? 0 : (Mask(1) << n()) - 1; }
  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<Mask>& bases() const { return bases_; }
  bool has_basis(Mask b) const;

  int index_of(const std::string& label) const;  // -1 when absent
  Mask mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Mask s) const;

  int rk(Mask s) const { return rank_table_[s]; }
  bool independent(Mask s) const { return rk(s) == popcount(s); }
  Mask closure(Mask s) const;
  bool is_flat(Mask s) const { return closure(s) == s; }
  std::vector<Mask> flats() const;
  std::vector<Mask> flats_of_rank(int r) const;
  std::vector<Mask> independent_sets(int size) const;

  std::vector<Mask> circuits() const;
  std::vector<Mask> broken_circuits() const;
  bool is_nbc(Mask s) const;
  std::vector<Mask> nbc_sets(int size) const;

  Mask loops() const;
  Mask coloops() const;
  bool loopless() const { return loops() == 0; }
  std::vector<Mask> components() const;
  // Dimension of the base polytope: |E| minus the number of connected
  // components.
  int d() const;

  // Restriction M^S to the elements of S (ground labels keep their names).
  Matroid restriction(Mask s) const;
  // Contraction M_S = M/S with ground E minus S.
  Matroid contraction(Mask s) const;
  Matroid direct_sum(const Matroid& o) const;
  // Applies a permutation of the ground labels to the structure: element at
  // index i is renamed to the label at index perm[i].  The result has the
  // same ground set with bases replaced by their images.
  Matroid relabel(const std::vector<int>& perm) const;

  // Zero when the matroid has a loop; otherwise the Mobius-function sum over
  // the lattice of flats.
  UPoly characteristic_polynomial() const;

  bool operator==(const Matroid& o) const { return ground_ == o.ground_ && bases_ == o.bases_; }
  bool operator!=(const Matroid& o) const { return !(*this == o); }
  bool operator<(const Matroid& o) const {
    if (ground_ != o.ground_) return ground_ < o.ground_;
    return bases_ < o.bases_;
  }

 private:
  Matroid() = default;
  void finish_construction();  // validates and fills tables

  std::vector<std::string> ground_;
  std::vector<Mask> bases_;  // sorted, deduplicated
  int rank_ = 0;
  std::vector<std::int8_t> rank_table_;
};

// A morphism in the category of matroids on labelled ground sets: a bijection
// phi from the ground of src to the ground of dst such that every basis of
// dst is the image of a basis of src.  phi[i] is the dst index of src element
// i.  (Morphisms run from the larger matroid to the smaller one.)
struct WeakMap {
  Matroid src;
  Matroid dst;
  std::vector<int> phi;

  // Identity relabelling: src and dst must share the same ground labels.
  static WeakMap identity_map(const Matroid& src, const Matroid& dst);
  // Relabelling given label -> label.
  static WeakMap with_relabel(const Matroid& src, const Matroid& dst,
                              const std::map<std::string, std::string>& relabel);
  // Relabelling given as src-index -> dst-index.
  static WeakMap with_perm(const Matroid& src, const Matroid& dst, const std::vector<int>& phi);

  bool is_identity_relabel() const;
  Mask image(Mask s) const;
};

}  // namespace valuator
