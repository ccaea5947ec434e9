#pragma once

#include <map>
#include <vector>

#include "valuator/decomp.hpp"
#include "valuator/functors.hpp"

namespace valuator {

// The image of a signed complex under a functor: one chain complex of
// rational vector spaces per internal degree, all over homological degrees
// 0..top.  `dims[d][k]` is the dimension in homological degree k;
// `homology[d][k]` the dimension of the k-th homology.
struct HomologyReport {
  int top = 0;
  std::map<Deg, std::vector<int>> dims;
  std::map<Deg, std::vector<int>> homology;
  bool exact = true;
};

// Applies the functor to every cell and differential of the complex.  Each
// +-1 incidence entry becomes that sign times the functor's matrix for the
// inclusion-induced morphism (from the k-cell to its facet), and homology is
// computed degreewise by rank counting.
HomologyReport functor_homology(const SignedComplex& c, const FunctorSpec& f);

}  // namespace valuator
