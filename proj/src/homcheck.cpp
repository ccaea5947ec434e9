#include "valuator/homcheck.hpp"

#include <set>

namespace valuator {

HomologyReport functor_homology(const SignedComplex& c, const FunctorSpec& f) {
  const int top = c.top;
  // Functor values of all cells, and per-degree offsets of each cell's
  // summand inside the assembled space.
  std::vector<std::vector<GradedSpace>> spaces(top + 1);
  std::vector<std::map<Deg, std::vector<int>>> offs(top + 1);  // offs[k][d][cell]
  std::set<Deg> degrees;
  for (int k = 0; k <= top; ++k) {
    for (const Matroid& cell : c.cells[k]) spaces[k].push_back(f.obj(cell));
    for (const auto& g : spaces[k])
      for (const auto& [d, labels] : g.basis) degrees.insert(d);
  }
  for (int k = 0; k <= top; ++k)
    for (Deg d : degrees) {
      int total = 0;
      for (const auto& g : spaces[k]) {
        offs[k][d].push_back(total);
        total += g.dim(d);
      }
      offs[k][d].push_back(total);  // final entry = total dimension
    }

  // Assemble the differentials per internal degree.
  std::map<Deg, std::vector<QMatrix>> diff;  // diff[d][k] : deg k -> deg k-1
  for (Deg d : degrees) {
    auto& v = diff[d];
    v.emplace_back(QMatrix(0, 0));  // placeholder for k = 0
    for (int k = 1; k <= top; ++k)
      v.emplace_back(QMatrix(offs[k - 1][d].back(), offs[k][d].back()));
  }
  for (int k = 1; k <= top; ++k) {
    for (int q = 0; q < static_cast<int>(c.cells[k].size()); ++q)
      for (int r = 0; r < static_cast<int>(c.cells[k - 1].size()); ++r) {
        const Rat eps = c.diff[k].at(r, q);
        if (eps == 0) continue;
        const WeakMap w = WeakMap::identity_map(c.cells[k][q], c.cells[k - 1][r]);
        for (const auto& [d, mat] : f.mor(w)) {
          QMatrix& big = diff[d][k];
          for (int i = 0; i < mat.rows(); ++i)
            for (int j = 0; j < mat.cols(); ++j) {
              if (mat.at(i, j) == 0) continue;
              big.at(offs[k - 1][d][r] + i, offs[k][d][q] + j) = eps * mat.at(i, j);
            }
        }
      }
  }

  HomologyReport rep;
  rep.top = top;
  for (Deg d : degrees) {
    std::vector<int> dims(top + 1), hom(top + 1);
    std::vector<int> ranks(top + 2, 0);
    for (int k = 1; k <= top; ++k) ranks[k] = diff[d][k].rank();
    for (int k = 0; k <= top; ++k) {
      dims[k] = offs[k][d].back();
      hom[k] = dims[k] - ranks[k] - ranks[k + 1];
      if (hom[k] != 0) rep.exact = false;
    }
    rep.dims[d] = dims;
    rep.homology[d] = hom;
  }
  return rep;
}

}  // namespace valuator
