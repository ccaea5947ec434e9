#pragma once

#include <optional>
#include <vector>

#include "valuator/rat.hpp"

namespace valuator {

// Exact feasibility solver for systems of linear equalities and (possibly
// strict) inequalities over the rationals, via Fourier-Motzkin elimination.
// Systems with more than kMaxVars variables are refused (std::runtime_error):
// the elimination is only intended for the small, highly structured systems
// that arise from polytope face computations.
class LinSystem {
 public:
  static constexpr int kMaxVars = 13;

  enum class Rel { kEq, kLe, kLt };

  explicit LinSystem(int num_vars);

  int num_vars() const { return n_; }

  // a . x (rel) b
  void add(const Vec& a, Rel rel, const Rat& b);
  void add_eq(const Vec& a, const Rat& b) { add(a, Rel::kEq, b); }
  void add_le(const Vec& a, const Rat& b) { add(a, Rel::kLe, b); }
  void add_lt(const Vec& a, const Rat& b) { add(a, Rel::kLt, b); }
  // a . x >= b and a . x > b, stored as the negated <= / < form.
  void add_ge(const Vec& a, const Rat& b);
  void add_gt(const Vec& a, const Rat& b);

  // Returns a satisfying point if the system is feasible, std::nullopt
  // otherwise.  Every returned witness is re-checked against all original
  // constraints before being handed out.
  std::optional<Vec> solve() const;

  bool feasible() const { return solve().has_value(); }

 private:
  struct Con {
    Vec a;
    Rat b;
    Rel rel;
  };

  bool satisfies(const Vec& x) const;

  int n_;
  std::vector<Con> cons_;
};

}  // namespace valuator
