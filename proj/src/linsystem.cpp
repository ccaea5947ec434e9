#include "valuator/linsystem.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace valuator {

LinSystem::LinSystem(int num_vars) : n_(num_vars) {
  if (num_vars < 0 || num_vars > kMaxVars)
    throw std::runtime_error("LinSystem supports between 0 and 13 variables");
}

void LinSystem::add(const Vec& a, Rel rel, const Rat& b) {
  if (static_cast<int>(a.size()) != n_) throw std::runtime_error("LinSystem constraint arity mismatch");
  cons_.push_back(Con{a, b, rel});
}

void LinSystem::add_ge(const Vec& a, const Rat& b) {
  Vec neg(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
  add(neg, Rel::kLe, -b);
}

void LinSystem::add_gt(const Vec& a, const Rat& b) {
  Vec neg(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
  add(neg, Rel::kLt, -b);
}

bool LinSystem::satisfies(const Vec& x) const {
  for (const Con& c : cons_) {
    const Rat v = dot(c.a, x);
    switch (c.rel) {
      case Rel::kEq:
        if (v != c.b) return false;
        break;
      case Rel::kLe:
        if (v > c.b) return false;
        break;
      case Rel::kLt:
        if (v >= c.b) return false;
        break;
    }
  }
  return true;
}

namespace {

struct Ineq {
  Vec a;
  Rat b;
  bool strict;
};

// Substitution record for an eliminated equality: x[var] = (b - sum_i a[i] x[i]) / a[var].
struct Subst {
  int var;
  Vec a;
  Rat b;
};

// Drops trivial rows, normalizes scale, deduplicates (keeping the stricter
// relation of two otherwise equal rows).  Returns false if a row is
// identically infeasible (0 <= negative or 0 < nonpositive).
bool normalize(std::vector<Ineq>& rows) {
  std::map<std::pair<Vec, Rat>, bool> seen;  // key -> strict
  for (const Ineq& q : rows) {
    int first_nz = -1;
    for (std::size_t i = 0; i < q.a.size(); ++i)
      if (q.a[i] != 0) {
        first_nz = static_cast<int>(i);
        break;
      }
    if (first_nz < 0) {
      if (q.strict ? (q.b <= 0) : (q.b < 0)) return false;
      continue;
    }
    Rat scale = q.a[first_nz];
    if (scale < 0) scale = -scale;
    Vec a(q.a.size());
    for (std::size_t i = 0; i < q.a.size(); ++i) a[i] = q.a[i] / scale;
    const Rat b = q.b / scale;
    auto key = std::make_pair(std::move(a), b);
    auto it = seen.find(key);
    if (it == seen.end())
      seen.emplace(std::move(key), q.strict);
    else
      it->second = it->second || q.strict;
  }
  rows.clear();
  for (const auto& [key, strict] : seen) rows.push_back(Ineq{key.first, key.second, strict});
  return true;
}

}  // namespace

std::optional<Vec> LinSystem::solve() const {
  // Phase 1: eliminate equalities by substitution.
  std::vector<Con> eqs;
  std::vector<Ineq> rows;
  for (const Con& c : cons_) {
    if (c.rel == Rel::kEq)
      eqs.push_back(c);
    else
      rows.push_back(Ineq{c.a, c.b, c.rel == Rel::kLt});
  }

  std::vector<Subst> substs;
  std::vector<bool> eliminated(n_, false);
  for (std::size_t next = 0; next < eqs.size(); ++next) {
    // Re-normalize the pending equality against earlier substitutions
    // (substitutions were already applied in place, see below).
    Con& e = eqs[next];
    int var = -1;
    for (int j = 0; j < n_; ++j)
      if (e.a[j] != 0) {
        var = j;
        break;
      }
    if (var < 0) {
      if (e.b != 0) return std::nullopt;
      continue;
    }
    const Rat inv = Rat(1) / e.a[var];
    Subst s{var, e.a, e.b};
    eliminated[var] = true;
    auto apply = [&](Vec& a, Rat& b) {
      const Rat coef = a[var];
      if (coef == 0) return;
      // a.x (rel) b with x[var] = (s.b - sum_{i != var} s.a[i] x[i]) / s.a[var]
      const Rat f = coef * inv;
      for (int j = 0; j < n_; ++j) a[j] -= f * s.a[j];
      b -= f * s.b;
    };
    for (std::size_t k = next + 1; k < eqs.size(); ++k) apply(eqs[k].a, eqs[k].b);
    for (Ineq& q : rows) apply(q.a, q.b);
    substs.push_back(std::move(s));
  }

  // Phase 2: Fourier-Motzkin elimination of the remaining variables.
  std::vector<int> free_vars;
  for (int j = 0; j < n_; ++j)
    if (!eliminated[j]) free_vars.push_back(j);

  struct Step {
    int var;
    std::vector<Ineq> lowers;  // a[var] < 0 rows: x[var] >= (b - rest)/a[var]
    std::vector<Ineq> uppers;  // a[var] > 0 rows
  };
  std::vector<Step> steps;

  if (!normalize(rows)) return std::nullopt;
  while (!free_vars.empty()) {
    // Pick the variable minimizing the product #upper * #lower.
    int best = -1;
    long best_cost = -1;
    for (int v : free_vars) {
      long pos = 0, neg = 0;
      for (const Ineq& q : rows) {
        if (q.a[v] > 0) ++pos;
        if (q.a[v] < 0) ++neg;
      }
      const long cost = pos * neg;
      if (best < 0 || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    const int var = best;
    free_vars.erase(std::find(free_vars.begin(), free_vars.end(), var));

    Step step;
    step.var = var;
    std::vector<Ineq> rest;
    for (Ineq& q : rows) {
      if (q.a[var] > 0)
        step.uppers.push_back(std::move(q));
      else if (q.a[var] < 0)
        step.lowers.push_back(std::move(q));
      else
        rest.push_back(std::move(q));
    }
    for (const Ineq& lo : step.lowers)
      for (const Ineq& up : step.uppers) {
        // From lo: x >= (lo.b - lo_rest)/lo.a[var]  (note lo.a[var] < 0)
        // From up: x <= (up.b - up_rest)/up.a[var]
        // Combined: up.a[var] * lo_row - lo.a[var] * up_row, eliminating var.
        Ineq comb;
        comb.a.assign(n_, Rat(0));
        const Rat cu = up.a[var];
        const Rat cl = -lo.a[var];
        for (int j = 0; j < n_; ++j) comb.a[j] = cl * up.a[j] + cu * lo.a[j];
        comb.b = cl * up.b + cu * lo.b;
        comb.strict = lo.strict || up.strict;
        rest.push_back(std::move(comb));
      }
    rows = std::move(rest);
    if (!normalize(rows)) return std::nullopt;
    steps.push_back(std::move(step));
  }

  // All variables eliminated; any remaining rows are constant and were
  // validated by normalize().  Reconstruct a witness backwards.
  Vec x(n_, Rat(0));
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const Step& step = *it;
    bool has_lo = false, has_hi = false;
    Rat lo = 0, hi = 0;
    for (const Ineq& q : step.lowers) {
      Rat rest = q.b;
      for (int j = 0; j < n_; ++j)
        if (j != step.var) rest -= q.a[j] * x[j];
      const Rat bound = rest / q.a[step.var];  // negative coefficient: lower bound
      if (!has_lo || bound > lo) {
        lo = bound;
        has_lo = true;
      }
    }
    for (const Ineq& q : step.uppers) {
      Rat rest = q.b;
      for (int j = 0; j < n_; ++j)
        if (j != step.var) rest -= q.a[j] * x[j];
      const Rat bound = rest / q.a[step.var];
      if (!has_hi || bound < hi) {
        hi = bound;
        has_hi = true;
      }
    }
    if (has_lo && has_hi)
      x[step.var] = lo == hi ? lo : (lo + hi) / 2;
    else if (has_lo)
      x[step.var] = lo + 1;
    else if (has_hi)
      x[step.var] = hi - 1;
    else
      x[step.var] = 0;
  }
  for (auto it = substs.rbegin(); it != substs.rend(); ++it) {
    Rat v = it->b;
    for (int j = 0; j < n_; ++j)
      if (j != it->var) v -= it->a[j] * x[j];
    x[it->var] = v / it->a[it->var];
  }

  if (!satisfies(x)) throw std::logic_error("Fourier-Motzkin witness failed re-substitution");
  return x;
}

}  // namespace valuator
