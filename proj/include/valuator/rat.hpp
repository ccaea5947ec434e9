#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace valuator {

// Exact rational scalar used throughout the library.  Backed by GMP, so
// values are always stored in canonical (reduced) form.
using Rat = boost::multiprecision::mpq_rational;

using Vec = std::vector<Rat>;

inline int sign_of(const Rat& x) {
  if (x > 0) return 1;
  if (x < 0) return -1;
  return 0;
}

inline std::string rat_to_string(const Rat& x) { return x.str(); }

// Parses "p", "-p" or "p/q".  Throws std::runtime_error on malformed input.
Rat rat_from_string(const std::string& s);

inline Rat dot(const Vec& a, const Vec& b) {
  Rat acc = 0;
  const std::size_t n = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace valuator
