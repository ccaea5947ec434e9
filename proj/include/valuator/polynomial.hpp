#pragma once

#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "valuator/rat.hpp"

namespace valuator {

// Univariate polynomial in t with exact rational coefficients, sparse.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(const Rat& c) {
    if (c != 0) c_[0] = c;
  }
  static UPoly monomial(int deg, const Rat& c = Rat(1)) {
    UPoly p;
    if (c != 0) p.c_[deg] = c;
    return p;
  }

  const std::map<int, Rat>& coeffs() const { return c_; }
  Rat coeff(int deg) const {
    auto it = c_.find(deg);
    return it == c_.end() ? Rat(0) : it->second;
  }
  void set_coeff(int deg, const Rat& c) {
    if (c == 0)
      c_.erase(deg);
    else
      c_[deg] = c;
  }
  void add_coeff(int deg, const Rat& c) { set_coeff(deg, coeff(deg) + c); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }

  UPoly operator+(const UPoly& o) const {
    UPoly r = *this;
    for (const auto& [d, c] : o.c_) r.add_coeff(d, c);
    return r;
  }
  UPoly operator-(const UPoly& o) const {
    UPoly r = *this;
    for (const auto& [d, c] : o.c_) r.add_coeff(d, -c);
    return r;
  }
  UPoly operator*(const UPoly& o) const {
    UPoly r;
    for (const auto& [d1, c1] : c_)
      for (const auto& [d2, c2] : o.c_) r.add_coeff(d1 + d2, c1 * c2);
    return r;
  }
  UPoly operator*(const Rat& s) const {
    UPoly r;
    for (const auto& [d, c] : c_) r.add_coeff(d, c * s);
    return r;
  }
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  Rat eval(const Rat& t) const {
    Rat acc = 0;
    for (const auto& [d, c] : c_) {
      Rat p = 1;
      for (int i = 0; i < d; ++i) p *= t;
      acc += c * p;
    }
    return acc;
  }

  // t^n * p(1/t): coefficient reversal around degree n.  Requires every
  // exponent to lie in [0, n].
  UPoly reciprocal(int n) const {
    UPoly r;
    for (const auto& [d, c] : c_) {
      if (d < 0 || d > n) throw std::runtime_error("reciprocal: exponent out of range");
      r.add_coeff(n - d, c);
    }
    return r;
  }

  bool palindromic(int n) const { return *this == reciprocal(n); }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : c_) {
      Rat a = c;
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      const bool unit = (a == 1) && d != 0;
      if (!unit) os << a.str();
      if (d > 0) {
        if (!unit) os << "*";
        os << "t";
        if (d > 1) os << "^" << d;
      }
    }
    return os.str();
  }

 private:
  std::map<int, Rat> c_;
};

inline UPoly operator*(const Rat& s, const UPoly& p) { return p * s; }

// Bivariate polynomial in t, u with exact rational coefficients, sparse.
class BPoly {
 public:
  BPoly() = default;
  static BPoly monomial(int dt, int du, const Rat& c = Rat(1)) {
    BPoly p;
    if (c != 0) p.c_[{dt, du}] = c;
    return p;
  }

  const std::map<std::pair<int, int>, Rat>& coeffs() const { return c_; }
  Rat coeff(int dt, int du) const {
    auto it = c_.find({dt, du});
    return it == c_.end() ? Rat(0) : it->second;
  }
  void add_coeff(int dt, int du, const Rat& c) {
    auto key = std::make_pair(dt, du);
    Rat v = coeff(dt, du) + c;
    if (v == 0)
      c_.erase(key);
    else
      c_[key] = v;
  }

  bool is_zero() const { return c_.empty(); }

  BPoly operator+(const BPoly& o) const {
    BPoly r = *this;
    for (const auto& [k, c] : o.c_) r.add_coeff(k.first, k.second, c);
    return r;
  }
  BPoly operator-(const BPoly& o) const {
    BPoly r = *this;
    for (const auto& [k, c] : o.c_) r.add_coeff(k.first, k.second, -c);
    return r;
  }
  bool operator==(const BPoly& o) const { return c_ == o.c_; }
  bool operator!=(const BPoly& o) const { return !(*this == o); }

  // Substitute u = value, leaving a univariate polynomial in t.
  UPoly eval_u(const Rat& u) const {
    UPoly r;
    for (const auto& [k, c] : c_) {
      Rat p = 1;
      const int e = k.second >= 0 ? k.second : throw std::runtime_error("eval_u: negative exponent");
      for (int i = 0; i < e; ++i) p *= u;
      r.add_coeff(k.first, c * p);
    }
    return r;
  }

 private:
  std::map<std::pair<int, int>, Rat> c_;
};

}  // namespace valuator
