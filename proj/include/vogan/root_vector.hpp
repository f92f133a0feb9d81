// Sparse exact root vectors over the formal symbols k, e_i, delta_i, and the
// family-dependent bilinear forms that pair them.

#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "rational.hpp"

namespace vogan {

struct BasisSymbol {
  enum class Kind { k, e, delta };
  Kind kind = Kind::k;
  int index = 0;  // 0 means the bare symbol (k always; unindexed delta)

  static BasisSymbol K() { return {Kind::k, 0}; }
  static BasisSymbol E(int i) { return {Kind::e, i}; }
  static BasisSymbol Delta(int i = 0) { return {Kind::delta, i}; }

  friend bool operator<(const BasisSymbol& a, const BasisSymbol& b) {
    return std::tie(a.kind, a.index) < std::tie(b.kind, b.index);
  }
  friend bool operator==(const BasisSymbol& a, const BasisSymbol& b) {
    return a.kind == b.kind && a.index == b.index;
  }

  std::string str() const {
    switch (kind) {
      case Kind::k: return "k";
      case Kind::e: return index ? "e" + std::to_string(index) : "e";
      default: return index ? "d" + std::to_string(index) : "d";
    }
  }
};

struct RootVector {
  std::map<BasisSymbol, Rational> coeffs;  // no zero coefficients stored

  bool is_zero() const { return coeffs.empty(); }

  Rational coeff(const BasisSymbol& s) const {
    auto it = coeffs.find(s);
    return it == coeffs.end() ? Rational(0) : it->second;
  }

  void set(const BasisSymbol& s, const Rational& c) {
    if (c.is_zero())
      coeffs.erase(s);
    else
      coeffs[s] = c;
  }

  void add(const BasisSymbol& s, const Rational& c) { set(s, coeff(s) + c); }

  friend RootVector operator+(const RootVector& a, const RootVector& b) {
    RootVector r = a;
    for (const auto& [s, c] : b.coeffs) r.add(s, c);
    return r;
  }
  friend RootVector operator-(const RootVector& a, const RootVector& b) {
    RootVector r = a;
    for (const auto& [s, c] : b.coeffs) r.add(s, -c);
    return r;
  }
  friend RootVector operator*(const Rational& s, const RootVector& v) {
    RootVector r;
    for (const auto& [sym, c] : v.coeffs) r.set(sym, s * c);
    return r;
  }
  friend bool operator==(const RootVector& a, const RootVector& b) {
    return a.coeffs == b.coeffs;
  }

  std::string str() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : coeffs) {
      std::string term;
      if (c == Rational(1)) term = s.str();
      else if (c == Rational(-1)) term = "-" + s.str();
      else term = c.str() + "*" + s.str();
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out;
  }
};

inline RootVector root_of(std::initializer_list<std::pair<BasisSymbol, Rational>> terms) {
  RootVector r;
  for (const auto& [s, c] : terms) r.add(s, c);
  return r;
}

// Symmetric bilinear form on the symbol span. k pairs to zero with
// everything. The default signature is (e_i|e_j) = +delta_ij,
// (delta_i|delta_j) = -delta_ij, mixed pairs zero. The exceptional families
// reweight the e-block (and the bare delta) so their root lists reproduce the
// catalogue diagrams.
struct InnerProduct {
  enum class Kind { standard, d21, f4, g3 };
  Kind kind = Kind::standard;
  Rational alpha = Rational(1);  // d21 only

  static InnerProduct standard() { return {Kind::standard, Rational(1)}; }
  static InnerProduct d21(const Rational& a) { return {Kind::d21, a}; }
  static InnerProduct f4() { return {Kind::f4, Rational(1)}; }
  static InnerProduct g3() { return {Kind::g3, Rational(1)}; }

  Rational pair(const BasisSymbol& a, const BasisSymbol& b) const {
    using K = BasisSymbol::Kind;
    if (a.kind == K::k || b.kind == K::k) return Rational(0);
    if (a.kind != b.kind) return Rational(0);
    switch (kind) {
      case Kind::standard:
        if (a.index != b.index) return Rational(0);
        return a.kind == K::e ? Rational(1) : Rational(-1);
      case Kind::d21: {
        if (a.kind != K::e || a.index != b.index) return Rational(0);
        if (a.index == 1) return -(Rational(1) + alpha);
        if (a.index == 2) return Rational(1);
        return alpha;
      }
      case Kind::f4:
        if (a.kind == K::delta) return Rational(-3);
        return a.index == b.index ? Rational(4) : Rational(0);
      case Kind::g3:
      default:
        if (a.kind == K::delta) return Rational(-2);
        return a.index == b.index ? Rational(2) : Rational(-1);
    }
  }

  Rational inner(const RootVector& u, const RootVector& v) const {
    Rational s(0);
    for (const auto& [a, ca] : u.coeffs)
      for (const auto& [b, cb] : v.coeffs) {
        Rational p = pair(a, b);
        if (!p.is_zero()) s += ca * cb * p;
      }
    return s;
  }

  // Parity of a root: odd iff it carries an odd number of delta symbols with
  // odd integer coefficient. The d21 form has no delta directions; there a
  // root is odd iff all three e-coefficients are odd integers.
  int parity(const RootVector& r) const {
    if (kind == Kind::d21) {
      int odd_e = 0;
      for (int i = 1; i <= 3; ++i)
        if (r.coeff(BasisSymbol::E(i)).is_odd_integer()) ++odd_e;
      return odd_e == 3 ? 1 : 0;
    }
    int count = 0;
    for (const auto& [s, c] : r.coeffs)
      if (s.kind == BasisSymbol::Kind::delta && c.is_odd_integer()) ++count;
    return count % 2;
  }
};

// Default-form inner product.
inline Rational inner_product(const RootVector& u, const RootVector& v) {
  return InnerProduct::standard().inner(u, v);
}

}  // namespace vogan
