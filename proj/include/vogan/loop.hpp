// Loop extension of a base superalgebra: Laurent-degree sums with a central
// element K and a degree derivation D, the bracket with its central term,
// and the invariant pairing that puts K and D in duality.

#pragma once

#include <map>

#include "supermatrix.hpp"

namespace vogan {

struct LoopElement {
  int p = 0, q = 0;                 // base block dimensions
  std::map<int, SuperMatrix> terms; // degree -> base element, no zero terms
  Rational c_coeff;                 // coefficient of K
  Rational d_coeff;                 // coefficient of D

  LoopElement() = default;
  LoopElement(int p_, int q_) : p(p_), q(q_) {}

  static LoopElement K(int p, int q) {
    LoopElement x(p, q);
    x.c_coeff = Rational(1);
    return x;
  }
  static LoopElement D(int p, int q) {
    LoopElement x(p, q);
    x.d_coeff = Rational(1);
    return x;
  }
  static LoopElement at_degree(int degree, const SuperMatrix& base) {
    LoopElement x(base.p, base.q);
    x.set_term(degree, base);
    return x;
  }

  bool is_zero() const { return terms.empty() && c_coeff.is_zero() && d_coeff.is_zero(); }

  SuperMatrix term(int degree) const {
    auto it = terms.find(degree);
    return it == terms.end() ? SuperMatrix(p, q) : it->second;
  }

  void set_term(int degree, const SuperMatrix& base) {
    if (base.is_zero())
      terms.erase(degree);
    else
      terms[degree] = base;
  }

  void add_term(int degree, const SuperMatrix& base) { set_term(degree, term(degree) + base); }

  // Parity of the matrix part; K and D are even.
  Parity parity() const {
    bool has_even = !c_coeff.is_zero() || !d_coeff.is_zero();
    bool has_odd = false;
    for (const auto& [deg, m] : terms) {
      Parity pm = m.parity();
      if (pm == Parity::mixed) return Parity::mixed;
      (pm == Parity::odd ? has_odd : has_even) = true;
    }
    if (has_even && has_odd) return Parity::mixed;
    return has_odd ? Parity::odd : Parity::even;
  }

  friend LoopElement operator+(const LoopElement& x, const LoopElement& y) {
    LoopElement r = x;
    for (const auto& [deg, m] : y.terms) r.add_term(deg, m);
    r.c_coeff += y.c_coeff;
    r.d_coeff += y.d_coeff;
    return r;
  }
  friend LoopElement operator-(const LoopElement& x, const LoopElement& y) {
    return x + Rational(-1) * y;
  }
  friend LoopElement operator*(const Rational& s, const LoopElement& x) {
    LoopElement r(x.p, x.q);
    if (s.is_zero()) return r;
    for (const auto& [deg, m] : x.terms) r.set_term(deg, s * m);
    r.c_coeff = s * x.c_coeff;
    r.d_coeff = s * x.d_coeff;
    return r;
  }
  friend bool operator==(const LoopElement& x, const LoopElement& y) {
    return x.terms == y.terms && x.c_coeff == y.c_coeff && x.d_coeff == y.d_coeff;
  }
  friend bool operator!=(const LoopElement& x, const LoopElement& y) { return !(x == y); }
};

// [X t^k, Y t^l] = [X,Y] t^{k+l} + k delta_{k,-l} str(XY) K,
// [D, X t^k] = k X t^k, K central.
inline LoopElement loop_bracket(const LoopElement& x, const LoopElement& y) {
  if (!x.terms.empty() && !y.terms.empty() && (x.p != y.p || x.q != y.q))
    fail("block dimension mismatch");
  LoopElement r(x.p ? x.p : y.p, x.p ? x.q : y.q);
  for (const auto& [k, xm] : x.terms)
    for (const auto& [l, ym] : y.terms) {
      r.add_term(k + l, superbracket(xm, ym));
      if (k + l == 0 && k != 0) {
        Rational central = Rational(k) * base_form(xm, ym);
        r.c_coeff += central;
      }
    }
  if (!x.d_coeff.is_zero())
    for (const auto& [l, ym] : y.terms) r.add_term(l, x.d_coeff * Rational(l) * ym);
  if (!y.d_coeff.is_zero())
    for (const auto& [k, xm] : x.terms) r.add_term(k, -y.d_coeff * Rational(k) * xm);
  return r;
}

// The pairing: degrees cancel against str on the matrix part, K and D pair
// to 1 with each other and to 0 with everything else.
inline Rational bilinear_B1(const LoopElement& x, const LoopElement& y) {
  Rational s(0);
  for (const auto& [k, xm] : x.terms) {
    auto it = y.terms.find(-k);
    if (it != y.terms.end()) s += base_form(xm, it->second);
  }
  s += x.c_coeff * y.d_coeff + x.d_coeff * y.c_coeff;
  return s;
}

// Coefficient extraction at degree -1.
inline SuperMatrix residue(const LoopElement& x) { return x.term(-1); }

}  // namespace vogan
