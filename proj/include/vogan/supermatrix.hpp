// Block supermatrices over the rationals: the supercommutator, supertrace,
// and the invariant pairing str(xy).

#pragma once

#include <string>

#include "matrix.hpp"

namespace vogan {

enum class Parity { even, odd, mixed };

struct SuperMatrix {
  int p = 0, q = 0;   // block dimensions
  RatMatrix a;        // (p+q) x (p+q)

  SuperMatrix() = default;
  SuperMatrix(int p_, int q_) : p(p_), q(q_), a(p_ + q_, p_ + q_) {}

  int dim() const { return p + q; }
  bool is_zero() const { return a.is_zero(); }

  static SuperMatrix unit(int p, int q, int i, int j) {
    SuperMatrix m(p, q);
    m.a(i, j) = Rational(1);
    return m;
  }

  bool in_even_block(int i, int j) const {
    return (i < p) == (j < p);
  }

  Parity parity() const {
    bool has_even = false, has_odd = false;
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j) {
        if (a(i, j).is_zero()) continue;
        (in_even_block(i, j) ? has_even : has_odd) = true;
      }
    if (has_even && has_odd) return Parity::mixed;
    return has_odd ? Parity::odd : Parity::even;  // zero counts as even
  }

  bool is_homogeneous() const { return parity() != Parity::mixed; }

  SuperMatrix even_part() const {
    SuperMatrix m(p, q);
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j)
        if (in_even_block(i, j)) m.a(i, j) = a(i, j);
    return m;
  }
  SuperMatrix odd_part() const {
    SuperMatrix m(p, q);
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j)
        if (!in_even_block(i, j)) m.a(i, j) = a(i, j);
    return m;
  }

  Rational supertrace() const {
    Rational s(0);
    for (int i = 0; i < p; ++i) s += a(i, i);
    for (int i = p; i < dim(); ++i) s -= a(i, i);
    return s;
  }

  // Supertranspose: [[A,B],[C,D]] -> [[A^T, C^T],[-B^T, D^T]].
  SuperMatrix supertranspose() const {
    SuperMatrix m(p, q);
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j) {
        Rational v = a(j, i);
        if (j < p && i >= p) v = -v;  // the B block picks up a sign
        m.a(i, j) = v;
      }
    return m;
  }

  friend SuperMatrix operator+(const SuperMatrix& x, const SuperMatrix& y) {
    SuperMatrix r(x.p, x.q);
    r.a = x.a + y.a;
    return r;
  }
  friend SuperMatrix operator-(const SuperMatrix& x, const SuperMatrix& y) {
    SuperMatrix r(x.p, x.q);
    r.a = x.a - y.a;
    return r;
  }
  friend SuperMatrix operator*(const Rational& s, const SuperMatrix& x) {
    SuperMatrix r(x.p, x.q);
    r.a = s * x.a;
    return r;
  }
  friend SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y) {
    SuperMatrix r(x.p, x.q);
    r.a = x.a * y.a;
    return r;
  }
  friend SuperMatrix operator-(const SuperMatrix& x) { return Rational(-1) * x; }
  friend bool operator==(const SuperMatrix& x, const SuperMatrix& y) {
    return x.p == y.p && x.q == y.q && x.a == y.a;
  }
  friend bool operator!=(const SuperMatrix& x, const SuperMatrix& y) { return !(x == y); }
};

inline void check_same_blocks(const SuperMatrix& x, const SuperMatrix& y) {
  if (x.p != y.p || x.q != y.q) fail("block dimension mismatch");
}

// [x,y] = xy - (-1)^{|x||y|} yx on homogeneous arguments.
inline SuperMatrix supercommutator(const SuperMatrix& x, const SuperMatrix& y) {
  check_same_blocks(x, y);
  Parity px = x.parity(), py = y.parity();
  if (px == Parity::mixed || py == Parity::mixed)
    fail("homogeneous required");
  SuperMatrix xy = x * y;
  SuperMatrix yx = y * x;
  if (px == Parity::odd && py == Parity::odd) return xy + yx;
  return xy - yx;
}

// Parity-bilinear extension of the supercommutator to arbitrary matrices.
inline SuperMatrix superbracket(const SuperMatrix& x, const SuperMatrix& y) {
  check_same_blocks(x, y);
  SuperMatrix xe = x.even_part(), xo = x.odd_part();
  SuperMatrix ye = y.even_part(), yo = y.odd_part();
  SuperMatrix r(x.p, x.q);
  if (!xe.is_zero() && !ye.is_zero()) r = r + supercommutator(xe, ye);
  if (!xe.is_zero() && !yo.is_zero()) r = r + supercommutator(xe, yo);
  if (!xo.is_zero() && !ye.is_zero()) r = r + supercommutator(xo, ye);
  if (!xo.is_zero() && !yo.is_zero()) r = r + supercommutator(xo, yo);
  return r;
}

// Invariant supersymmetric pairing str(xy).
inline Rational base_form(const SuperMatrix& x, const SuperMatrix& y) {
  check_same_blocks(x, y);
  return (x * y).supertrace();
}

}  // namespace vogan
