// Concrete base superalgebras with homogeneous rational bases: the
// supertrace-zero matrices sl(p|q) and the orthosymplectic osp(1|2n).

#pragma once

#include <string>
#include <vector>

#include "supermatrix.hpp"

namespace vogan {

struct BaseAlgebra {
  enum class Kind { sl, osp };
  std::string name;
  Kind kind = Kind::sl;
  int p = 0, q = 0;
  std::vector<SuperMatrix> basis;        // homogeneous elements
  std::vector<std::string> basis_names;

  int dim() const { return static_cast<int>(basis.size()); }

  // sl(p|q): supertrace-zero (p+q)-square matrices, p != q.
  static BaseAlgebra sl(int p, int q) {
    if (p == q) fail("sl(p|p) excluded: the supertrace-zero algebra is not basic");
    if (p < 1 || q < 1) fail("sl(p|q): blocks must be nonempty");
    BaseAlgebra alg;
    alg.name = "sl(" + std::to_string(p) + "|" + std::to_string(q) + ")";
    alg.kind = Kind::sl;
    alg.p = p;
    alg.q = q;
    int d = p + q;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (i == j) continue;
        alg.basis.push_back(SuperMatrix::unit(p, q, i, j));
        alg.basis_names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      }
    // Cartan: E_kk - E_{k+1,k+1} inside a block, E_pp + E_{p+1,p+1} across it.
    for (int k = 0; k + 1 < d; ++k) {
      SuperMatrix h(p, q);
      h.a(k, k) = Rational(1);
      h.a(k + 1, k + 1) = (k + 1 == p) ? Rational(1) : Rational(-1);
      alg.basis.push_back(h);
      alg.basis_names.push_back("H" + std::to_string(k + 1));
    }
    return alg;
  }

  // osp(1|2n) for the form diag(1) + symplectic J = [[0,I],[-I,0]] on the odd
  // block. Even part sp(2n) in the odd-odd block; odd part parametrized by a
  // column gamma with row beta = -gamma^T J.
  static BaseAlgebra osp_1_2n(int n) {
    if (n < 1) fail("osp(1|2n): n >= 1 required");
    BaseAlgebra alg;
    alg.name = "osp(1|" + std::to_string(2 * n) + ")";
    alg.kind = Kind::osp;
    alg.p = 1;
    alg.q = 2 * n;
    auto sp = [&](int i, int j) -> std::pair<int, int> { return {1 + i, 1 + j}; };
    // Cartan H_i = E_ii - E_{n+i,n+i}
    for (int i = 0; i < n; ++i) {
      SuperMatrix h(1, 2 * n);
      auto [a, b] = sp(i, i);
      h.a(a, b) = Rational(1);
      auto [c, d] = sp(n + i, n + i);
      h.a(c, d) = Rational(-1);
      alg.basis.push_back(h);
      alg.basis_names.push_back("H" + std::to_string(i + 1));
    }
    // A-type: E_ij - E_{n+j,n+i}, i != j
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        SuperMatrix x(1, 2 * n);
        auto [a, b] = sp(i, j);
        x.a(a, b) = Rational(1);
        auto [c, d] = sp(n + j, n + i);
        x.a(c, d) = Rational(-1);
        alg.basis.push_back(x);
        alg.basis_names.push_back("X" + std::to_string(i + 1) + std::to_string(j + 1));
      }
    // Raising Y_ij = E_{i,n+j} + E_{j,n+i} (i <= j), lowering Z_ij transposed.
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        SuperMatrix y(1, 2 * n);
        auto [a, b] = sp(i, n + j);
        y.a(a, b) = Rational(1);
        if (i != j) {
          auto [c, d] = sp(j, n + i);
          y.a(c, d) = Rational(1);
        }
        alg.basis.push_back(y);
        alg.basis_names.push_back("Y" + std::to_string(i + 1) + std::to_string(j + 1));
        SuperMatrix z(1, 2 * n);
        auto [e, f] = sp(n + i, j);
        z.a(e, f) = Rational(1);
        if (i != j) {
          auto [g, h] = sp(n + j, i);
          z.a(g, h) = Rational(1);
        }
        alg.basis.push_back(z);
        alg.basis_names.push_back("Z" + std::to_string(i + 1) + std::to_string(j + 1));
      }
    // Odd part: v(gamma) with beta = -gamma^T J.
    for (int k = 0; k < 2 * n; ++k) {
      SuperMatrix v = odd_vector(n, k);
      alg.basis.push_back(v);
      alg.basis_names.push_back("V" + std::to_string(k + 1));
    }
    return alg;
  }

  // gamma = unit_k: column entries rows 1..2n of column 0; beta = -gamma^T J.
  static SuperMatrix odd_vector(int n, int k) {
    SuperMatrix v(1, 2 * n);
    v.a(1 + k, 0) = Rational(1);
    // beta_j = -(J^T gamma)_j = (J gamma)_j with J = [[0,I],[-I,0]]:
    // beta = (-gamma^T J) has entries: beta_j = -gamma_i J_ij.
    // For gamma = u_k: beta_j = -J_kj.
    for (int j = 0; j < 2 * n; ++j) {
      Rational Jkj(0);
      if (k < n && j == n + k) Jkj = Rational(1);
      if (k >= n && j == k - n) Jkj = Rational(-1);
      if (!Jkj.is_zero()) v.a(0, 1 + j) = -Jkj;
    }
    return v;
  }

  SuperMatrix zero() const { return SuperMatrix(p, q); }

  // Exact coordinates of m in the basis span; throws if m lies outside it.
  std::vector<Rational> coordinates(const SuperMatrix& m) const {
    int d = p + q;
    RatMatrix sys(d * d, dim());
    for (int b = 0; b < dim(); ++b)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) sys(i * d + j, b) = basis[b].a(i, j);
    std::vector<Rational> rhs(d * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) rhs[i * d + j] = m.a(i, j);
    std::vector<Rational> x;
    if (!solve_linear(sys, rhs, x)) fail(name + ": element outside the basis span");
    // solve_linear returns one solution of a consistent system; verify.
    SuperMatrix rebuilt = zero();
    for (int b = 0; b < dim(); ++b)
      if (!x[b].is_zero()) rebuilt = rebuilt + x[b] * basis[b];
    if (!(rebuilt == m)) fail(name + ": element outside the basis span");
    return x;
  }

  bool contains(const SuperMatrix& m) const {
    try {
      coordinates(m);
      return true;
    } catch (const std::exception&) {
      return false;
    }
  }
};

}  // namespace vogan
