// Involutions of a base superalgebra as rational matrices on its basis,
// their degree-wise extension to the loop algebra (fixing K and D), and the
// Cartan-automorphism report.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "base_algebra.hpp"
#include "loop.hpp"

namespace vogan {

struct InvolutionSpec {
  std::string name;
  int declared_order = 2;  // 2 or 4
  RatMatrix action;        // dim x dim on the algebra basis

  SuperMatrix apply(const BaseAlgebra& alg, const SuperMatrix& x) const {
    std::vector<Rational> coords = alg.coordinates(x);
    SuperMatrix out = alg.zero();
    for (int b = 0; b < alg.dim(); ++b) {
      Rational c(0);
      for (int a = 0; a < alg.dim(); ++a)
        if (!coords[a].is_zero() && !action(b, a).is_zero())
          c += action(b, a) * coords[a];
      if (!c.is_zero()) out = out + c * alg.basis[b];
    }
    return out;
  }
};

namespace detail {

inline RatMatrix action_from_map(const BaseAlgebra& alg,
                                 const std::function<SuperMatrix(const SuperMatrix&)>& f) {
  RatMatrix m(alg.dim(), alg.dim());
  for (int a = 0; a < alg.dim(); ++a) {
    std::vector<Rational> coords = alg.coordinates(f(alg.basis[a]));
    for (int b = 0; b < alg.dim(); ++b) m(b, a) = coords[b];
  }
  return m;
}

}  // namespace detail

inline InvolutionSpec involution_identity(const BaseAlgebra& alg) {
  InvolutionSpec s;
  s.name = "identity";
  s.declared_order = 2;
  s.action = RatMatrix::identity(alg.dim());
  return s;
}

// x -> -x^{st}; squares to the grading automorphism, so it has order 2 on the
// even part and 4 overall.
inline InvolutionSpec involution_neg_supertranspose(const BaseAlgebra& alg) {
  InvolutionSpec s;
  s.name = "neg_supertranspose";
  s.declared_order = 4;
  s.action = detail::action_from_map(
      alg, [](const SuperMatrix& x) { return -x.supertranspose(); });
  return s;
}

// Conjugation by a diagonal sign matrix.
inline InvolutionSpec involution_ad_diag(const BaseAlgebra& alg,
                                         const std::vector<int>& signs) {
  if (static_cast<int>(signs.size()) != alg.p + alg.q)
    fail("ad_diag: need one sign per dimension");
  InvolutionSpec s;
  s.name = "ad_diag(";
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i) s.name += ",";
    s.name += signs[i] > 0 ? "+" : "-";
  }
  s.name += ")";
  s.declared_order = 2;
  s.action = detail::action_from_map(alg, [&](const SuperMatrix& x) {
    SuperMatrix y(x.p, x.q);
    for (int i = 0; i < x.dim(); ++i)
      for (int j = 0; j < x.dim(); ++j)
        y.a(i, j) = Rational(signs[i] * signs[j]) * x.a(i, j);
    return y;
  });
  return s;
}

// Degree-wise extension fixing K and D. Verifies first that theta is an
// automorphism on all basis pairs; the error names the offending pair.
struct LoopInvolution {
  const BaseAlgebra* alg = nullptr;
  InvolutionSpec theta;

  LoopElement apply(const LoopElement& x) const {
    LoopElement out(x.p, x.q);
    for (const auto& [deg, m] : x.terms) out.set_term(deg, theta.apply(*alg, m));
    out.c_coeff = x.c_coeff;
    out.d_coeff = x.d_coeff;
    return out;
  }
};

inline LoopInvolution extend_involution(const BaseAlgebra& alg,
                                        const InvolutionSpec& theta) {
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j) {
      SuperMatrix lhs = theta.apply(alg, superbracket(alg.basis[i], alg.basis[j]));
      SuperMatrix rhs =
          superbracket(theta.apply(alg, alg.basis[i]), theta.apply(alg, alg.basis[j]));
      if (!(lhs == rhs))
        fail(theta.name + " is not an automorphism: fails on basis pair (" +
             alg.basis_names[i] + ", " + alg.basis_names[j] + ")");
    }
  return LoopInvolution{&alg, theta};
}

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string witness;  // first failure, empty on pass
};

struct CartanReport {
  std::vector<CheckResult> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  void add(const std::string& name, bool ok, const std::string& witness = "") {
    checks.push_back({name, ok, ok ? "" : witness});
  }
};

// Window basis: every algebra basis element at each degree, plus K and D.
inline std::vector<LoopElement> loop_window_basis(const BaseAlgebra& alg, int lo, int hi) {
  std::vector<LoopElement> out;
  for (int deg = lo; deg <= hi; ++deg)
    for (const auto& b : alg.basis) out.push_back(LoopElement::at_degree(deg, b));
  out.push_back(LoopElement::K(alg.p, alg.q));
  out.push_back(LoopElement::D(alg.p, alg.q));
  return out;
}

// Checks on the extended involution: pairing preservation, declared orders
// (square is the identity on the even part, fourth power everywhere),
// symmetry of both twisted pairings, sign uniformity of the twisted Gram
// diagonal on a compact sample of the even part, and vanishing of the
// twisted pairing of K and D against brackets of an even with an odd
// element.
inline CartanReport check_cartan_automorphism(const BaseAlgebra& alg,
                                              const InvolutionSpec& theta,
                                              int window_lo, int window_hi) {
  CartanReport report;
  LoopInvolution ext{&alg, theta};
  std::vector<LoopElement> window = loop_window_basis(alg, window_lo, window_hi);

  // (a) B1(theta x, theta y) = B1(x, y) on all window pairs.
  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < window.size() && ok; ++i)
      for (std::size_t j = 0; j < window.size() && ok; ++j)
        if (bilinear_B1(ext.apply(window[i]), ext.apply(window[j])) !=
            bilinear_B1(window[i], window[j])) {
          ok = false;
          w = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
    report.add("pairing_preserved", ok, w);
  }

  // (b) theta^2 = id on the even part; theta^4 = id overall.
  {
    bool even_ok = true, full_ok = true;
    std::string we, wf;
    for (int b = 0; b < alg.dim(); ++b) {
      SuperMatrix x = alg.basis[b];
      SuperMatrix t2 = theta.apply(alg, theta.apply(alg, x));
      SuperMatrix t4 = theta.apply(alg, theta.apply(alg, t2));
      if (x.parity() == Parity::even && !(t2 == x) && even_ok) {
        even_ok = false;
        we = alg.basis_names[b];
      }
      if (!(t4 == x) && full_ok) {
        full_ok = false;
        wf = alg.basis_names[b];
      }
    }
    report.add("order_two_on_even", even_ok, we);
    report.add("order_four_overall", full_ok, wf);
  }

  // (c) Twisted pairings. B_minus(x,y) = -B1(x, theta y) and
  //     B_double(x,y) = B1(theta x, theta y): symmetric on even pairs,
  //     supersymmetric overall.
  {
    bool minus_even_sym = true, double_even_sym = true;
    std::string wm, wd;
    for (std::size_t i = 0; i < window.size(); ++i)
      for (std::size_t j = 0; j < window.size(); ++j) {
        if (window[i].parity() != Parity::even || window[j].parity() != Parity::even)
          continue;
        Rational m_ij = -bilinear_B1(window[i], ext.apply(window[j]));
        Rational m_ji = -bilinear_B1(window[j], ext.apply(window[i]));
        if (m_ij != m_ji && minus_even_sym) {
          minus_even_sym = false;
          wm = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
        Rational d_ij = bilinear_B1(ext.apply(window[i]), ext.apply(window[j]));
        Rational d_ji = bilinear_B1(ext.apply(window[j]), ext.apply(window[i]));
        if (d_ij != d_ji && double_even_sym) {
          double_even_sym = false;
          wd = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    report.add("twisted_minus_symmetric_on_even", minus_even_sym, wm);
    report.add("twisted_double_symmetric_on_even", double_even_sym, wd);
  }

  // (d) Sign uniformity of B_minus(x,x) on the compact sample: degree-zero
  //     even basis elements with zero diagonal blocks removed, i.e. the
  //     block-traceless even sample.
  {
    bool uniform = true;
    int sign_seen = 0;
    std::string w;
    for (int b = 0; b < alg.dim(); ++b) {
      const SuperMatrix& x = alg.basis[b];
      if (x.parity() != Parity::even) continue;
      LoopElement lx = LoopElement::at_degree(0, x);
      Rational g = -bilinear_B1(lx, ext.apply(lx));
      if (g.is_zero()) continue;
      if (sign_seen == 0) sign_seen = g.sign();
      else if (g.sign() != sign_seen) {
        uniform = false;
        w = alg.basis_names[b];
        break;
      }
    }
    report.add("twisted_gram_sign_uniform_on_sample", uniform, w);
  }

  // (e) B_minus(x, [z, y]) = 0 for x in span{K} or span{D}, z even, y odd:
  //     such brackets have no K component and no D component.
  {
    bool ok = true;
    std::string w;
    LoopElement K = LoopElement::K(alg.p, alg.q);
    LoopElement D = LoopElement::D(alg.p, alg.q);
    for (std::size_t i = 0; i < window.size() && ok; ++i) {
      if (window[i].parity() != Parity::even || !window[i].c_coeff.is_zero() ||
          !window[i].d_coeff.is_zero())
        continue;
      for (std::size_t j = 0; j < window.size() && ok; ++j) {
        if (window[j].parity() != Parity::odd) continue;
        LoopElement br = loop_bracket(window[i], window[j]);
        if (!(-bilinear_B1(K, ext.apply(br))).is_zero() ||
            !(-bilinear_B1(D, ext.apply(br))).is_zero()) {
          ok = false;
          w = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    }
    report.add("central_pair_orthogonal_to_mixed_brackets", ok, w);
  }

  return report;
}

}  // namespace vogan
