// Exhaustive exact verification sweeps over a loop-algebra window: bracket
// identities, pairing identities, involution extension, and the Chevalley
// relation suite, aggregated into one report.

#pragma once

#include "chevalley.hpp"
#include "involution.hpp"

namespace vogan {

namespace detail {

inline int parity_sign(const LoopElement& x, const LoopElement& y) {
  return (x.parity() == Parity::odd && y.parity() == Parity::odd) ? -1 : 1;
}

}  // namespace detail

// Super-antisymmetry, super-Jacobi, the central-term normalization, K
// centrality, the derivation action, and the six pairing equations plus
// supersymmetry and invariance. All exact; witnesses name the first failing
// tuple.
inline CartanReport verify_loop_identities(const BaseAlgebra& alg, int lo, int hi) {
  CartanReport report;
  std::vector<LoopElement> window = loop_window_basis(alg, lo, hi);
  const std::size_t n = window.size();
  auto tag2 = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };

  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        LoopElement lhs = loop_bracket(window[i], window[j]);
        LoopElement rhs =
            Rational(-detail::parity_sign(window[i], window[j])) *
            loop_bracket(window[j], window[i]);
        if (lhs != rhs) {
          ok = false;
          w = tag2(i, j);
        }
      }
    report.add("super_antisymmetry", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t k = 0; k < n && ok; ++k) {
          const LoopElement &x = window[i], &y = window[j], &z = window[k];
          LoopElement sum =
              Rational(detail::parity_sign(x, z)) * loop_bracket(x, loop_bracket(y, z)) +
              Rational(detail::parity_sign(y, x)) * loop_bracket(y, loop_bracket(z, x)) +
              Rational(detail::parity_sign(z, y)) * loop_bracket(z, loop_bracket(x, y));
          if (!sum.is_zero()) {
            ok = false;
            w = "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                std::to_string(k) + ")";
          }
        }
    report.add("super_jacobi", ok, w);
  }

  {
    // [X t, Y t^-1] = [X,Y] + str(XY) K on all base pairs.
    bool ok = true;
    std::string w;
    for (int i = 0; i < alg.dim() && ok; ++i)
      for (int j = 0; j < alg.dim() && ok; ++j) {
        LoopElement lhs = loop_bracket(LoopElement::at_degree(1, alg.basis[i]),
                                       LoopElement::at_degree(-1, alg.basis[j]));
        LoopElement rhs =
            LoopElement::at_degree(0, superbracket(alg.basis[i], alg.basis[j])) +
            base_form(alg.basis[i], alg.basis[j]) * LoopElement::K(alg.p, alg.q);
        if (lhs != rhs) {
          ok = false;
          w = "(" + alg.basis_names[i] + "," + alg.basis_names[j] + ")";
        }
      }
    report.add("central_term", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    LoopElement K = LoopElement::K(alg.p, alg.q);
    LoopElement D = LoopElement::D(alg.p, alg.q);
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!loop_bracket(K, window[i]).is_zero() ||
          !loop_bracket(window[i], K).is_zero()) {
        ok = false;
        w = std::to_string(i);
      }
    }
    report.add("k_central", ok, w);
    bool dok = loop_bracket(D, K).is_zero();
    std::string dw;
    for (int deg = lo; deg <= hi && dok; ++deg)
      for (int b = 0; b < alg.dim() && dok; ++b) {
        LoopElement x = LoopElement::at_degree(deg, alg.basis[b]);
        if (loop_bracket(D, x) != Rational(deg) * x) {
          dok = false;
          dw = "degree " + std::to_string(deg) + ", " + alg.basis_names[b];
        }
      }
    report.add("derivation_action", dok, dw);
  }

  {
    // Pairing table: K/D duality and degree pairing.
    LoopElement K = LoopElement::K(alg.p, alg.q);
    LoopElement D = LoopElement::D(alg.p, alg.q);
    bool ok = bilinear_B1(K, D) == Rational(1) && bilinear_B1(D, K) == Rational(1) &&
              bilinear_B1(K, K).is_zero() && bilinear_B1(D, D).is_zero();
    std::string w = ok ? "" : "K/D table";
    for (int deg = lo; deg <= hi && ok; ++deg)
      for (int b = 0; b < alg.dim() && ok; ++b) {
        LoopElement x = LoopElement::at_degree(deg, alg.basis[b]);
        if (!bilinear_B1(x, K).is_zero() || !bilinear_B1(x, D).is_zero()) {
          ok = false;
          w = "matrix term against K/D";
        }
      }
    for (int b = 0; b < alg.dim() && ok; ++b)
      for (int c = 0; c < alg.dim() && ok; ++c)
        for (int da = lo; da <= hi && ok; ++da)
          for (int db = lo; db <= hi && ok; ++db) {
            Rational expect = da + db == 0
                                  ? base_form(alg.basis[b], alg.basis[c])
                                  : Rational(0);
            if (bilinear_B1(LoopElement::at_degree(da, alg.basis[b]),
                            LoopElement::at_degree(db, alg.basis[c])) != expect) {
              ok = false;
              w = "degree pair (" + std::to_string(da) + "," + std::to_string(db) + ")";
            }
          }
    report.add("pairing_table", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        Parity pi = window[i].parity(), pj = window[j].parity();
        Rational lhs = bilinear_B1(window[i], window[j]);
        Rational rhs = Rational(detail::parity_sign(window[i], window[j])) *
                       bilinear_B1(window[j], window[i]);
        if (lhs != rhs || (pi != pj && !lhs.is_zero())) {
          ok = false;
          w = tag2(i, j);
        }
      }
    report.add("pairing_supersymmetric", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t k = 0; k < n && ok; ++k) {
          if (bilinear_B1(loop_bracket(window[i], window[j]), window[k]) !=
              bilinear_B1(window[i], loop_bracket(window[j], window[k]))) {
            ok = false;
            w = "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                std::to_string(k) + ")";
          }
        }
    report.add("pairing_invariant", ok, w);
  }

  return report;
}

inline std::vector<InvolutionSpec> implemented_involutions(const BaseAlgebra& alg) {
  std::vector<InvolutionSpec> out;
  out.push_back(involution_identity(alg));
  out.push_back(involution_neg_supertranspose(alg));
  std::vector<int> signs(alg.p + alg.q, 1);
  if (alg.kind == BaseAlgebra::Kind::osp) {
    // Flip one symplectic pair so conjugation preserves the defining form.
    int n = alg.q / 2;
    signs[1] = -1;
    signs[1 + n] = -1;
  } else {
    signs[0] = -1;
  }
  out.push_back(involution_ad_diag(alg, signs));
  return out;
}

// Extension checks for one involution: automorphism property on the window
// (including central terms), fixed K and D, plus the Cartan report.
inline CartanReport verify_involution_extension(const BaseAlgebra& alg,
                                                const InvolutionSpec& theta,
                                                int lo, int hi) {
  CartanReport report;
  LoopInvolution ext = extend_involution(alg, theta);
  std::vector<LoopElement> window = loop_window_basis(alg, lo, hi);

  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < window.size() && ok; ++i)
      for (std::size_t j = 0; j < window.size() && ok; ++j) {
        if (ext.apply(loop_bracket(window[i], window[j])) !=
            loop_bracket(ext.apply(window[i]), ext.apply(window[j]))) {
          ok = false;
          w = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    report.add(theta.name + ":bracket_preserved", ok, w);
  }
  {
    LoopElement K = LoopElement::K(alg.p, alg.q);
    LoopElement D = LoopElement::D(alg.p, alg.q);
    report.add(theta.name + ":fixes_K", ext.apply(K) == K);
    report.add(theta.name + ":fixes_D", ext.apply(D) == D);
  }
  CartanReport cartan = check_cartan_automorphism(alg, theta, lo, hi);
  for (auto& c : cartan.checks) {
    c.name = theta.name + ":" + c.name;
    report.checks.push_back(c);
  }
  return report;
}

struct VerificationRun {
  FamilySpec spec;
  int window_lo = -2, window_hi = 2;
  CartanReport report;
};

// Full suite for a family with a matrix model.
inline VerificationRun run_verification(const FamilySpec& spec, int lo, int hi) {
  if (!has_matrix_model(spec))
    fail("no matrix model; combinatorial checks only");
  ChevalleySystem sys = chevalley_generators(spec);
  VerificationRun run{spec, lo, hi, {}};

  CartanReport ids = verify_loop_identities(sys.alg, lo, hi);
  for (auto& c : ids.checks) run.report.checks.push_back(c);

  for (const auto& theta : implemented_involutions(sys.alg)) {
    CartanReport r = verify_involution_extension(sys.alg, theta, lo, hi);
    for (auto& c : r.checks) run.report.checks.push_back(c);
  }

  CartanReport chev = verify_chevalley(sys);
  for (auto& c : chev.checks) {
    c.name = "chevalley:" + c.name;
    run.report.checks.push_back(c);
  }
  return run;
}

}  // namespace vogan
