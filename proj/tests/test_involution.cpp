#include <catch2/catch_amalgamated.hpp>

#include <vogan/verify.hpp>

using namespace vogan;

namespace {
const BaseAlgebra& sl21() {
  static BaseAlgebra alg = BaseAlgebra::sl(2, 1);
  return alg;
}
}  // namespace

TEST_CASE("identity extends to the identity") {
  auto theta = involution_identity(sl21());
  LoopInvolution ext = extend_involution(sl21(), theta);
  for (int deg = -2; deg <= 2; ++deg)
    for (const auto& b : sl21().basis) {
      LoopElement x = LoopElement::at_degree(deg, b);
      CHECK(ext.apply(x) == x);
    }
}

TEST_CASE("negative supertranspose is a declared-order-four automorphism") {
  auto theta = involution_neg_supertranspose(sl21());
  CHECK(theta.declared_order == 4);
  CHECK_NOTHROW(extend_involution(sl21(), theta));
  CartanReport r = check_cartan_automorphism(sl21(), theta, -2, 2);
  for (const auto& c : r.checks) {
    INFO(c.name << " witness " << c.witness);
    CHECK(c.passed);
  }
}

TEST_CASE("corrupted action is rejected with the offending pair") {
  auto theta = involution_neg_supertranspose(sl21());
  theta.action(0, 0) = theta.action(0, 0) + Rational(1);  // break linearly
  CHECK_THROWS_WITH(extend_involution(sl21(), theta),
                    Catch::Matchers::ContainsSubstring("fails on basis pair ("));
}

TEST_CASE("extension fixes K and D and every degree") {
  auto theta = involution_neg_supertranspose(sl21());
  LoopInvolution ext = extend_involution(sl21(), theta);
  CHECK(ext.apply(LoopElement::K(2, 1)) == LoopElement::K(2, 1));
  CHECK(ext.apply(LoopElement::D(2, 1)) == LoopElement::D(2, 1));
  SuperMatrix b = sl21().basis[0];
  LoopElement x = LoopElement::at_degree(2, b);
  LoopElement img = ext.apply(x);
  CHECK(img.term(2) == theta.apply(sl21(), b));
  CHECK(img.terms.size() == 1);
}

TEST_CASE("extension preserves brackets including central terms") {
  for (const BaseAlgebra& alg : {sl21(), BaseAlgebra::osp_1_2n(1)}) {
    for (const auto& theta : implemented_involutions(alg)) {
      CartanReport r = verify_involution_extension(alg, theta, -2, 2);
      for (const auto& c : r.checks) {
        INFO(alg.name << " " << c.name << " witness " << c.witness);
        CHECK(c.passed);
      }
    }
  }
}

TEST_CASE("order checks distinguish the involution types") {
  auto theta2 = involution_ad_diag(sl21(), {-1, 1, 1});
  // Conjugation squares to the identity on everything.
  for (int b = 0; b < sl21().dim(); ++b) {
    SuperMatrix x = sl21().basis[b];
    CHECK(theta2.apply(sl21(), theta2.apply(sl21(), x)) == x);
  }
  auto theta4 = involution_neg_supertranspose(sl21());
  bool some_odd_flipped = false;
  for (int b = 0; b < sl21().dim(); ++b) {
    SuperMatrix x = sl21().basis[b];
    SuperMatrix twice = theta4.apply(sl21(), theta4.apply(sl21(), x));
    if (x.parity() == Parity::even) CHECK(twice == x);
    if (x.parity() == Parity::odd && twice == -x) some_odd_flipped = true;
  }
  CHECK(some_odd_flipped);
}

TEST_CASE("report names the first pair breaking pairing preservation") {
  // Scale one basis image: still linear, no longer form-preserving.
  auto theta = involution_identity(sl21());
  theta.action(0, 0) = Rational(2);
  CartanReport r = check_cartan_automorphism(sl21(), theta, -1, 1);
  bool found = false;
  for (const auto& c : r.checks)
    if (c.name == "pairing_preserved") {
      CHECK_FALSE(c.passed);
      CHECK(c.witness.find("pair (") == 0);
      found = true;
    }
  CHECK(found);
}
