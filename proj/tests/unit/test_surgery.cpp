#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "steinkit/examples_lm.hpp"
#include "steinkit/surgery.hpp"

using namespace steinkit;

TEST_CASE("empty presentation is D^4: chi=1, sigma=0, h=-2, grading=0") {
  SurgeryPresentation p = SurgeryPresentation::from_front(FrontDiagram::from_loops({}));
  ManifoldInvariants inv = linking_matrix(p);
  REQUIRE(inv.euler_char == 1);
  REQUIRE(inv.signature == 0);
  REQUIRE(inv.linking_matrix.rows() == 0);
  auto c1 = c1_squared(inv.linking_matrix, {});
  REQUIRE(c1.value);
  auto hd = hopf_and_grading(inv, c1);
  REQUIRE(hd);
  REQUIRE(hd->hopf_invariant == Rat(-2));
  REQUIRE(hd->grading == Rat(0));
}

TEST_CASE("single (-1)-framed unknot") {
  GridDiagram g = parse_grid("n=2\nX=1,0\nO=0,1\nframe=-1\n");
  SurgeryPresentation p = SurgeryPresentation::from_front(grid_to_front(g));
  ManifoldInvariants inv = linking_matrix(p);
  REQUIRE(inv.euler_char == 2);
  REQUIRE(inv.linking_matrix(0, 0) == -1);
  REQUIRE(inv.signature == -1);
  REQUIRE(inv.determinant == -1);
  auto c1 = c1_squared(inv.linking_matrix, {Int(1)});
  REQUIRE(c1.value);
  REQUIRE(*c1.value == Rat(-1));
}

TEST_CASE("Stein default framing is tb-1") {
  GridDiagram g = parse_grid("n=2\nX=1,0\nO=0,1\n");
  SurgeryPresentation p = SurgeryPresentation::from_front(grid_to_front(g));
  ClassicalInvariants ci = classical_invariants(p.front);
  REQUIRE(p.is_stein(ci));
  REQUIRE(p.framing_of(0, ci) == -2);  // tb(-1) - 1
  ManifoldInvariants inv = linking_matrix(p);
  REQUIRE(inv.linking_matrix(0, 0) == -2);
}

TEST_CASE("c1^2 undefined when r is outside the image") {
  IMat q(1, 1);  // 0-framed unknot
  auto c1 = c1_squared(q, {Int(2)});
  REQUIRE_FALSE(c1.value);
  REQUIRE(!c1.reason.empty());
}

TEST_CASE("Lisca-Matic linking form, Hopf invariant and grading") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      SurgeryPresentation p = lisca_matic_presentation(n, k);
      ClassicalInvariants ci = classical_invariants(p.front);
      REQUIRE(p.is_stein(ci));
      ManifoldInvariants inv = linking_matrix(p);
      REQUIRE(inv.euler_char == 3);
      REQUIRE(inv.signature == 0);
      REQUIRE(inv.determinant == -1);
      REQUIRE(inv.linking_matrix(0, 0) == 0);       // tb(trefoil)-1
      REQUIRE(inv.linking_matrix(1, 1) == -n - 2);  // tb(unknot)-1
      REQUIRE(inv.linking_matrix(0, 1) == 1);
      SpincOnW s{{Int(0), Int(2 * k - n)}};
      auto c1 = c1_squared(inv.linking_matrix, s.rotation_vector);
      REQUIRE(c1.value);
      REQUIRE(*c1.value == Rat(0));
      auto hd = hopf_and_grading(inv, c1);
      REQUIRE(hd);
      REQUIRE(hd->hopf_invariant == Rat(-6));
      REQUIRE(hd->grading == Rat(1));
    }
  }
}

TEST_CASE("h is independent of k across the family (n <= 12)") {
  for (int n = 2; n <= 12; ++n) {
    std::optional<Rat> h;
    for (int k = 1; k <= n - 1; ++k) {
      SurgeryPresentation p = lisca_matic_presentation(n, k);
      ManifoldInvariants inv = linking_matrix(p);
      ClassicalInvariants ci = classical_invariants(p.front);
      SpincOnW s{{Int(ci.comp[0].rot), Int(ci.comp[1].rot)}};
      auto hd = hopf_and_grading(inv, c1_squared(inv.linking_matrix, s.rotation_vector));
      REQUIRE(hd);
      if (!h) h = hd->hopf_invariant;
      REQUIRE(*h == hd->hopf_invariant);
    }
  }
}

TEST_CASE("dimension shift: exact rational substitution") {
  REQUIRE(dimension_shift(Rat(0), Rat(1), Rat(0)) == Rat(-1, 2));
  REQUIRE(dimension_shift(Rat(0), Rat(3), Rat(0)) == Rat(-3, 2));
  // (c1^2, chi, sigma) = (1, 2, -1) -> 0; the value for (-1, 2, -1) is -1/2.
  REQUIRE(dimension_shift(Rat(1), Rat(2), Rat(-1)) == Rat(0));
  REQUIRE(dimension_shift(Rat(-1), Rat(2), Rat(-1)) == Rat(-1, 2));
}

TEST_CASE("4*grading = -h - 2 exactly") {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    ManifoldInvariants inv;
    inv.euler_char = int(rng() % 9) - 4;
    inv.signature = int(rng() % 7) - 3;
    C1Squared c1{Rat(int(rng() % 11) - 5), ""};
    auto hd = hopf_and_grading(inv, c1);
    REQUIRE(hd);
    REQUIRE(4 * hd->grading == -hd->hopf_invariant - 2);
  }
}

TEST_CASE("theorem verdicts: distinctness and boundary restrictions") {
  IMat q(2, 2);
  q(0, 0) = 0; q(0, 1) = 1; q(1, 0) = 1; q(1, 1) = -5;  // n=3 form, det -1
  SpincOnW s1{{Int(0), Int(-1)}}, s2{{Int(0), Int(1)}};
  MainVerdict v = theorem_main_verdict(s1, s2, q);
  REQUIRE(v.kind == MainVerdict::DistinctContactInvariants);
  REQUIRE(v.boundary_restrictions_agree);  // unimodular form: always

  MainVerdict same = theorem_main_verdict(s1, s1, q);
  REQUIRE(same.kind == MainVerdict::SameSpinc);

  IMat z(2, 2);  // two 0-framed split unknots: cokernel Z^2
  MainVerdict off = theorem_main_verdict(SpincOnW{{Int(2), Int(0)}}, SpincOnW{{Int(0), Int(0)}}, z);
  REQUIRE(off.kind == MainVerdict::DistinctContactInvariants);
  REQUIRE_FALSE(off.boundary_restrictions_agree);
}

TEST_CASE("n-1 pairwise distinct classes in the family") {
  int n = 4;
  IMat q(2, 2);
  q(0, 0) = 0; q(0, 1) = 1; q(1, 0) = 1; q(1, 1) = -n - 2;
  for (int k1 = 1; k1 <= n - 1; ++k1)
    for (int k2 = k1 + 1; k2 <= n - 1; ++k2) {
      SpincOnW a{{Int(0), Int(2 * k1 - n)}}, b{{Int(0), Int(2 * k2 - n)}};
      REQUIRE(theorem_main_verdict(a, b, q).kind == MainVerdict::DistinctContactInvariants);
    }
}

TEST_CASE("c1^2 is invariant under unimodular congruence") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + int(rng() % 3);
    IMat q(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        q(i, j) = int(rng() % 9) - 4;
        q(j, i) = q(i, j);
      }
    std::vector<Int> r(n);
    for (auto& x : r) x = int(rng() % 7) - 3;
    IMat p = IMat::identity(n);
    for (int step = 0; step < 5; ++step) {
      int i = int(rng() % n), j = int(rng() % n);
      if (i == j) continue;
      int f = int(rng() % 5) - 2;
      for (int t = 0; t < n; ++t) p(i, t) += f * p(j, t);
    }
    IMat q2 = p.transpose() * q * p;
    std::vector<Int> r2 = p.transpose() * r;
    auto a = c1_squared(q, r), b = c1_squared(q2, r2);
    REQUIRE(bool(a.value) == bool(b.value));
    if (a.value) REQUIRE(*a.value == *b.value);
  }
}
