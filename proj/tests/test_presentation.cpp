#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace lnd;
using namespace lnd::testing;

namespace {

// h g lies in (I) + P while h does not.
void expect_zero_divisor_witness(const Polynomial& g, const std::vector<Polynomial>& ideal, const PresentedRing& ring,
                                 const Polynomial& h) {
  EXPECT_FALSE(ring.member(h, ideal)) << h;
  EXPECT_TRUE(ring.member(h * g.in_context(ring.context()), ideal)) << h;
}

}  // namespace

TEST(PresentedRing, QuotientBasics) {
  auto c = make_context({"u", "v", "w"});
  const PresentedRing q = PresentedRing::quotient(c, {P(c, "u*w - v^2")});
  EXPECT_FALSE(q.is_polynomial_ring());
  EXPECT_TRUE(q.is_zero(P(c, "u*w - v^2")));
  EXPECT_EQ(q.reduce(P(c, "v^2")), q.reduce(P(c, "u*w")));
  EXPECT_THROW(PresentedRing::quotient(c, {P(c, "u"), P(c, "u - 1")}), InvalidArgument);
  // Degree <= 2 standard monomials: 10 monomials minus the leading v^2.
  EXPECT_EQ(q.standard_monomials(2, 100).size(), 9u);
  EXPECT_FALSE(q.zero_divisor_pair().has_value());
  const PresentedRing cross = PresentedRing::quotient(make_context({"x", "y"}), {P(make_context({"x", "y"}), "x*y")});
  EXPECT_TRUE(cross.zero_divisor_pair().has_value());
}

TEST(Subalgebra, CuspPresentation) {
  const PresentedRing r = PresentedRing::polynomial(make_context({"X"}));
  const Subalgebra cusp = subalgebra_of(r, {"X^2", "X^3"});
  const auto rel = cusp.presentation_ideal();
  ASSERT_EQ(rel.size(), 1u);
  const Context& t = cusp.presentation().context();
  const Polynomial expected = P(t, "T1^3 - T2^2");
  EXPECT_EQ(rel[0].monic(), expected.monic());
  // The relation dies under T -> generators.
  EXPECT_TRUE(cusp.evaluate(expected).is_zero());
}

TEST(Subalgebra, FreeGeneratorsHaveNoRelations) {
  const PresentedRing r = PresentedRing::polynomial(make_context({"X"}));
  EXPECT_TRUE(subalgebra_of(r, {"X"}).presentation_ideal().empty());
  const PresentedRing uv = PresentedRing::polynomial(make_context({"u", "v", "X", "Y"}));
  EXPECT_TRUE(subalgebra_of(uv, {"u", "v", "v*X - u*Y"}).presentation_ideal().empty());
}

TEST(Subalgebra, TagNamesAvoidAmbientNames) {
  const PresentedRing r = PresentedRing::polynomial(make_context({"T1", "x"}));
  const Subalgebra a = subalgebra_of(r, {"T1^2", "x"});
  for (const std::string& n : a.presentation().context()->names()) EXPECT_NE(n, "T1");
}

TEST(Subalgebra, MembershipExamples) {
  const PresentedRing r = PresentedRing::polynomial(make_context({"X"}));
  const Subalgebra cusp = subalgebra_of(r, {"X^2", "X^3"});
  const MembershipResult m = subalgebra_member(P(r.context(), "X^5"), cusp);
  ASSERT_TRUE(m.member);
  EXPECT_EQ(*m.witness, P(cusp.presentation().context(), "T1*T2"));
  EXPECT_FALSE(subalgebra_member(P(r.context(), "X"), cusp).member);

  const PresentedRing xyz = ambient_xyz();
  const Subalgebra a = subalgebra_of(xyz, kGeneratorsA);
  EXPECT_TRUE(a.contains(P(xyz.context(), "Y + X*Y^2")));
  EXPECT_FALSE(a.contains(P(xyz.context(), "Y")));
  EXPECT_FALSE(a.contains(P(xyz.context(), "X*Y")));
  EXPECT_TRUE(a.contains(P(xyz.context(), "X^3*Y^4 + 7")));
  EXPECT_THROW(a.to_presentation(P(xyz.context(), "X")), InvalidArgument);
}

// A = k[Y + XY^2] + X^2 k[X, Y]. Modulo X^2, (Y + XY^2)^j = Y^j + j X Y^(j+1),
// so the degree <= d elements are spanned by 1, Y^j + j X Y^(j+1) (j + 2 <= d)
// and the monomials X^a Y^b with a >= 2, a + b <= d.
TEST(Subalgebra, DegreePieceOfAMatchesHandBasis) {
  const PresentedRing xyz = ambient_xyz();
  const Context& c = xyz.context();
  const Subalgebra a = subalgebra_of(xyz, kGeneratorsA);
  for (int d = 1; d <= 6; ++d) {
    std::vector<Polynomial> oracle{Polynomial::constant(c, Rational(1))};
    for (int j = 1; j + 2 <= d; ++j)
      oracle.push_back(P(c, "Y^" + std::to_string(j) + " + " + std::to_string(j) + "*X*Y^" + std::to_string(j + 1)));
    for (int s = 2; s <= d; ++s)
      for (int b = 0; b + 2 <= s; ++b)
        oracle.push_back(P(c, "X^" + std::to_string(s - b) + "*Y^" + std::to_string(b)));
    const auto piece = a.degree_piece(static_cast<std::size_t>(d));
    EXPECT_EQ(piece.size(), oracle.size()) << "degree " << d;
    for (const Polynomial& f : oracle) EXPECT_TRUE(reduce_by_echelon(f, piece).is_zero()) << f;
  }
}

TEST(Subalgebra, DegreePieceAgreesWithMembership) {
  const PresentedRing xyz = ambient_xyz();
  const Subalgebra c = subalgebra_of(xyz, kGeneratorsC);
  for (const Polynomial& f : c.degree_piece(4)) EXPECT_TRUE(c.contains(f)) << f;
  // An element whose top terms cancel between generator products.
  EXPECT_TRUE(c.contains(P(xyz.context(), "X*Z^3 + 1/2*Z^2")));
}

TEST(Subalgebra, QuotientAmbient) {
  auto ctx = make_context({"u", "v", "w"});
  const PresentedRing cone = PresentedRing::quotient(ctx, {P(ctx, "u*w - v^2")});
  const Subalgebra a = subalgebra_of(cone, {"u", "w"});
  // v^2 = u w in the cone.
  EXPECT_TRUE(a.contains(P(ctx, "v^2")));
  EXPECT_FALSE(a.contains(P(ctx, "v")));
}

TEST(NzdTest, Examples) {
  auto c = make_context({"x", "y"});
  const PresentedRing r = PresentedRing::polynomial(c);
  EXPECT_TRUE(nzd_test(P(c, "y"), {P(c, "x")}, r).regular);
  const NzdResult no = nzd_test(P(c, "x"), {P(c, "x^2")}, r);
  ASSERT_FALSE(no.regular);
  expect_zero_divisor_witness(P(c, "x"), {P(c, "x^2")}, r, *no.witness);
  EXPECT_THROW(nzd_test(P(c, "x^3"), {P(c, "x^2")}, r), Degenerate);
  EXPECT_THROW(nzd_test(P(c, "x"), {P(c, "1")}, r), Degenerate);
}

// X^2 + 2X^3Z is a zero divisor modulo X^4 C: with g = X^2 + 2X^3Z,
// X^5 g = X^4 (X^3 + 2X^4 Z) and X^3 + 2X^4 Z = X^3 + 2 X^2 (X^2 Z) lies in C,
// while X^5 is not in X^4 C because X is not in C.
TEST(NzdTest, FibrationElementIsAZeroDivisorModuloX4) {
  const PresentedRing xyz = ambient_xyz();
  const Context& a = xyz.context();
  const Subalgebra c = subalgebra_of(xyz, kGeneratorsC);
  const PresentedRing& ring = c.presentation();
  const Polynomial g = c.to_presentation(P(a, "X^2 + 2*X^3*Z"));
  const Polynomial x4 = c.to_presentation(P(a, "X^4"));

  // Hand witness, checked through membership alone.
  EXPECT_EQ(P(a, "X^5*(X^2 + 2*X^3*Z)"), P(a, "X^4*(X^3 + 2*X^4*Z)"));
  EXPECT_TRUE(c.contains(P(a, "X^3 + 2*X^4*Z")));
  EXPECT_FALSE(c.contains(P(a, "X")));
  const Polynomial x5 = c.to_presentation(P(a, "X^5"));
  expect_zero_divisor_witness(g, {x4}, ring, x5);

  const NzdResult r = nzd_test(g, {x4}, ring);
  EXPECT_FALSE(r.regular);
  ASSERT_TRUE(r.witness);
  expect_zero_divisor_witness(g, {x4}, ring, *r.witness);
}

TEST(NzdTest, X4IsNotInTheGradeOneIdeal) {
  const PresentedRing xyz = ambient_xyz();
  const Context& a = xyz.context();
  const Subalgebra c = subalgebra_of(xyz, kGeneratorsC);
  const PresentedRing& ring = c.presentation();
  const std::vector<Polynomial> id{c.to_presentation(P(a, "X^6")), c.to_presentation(P(a, "X^4 + 2*X^5*Z"))};
  EXPECT_FALSE(ring.member(c.to_presentation(P(a, "X^4")), id));
  EXPECT_FALSE(ideal_equal(ring.lift(id), ring.lift({c.to_presentation(P(a, "X^4"))})));
}

TEST(PresentationProperties, WitnessesEvaluateBack) {
  std::mt19937_64 rng(61);
  const PresentedRing xyz = ambient_xyz();
  const Subalgebra a = subalgebra_of(xyz, kGeneratorsA);
  for (int i = 0; i < 30; ++i) {
    const Polynomial f = random_algebra_element(rng, a.generators(), 8, 4);
    const MembershipResult m = subalgebra_member(f, a);
    ASSERT_TRUE(m.member) << f;
    ASSERT_EQ(a.evaluate(*m.witness), f);
  }
}

TEST(PresentationProperties, AddingAMemberKeepsMembership) {
  std::mt19937_64 rng(67);
  const PresentedRing xyz = ambient_xyz();
  const Subalgebra a = subalgebra_of(xyz, kGeneratorsA);
  auto more = kGeneratorsA;
  more.push_back("X^3*Y + X^2*Y^2");
  const Subalgebra b = subalgebra_of(xyz, more);
  const auto xy = Ps(xyz.context(), {"X", "Y"});
  for (int i = 0; i < 30; ++i) {
    const Polynomial f = i % 2 ? random_algebra_element(rng, a.generators(), 7, 3)
                               : random_algebra_element(rng, xy, 5, 4);
    ASSERT_EQ(a.contains(f), b.contains(f)) << f;
  }
}

TEST(PresentationProperties, NonRegularAnswersCarryCheckedWitnesses) {
  std::mt19937_64 rng(71);
  auto c = make_context({"x", "y", "z"});
  const PresentedRing r = PresentedRing::polynomial(c);
  int negatives = 0;
  for (int i = 0; i < 30; ++i) {
    // Share a factor half of the time.
    const Polynomial h = random_nonzero(rng, c, 1, 2);
    Polynomial a = random_nonzero(rng, c, 2, 2), g = random_nonzero(rng, c, 2, 2);
    if (i % 2 == 0) {
      a = a * h;
      g = g * h;
    }
    NzdResult res;
    try {
      res = nzd_test(g, {a}, r);
    } catch (const Degenerate&) {
      continue;
    }
    if (!res.regular) {
      ++negatives;
      ASSERT_TRUE(res.witness);
      expect_zero_divisor_witness(g, {a}, r, *res.witness);
    }
    // In a UFD, g is regular modulo (a) exactly when they share no factor.
    ASSERT_EQ(res.regular, gcd(a, g).is_constant()) << a << " | " << g;
  }
  EXPECT_GT(negatives, 5);
}
