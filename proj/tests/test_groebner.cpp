#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"

using namespace lnd;
using lnd::testing::P;
using lnd::testing::Ps;
using lnd::testing::random_nonzero;
using lnd::testing::random_poly;

namespace {

Ideal I(const Context& c, const std::vector<std::string>& gens) { return Ideal(c, Ps(c, gens)); }

// Random ideals small enough for lex.
std::vector<Polynomial> random_generators(std::mt19937_64& rng, const Context& c, int count) {
  std::vector<Polynomial> gens;
  for (int k = 0; k < count; ++k) gens.push_back(random_nonzero(rng, c, 3, 3));
  return gens;
}

}  // namespace

TEST(Buchberger, Examples) {
  auto c = make_context({"x", "y", "z"}, MonomialOrder::lex());
  GroebnerBasis g = buchberger(I(c, {"x"}), MonomialOrder::lex());
  ASSERT_EQ(g.elements().size(), 1u);
  EXPECT_EQ(g.elements()[0], P(c, "x"));

  // Twisted cubic: y^3 - z^2 = (x^3 - z)(x^3 + z) - (x^2 - y)(x^4 + x^2 y + y^2).
  const Polynomial cubic = P(c, "y^3 - z^2");
  EXPECT_EQ(P(c, "(x^3 - z)*(x^3 + z) - (x^2 - y)*(x^4 + x^2*y + y^2)"), cubic);
  GroebnerBasis t = buchberger(I(c, {"x^2 - y", "x^3 - z"}), MonomialOrder::lex());
  EXPECT_NE(std::find(t.elements().begin(), t.elements().end(), cubic), t.elements().end());
  EXPECT_EQ(t.elements().size(), 4u);
  EXPECT_TRUE(is_groebner(t));
  EXPECT_TRUE(is_reduced_basis(t));

  GroebnerBasis u = buchberger(I(c, {"x", "1 - x"}), MonomialOrder::lex());
  EXPECT_TRUE(u.is_unit());
}

TEST(Buchberger, ZeroIdealAndBudget) {
  auto c = make_context({"x", "y"});
  EXPECT_TRUE(groebner(Ideal::zero(c)).is_zero());
  Limits tiny;
  tiny.pair_budget = 1;
  auto lexc = make_context({"x", "y", "z"}, MonomialOrder::lex());
  EXPECT_THROW(groebner(I(lexc, {"x^2 - y", "x^3 - z", "y*z - x"}), tiny), BudgetExceeded);
}

TEST(NormalForm, Examples) {
  auto c = make_context({"x", "y"}, MonomialOrder::lex());
  EXPECT_TRUE(normal_form(P(c, "x^2"), groebner(I(c, {"x"}))).is_zero());
  EXPECT_EQ(normal_form(P(c, "y+1"), groebner(I(c, {"x"}))), P(c, "y+1"));
  EXPECT_EQ(normal_form(P(c, "x^3"), groebner(I(c, {"x^2 - y"}))), P(c, "x*y"));
}

TEST(Membership, Examples) {
  auto c = make_context({"x"});
  EXPECT_TRUE(ideal_member(P(c, "1"), I(c, {"x", "1 - x"})));
  EXPECT_FALSE(ideal_member(P(c, "x"), I(c, {"x^2"})));
  auto C = make_context({"X", "Y"});
  EXPECT_TRUE(ideal_member(P(C, "X^2*Y + X^3*Y^2"), I(C, {"X^2", "X^3"})));
}

TEST(Quotient, Examples) {
  auto c = make_context({"x", "y"});
  EXPECT_TRUE(ideal_equal(ideal_quotient(I(c, {"x^2"}), P(c, "x")), I(c, {"x"})));
  EXPECT_TRUE(ideal_equal(ideal_quotient(I(c, {"x"}), P(c, "y")), I(c, {"x"})));

  auto u = make_context({"u", "v", "w"});
  const Ideal base = I(u, {"u*w - v^2", "u"});
  const Ideal q = ideal_quotient(base, P(u, "w"));
  // v^2 w = u w^2 - (uw - v^2) w, so v^2 is in the quotient. It is already in
  // the base ideal, which equals the monomial ideal (u, v^2); w divides none of
  // its generators, so the quotient does not grow.
  EXPECT_TRUE(ideal_member(P(u, "v^2"), q));
  EXPECT_EQ(P(u, "u*w^2 - (u*w - v^2)*w"), P(u, "v^2*w"));
  EXPECT_TRUE(ideal_equal(base, I(u, {"u", "v^2"})));
  EXPECT_TRUE(ideal_equal(q, base));
}

TEST(Saturation, Examples) {
  auto c = make_context({"x", "y"});
  EXPECT_TRUE(ideal_equal(saturation(I(c, {"x*y"}), P(c, "y")), I(c, {"x"})));
  EXPECT_TRUE(groebner(saturation(I(c, {"x"}), P(c, "x"))).is_unit());
  // u w = v^2 modulo the cone forces u into the saturation.
  auto u = make_context({"u", "v", "w"});
  const Ideal sat = saturation(I(u, {"u^2", "u*v", "u*w", "u*w - v^2"}), P(u, "w"));
  EXPECT_TRUE(ideal_member(P(u, "u"), sat));
}

TEST(Eliminate, Examples) {
  auto c = make_context({"t", "x", "y"});
  const Ideal par = eliminate(I(c, {"x - t", "y - t^2"}), 1);
  EXPECT_TRUE(ideal_equal(par, I(par.context(), {"y - x^2"})));
  // t - 1 has no multiple free of t; a unit ideal stays a unit ideal.
  EXPECT_TRUE(eliminate(I(c, {"t - 1"}), 1).is_zero_ideal());
  EXPECT_TRUE(groebner(eliminate(I(c, {"t", "t - 1"}), 1)).is_unit());

  auto cusp = make_context({"X", "T1", "T2"});
  const Ideal rel = eliminate(I(cusp, {"T1 - X^2", "T2 - X^3"}), 1);
  const Polynomial expected = P(rel.context(), "T1^3 - T2^2");
  EXPECT_TRUE(ideal_equal(rel, Ideal(rel.context(), {expected})));
  // No survivor involves X.
  const GroebnerBasis gb = groebner(rel);
  for (const Polynomial& g : gb.elements()) EXPECT_EQ(g.context()->names().front(), "T1");
}

TEST(IdealEqual, Examples) {
  auto c = make_context({"x", "y"});
  EXPECT_TRUE(ideal_equal(I(c, {"x", "y"}), I(c, {"y", "x + y"})));
  EXPECT_FALSE(ideal_equal(I(c, {"x"}), I(c, {"x^2"})));
}

TEST(Intersection, MonomialIdealsUseLcm) {
  auto c = make_context({"x", "y", "z"});
  // (x^2, y) cap (x y, z): lcms of generator pairs.
  const Ideal got = ideal_intersection(I(c, {"x^2", "y"}), I(c, {"x*y", "z"}));
  const Ideal lcms = I(c, {"x^2*y", "x^2*z", "x*y", "y*z"});
  EXPECT_TRUE(ideal_equal(got, lcms));
}

TEST(GroebnerProperties, EveryBasisIsClosedAndReduced) {
  std::mt19937_64 rng(17);
  for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::grlex()}) {
    auto c = make_context({"x", "y", "z"}, order);
    // Three random cubics are cheap under graded orders; lex gets two.
    const int count = order.kind() == MonomialOrder::Kind::lex ? 2 : 3;
    for (int i = 0; i < 25; ++i) {
      const auto gens = random_generators(rng, c, count);
      const GroebnerBasis g = groebner(Ideal(c, gens));
      ASSERT_TRUE(is_groebner(g));
      ASSERT_TRUE(is_reduced_basis(g));
      for (const Polynomial& f : gens) ASSERT_TRUE(basis_contains(g, f));
    }
  }
}

TEST(GroebnerProperties, NormalFormIgnoresGeneratorOrder) {
  std::mt19937_64 rng(23);
  auto c = make_context({"x", "y", "z"});
  for (int i = 0; i < 25; ++i) {
    auto gens = random_generators(rng, c, 3);
    const GroebnerBasis a = groebner(Ideal(c, gens));
    std::shuffle(gens.begin(), gens.end(), rng);
    gens.push_back(gens[0] * random_poly(rng, c, 2, 2) + gens[1]);
    const GroebnerBasis b = groebner(Ideal(c, gens));
    for (int k = 0; k < 5; ++k) {
      const Polynomial f = random_poly(rng, c, 5, 6);
      ASSERT_EQ(normal_form(f, a), normal_form(f, b));
    }
  }
}

TEST(GroebnerProperties, MembershipIsClosedUnderCombination) {
  std::mt19937_64 rng(41);
  auto c = make_context({"x", "y", "z"});
  for (int i = 0; i < 50; ++i) {
    const auto gens = random_generators(rng, c, 2);
    const Ideal id(c, gens);
    const GroebnerBasis g = groebner(id);
    Polynomial f = gens[0] * random_poly(rng, c, 2, 3) + gens[1] * random_poly(rng, c, 2, 3);
    Polynomial h = random_poly(rng, c, 2, 3);
    ASSERT_TRUE(basis_contains(g, f));
    ASSERT_TRUE(basis_contains(g, f + h * gens[1]));
  }
}

TEST(GroebnerProperties, QuotientLaws) {
  std::mt19937_64 rng(43);
  auto c = make_context({"x", "y", "z"});
  for (int i = 0; i < 20; ++i) {
    const auto gens = random_generators(rng, c, 2);
    const Ideal id(c, gens);
    const Polynomial g = random_nonzero(rng, c, 2, 2);
    const Ideal q = ideal_quotient(id, g);
    ASSERT_TRUE(ideal_contained(id, groebner(q)));
    // g (I : g) lies in I.
    const GroebnerBasis base = groebner(id);
    for (const Polynomial& h : q.nonzero_generators()) ASSERT_TRUE(basis_contains(base, h * g));
    // g in I gives the unit ideal.
    const Polynomial inside = gens[0] * random_nonzero(rng, c, 1, 2);
    ASSERT_TRUE(groebner(ideal_quotient(id, inside)).is_unit());
  }
}

TEST(GroebnerProperties, SaturationIsStable) {
  std::mt19937_64 rng(47);
  auto c = make_context({"x", "y", "z"});
  for (int i = 0; i < 15; ++i) {
    const Polynomial g = random_nonzero(rng, c, 1, 2);
    // Build something with a g-torsion component.
    const auto gens = random_generators(rng, c, 2);
    const Ideal id(c, {gens[0] * g, gens[1] * g * g});
    const Ideal sat = saturation(id, g);
    ASSERT_TRUE(ideal_equal(ideal_quotient(sat, g), sat));
    ASSERT_TRUE(ideal_contained(id, groebner(sat)));
  }
}

TEST(GroebnerProperties, IntersectionBounds) {
  std::mt19937_64 rng(53);
  auto c = make_context({"x", "y", "z"});
  for (int i = 0; i < 15; ++i) {
    const Ideal a(c, random_generators(rng, c, 2)), b(c, random_generators(rng, c, 2));
    const Ideal meet = ideal_intersection(a, b);
    const GroebnerBasis gm = groebner(meet);
    ASSERT_TRUE(ideal_contained(meet, groebner(a)));
    ASSERT_TRUE(ideal_contained(meet, groebner(b)));
    ASSERT_TRUE(ideal_contained(a * b, gm));
  }
}
