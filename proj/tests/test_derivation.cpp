#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace lnd;
using namespace lnd::testing;

TEST(Derivation, ApplyExamples) {
  const PresentedRing xy = PresentedRing::polynomial(make_context({"X", "Y"}));
  const Derivation dy = on_ring(xy, {{"Y", "1"}});
  EXPECT_EQ(dy.apply(P(xy.context(), "X*Y^2")), P(xy.context(), "2*X*Y"));
  EXPECT_TRUE(dy.apply(P(xy.context(), "17/3")).is_zero());

  const PresentedRing xyz = ambient_xyz();
  const Derivation dp = on_ring(xyz, {{"Z", "X^2"}}, subalgebra_of(xyz, kGeneratorsC));
  EXPECT_EQ(dp.apply(P(xyz.context(), "Z + X*Z^2")), P(xyz.context(), "X^2 + 2*X^3*Z"));
}

TEST(Derivation, BadImageMapsAreRejected) {
  const PresentedRing xy = PresentedRing::polynomial(make_context({"x", "y"}));
  EXPECT_THROW(on_ring(xy, {{"q", "1"}}), VariableMismatch);
  EXPECT_THROW(on_ring(xy, {{"x", "1"}, {"x", "y"}}), InvalidArgument);
  const Polynomial foreign = P(make_context({"a"}), "a");
  EXPECT_THROW(on_ring(xy, {{"x", "1"}}).apply(foreign), VariableMismatch);
}

TEST(Derivation, IterateExamples) {
  const PresentedRing r = PresentedRing::polynomial(make_context({"x", "y"}));
  const Derivation d = on_ring(r, {{"x", "1"}});
  EXPECT_EQ(d.iterate(P(r.context(), "x^3"), 3), P(r.context(), "6"));
  EXPECT_EQ(d.iterate(P(r.context(), "x^3 + y"), 0), P(r.context(), "x^3 + y"));
  // D(y) = x, D^2(y) = 1, D^3(y) = 0.
  const Derivation t = on_ring(r, {{"x", "1"}, {"y", "x"}});
  EXPECT_EQ(t.iterate(P(r.context(), "y"), 2), P(r.context(), "1"));
  EXPECT_TRUE(t.iterate(P(r.context(), "y"), 3).is_zero());
}

TEST(Derivation, WellDefinedOnTheCone) {
  auto c = make_context({"u", "v", "w"});
  const PresentedRing cone = PresentedRing::quotient(c, {P(c, "u*w - v^2")});
  // D(uw - v^2) = u, and u is not a multiple of uw - v^2.
  const WellDefinedResult bad = check_well_defined(on_ring(cone, {{"w", "1"}}));
  EXPECT_FALSE(bad.well_defined);
  ASSERT_TRUE(bad.failing_relation);
  // D(uw - v^2) = 2v w - 2v w = 0.
  EXPECT_TRUE(check_well_defined(on_ring(cone, {{"u", "2*v"}, {"v", "w"}})).well_defined);
  const PresentedRing poly = PresentedRing::polynomial(c);
  EXPECT_TRUE(check_well_defined(on_ring(poly, {{"u", "v^7"}, {"w", "u"}})).well_defined);
}

TEST(Derivation, WellDefinedRejectsVisibleZeroDivisors) {
  auto c = make_context({"x", "y"});
  const PresentedRing cross = PresentedRing::quotient(c, {P(c, "x*y")});
  // D = 0 kills the relation, but the ring is not a domain.
  const WellDefinedResult r = check_well_defined(on_ring(cross, {}));
  EXPECT_FALSE(r.well_defined);
  EXPECT_TRUE(r.zero_divisors.has_value());
}

TEST(Nilpotency, Examples) {
  const PresentedRing xyz = ambient_xyz();
  const Derivation dz = on_ring(xyz, {{"Z", "1"}}, subalgebra_of(xyz, {"X^2", "X^3", "Y + X*Y^2", "Z"}));
  const NilpotencyCertificate c = certify_nilpotent(dz, default_nilpotency_bound(dz));
  EXPECT_TRUE(c.certified);
  EXPECT_EQ(c.orders, (std::vector<std::optional<std::size_t>>{1, 1, 2}));

  const PresentedRing r = PresentedRing::polynomial(make_context({"x", "y"}));
  for (std::size_t bound : {1u, 5u, 40u}) EXPECT_FALSE(certify_nilpotent(on_ring(r, {{"x", "x"}}), bound).certified);

  // x -> 1, y -> x^2 -> 2x -> 2 -> 0.
  const NilpotencyCertificate t = certify_nilpotent(on_ring(r, {{"x", "1"}, {"y", "x^2"}}), 4);
  EXPECT_TRUE(t.certified);
  EXPECT_EQ(t.orders, (std::vector<std::optional<std::size_t>>{2, 4}));
  EXPECT_FALSE(certify_nilpotent(on_ring(r, {{"x", "1"}, {"y", "x^2"}}), 3).certified);
  EXPECT_THROW(certify_nilpotent(on_ring(r, {}), 0), InvalidArgument);
}

TEST(Restriction, Examples) {
  const PresentedRing xyz = ambient_xyz();
  const Subalgebra c = subalgebra_of(xyz, kGeneratorsC);
  EXPECT_TRUE(restricts_to(on_ring(xyz, {{"Z", "X^2"}}), c).restricts);
  // Z alone is not enough: D(Z + X Z^2) = 1 + 2XZ is outside C.
  const RestrictionResult dz = restricts_to(on_ring(xyz, {{"Z", "1"}}), c);
  EXPECT_FALSE(dz.restricts);

  const PresentedRing x = PresentedRing::polynomial(make_context({"X"}));
  const RestrictionResult dx = restricts_to(on_ring(x, {{"X", "1"}}), subalgebra_of(x, {"X^2", "X^3"}));
  EXPECT_FALSE(dx.restricts);
  EXPECT_EQ(*dx.generator, P(x.context(), "X^2"));
  EXPECT_TRUE(restricts_to(on_ring(x, {}), subalgebra_of(x, {"X^2", "X^3"})).restricts);
}

TEST(Irreducibility, Examples) {
  const PresentedRing uv = PresentedRing::polynomial(make_context({"u", "v", "X", "Y"}));
  EXPECT_TRUE(irreducible_over_ufd(on_ring(uv, {{"X", "u"}, {"Y", "v"}})).irreducible);
  const PresentedRing xyz = ambient_xyz();
  const IrreducibilityResult red = irreducible_over_ufd(on_ring(xyz, {{"Y", "X^2"}, {"Z", "X^3"}}));
  EXPECT_FALSE(red.irreducible);
  EXPECT_EQ(red.common_divisor, P(xyz.context(), "X^2"));
  EXPECT_TRUE(irreducible_over_ufd(on_ring(xyz, {{"Y", "1"}})).irreducible);

  auto c = make_context({"u", "v", "w"});
  const PresentedRing cone = PresentedRing::quotient(c, {P(c, "u*w - v^2")});
  EXPECT_THROW(irreducible_over_ufd(on_ring(cone, {{"u", "2*v"}, {"v", "w"}})), Unsupported);
}

TEST(Containment, Examples) {
  const PresentedRing xyz = ambient_xyz();
  const Subalgebra c = subalgebra_of(xyz, kGeneratorsC);
  const Derivation d = on_ring(xyz, {{"Z", "X^4"}}, c);
  EXPECT_TRUE(contained_in_principal(d, P(xyz.context(), "X^2")).contained);
  // With b = X^4 the quotient Z + ... leaves C: D(Z + XZ^2)/X^4 = 1 + 2XZ.
  const ContainmentResult x4 = contained_in_principal(d, P(xyz.context(), "X^4"));
  EXPECT_FALSE(x4.contained);
  EXPECT_THROW(contained_in_principal(d, P(xyz.context(), "X")), InvalidArgument);

  const Derivation dy = on_ring(xyz, {{"Y", "1"}});
  EXPECT_FALSE(contained_in_principal(dy, P(xyz.context(), "Y")).contained);
  EXPECT_TRUE(contained_in_principal(on_ring(xyz, {}), P(xyz.context(), "X*Y + 3")).contained);

  auto cc = make_context({"u", "v", "w"});
  const PresentedRing cone = PresentedRing::quotient(cc, {P(cc, "u*w - v^2")});
  // D(u) = 2v, D(v) = w: images 2v, w, 0; w is not in (v).
  EXPECT_FALSE(contained_in_principal(on_ring(cone, {{"u", "2*v"}, {"v", "w"}}), P(cc, "v")).contained);
  EXPECT_TRUE(contained_in_principal(on_ring(cone, {{"u", "2*v*w"}, {"v", "w^2"}}), P(cc, "w")).contained);
}

TEST(DerivationProperties, Leibniz) {
  std::mt19937_64 rng(73);
  auto c = make_context({"u", "v", "x", "y"});
  const PresentedRing r = PresentedRing::polynomial(c);
  for (int i = 0; i < 100; ++i) {
    std::vector<Polynomial> images;
    for (int v = 0; v < 4; ++v) images.push_back(random_poly(rng, c, 2, 2));
    const Derivation d(r, images);
    const Polynomial f = random_poly(rng, c, 4, 4), g = random_poly(rng, c, 4, 4);
    ASSERT_EQ(d.apply(f * g), f * d.apply(g) + g * d.apply(f));
    ASSERT_EQ(d.apply(f + g), d.apply(f) + d.apply(g));
  }
}

TEST(DerivationProperties, LeibnizOnTheCone) {
  std::mt19937_64 rng(79);
  auto c = make_context({"u", "v", "w"});
  const PresentedRing cone = PresentedRing::quotient(c, {P(c, "u*w - v^2")});
  const Derivation d = on_ring(cone, {{"u", "2*v"}, {"v", "w"}});
  for (int i = 0; i < 50; ++i) {
    const Polynomial f = random_poly(rng, c, 4, 4), g = random_poly(rng, c, 4, 4);
    ASSERT_EQ(d.apply(f * g), cone.reduce(f * d.apply(g) + g * d.apply(f)));
  }
}

TEST(DerivationProperties, KernelElementsAreConstants) {
  std::mt19937_64 rng(83);
  auto c = make_context({"u", "v", "X", "Y"});
  const PresentedRing r = PresentedRing::polynomial(c);
  const Derivation d = on_ring(r, {{"X", "u"}, {"Y", "v"}});
  const auto consts = Ps(c, {"u", "v", "v*X - u*Y"});
  for (int i = 0; i < 50; ++i) {
    const Polynomial k = random_algebra_element(rng, consts, 4, 3);
    const Polynomial f = random_poly(rng, c, 4, 4);
    ASSERT_TRUE(d.apply(k).is_zero());
    ASSERT_EQ(d.apply(k * f), k * d.apply(f));
  }
}

TEST(DerivationProperties, CertifiedNilpotencyCoversProducts) {
  std::mt19937_64 rng(89);
  auto c = make_context({"x", "y", "z"});
  const PresentedRing r = PresentedRing::polynomial(c);
  const Derivation d = on_ring(r, {{"x", "1"}, {"y", "x^2"}, {"z", "x*y - 3"}});
  const NilpotencyCertificate cert = certify_nilpotent(d, default_nilpotency_bound(d));
  ASSERT_TRUE(cert.certified);
  std::size_t max_order = 0;
  for (const auto& o : cert.orders) max_order = std::max(max_order, *o);
  for (int i = 0; i < 30; ++i) {
    const Polynomial f = random_poly(rng, c, 4, 3), g = random_poly(rng, c, 4, 3);
    const std::int64_t deg = std::max<std::int64_t>((f * g).total_degree(), 0);
    const std::size_t bound = max_order * static_cast<std::size_t>(deg) + 1;
    ASSERT_TRUE(d.iterate(f * g, bound).is_zero());
  }
}

TEST(DerivationProperties, RestrictionKeepsRandomElementsInside) {
  std::mt19937_64 rng(97);
  const PresentedRing xyz = ambient_xyz();
  const Subalgebra c = subalgebra_of(xyz, kGeneratorsC);
  const Derivation d = on_ring(xyz, {{"Z", "X^2"}});
  ASSERT_TRUE(restricts_to(d, c).restricts);
  for (int i = 0; i < 30; ++i) {
    const Polynomial s = random_algebra_element(rng, c.generators(), 7, 3);
    ASSERT_TRUE(c.contains(d.apply(s))) << s;
  }
}
