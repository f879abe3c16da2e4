#include <gtest/gtest.h>

#include "ealab/axioms.hpp"
#include "ealab/constructions.hpp"
#include "ealab/error.hpp"
#include "ealab/isomorphism.hpp"
#include "ealab/order.hpp"
#include "ealab/structure.hpp"
#include "fixtures.hpp"

using namespace ealab;

TEST(Chain, Shape) {
  const auto c = chain(4);
  EXPECT_EQ(c.names(), (std::vector<std::string>{"0", "a", "2a", "1"}));
  EXPECT_EQ(c.sum(1, 2), 3u);
  EXPECT_FALSE(c.defined(2, 2));
  EXPECT_THROW(chain(1), Error);
}

TEST(Product, UnaryIsIdentity) {
  const auto c = chain(3);
  EXPECT_EQ(direct_product({c}), c);
  EXPECT_THROW(direct_product({}), Error);
}

TEST(Product, TwoBitsIsBooleanSquare) {
  const auto b = direct_product({chain(2), chain(2)});
  EXPECT_EQ(b.size(), 4u);
  EXPECT_EQ(b.names(), (std::vector<std::string>{"(0,0)", "(0,1)", "(1,0)", "(1,1)"}));
  EXPECT_EQ(b.sum(1, 2), 3u);
  EXPECT_FALSE(b.defined(1, 1));
}

TEST(Product, TwelveElementExample) {
  const auto e = direct_product({chain(3), horizontal_sum({chain(3), chain(3)})});
  EXPECT_EQ(e.size(), 12u);
  EXPECT_TRUE(validate_axioms(e).passed());
  EXPECT_TRUE(e.same_structure(fixtures::ea("e12.ea")));
}

TEST(Product, CommutesUpToIsomorphism) {
  const auto a = chain(3);
  const auto b = horizontal_sum({chain(3), chain(4)});
  EXPECT_TRUE(are_isomorphic(direct_product({a, b}), direct_product({b, a})));
}

TEST(HorizontalSum, TwoThreeChains) {
  const auto e1 = horizontal_sum({chain(3), chain(3)});
  EXPECT_EQ(e1.size(), 4u);
  EXPECT_EQ(e1.names(), (std::vector<std::string>{"0", "s0.a", "s1.a", "1"}));
  EXPECT_FALSE(e1.defined(1, 2));
  EXPECT_TRUE(validate_axioms(e1).passed());
}

TEST(HorizontalSum, ThreeSummandsGiveThreeBlocks) {
  const auto t = horizontal_sum({chain(3), chain(3), chain(3)});
  EXPECT_EQ(t.size(), 5u);
  EXPECT_EQ(blocks(LatticeEffectAlgebra::make(t)).size(), 3u);
}

TEST(HorizontalSum, Errors) {
  EXPECT_EQ(horizontal_sum({chain(4)}), chain(4));
  EXPECT_THROW(horizontal_sum({}), Error);
  try {
    horizontal_sum({chain(3), chain(2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kFactorTooSmall);
  }
}

TEST(Oml, BooleanAlgebrasAreSharp) {
  for (const char* f : {"boolean1.oml", "boolean2.oml", "boolean3.oml"}) {
    const auto oml = fixtures::oml(f);
    const auto t = oml_to_ea(oml);
    EXPECT_TRUE(validate_axioms(t).passed()) << f;
    const auto o = derive_order(t);
    EXPECT_TRUE(o.poset() == oml.order) << f;
    const auto e = LatticeEffectAlgebra::make(t);
    EXPECT_EQ(sharp_elements(e).size(), t.size()) << f;
  }
}

TEST(Oml, BooleanSquareMatchesProduct) {
  const auto t = oml_to_ea(fixtures::oml("boolean2.oml"));
  EXPECT_TRUE(are_isomorphic(t, direct_product({chain(2), chain(2)})));
}

TEST(Oml, MO2HasTwoBlocks) {
  const auto t = oml_to_ea(fixtures::oml("mo2.oml"));
  EXPECT_TRUE(validate_axioms(t).passed());
  const auto e = LatticeEffectAlgebra::make(t);
  EXPECT_EQ(blocks(e).size(), 2u);
  EXPECT_EQ(sharp_elements(e).size(), 6u);
}

TEST(Oml, HexagonIsRejected) {
  try {
    oml_to_ea(fixtures::oml("o6.oml"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotOrthomodular);
    // a <= b but b != a v (a' ^ b) = a v 0 = a.
    EXPECT_EQ(e.witness(), (std::vector<std::uint32_t>{1, 2}));
  }
}

TEST(Oml, RejectsBadComplementation) {
  auto oml = fixtures::oml("boolean2.oml");
  oml.perp = {3, 1, 2, 0};  // p' = p
  try {
    oml_to_ea(oml);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotOrthocomplemented);
  }
  auto pent = fixtures::oml("mo2.oml");
  pent.order = fixtures::poset("nonlattice6.poset");
  EXPECT_THROW(oml_to_ea(pent), Error);
}
