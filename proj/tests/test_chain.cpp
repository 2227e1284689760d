#include <gtest/gtest.h>

#include "pita/chain.hpp"
#include "pita/instances.hpp"

using namespace pita;

TEST(ChainTest, TopAndBottomListingsAgree) {
  const auto fin = make_fin();
  const FinMap f2(3, {3, 1, 2, 2});
  const FinMap f1(2, {1, 2, 2});
  const Chain c = Chain::from_top(*fin, {f2, f1});
  EXPECT_EQ(c, Chain::from_bottom(*fin, {f1, f2}));
  EXPECT_EQ(c.length(), 2);
  EXPECT_EQ(c.T(0), 2);
  EXPECT_EQ(c.T(1), 3);
  EXPECT_EQ(c.T(2), 4);
  EXPECT_EQ(c.f(1), f1);
  EXPECT_EQ(c.f(2), f2);
  EXPECT_EQ(composite_to_base(*fin, c, 0), FinMap::identity(2));
  EXPECT_EQ(composite_to_base(*fin, c, 2), f1 * f2);
}

TEST(ChainTest, RejectsMismatchedMaps) {
  const auto fin = make_fin();
  EXPECT_THROW(Chain::from_top(*fin, {FinMap(2, {1, 2}), FinMap(1, {1, 1, 1})}),
               ShapeError);
  EXPECT_THROW(Chain::from_bottom(*fin, {}), ShapeError);
  const auto fs = make_fin_surj();
  EXPECT_THROW(Chain::from_top(*fs, {FinMap(2, {1, 1})}), ShapeError);
}

TEST(ChainTest, LocallyOp) {
  const auto fin = make_fin();
  EXPECT_TRUE(is_locally_op(*fin, Chain(3)));
  EXPECT_TRUE(is_locally_op(*fin, Chain::from_top(*fin, {FinMap(2, {2, 1}), FinMap(1, {1, 1})})));
  EXPECT_FALSE(is_locally_op(
      *fin, Chain::from_top(*fin, {FinMap(2, {2, 1}), FinMap::identity(2)})));
}

TEST(LadderTest, CompositionAndIdentity) {
  const auto fin = make_fin();
  const Chain c = Chain::from_top(*fin, {FinMap(2, {2, 1})});
  const Ladder id = identity_ladder(*fin, c);
  EXPECT_TRUE(is_fop_diagram(*fin, id));
  EXPECT_EQ(compose_ladders(*fin, id, id), id);
  const Chain d = Chain::from_top(*fin, {FinMap::identity(2)});
  const Ladder l{c, d, {FinMap::identity(2), FinMap(2, {2, 1})}};
  EXPECT_TRUE(is_fop_diagram(*fin, l));
  EXPECT_EQ(compose_ladders(*fin, l, identity_ladder(*fin, d)), l);
  EXPECT_THROW(compose_ladders(*fin, l, l), ShapeError);
}

TEST(LadderTest, FopDiagramRejections) {
  const auto fin = make_fin();
  const Chain c = Chain::from_top(*fin, {FinMap(1, {1, 1})});
  std::string why;
  // A transposition on the only fibre is not fop.
  const Ladder swap{c, c, {FinMap::identity(1), FinMap(2, {2, 1})}};
  EXPECT_FALSE(is_fop_diagram(*fin, swap, &why));
  EXPECT_FALSE(why.empty());
  // A non-quasibijection rung.
  const Chain e = Chain::from_top(*fin, {FinMap(1, {1})});
  const Ladder squash{c, e, {FinMap::identity(1), FinMap(1, {1, 1})}};
  EXPECT_FALSE(is_fop_diagram(*fin, squash));
}
