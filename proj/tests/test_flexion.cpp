#include <gtest/gtest.h>

#include "mould/flexion.hpp"
#include "mould/random.hpp"
#include "test_util.hpp"

using namespace mould;

namespace {

Bimould sample(std::uint64_t seed, int maxlen = 3) {
  RandomShape s;
  s.maxlen = maxlen;
  s.max_factors = 1;
  return gen_random_bimould(seed, s);
}

LinComb sum_u(int from, int to) {
  LinComb c{};
  for (int i = from; i <= to; ++i) c[u_var(i)] = 1;
  return c;
}

}  // namespace

TEST(Letters, AmitMergesTheUpperIndicesOfTheActingBlock) {
  FlexedFactors f = amit_letters({1, 2, 1});
  ASSERT_EQ(f.acted.size(), 2u);
  ASSERT_EQ(f.acting.size(), 2u);
  EXPECT_EQ(f.acted[1].u, sum_u(2, 4));
  EXPECT_EQ(f.acted[1].v, lin_var(v_var(4)));
  EXPECT_EQ(f.acting[0].v, lin_var(v_var(2)) - lin_var(v_var(4)));
  EXPECT_EQ(f.acting[1].u, lin_var(u_var(3)));
}

TEST(Letters, AnitAttachesTheBlockOnTheLeft) {
  FlexedFactors f = anit_letters({2, 1, 1});
  ASSERT_EQ(f.acted.size(), 3u);
  ASSERT_EQ(f.acting.size(), 1u);
  EXPECT_EQ(f.acted[1].u, sum_u(2, 3));
  EXPECT_EQ(f.acted[1].v, lin_var(v_var(2)));
  EXPECT_EQ(f.acting[0].v, lin_var(v_var(3)) - lin_var(v_var(2)));
}

TEST(Ari, PerLengthEntryPointsMatch) {
  Bimould a = sample(21), b = sample(22);
  Bimould full = ari(a, b), pre = preari(a, b);
  for (int r = 0; r <= 3; ++r) {
    EXPECT_EQ(ari_at(a, b, r), full[r]) << "length " << r;
    EXPECT_EQ(preari_at(a, b, r), pre[r]) << "length " << r;
  }
}

TEST(Ari, IsPreariMinusItsTranspose) {
  Bimould a = sample(23), b = sample(24);
  EXPECT_EQ(ari(a, b), preari(a, b) - preari(b, a));
  EXPECT_TRUE(ari(a, a).is_zero());
}

TEST(Axit, FamilyDispatchAgreesWithNamedForms) {
  Bimould a = sample(25), b = sample(26), c = sample(27);
  EXPECT_EQ(axit_family(AxitKind::arit, b, b, a), arit(b, a));
  EXPECT_EQ(axit_family(AxitKind::axit, b, c, a), axit(b, c, a));
  EXPECT_EQ(axit_family(AxitKind::ilat, b, b, a), ilat(b, a));
}

TEST(Expari, RightNestedAgreesThroughLengthTwo) {
  Bimould l = sample(28, 4);
  Bimould left = expari(l, 4), right = expari_right_nested(l, 4);
  EXPECT_EQ(left.truncated(2), right.truncated(2));
}

TEST(Ihara, BracketIsAntisymmetric) {
  RandomShape s;
  s.maxlen = 3;
  s.layer = Layer::u_const;
  s.max_factors = 1;
  Bimould f = gen_random_bimould(29, s), g = gen_random_bimould(30, s);
  EXPECT_EQ(ihara_bracket(f, g), -ihara_bracket(g, f));
}

class FlexionChecks : public ::testing::TestWithParam<std::string> {};

TEST_P(FlexionChecks, Pass) {
  auto r = test_util::run_named(GetParam());
  EXPECT_TRUE(r.pass) << test_util::describe(r);
}

INSTANTIATE_TEST_SUITE_P(Registry, FlexionChecks,
                         ::testing::Values("schneps-amit", "schneps-anit", "anti-amit-anit",
                                           "ari-antisymmetry", "ari-jacobi", "der-derivation",
                                           "ihara-axit", "ihara-ila", "ari-flat-ihara",
                                           "ari-action-upper", "flexion-examples"),
                         test_util::param_name);
