#include <gtest/gtest.h>

#include "mould/bimould.hpp"
#include "mould/constructions.hpp"
#include "mould/error.hpp"
#include "mould/random.hpp"
#include "test_util.hpp"

using namespace mould;

namespace {

RatFun var(int v) { return RatFun::variable(v); }
RatFun inv(int v) { return RatFun::inverse_linear(lin_var(v)); }

Bimould random_general(std::uint64_t seed, int maxlen = 3, bool lu = true) {
  RandomShape s;
  s.maxlen = maxlen;
  s.lu = lu;
  return gen_random_bimould(seed, s);
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::invalid_argument;
}

}  // namespace

TEST(Unary, SwapOfPaIsPi) { EXPECT_EQ(swap(pa(3)), pi_unit(3)); }

TEST(Unary, DerScalesByLength) {
  Bimould a = random_general(1);
  EXPECT_EQ(der(a)[2], a[2].scaled(2));
  EXPECT_EQ(der(a)[3], a[3].scaled(3));
}

TEST(Unary, PushAtLengthOneIsNeg) {
  Bimould a = random_general(2);
  EXPECT_EQ(push(a)[1], neg(a)[1]);
}

TEST(Unary, DispatchByName) {
  Bimould a = random_general(3);
  EXPECT_EQ(unary({UnaryOp::leng, 2}, a), leng(2, a));
  EXPECT_EQ(unary({UnaryOp::pushpow, 3}, a), push(push(push(a))));
  EXPECT_EQ(unary({UnaryOp::anti}, a), anti(a));
}

TEST(Unary, MantarIsSignedAnti) {
  Bimould a = random_general(4);
  for (int r = 1; r <= 3; ++r) {
    RatFun expected = r % 2 == 1 ? anti(a)[r] : -anti(a)[r];
    EXPECT_EQ(mantar(a)[r], expected);
  }
}

TEST(Mu, ProductOfPolarUnits) {
  EXPECT_EQ(mu(pa(3), pa(3))[2], inv(u_var(1)) * inv(u_var(2)));
  EXPECT_TRUE(mu(pa(3), pa(3))[3].is_zero());
}

TEST(Mu, UnitAndAntiHomomorphism) {
  Bimould a = random_general(5, 3, false);
  Bimould b = random_general(6, 3, false);
  EXPECT_EQ(mu(a, Bimould::unit(3)), a);
  EXPECT_EQ(anti(mu(a, b)), mu(anti(b), anti(a)));
}

TEST(Invmu, Examples) {
  EXPECT_EQ(invmu(Bimould::unit(3)), Bimould::unit(3));
  Bimould one_minus_pi = Bimould::unit(3) - pi_unit(3);
  EXPECT_EQ(invmu(one_minus_pi)[2], inv(v_var(1)) * inv(v_var(2)));
  EXPECT_EQ(code_of([] { invmu(random_general(7)); }), Errc::not_invertible);
}

TEST(Sharp, Examples) {
  Bimould x2 = Bimould::single(1, var(x_var(1)).pow(2), 3, Layer::u_const);
  EXPECT_EQ(sharp(x2)[1], var(u_var(1)).pow(2));
  Bimould x1x2 = Bimould::single(2, var(x_var(1)) * var(x_var(2)), 3, Layer::u_const);
  EXPECT_EQ(sharp(x1x2)[2], var(u_var(1)) * (var(u_var(1)) + var(u_var(2))));
  EXPECT_EQ(sharp(x1x2).layer(), Layer::v_const);
  EXPECT_EQ(flat(sharp(x1x2)), x1x2);
}

TEST(Sharp, RejectsWrongLayer) {
  Bimould upper = Bimould::single(1, var(u_var(1)), 2, Layer::v_const);
  EXPECT_EQ(code_of([&] { sharp(upper); }), Errc::layer_mismatch);
  Bimould lower = Bimould::single(1, var(v_var(1)), 2, Layer::u_const);
  EXPECT_EQ(code_of([&] { flat(lower); }), Errc::layer_mismatch);
}

TEST(LinearCombine, Examples) {
  Bimould a = random_general(8), b = random_general(9);
  std::vector<Rat> c1 = {Rat(1), Rat(-1)};
  std::vector<Bimould> aa = {a, a};
  EXPECT_TRUE(linear_combine(c1, aa).is_zero());
  std::vector<Rat> c2 = {Rat(0), Rat(1)};
  std::vector<Bimould> ab = {a, b};
  EXPECT_EQ(linear_combine(c2, ab), b);
}

TEST(Truncation, BinaryOpsTakeTheMinimum) {
  Bimould a = random_general(10, 4), b = random_general(11, 2);
  EXPECT_EQ((a + b).truncation(), 2);
  EXPECT_EQ(mu(a, b).truncation(), 2);
  EXPECT_EQ(code_of([&] { b.truncated(3); }), Errc::truncation_exceeded);
  EXPECT_EQ(a.truncated(2).truncation(), 2);
}

TEST(Layer, ValidateRejectsViolations) {
  Bimould bad = Bimould::single(1, var(u_var(1)), 2, Layer::u_const);
  EXPECT_EQ(code_of([&] { bad.validate(); }), Errc::layer_mismatch);
  EXPECT_EQ(parse_layer("v-const"), Layer::v_const);
  EXPECT_FALSE(parse_layer("upper").has_value());
}

TEST(Difference, ReportsLowestLength) {
  Bimould a = random_general(12), b = a;
  b.set(2, b[2] + RatFun(1));
  auto d = first_difference(a, b);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->length, 2);
  EXPECT_EQ(d->delta, RatFun(-1));
}

class BimouldChecks : public ::testing::TestWithParam<std::string> {};

TEST_P(BimouldChecks, Pass) {
  auto r = test_util::run_named(GetParam());
  EXPECT_TRUE(r.pass) << test_util::describe(r);
}

INSTANTIATE_TEST_SUITE_P(Registry, BimouldChecks,
                         ::testing::Values("unary-involutions", "push-order", "push-identity",
                                           "mu-algebra", "invmu-roundtrip", "sharp-flat",
                                           "weight-homogeneity", "bimould-examples"),
                         test_util::param_name);
