#include <gtest/gtest.h>

#include "mould/constructions.hpp"
#include "mould/error.hpp"
#include "mould/flexion.hpp"
#include "test_util.hpp"

using namespace mould;

namespace {

RatFun x(int i) { return RatFun::variable(x_var(i)); }
RatFun inv_x(int i) { return RatFun::inverse_linear(lin_var(x_var(i))); }
RatFun inv_diff(int j, int k) {
  return RatFun::inverse_linear(lin_var(x_var(j)) - lin_var(x_var(k)));
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

TEST(Psi0, LowComponents) {
  Bimould p = psi0(3);
  EXPECT_EQ(p[1], inv_x(1));
  RatFun s2 = RatFun(2) * inv_x(1) * inv_x(2) - inv_x(1) * inv_diff(2, 1);
  EXPECT_EQ(p[2], s2.scaled(Rat(1, 3)));
  EXPECT_EQ(p.layer(), Layer::u_const);
  EXPECT_EQ(p.weight(), 0);
}

TEST(Pic, ProductFormAgreesWithInverse) {
  Bimould p = pic(4);
  EXPECT_EQ(p[2], RatFun::inverse_linear(lin_var(v_var(1))) *
                      RatFun::inverse_linear(lin_var(v_var(2))));
  EXPECT_EQ(pic_via_invmu(4), p);
}

TEST(Witt, GeneratorRangeIsChecked) {
  EXPECT_EQ(witt_generator(2, 3)[2], psi0(3)[2].scaled(3));
  EXPECT_EQ(witt_generators(3, 3).size(), 3u);
  EXPECT_EQ(code_of([] { witt_generator(4, 3); }), Errc::invalid_argument);
  EXPECT_EQ(code_of([] { witt_generator(0, 3); }), Errc::invalid_argument);
}

TEST(DiriPar, IsHalfSwapAntiPsi0) {
  Bimould d = diri_par(3);
  EXPECT_EQ(d, swap(scale(Rat(1, 2), anti(psi0(3)))));
  EXPECT_EQ(d.layer(), Layer::v_const);
}

TEST(Dilator, RoundTripOnPic) {
  Bimould p = pic(4);
  Bimould d = dilator_of(p, 4);
  EXPECT_TRUE(d.is_lu());
  EXPECT_EQ(d[1], p[1]);
  EXPECT_EQ(mould_from_dilator(d, 4), p);
}

TEST(Dilator, PreconditionsAreEnforced) {
  EXPECT_EQ(code_of([] { dilator_of(pa(3), 3); }), Errc::not_grouplike_constant);
  EXPECT_EQ(code_of([] { mould_from_dilator(pic(3), 3); }), Errc::not_lu);
}

TEST(Chi, LengthOneIsTheInput) {
  Bimould f = Bimould::single(1, x(1).pow(2), 3, Layer::u_const);
  Bimould chi = chi_B(f, 3);
  EXPECT_EQ(chi[1], x(1).pow(2));
  EXPECT_EQ(chi, chi_closed_form(psi0(3), f, 3));
}

TEST(Chi, HomogeneousLength) {
  Bimould f = Bimould::single(2, x(1) * x(2), 3, Layer::u_const);
  EXPECT_EQ(homogeneous_length(f), 2);
  EXPECT_EQ(homogeneous_length(Bimould(3, Layer::u_const)), std::nullopt);
  f.set(1, x(1));
  EXPECT_EQ(code_of([&] { homogeneous_length(f); }), Errc::not_length_homogeneous);
}

TEST(Series, SidesAgreeOnSmallInput) {
  Bimould l = Bimould::single(1, x(1).pow(2) + RatFun::variable(u_var(1)), 3);
  Bimould b = Bimould::single(1, RatFun::variable(u_var(1)) * x(1), 3);
  Bimould ex = exp_ad_ari(l, b, 3);
  EXPECT_EQ(adari_dilator(dilator_of(expari(l, 3), 3), b, SeriesSide::left, 3), ex);
  EXPECT_EQ(adari_dilator(dilator_of(expari(-l, 3), 3), b, SeriesSide::right, 3), ex);
}

class ConstructionChecks : public ::testing::TestWithParam<std::string> {};

TEST_P(ConstructionChecks, Pass) {
  auto r = test_util::run_named(GetParam());
  EXPECT_TRUE(r.pass) << test_util::describe(r);
}

// witt-identity is exercised by the acceptance run, where its sign conflict is reported.
INSTANTIATE_TEST_SUITE_P(Registry, ConstructionChecks,
                         ::testing::Values("thm-main", "cor-ds-lift", "thm-dilator-series",
                                           "lemma-der-series", "lemma-der-adjoint",
                                           "dilator-roundtrip", "darapir", "pic-push-neutral",
                                           "witt-identity-reversed", "weight-grading",
                                           "chi-forms"),
                         test_util::param_name);
