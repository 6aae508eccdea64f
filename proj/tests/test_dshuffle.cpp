#include <gtest/gtest.h>

#include "mould/constructions.hpp"
#include "mould/dshuffle.hpp"
#include "mould/error.hpp"
#include "test_util.hpp"

using namespace mould;

namespace {

RatFun x(int i) { return RatFun::variable(x_var(i)); }
RatFun contraction(int i, int j) {
  return RatFun::inverse_linear(lin_var(x_var(i)) - lin_var(x_var(j)));
}

Bimould power_of_x(int k, int n) {
  return Bimould::single(1, x(1).pow(k), n, Layer::u_const);
}

}  // namespace

TEST(Shuffle, TwoLetters) {
  FormalSeqSum s = shuffle_expand({1}, {2});
  FormalSeqSum expected;
  expected.add(VarSeq{1, 2}, RatFun(1));
  expected.add(VarSeq{2, 1}, RatFun(1));
  EXPECT_EQ(s, expected);
}

TEST(Shuffle, CountsAreBinomial) {
  EXPECT_EQ(shuffle_expand({1, 2}, {3}).size(), 3u);
  EXPECT_EQ(shuffle_expand({1, 2}, {3, 4}).size(), 6u);
  EXPECT_EQ(shuffle_expand({1, 2, 3}, {4, 5}).size(), 10u);
  EXPECT_EQ(shuffle_expand({}, {1, 2}), FormalSeqSum::single({1, 2}));
}

TEST(Harmonic, SymmetrizedTwoLetters) {
  FormalSeqSum h = harmonic_expand({1}, {2});
  FormalSeqSum expected = shuffle_expand({1}, {2});
  expected.add(VarSeq{1}, contraction(1, 2));
  expected.add(VarSeq{2}, -contraction(1, 2));
  EXPECT_EQ(h, expected);
}

TEST(Harmonic, LiteralContractsToTheEmptySequence) {
  FormalSeqSum h = harmonic_expand({1}, {2}, HarmonicRule::literal);
  ASSERT_EQ(h.terms().count(VarSeq{}), 1u);
  EXPECT_EQ(h.terms().at(VarSeq{}), contraction(1, 2));
}

TEST(Harmonic, RejectsOverlaps) {
  try {
    harmonic_expand({1, 2}, {2});
    FAIL() << "no error raised";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::overlapping_indices);
  }
  EXPECT_THROW(shuffle_expand({1, 1}, {2}), Error);
}

TEST(SeqSum, CancellationRemovesTerms) {
  FormalSeqSum s = FormalSeqSum::single({1, 2});
  s.add(VarSeq{1, 2}, RatFun(-1));
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(FormalSeqSum::single({2}).prepended(1), FormalSeqSum::single({1, 2}));
}

TEST(Eval, LinearInTheSum) {
  Bimould f = power_of_x(2, 2);
  f.set(2, x(1) * x(2));
  FormalSeqSum s = shuffle_expand({1}, {2});
  EXPECT_EQ(eval_on_sum(f, s), RatFun(2) * x(1) * x(2));
  EXPECT_EQ(eval_on_sum(f, FormalSeqSum::single({2})), x(2).pow(2));
  EXPECT_THROW(eval_on_sum(f, FormalSeqSum::single({1, 2, 3})), Error);
}

TEST(Parity, ModesDisagreeOnPsi0AndEvenPowers) {
  EXPECT_TRUE(parity_holds(psi0(2), ParityMode::homogeneity));
  EXPECT_FALSE(parity_holds(psi0(2), ParityMode::literal));
  EXPECT_TRUE(parity_holds(power_of_x(2, 2), ParityMode::literal));
  RatFun delta;
  EXPECT_FALSE(parity_holds(power_of_x(2, 2), ParityMode::homogeneity, &delta));
  EXPECT_EQ(delta, RatFun(2) * x(1).pow(2));
}

TEST(Predicates, LsAcceptsEvenPowersAndRejectsOddOnes) {
  EXPECT_TRUE(is_ls(power_of_x(2, 3), 3).pass);
  EXPECT_TRUE(is_ls(power_of_x(4, 3), 3).pass);
  auto odd = is_ls(power_of_x(3, 3), 3);
  EXPECT_FALSE(odd.pass);
  ASSERT_NE(odd.find(kParity), nullptr);
  EXPECT_FALSE(odd.find(kParity)->pass);
}

TEST(Predicates, DsAcceptsPsi0) {
  EXPECT_TRUE(is_ds(psi0(3), 3).pass);
  // Parity is informational inside ds; the literal reading still flags it.
  auto lit = is_ds(psi0(3), 3, ParityMode::literal);
  EXPECT_TRUE(lit.pass);
  ASSERT_NE(lit.find(kParity), nullptr);
  EXPECT_FALSE(lit.find(kParity)->pass);
}

TEST(Names, RoundTrip) {
  EXPECT_EQ(parse_harmonic_rule(harmonic_rule_name(HarmonicRule::literal)), HarmonicRule::literal);
  EXPECT_EQ(parse_parity_mode(parity_mode_name(ParityMode::homogeneity)), ParityMode::homogeneity);
  EXPECT_FALSE(parse_harmonic_rule("stuffle").has_value());
}

class DshuffleChecks : public ::testing::TestWithParam<std::string> {};

TEST_P(DshuffleChecks, Pass) {
  auto r = test_util::run_named(GetParam());
  EXPECT_TRUE(r.pass) << test_util::describe(r);
}

INSTANTIATE_TEST_SUITE_P(Registry, DshuffleChecks,
                         ::testing::Values("shuffle-properties", "harmonic-commutativity",
                                           "harmonic-associativity", "eval-on-sum",
                                           "ls-negative-controls", "ds-psi0", "psi0-harmonic-base",
                                           "ls-sharp-in-V", "psi0-sharp-in-V", "ls-ds-base-case"),
                         test_util::param_name);

TEST(DshuffleModes, LiteralHarmonicIsNotCommutative) {
  CheckSpec spec;
  spec.name = "harmonic-commutativity";
  spec.harmonic = HarmonicRule::literal;
  EXPECT_FALSE(run_check(spec).pass);
}
